"""Randomized recognition of half-twists in the braid groups B_n.

A braid is a half-twist to the ``k``-th power when it is conjugate to
sigma_i^k.  :func:`test_random_half_twist` answers with a certificate on
success: a conjugator ``q`` with ``q^-1 w q == sigma_c^k``.
"""

from .garside import (
    ExtractFailure,
    NormalForm,
    delta_word,
    equal,
    expand_to_word,
    is_identity,
    letter_extract_left,
    letter_extract_right,
    normalize,
    word_extract_left,
    word_extract_right,
)
from .halftwist import (
    CheckOutcome,
    HalfTwistWitness,
    Reason,
    SkipTable,
    Verdict,
    is_half_twist,
    precheck,
    verify_witness,
)
from .kernels import BACKEND
from .randomized import RandomSource, TrialConfig, random_word, test_random_half_twist
from .word import (
    BraidWord,
    CrossingTable,
    Letter,
    StrandPermutation,
    concat,
    conjugate,
    degree,
    delete_strands,
    inverse,
    strand_data,
)

__version__ = "0.1.0"

__all__ = [
    "RandomSource",
    "TrialConfig",
    "random_word",
    "test_random_half_twist",
    "BACKEND",
    "BraidWord",
    "CheckOutcome",
    "CrossingTable",
    "ExtractFailure",
    "HalfTwistWitness",
    "Letter",
    "NormalForm",
    "Reason",
    "SkipTable",
    "StrandPermutation",
    "Verdict",
    "concat",
    "conjugate",
    "degree",
    "delete_strands",
    "delta_word",
    "equal",
    "expand_to_word",
    "inverse",
    "is_half_twist",
    "is_identity",
    "letter_extract_left",
    "letter_extract_right",
    "normalize",
    "precheck",
    "strand_data",
    "verify_witness",
    "word_extract_left",
    "word_extract_right",
]


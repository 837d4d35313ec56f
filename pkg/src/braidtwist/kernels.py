"""Backend selection for the rewriting kernels.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``BRAIDTWIST_PURE`` is set to a non-empty value, the
pure-Python twins are used.  Both expose the same functions.
"""

import os

from . import _pykernels

if os.environ.get("BRAIDTWIST_PURE"):
    backend = _pykernels
else:
    try:
        from . import _ckernels as backend
    except ImportError:
        backend = _pykernels

BACKEND = backend.BACKEND

free_reduce = backend.free_reduce
extract_left = backend.extract_left
extract_right = backend.extract_right
extract_word_left = backend.extract_word_left
suffix_descents = backend.suffix_descents
delta_letters = backend.delta_letters
simple_word = backend.simple_word
delta_form = backend.delta_form
lexmin = backend.lexmin
strand_trace = backend.strand_trace

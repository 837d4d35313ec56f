"""Single-shot success-rate experiments on random half-twists.

Each trial draws ``q^-1 sigma_i^k q`` with a random conjugator, normalizes
it, buckets it by expanded normal-form length and runs ``is_half_twist``
once.  A bucket labelled ``b`` holds lengths in ``(b - width, b]``.

Trial ``j`` at power ``k`` gets its own seed ``derive_seed(seed, k, j)``, so
trials can run in any order or in parallel and the table is still
bit-identical for a given config.
"""

from __future__ import annotations

import csv
import dataclasses
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .garside import expand_to_word, normalize
from .halftwist import HalfTwistWitness, Verdict, is_half_twist
from .randomized import RandomSource, derive_seed, random_word
from .word import BraidWord, conjugate, inverse

CSV_HEADER = ("strands", "power", "length_bucket", "trials", "successes", "rate")


@dataclasses.dataclass(frozen=True)
class ExperimentConfig:
    strands: int
    powers: Sequence[int]
    samples_per_power: int
    conjugator_length_range: tuple[int, int]
    bucket_width: int = 100
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        lo, hi = self.conjugator_length_range
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        if any(k < 1 for k in self.powers):
            raise ValueError("powers must be positive")
        if self.samples_per_power < 0 or lo < 0 or hi < lo:
            raise ValueError("invalid sample count or conjugator length range")
        if self.bucket_width < 1:
            raise ValueError("bucket_width must be >= 1")


@dataclasses.dataclass(frozen=True)
class Row:
    strands: int
    power: int
    length_bucket: int
    trials: int
    successes: int

    @property
    def rate(self) -> float:
        return self.successes / self.trials


@dataclasses.dataclass
class ExperimentTable:
    rows: list[Row]
    genuine_false: int = 0
    seed: int = 0

    def cell(self, power: int, bucket: int) -> Row | None:
        for row in self.rows:
            if row.power == power and row.length_bucket == bucket:
                return row
        return None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in self.rows:
            writer.writerow(
                (row.strands, row.power, row.length_bucket, row.trials, row.successes,
                 f"{row.rate:.3f}")
            )
        return buf.getvalue()


def bucket_of(length: int, width: int) -> int:
    return -(-length // width) * width


def sample_half_twist(
    n: int, k: int, conj_len: int, rng: RandomSource
) -> tuple[BraidWord, HalfTwistWitness]:
    """A random half-twist to the ``k``-th power in expanded normal form.

    The returned witness satisfies ``q^-1 word q == sigma_i^k``.
    """
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    i = rng.randint(1, n - 1)
    q = random_word(n, conj_len, rng)
    raw = conjugate(BraidWord.generator_power(n, i, k), q)
    return expand_to_word(normalize(raw)), HalfTwistWitness(i, k, inverse(q))


def _run_trial(args):
    n, k, index, seed, lo, hi = args
    rng = RandomSource(derive_seed(seed, k, index))
    word, _ = sample_half_twist(n, k, rng.randint(lo, hi), rng)
    out = is_half_twist(word, k)
    return k, len(word), out.verdict


def run_experiment(config: ExperimentConfig) -> ExperimentTable:
    lo, hi = config.conjugator_length_range
    jobs = [
        (config.strands, k, j, config.seed, lo, hi)
        for k in config.powers
        for j in range(config.samples_per_power)
    ]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            results = list(pool.map(_run_trial, jobs, chunksize=8))
    else:
        results = [_run_trial(job) for job in jobs]

    trials: Counter = Counter()
    wins: Counter = Counter()
    genuine = 0
    for k, length, verdict in results:
        key = (k, bucket_of(length, config.bucket_width))
        trials[key] += 1
        wins[key] += verdict is Verdict.TRUE
        genuine += verdict is Verdict.GENUINE_FALSE
    rows = [
        Row(config.strands, k, b, trials[(k, b)], wins[(k, b)])
        for k, b in sorted(trials)
    ]
    return ExperimentTable(rows, genuine_false=genuine, seed=config.seed)

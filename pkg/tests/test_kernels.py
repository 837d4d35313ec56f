"""Both kernel backends must agree exactly."""

import importlib
import os
import random

import pytest

from braidtwist import _pykernels, kernels

try:
    _ckernels = importlib.import_module("braidtwist._ckernels")
except ImportError:  # extension not built
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _cases(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 7)
        length = rng.randint(0, 50)
        signed = [rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(length)]
        positive = [abs(g) for g in signed]
        yield rng, n, signed, positive


def test_backend_selection():
    assert kernels.BACKEND in ("python", "compiled")
    assert _pykernels.BACKEND == "python"
    if _ckernels is not None and not os.environ.get("BRAIDTWIST_PURE"):
        assert kernels.BACKEND == "compiled"


@needs_compiled
def test_backends_agree():
    for rng, n, signed, positive in _cases(7, 600):
        i = rng.randint(1, n - 1)
        assert _ckernels.free_reduce(signed) == _pykernels.free_reduce(signed)
        assert _ckernels.extract_left(positive, i) == _pykernels.extract_left(positive, i)
        assert _ckernels.extract_right(positive, i) == _pykernels.extract_right(positive, i)
        prefix = [rng.randint(1, n - 1) for _ in range(rng.randint(0, 4))]
        assert _ckernels.extract_word_left(positive, prefix) == _pykernels.extract_word_left(
            positive, prefix
        )
        assert _ckernels.suffix_descents(positive, n) == _pykernels.suffix_descents(positive, n)
        assert _ckernels.delta_form(signed, n) == _pykernels.delta_form(signed, n)
        assert _ckernels.lexmin(positive, n) == _pykernels.lexmin(positive, n)
        assert _ckernels.strand_trace(signed, n) == _pykernels.strand_trace(signed, n)


@needs_compiled
@pytest.mark.parametrize("n", range(1, 9))
def test_delta_letters_agree(n):
    assert list(_ckernels.delta_letters(n)) == list(_pykernels.delta_letters(n))


@pytest.mark.parametrize("mod", [m for m in (_pykernels, _ckernels) if m is not None],
                         ids=lambda m: m.BACKEND)
def test_kernel_spot_values(mod):
    assert list(mod.extract_left([2, 1, 2], 1)) == [2, 1]
    assert mod.extract_left([1, 2], 2) is None
    r, pos = mod.delta_form([-1], 3)
    assert (r, list(pos)) == (1, [1, 2])
    r, pos = mod.delta_form([1, 2, 1, -2, -1, -2], 3)
    assert (r, list(pos)) == (0, [])
    assert list(mod.suffix_descents([2, 1, 2], 3)) == [3, 1, 2, 0]
    assert list(mod.free_reduce([1, 2, -2, -1, 3])) == [3]


def test_pure_backend_env(monkeypatch):
    monkeypatch.setenv("BRAIDTWIST_PURE", "1")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "python"
    finally:
        monkeypatch.delenv("BRAIDTWIST_PURE")
        importlib.reload(kernels)

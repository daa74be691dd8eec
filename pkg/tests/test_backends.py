"""The compiled and pure-Python kernels must agree exactly."""

import random

import pytest

from audioactive import _backend, machines
from audioactive.fst import EPS

compiled = _backend.compiled_kernels
pure = _backend.python_kernels

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def random_machine(rng, n, k, eps=True):
    trans = []
    for s in range(n):
        for _ in range(rng.randint(0, 3)):
            i = rng.choice([EPS, *range(k)] if eps else range(k))
            o = rng.choice([EPS, *range(k)])
            trans.append((s, i, o, rng.randrange(n)))
    initial = sorted(rng.sample(range(n), rng.randint(1, min(2, n))))
    final = sorted(rng.sample(range(n), rng.randint(0, n)))
    return n, initial, final, trans


@needs_compiled
def test_backend_names():
    assert compiled.BACKEND == "cython"
    assert pure.BACKEND == "python"


@needs_compiled
@pytest.mark.parametrize("seed", range(40))
def test_kernels_agree_on_random_machines(seed):
    rng = random.Random(seed)
    a = random_machine(rng, rng.randint(1, 8), 3)
    b = random_machine(rng, rng.randint(1, 8), 3)
    rec = (a[0], a[1], a[2], [(s, i, EPS, d) for s, i, _o, d in a[3]])
    assert compiled.determinize(*rec, 3) == pure.determinize(*rec, 3)
    assert compiled.compose(a, b) == pure.compose(a, b)
    assert compiled.trim(*a) == pure.trim(*a)


@needs_compiled
def test_kernels_agree_on_audio():
    audio = machines.build_audio_plus()._packed()
    assert compiled.compose(audio, audio) == pure.compose(audio, audio)
    n, init, fin, trans = pure.compose(audio, audio)
    assert compiled.trim(n, init, fin, trans) == pure.trim(n, init, fin, trans)

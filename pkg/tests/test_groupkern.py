"""The two kernel backends must agree exactly on the real table."""

import random

import pytest

from opendp4 import _groupkern_py
from opendp4 import weyl_d5 as wd

try:
    from opendp4 import _groupkern
except ImportError:  # pragma: no cover - build-environment dependent
    _groupkern = None


def _random_subgroups(count, seed):
    rng = random.Random(seed)
    w = wd._weyl()
    out = []
    for _ in range(count):
        k = rng.randrange(1, 4)
        gens = tuple(rng.randrange(1920) for _ in range(k))
        out.append(tuple(_groupkern_py.closure(w.table, gens)))
    return out


def test_numpy_closure_is_a_subgroup():
    w = wd._weyl()
    rng = random.Random(7)
    for elems in _random_subgroups(10, seed=3):
        assert elems[0] == 0
        members = set(elems)
        for _ in range(50):
            a, b = rng.choice(elems), rng.choice(elems)
            assert int(w.table[a, b]) in members
        assert all(int(w.inv[a]) in members for a in elems)


def test_canonical_key_is_conjugation_invariant():
    w = wd._weyl()
    rng = random.Random(11)
    for elems in _random_subgroups(6, seed=5):
        key = _groupkern_py.canonical_key(w.table, w.inv, elems)
        c = rng.randrange(1920)
        ci = int(w.inv[c])
        conj = tuple(sorted(int(w.table[int(w.table[c, x]), ci]) for x in elems))
        assert _groupkern_py.canonical_key(w.table, w.inv, conj) == key


def test_normalizer_fixes_the_subgroup():
    w = wd._weyl()
    for elems in _random_subgroups(5, seed=9):
        members = set(elems)
        norm = _groupkern_py.normalizer(w.table, w.inv, elems)
        # a subgroup normalizes itself
        assert members <= set(norm)
        for c in norm[:20]:
            ci = int(w.inv[c])
            conj = {int(w.table[int(w.table[c, x]), ci]) for x in elems}
            assert conj == members


@pytest.mark.skipif(_groupkern is None, reason="compiled kernels not built")
def test_backends_agree():
    w = wd._weyl()
    for elems in _random_subgroups(8, seed=1):
        gens = elems[: max(1, len(elems) // 3)]
        assert _groupkern.closure(w.table, gens) == _groupkern_py.closure(
            w.table, gens
        )
        assert _groupkern.canonical_key(
            w.table, w.inv, elems
        ) == _groupkern_py.canonical_key(w.table, w.inv, elems)
        nc = _groupkern.normalizer(w.table, w.inv, elems)
        nn = _groupkern_py.normalizer(w.table, w.inv, elems)
        assert nc == nn
        rc = _groupkern.conj_min_reps(w.table, w.inv, nc)
        rn = _groupkern_py.conj_min_reps(w.table, w.inv, nn)
        assert list(rc) == list(rn)

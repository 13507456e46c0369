import pytest

from rlx.core import boolean_algebra, classify
from rlx.enumeration import (
    SIZE_CAP,
    all_algebras,
    enumerate_algebras,
    slow_enumerate,
)
from rlx.errors import SizeCapExceeded
from rlx.iso import canonical_key, canonicalize, rl_isomorphic


def test_size_one_single_trivial():
    algs = all_algebras(1)
    assert len(algs) == 1
    assert algs[0].size == 1


def test_size_two_forced_tables():
    algs = all_algebras(2)
    assert len(algs) == 1
    assert rl_isomorphic(algs[0], boolean_algebra(1))


def test_size_three_two_chains():
    algs = all_algebras(3)
    assert len(algs) == 2
    assert all(classify(A).is_chain for A in algs)


def test_known_counts():
    assert [len(all_algebras(n)) for n in range(1, 6)] == [1, 1, 2, 7, 26]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_slow_oracle_agrees(n):
    fast = {canonical_key(A) for A in all_algebras(n, use_cache=False)}
    slow = {canonical_key(A) for A in slow_enumerate(n)}
    assert fast == slow


def test_cap_enforced():
    with pytest.raises(SizeCapExceeded):
        enumerate_algebras(SIZE_CAP + 1)
    with pytest.raises(SizeCapExceeded):
        enumerate_algebras(0)


def test_deterministic_order():
    a = [canonical_key(A) for A in all_algebras(4, use_cache=False)]
    b = [canonical_key(A) for A in all_algebras(4, use_cache=False)]
    assert a == b == sorted(a)


def test_canonicalization_idempotent(corpus4):
    for A in corpus4:
        C = canonicalize(A)
        assert canonicalize(C) == C
        assert canonical_key(C) == canonical_key(A)


def test_canonical_key_is_isomorphism_invariant(E1):
    from rlx.iso import permute_relation, permute_table
    from rlx.core import validate

    perm = (0, 2, 1, 3, 4)  # swap the two atoms
    leq = permute_relation(E1.leq, perm)
    odot = permute_table(E1.odot, perm)
    B = validate(tuple(E1.labels[i] for i in range(5)), leq, odot)
    assert canonical_key(B) == canonical_key(E1)
    assert rl_isomorphic(B, E1)


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("RLX_CORPUS_DIR", str(tmp_path))
    first = all_algebras(3)
    assert list(tmp_path.glob("*-n3.json"))
    second = all_algebras(3)
    assert first == second


def test_enumerated_algebras_are_valid(corpus5):
    from rlx.core import validate

    for A in corpus5:
        assert validate(A.labels, A.leq, A.odot, A.imp) == A

import pytest

from rlx.core import boolean_algebra, leq_from_covers
from rlx.dlattice import (
    boolean_center,
    enumerate_bdlattices,
    is_conormal_lattice,
    is_normal_lattice,
    lattice_blp,
    lattice_filters,
    lattice_is_filter,
    lattice_max_filters,
    lattice_prime_filters,
    lattice_quotient,
    lattice_radical,
    conormal_radical_lifting,
    underlying_lattice,
    validate_bdl,
)
from rlx.errors import NotConormal, NotDistributive
from rlx.reticulation import build_reticulation


def chain(n):
    return validate_bdl([str(i) for i in range(n)],
                        tuple(tuple(i <= j for j in range(n))
                              for i in range(n)))


def lozenge():
    leq = leq_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    return validate_bdl(["0", "x", "y", "1"], leq)


def test_validate_lozenge():
    L = lozenge()
    assert L.size == 4 and L.bot == 0 and L.top == 3


def test_diamond_not_distributive():
    leq = leq_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    with pytest.raises(NotDistributive) as err:
        validate_bdl(["0", "p", "q", "r", "1"], leq)
    assert err.value.witness


def test_pentagon_not_distributive():
    leq = leq_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])
    with pytest.raises(NotDistributive):
        validate_bdl(["0", "d", "c", "b", "1"], leq)


def test_underlying_lattice(E1, E2):
    L = underlying_lattice(E1)
    assert L.size == 5
    with pytest.raises(NotDistributive):
        underlying_lattice(E2)  # pentagon inside


def test_lattice_filters_are_all_upsets():
    L = lozenge()
    fams = set(lattice_filters(L))
    assert fams == {
        frozenset({3}), frozenset({1, 3}), frozenset({2, 3}),
        frozenset({0, 1, 2, 3}),
    }
    for F in fams:
        assert lattice_is_filter(L, F)


def test_lattice_quotient_golden():
    L3 = chain(3)
    Q, class_of, _ = lattice_quotient(L3, frozenset({1, 2}))
    assert Q.size == 2
    assert class_of[1] == class_of[2] != class_of[0]

    L = lozenge()
    Q, class_of, _ = lattice_quotient(L, frozenset({1, 3}))  # [x)
    assert Q.size == 2
    assert class_of[0] == class_of[2]  # y & x = 0 = 0 & x
    assert class_of[1] == class_of[3]


def test_lattice_quotient_by_trivial():
    L = lozenge()
    Q, class_of, _ = lattice_quotient(L, frozenset({L.top}))
    assert Q.size == L.size


def test_lattice_blp_boolean_and_chain():
    _, global_loz = lattice_blp(lozenge())
    assert global_loz
    _, global_chain = lattice_blp(chain(3))
    assert global_chain


def test_lattice_blp_of_pentagon_reticulation_fails(E1):
    # the reticulation of the Godel pentagon inherits its lifting failure
    R = build_reticulation(E1)
    per, global_holds = lattice_blp(R.lattice)
    assert not global_holds
    failing = [F for F, ok in per.items() if not ok]
    assert len(failing) == 1


def test_normal_conormal_basic():
    for L in (lozenge(), chain(2), chain(4)):
        assert is_normal_lattice(L)
        assert is_conormal_lattice(L)


def test_conormal_fails_on_pentagon_reticulation(E1, E2):
    for A in (E1, E2):
        L = build_reticulation(A).lattice
        assert not is_conormal_lattice(L)


def test_lattice_radical_golden():
    assert lattice_radical(chain(3)) == frozenset({1, 2})
    assert lattice_radical(lozenge()) == frozenset({3})
    B8 = underlying_lattice(boolean_algebra(3))
    assert lattice_radical(B8) == frozenset({B8.top})


def test_conormal_radical_lifting_golden():
    assert conormal_radical_lifting(chain(3))
    assert conormal_radical_lifting(lozenge())
    with pytest.raises(NotConormal):
        conormal_radical_lifting(build_reticulation(_godel_pentagon()).lattice)


def _godel_pentagon():
    from rlx.fixtures import pentagon_godel

    return pentagon_godel()


def test_boolean_center_of_lattices():
    assert boolean_center(chain(3)) == frozenset({0, 2})
    assert boolean_center(lozenge()) == frozenset({0, 1, 2, 3})


def test_enumerated_bdlattices_radical_lifting():
    total = 0
    for n in range(1, 7):
        for L in enumerate_bdlattices(n):
            total += 1
            lattice_radical(L)  # asserts the two definitions agree
            if is_conormal_lattice(L):
                assert conormal_radical_lifting(L)
    assert total > 10


def test_prime_and_max_filters_of_lattice():
    L = lozenge()
    primes = set(lattice_prime_filters(L))
    assert primes == {frozenset({1, 3}), frozenset({2, 3})}
    assert set(lattice_max_filters(L)) == primes

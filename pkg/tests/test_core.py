import pytest

from rlx.core import (
    boolean_algebra,
    classify,
    complemented_elements,
    derive_implication,
    direct_product,
    glb_table,
    godel_chain,
    leq_from_covers,
    lukasiewicz_chain,
    ordinal_sum,
    trivial_algebra,
    upset_algebra,
    validate,
)
from rlx.errors import AxiomViolation, InvalidArgument, NotResiduated
from rlx.filters import max_spec, spec


def test_two_element_boolean_is_valid():
    B2 = boolean_algebra(1)
    assert B2.size == 2
    assert B2.odot == B2.meet
    assert B2.imp[1][0] == 0 and B2.imp[0][0] == 1


def test_pentagon_godel_tables_validate(E1):
    assert E1.size == 5
    # odot is the meet, top/bot at the expected ids
    assert E1.odot == E1.meet
    assert E1.labels[E1.bot] == "0" and E1.labels[E1.top] == "1"


def test_pentagon_godel_broken_imp_is_caught(E1):
    # switch a->0 from b to a: residuation must fail somewhere
    imp = [list(row) for row in E1.imp]
    imp[1][0] = 1
    with pytest.raises(AxiomViolation) as err:
        validate(E1.labels, E1.leq, E1.odot, imp)
    assert err.value.axiom in ("residuation", "implication-mismatch")
    assert err.value.witness


def test_validate_rejects_broken_order():
    leq = ((True, True), (True, True))  # antisymmetry broken
    with pytest.raises(AxiomViolation) as err:
        validate(("0", "1"), leq, ((0, 0), (0, 1)))
    assert err.value.axiom == "antisymmetry"


def test_validate_rejects_non_lattice():
    # two incomparable maximal elements: no top
    leq = leq_from_covers(3, [(0, 1), (0, 2)])
    with pytest.raises(AxiomViolation):
        validate(("0", "x", "y"), leq, ((0, 0, 0), (0, 1, 0), (0, 0, 2)))


def test_validate_rejects_non_associative():
    # chain 0 < a < b < 1 with a*a = 0, a*b = a, b*b = a:
    # (a*b)*b = a*b = a  but  a*(b*b) = a*a = 0
    n = 4
    leq = leq_from_covers(n, [(0, 1), (1, 2), (2, 3)])
    odot = [[min(i, j) for j in range(n)] for i in range(n)]
    odot[1][1] = 0
    odot[1][2] = odot[2][1] = 1
    odot[2][2] = 1
    with pytest.raises(AxiomViolation) as err:
        validate(("0", "a", "b", "1"), leq, odot)
    assert err.value.axiom == "monoid-associativity"


def test_derive_implication_boolean():
    B2 = boolean_algebra(1)
    derived = derive_implication(B2.leq, B2.odot)
    assert derived == B2.imp


def test_derive_implication_matches_given_tables(E2):
    derived = derive_implication(E2.leq, E2.odot)
    assert derived == E2.imp


def test_derive_implication_lozenge_heyting():
    # lozenge with odot = meet: the Heyting implication of 2x2
    B4 = boolean_algebra(2)
    derived = derive_implication(B4.leq, B4.meet)
    assert derived == B4.imp


def test_derive_implication_failure():
    # the diamond M3 with odot = meet: {x : x & p <= q} = {0, q, r} has two
    # maximal elements, so no residuum exists
    leq = leq_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    odot = glb_table(leq)
    with pytest.raises(NotResiduated):
        derive_implication(leq, odot)


def test_classify_pentagon_godel(E1):
    cls = classify(E1)
    assert cls.idempotents == frozenset(range(5))
    assert cls.boolean_center == frozenset({0, 4})
    assert cls.is_godel and not cls.is_chain
    assert cls.is_distributive


def test_classify_pentagon_stacked(E2):
    cls = classify(E2)
    lbl = {x: E2.labels[x] for x in E2.elements()}
    assert {lbl[x] for x in cls.boolean_center} == {"0", "1"}
    assert {lbl[x] for x in cls.idempotents} == {"0", "a", "b", "d", "1"}
    # the operation tables force d out of the regular elements: !d = b
    # and !b = c, so !!d = c
    assert {lbl[x] for x in cls.regulars} == {"0", "b", "c", "1"}
    assert not cls.is_godel and not cls.is_involutive
    assert not cls.is_distributive  # pentagon inside


def test_classify_boolean_algebra_everything():
    B2 = boolean_algebra(1)
    cls = classify(B2)
    full = frozenset(range(2))
    assert cls.boolean_center == cls.idempotents == cls.regulars == full
    assert cls.is_hyperarchimedean


def test_boolean_center_three_ways(corpus5):
    for A in corpus5:
        cls = classify(A)
        via_complement = complemented_elements(A)
        via_join = frozenset(a for a in A.elements()
                             if A.join[a][A.neg(a)] == A.top)
        assert cls.boolean_center == via_complement == via_join


def test_element_identities_on_corpus(corpus5):
    for A in corpus5:
        for a in A.elements():
            assert A.leq[A.odot[a][a]][a]
            assert A.leq[a][A.neg(A.neg(a))]
            assert A.neg(A.neg(A.neg(a))) == A.neg(a)
            for b in A.elements():
                assert A.leq[A.odot[a][b]][A.meet[a][b]]
                if A.join[a][b] == A.top:
                    assert A.meet[a][b] == A.odot[a][b]


def test_boolean_element_identities_on_corpus(corpus5):
    for A in corpus5:
        B = classify(A).boolean_center
        for e in B:
            for f in B:
                assert A.odot[e][f] == A.meet[e][f]
            for x in A.elements():
                assert A.imp[e][x] == A.join[A.neg(e)][x]


def test_boolean_center_is_boolean_subalgebra(corpus5):
    for A in corpus5:
        B = classify(A).boolean_center
        for e in B:
            assert A.neg(e) in B
            for f in B:
                assert A.join[e][f] in B
                assert A.meet[e][f] in B
                # distributivity inside the center
                for g in B:
                    assert A.meet[e][A.join[f][g]] == \
                        A.join[A.meet[e][f]][A.meet[e][g]]


def test_godel_iff_odot_is_meet(corpus5):
    for A in corpus5:
        assert classify(A).is_godel == (A.odot == A.meet)


def test_chain_constructors():
    G4 = godel_chain(4)
    assert classify(G4).is_godel and classify(G4).is_chain
    L4 = lukasiewicz_chain(4)
    assert classify(L4).is_involutive
    assert L4.odot[1][1] == 0  # 1/3 * 1/3 = 0
    assert lukasiewicz_chain(2) == boolean_algebra(1) or \
        lukasiewicz_chain(2).odot == boolean_algebra(1).odot


def test_lukasiewicz_two_is_two_element_boolean():
    L2 = lukasiewicz_chain(2)
    B2 = boolean_algebra(1)
    assert L2.leq == B2.leq and L2.odot == B2.odot and L2.imp == B2.imp


def test_constructor_argument_errors():
    with pytest.raises(InvalidArgument):
        lukasiewicz_chain(1)
    with pytest.raises(InvalidArgument):
        godel_chain(0)


def test_direct_product_boolean_center():
    P = direct_product(godel_chain(2), godel_chain(2))
    assert classify(P).boolean_center == frozenset(range(4))


def test_upset_algebra_on_all_boolean_elements(corpus5, corpus6):
    for A in list(corpus5) + list(corpus6):
        for e in classify(A).boolean_center:
            U = upset_algebra(A, e)
            assert U.size == sum(1 for x in A.elements() if A.leq[e][x])


def test_upset_algebra_rejects_non_boolean(E1):
    with pytest.raises(InvalidArgument):
        upset_algebra(E1, 1)  # element a is not Boolean


def test_ordinal_sum_produces_non_gelfand_example():
    R = direct_product(boolean_algebra(1), boolean_algebra(1))
    A = ordinal_sum(R, godel_chain(2))
    # {top} is prime and two maximal filters exist
    trivial = next(F for F in spec(A) if F.members == {A.top})
    assert trivial is not None
    assert len(max_spec(A)) == 2


def test_ordinal_sum_rejects_trivial_upper():
    with pytest.raises(InvalidArgument):
        ordinal_sum(boolean_algebra(1), trivial_algebra())


def test_ordinal_sum_validates_across_small_corpus(corpus4):
    # the stacked construction must always residuate; validate() runs
    # inside ordinal_sum, so surviving the sweep is the assertion
    bases = [A for A in corpus4 if A.size <= 4]
    uppers = [A for A in corpus4 if 2 <= A.size <= 3]
    for R in bases:
        for C in uppers:
            S = ordinal_sum(R, C)
            assert S.size == R.size + C.size - 1
            # the glue keeps R's top as the bottom of the chain part
            assert S.leq[R.top][S.top]


def test_ordinal_sum_of_chains_is_chain():
    S = ordinal_sum(godel_chain(3), lukasiewicz_chain(3))
    assert classify(S).is_chain
    assert S.size == 5


def test_trivial_algebra():
    T = trivial_algebra()
    assert T.size == 1 and T.bot == T.top

import itertools

from rlx.core import direct_product
from rlx.formulas import blp_formula, ilp_formula
from rlx.theorems import disagreements, theorem_checks


def test_corpus_size_5_zero_disagreements(corpus5):
    for A in corpus5:
        bad = disagreements(A)
        assert not bad, (A, bad)


def test_fixtures_zero_disagreements(E1, E2):
    for A in (E1, E2):
        assert not disagreements(A)


def test_size_6_sample_zero_disagreements(corpus6):
    # deterministic sample: every fourth algebra in canonical order
    sample = corpus6[::4]
    assert len(sample) >= 30
    for A in sample:
        assert not disagreements(A)


def test_product_law_on_ordered_pairs_size_4(corpus4):
    # the definable-set product equation and the two-sided lifting law,
    # checked on every ordered pair
    from rlx.lifting import product_lp_check

    for A, B in itertools.product(corpus4, repeat=2):
        for phi in (blp_formula(), ilp_formula()):
            lp_ab, lp_a, lp_b = product_lp_check(A, B, phi)
            assert lp_ab == (lp_a and lp_b)


def test_verdicts_are_deterministic(E1):
    a = [v.as_dict() for v in theorem_checks(E1)]
    b = [v.as_dict() for v in theorem_checks(E1)]
    assert a == b


def test_verdict_schema(E1):
    for v in theorem_checks(E1):
        d = v.as_dict()
        assert set(d) == {"theorem_id", "lhs", "rhs", "agree", "witness"}
        assert isinstance(d["lhs"], bool) and isinstance(d["rhs"], bool)
        assert d["agree"] == ((not d["lhs"]) == (not d["rhs"])) or d["agree"] in (True, False)


def test_specific_verdicts_pentagon(E1):
    by_id = {}
    for v in theorem_checks(E1):
        by_id.setdefault(v.theorem_id, v)
    v = by_id["spec-strong-zero-dim.blp"]
    assert v.lhs is False and v.rhs is False and v.agree
    v = by_id["max-boolean-forms.gelfand+boolean-space"]
    assert v.lhs is False and v.rhs is False and v.agree


def test_local_product_decomposition_golden(E1):
    from rlx.theorems import local_factor_decomposition
    from rlx.core import boolean_algebra

    is_prod, locals_ok, sizes = local_factor_decomposition(E1)
    assert is_prod and not locals_ok  # single non-local factor
    B4 = boolean_algebra(2)
    is_prod, locals_ok, sizes = local_factor_decomposition(B4)
    assert is_prod and locals_ok and sizes == (2, 2)
    P = direct_product(boolean_algebra(1), boolean_algebra(1))
    is_prod, locals_ok, sizes = local_factor_decomposition(P)
    assert is_prod and locals_ok and len(sizes) == 2

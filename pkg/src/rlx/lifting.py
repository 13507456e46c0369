"""Lifting properties: per-filter and global phi-LP, the three named
properties (Boolean, idempotent, regular), and their algebraic
characterizations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import classify
from .filters import all_filters, principal_filter, quotient
from .formulas import (
    atomic_parts,
    blp_formula,
    definable_set,
    eval_term,
    ilp_formula,
    rlp_formula,
)


@dataclass(frozen=True)
class FilterVerdict:
    holds: bool
    counterexample: object  # element id that fails to lift, or None
    witness: object  # a lifting element for the least liftable class, or None


@dataclass(frozen=True)
class LpReport:
    formula: object
    per_filter: tuple  # of (Filter, FilterVerdict)
    global_holds: bool


def has_phi_lp(A, phi, F):
    """Filter-level lifting: every phi-element of A/F is a class of a
    phi-element of A.  Returns (holds, FilterVerdict)."""
    Q = quotient(A, F)
    quotient_sat = definable_set(Q.quotient, phi)
    lifted = {Q.class_of[e] for e in definable_set(A, phi)}
    missing = quotient_sat - lifted
    if missing:
        least_class = min(missing)
        counterexample = min(x for x in A.elements()
                             if Q.class_of[x] == least_class)
        return False, FilterVerdict(False, counterexample, None)
    witness = None
    sat = definable_set(A, phi)
    if quotient_sat and sat:
        least_class = min(quotient_sat)
        witness = min(e for e in sat if Q.class_of[e] == least_class)
    return True, FilterVerdict(True, None, witness)


def lp_report(A, phi):
    """phi-LP verdict for every filter, plus the global conjunction.

    The trivial and improper filters always lift and are asserted to.
    """
    rows = []
    for F in all_filters(A):
        holds, verdict = has_phi_lp(A, phi, F)
        if F.members == {A.top} or not F.proper:
            assert holds, "trivial/improper filters always have the lifting property"
        rows.append((F, verdict))
    return LpReport(phi, tuple(rows), all(v.holds for _, v in rows))


@lru_cache(maxsize=None)
def has_blp(A):
    return lp_report(A, blp_formula()).global_holds


@lru_cache(maxsize=None)
def has_ilp(A):
    return lp_report(A, ilp_formula()).global_holds


@lru_cache(maxsize=None)
def has_rlp(A):
    """Always true; asserted against the double-negation witness trace."""
    report = lp_report(A, rlp_formula())
    assert report.global_holds, "regular lifting cannot fail"
    # proof trace: !!a is regular and lands in a's class modulo any filter
    # containing d(a, !!a); modulo every filter it lifts a's class whenever
    # a's class is regular in the quotient
    for F, _verdict in report.per_filter:
        Q = quotient(A, F)
        reg_q = definable_set(Q.quotient, rlp_formula())
        for a in A.elements():
            if Q.class_of[a] in reg_q:
                e = A.neg(A.neg(a))
                assert A.neg(A.neg(e)) == e
                assert Q.class_of[e] == Q.class_of[a]
    return True


def blp_ilp_rlp(A):
    return has_blp(A), has_ilp(A), has_rlp(A)


def atomic_lp_characterization(A, phi):
    """Global phi-LP for an atomic phi via the biresiduum criterion:
    every a admits e in A(phi) with d(a, e) in [d(t1(a), t2(a)))."""
    t1, t2 = atomic_parts(phi)
    sat = definable_set(A, phi)
    for a in A.elements():
        gap = A.bires(eval_term(A, t1, a, {}), eval_term(A, t2, a, {}))
        F = principal_filter(A, gap)
        if not any(A.bires(a, e) in F for e in sat):
            return False
    return True


def boolean_splitting_conditions(A, max_arity=4):
    """The four equivalent Boolean-lifting conditions, with witnesses.

    (1) global BLP; (2) every x has Boolean e with e in [x), !e in [!x);
    (3) the x*y = 0 form; (4) the n-ary form for 2 <= n <= max_arity with
    pairwise joins 1 and total meet 0.  Returns (verdicts, witnesses): the
    witnesses map a condition index to its first failing tuple.
    """
    B = sorted(classify(A).boolean_center)
    witnesses = {}

    cond1 = has_blp(A)

    cond2 = True
    for x in A.elements():
        fx = principal_filter(A, x)
        fnx = principal_filter(A, A.neg(x))
        if not any(e in fx and A.neg(e) in fnx for e in B):
            cond2 = False
            witnesses[2] = (x,)
            break

    cond3 = True
    for x in A.elements():
        for y in A.elements():
            if A.odot[x][y] != A.bot:
                continue
            fx = principal_filter(A, x)
            fy = principal_filter(A, y)
            if not any(e in fx and A.neg(e) in fy for e in B):
                cond3 = False
                witnesses[3] = (x, y)
                break
        if not cond3:
            break

    cond4 = True
    for n in range(2, max_arity + 1):
        if not cond4:
            break
        for combo in itertools.combinations_with_replacement(A.elements(), n):
            prod = A.top
            for x in combo:
                prod = A.odot[prod][x]
            if prod != A.bot:
                continue
            pfs = [principal_filter(A, x) for x in combo]
            if not _nary_boolean_split(A, B, pfs):
                cond4 = False
                witnesses[4] = combo
                break

    return (cond1, cond2, cond3, cond4), witnesses


def _nary_boolean_split(A, B, pfs):
    n = len(pfs)
    candidates = [[e for e in B if e in F] for F in pfs]
    for es in itertools.product(*candidates):
        total = A.top
        for e in es:
            total = A.meet[total][e]
        if total != A.bot:
            continue
        if all(A.join[es[i]][es[j]] == A.top
               for i in range(n) for j in range(i + 1, n)):
            return True
    return False


def product_lp_check(A, B, phi):
    """(lp(AxB), lp(A), lp(B)) with the product law and the definable-set
    product equation asserted."""
    from .core import direct_product

    P = direct_product(A, B)
    lp_p = lp_report(P, phi).global_holds
    lp_a = lp_report(A, phi).global_holds
    lp_b = lp_report(B, phi).global_holds
    assert lp_p == (lp_a and lp_b), "lifting must respect finite products"

    sat_p = definable_set(P, phi)
    sat_a = definable_set(A, phi)
    sat_b = definable_set(B, phi)
    nb = B.size
    expected = frozenset(i * nb + j for i in sat_a for j in sat_b)
    assert sat_p == expected, "definable sets must multiply componentwise"
    return lp_p, lp_a, lp_b

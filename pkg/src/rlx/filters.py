"""Filters, spectra as filter sets, radicals, and quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import ResiduatedLattice, validate
from .errors import AxiomViolation, NoMinimum

# Filters are frozensets of element ids; a Filter object pairs one with its
# algebra so serialization and sanity checks stay close to the data.


@dataclass(frozen=True)
class Filter:
    algebra: ResiduatedLattice
    members: frozenset

    def __post_init__(self):
        A, F = self.algebra, self.members
        if A.top not in F:
            raise AxiomViolation("filter-top", ())
        for a in F:
            for b in A.elements():
                if A.leq[a][b] and b not in F:
                    raise AxiomViolation("filter-up-closed", (a, b))
            for b in F:
                if A.odot[a][b] not in F:
                    raise AxiomViolation("filter-odot-closed", (a, b))

    @property
    def proper(self):
        return self.algebra.bot not in self.members

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.members)

    def __le__(self, other):
        return self.members <= other.members

    def sorted_members(self):
        return sorted(self.members)

    def __repr__(self):
        labels = self.algebra.labels
        return "{" + ",".join(labels[x] for x in self.sorted_members()) + "}"


def is_filter_subset(A, subset):
    """Predicate form used by the all-subsets test oracle."""
    if A.top not in subset:
        return False
    for a in subset:
        for b in A.elements():
            if A.leq[a][b] and b not in subset:
                return False
        for b in subset:
            if A.odot[a][b] not in subset:
                return False
    return True


def generated_filter(A, xs):
    """Least filter containing xs; the empty set generates {top}."""
    current = set(xs)
    current.add(A.top)
    changed = True
    while changed:
        changed = False
        for a in list(current):
            for b in A.elements():
                if A.leq[a][b] and b not in current:
                    current.add(b)
                    changed = True
            for b in list(current):
                c = A.odot[a][b]
                if c not in current:
                    current.add(c)
                    changed = True
    return Filter(A, frozenset(current))


def principal_filter(A, x):
    return generated_filter(A, (x,))


@lru_cache(maxsize=None)
def all_filters(A):
    """Every filter of A, deterministically ordered by (size, members).

    On a finite algebra every filter is principal, so the principal filters
    of all elements, deduplicated, are complete; the naive all-subsets scan
    stays around as a test oracle.
    """
    seen = {}
    for x in A.elements():
        F = principal_filter(A, x)
        seen.setdefault(F.members, F)
    out = sorted(seen.values(), key=lambda F: (len(F), F.sorted_members()))
    return tuple(out)


def filter_join(F, G):
    return generated_filter(F.algebra, F.members | G.members)


def filter_meet(F, G):
    return Filter(F.algebra, F.members & G.members)


def trivial_filter(A):
    return Filter(A, frozenset({A.top}))


def improper_filter(A):
    return Filter(A, frozenset(A.elements()))


def is_prime(F):
    """Proper and split-resistant under joins: a|b in F => a in F or b in F."""
    A = F.algebra
    if not F.proper:
        return False
    for a in A.elements():
        for b in A.elements():
            if A.join[a][b] in F and a not in F and b not in F:
                return False
    return True


@lru_cache(maxsize=None)
def spec(A):
    """Prime filters, in all_filters order (the Stone-space point order)."""
    return tuple(F for F in all_filters(A) if is_prime(F))


@lru_cache(maxsize=None)
def max_spec(A):
    """Maximal proper filters; checked against the negated-power criterion
    (a outside M iff some power of a has its negation inside M) and
    asserted to be prime."""
    filters = all_filters(A)
    proper = [F for F in filters if F.proper]
    out = []
    for F in proper:
        if not any(F.members < G.members for G in proper):
            out.append(F)
    primes = set(F.members for F in spec(A))
    for M in out:
        assert M.members in primes, "maximal filter not prime"
        for a in A.elements():
            has_negpow = any(A.neg(A.power(a, k)) in M
                             for k in range(1, A.size + 1))
            assert (a not in M) == has_negpow, "negated-power criterion"
    return tuple(out)


@lru_cache(maxsize=None)
def radical(A):
    """Intersection of all maximal filters (the whole algebra if none)."""
    members = frozenset(A.elements())
    for M in max_spec(A):
        members &= M.members
    return Filter(A, members)


def is_local(A):
    return len(max_spec(A)) == 1


def is_semilocal(A):
    """(always-true-on-finite flag, maximal filter count)."""
    return True, len(max_spec(A))


def is_semisimple(A):
    return radical(A).members == {A.top}


def min_generator(F):
    """The minimum of F, asserted idempotent; NoMinimum when it fails to exist."""
    A = F.algebra
    minimal = [a for a in F.sorted_members()
               if all(not A.leq[b][a] for b in F.members if b != a)]
    if len(minimal) != 1:
        raise NoMinimum(f"filter {F!r} has minimal elements {minimal}")
    m = minimal[0]
    assert A.odot[m][m] == m, "minimum of a filter must be idempotent"
    assert principal_filter(A, m).members == F.members
    return m


@dataclass(frozen=True)
class QuotientAlgebra:
    parent: ResiduatedLattice
    filter: Filter
    class_of: tuple  # element id -> class id
    quotient: ResiduatedLattice
    section: tuple  # class id -> least representative element


@lru_cache(maxsize=None)
def quotient(A, F):
    """A modulo the congruence x ~ y iff x<->y in F.

    Class ids are assigned by least representative, in representative
    order; the quotient tables are validated from scratch and the
    congruence property is checked explicitly.
    """
    n = A.size
    rep = [None] * n
    for x in range(n):
        for y in range(x, n):
            if rep[y] is None and A.bires(x, y) in F:
                rep[y] = x if rep[x] is None else rep[x]
    reps = sorted(set(rep))
    cid = {r: i for i, r in enumerate(reps)}
    class_of = tuple(cid[rep[x]] for x in range(n))

    # the relation must actually be a congruence for the tables to be
    # well-defined; check compatibility of every operation
    for x in range(n):
        for y in range(n):
            if class_of[x] != class_of[y]:
                continue
            for z in range(n):
                for tab in (A.join, A.meet, A.odot):
                    if class_of[tab[x][z]] != class_of[tab[y][z]]:
                        raise AxiomViolation("congruence", (x, y, z))
                if class_of[A.imp[x][z]] != class_of[A.imp[y][z]]:
                    raise AxiomViolation("congruence", (x, y, z))
                if class_of[A.imp[z][x]] != class_of[A.imp[z][y]]:
                    raise AxiomViolation("congruence", (x, y, z))

    m = len(reps)
    leq = tuple(tuple(A.bires(A.meet[reps[i]][reps[j]], reps[i]) in F
                      for j in range(m)) for i in range(m))
    odot = tuple(tuple(class_of[A.odot[reps[i]][reps[j]]] for j in range(m))
                 for i in range(m))
    imp = tuple(tuple(class_of[A.imp[reps[i]][reps[j]]] for j in range(m))
                for i in range(m))
    labels = tuple(f"{A.labels[r]}/F" for r in reps)
    Q = validate(labels, leq, odot, imp)

    # class of top is exactly F
    assert {x for x in range(n) if class_of[x] == class_of[A.top]} == set(F.members)

    # radical commutes with quotients by sub-radical filters
    if F.members <= radical(A).members:
        rad_q = radical(Q).members
        rad_classes = {class_of[x] for x in radical(A).members}
        assert rad_q == rad_classes, "Rad(A/F) must equal Rad(A)/F"

    return QuotientAlgebra(A, F, class_of, Q, tuple(reps))


def filter_image(Q: QuotientAlgebra, G: Filter):
    """Image of a filter G >= F in the quotient A/F."""
    return Filter(Q.quotient, frozenset(Q.class_of[x] for x in G.members))


def filter_preimage(Q: QuotientAlgebra, H: Filter):
    members = frozenset(x for x in Q.parent.elements()
                        if Q.class_of[x] in H.members)
    return Filter(Q.parent, members)

"""Stone topologies on the prime and maximal spectra, topological
predicates, the Gelfand property in all its equivalent forms, and the
principal-filter splitting properties."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import classify
from .errors import NotGelfand
from .filters import (
    all_filters,
    filter_join,
    filter_meet,
    max_spec,
    principal_filter,
    radical,
    spec,
)

# Opens are bitmasks over point indices; point order is the filter
# enumeration order restricted to the space's points.


@dataclass(frozen=True)
class SpectrumSpace:
    algebra: object
    kind: str  # "spec" | "max"
    points: tuple  # of Filter
    opens: tuple  # sorted bitmask family
    basis: tuple  # of (element id, bitmask) for D(a) resp. d(a)

    @property
    def full(self):
        return (1 << len(self.points)) - 1

    def mask_of(self, filters):
        idx = {F.members: i for i, F in enumerate(self.points)}
        m = 0
        for F in filters:
            m |= 1 << idx[F.members]
        return m

    def closed_sets(self):
        return tuple(sorted(self.full & ~U for U in self.opens))

    def is_open(self, mask):
        return mask in set(self.opens)

    def is_closed(self, mask):
        return (self.full & ~mask) in set(self.opens)


def _d_mask(points, F):
    m = 0
    for i, P in enumerate(points):
        if not F.members <= P.members:
            m |= 1 << i
    return m


def _v_mask(points, F):
    m = 0
    for i, P in enumerate(points):
        if F.members <= P.members:
            m |= 1 << i
    return m


def _build(A, kind):
    points = spec(A) if kind == "spec" else max_spec(A)
    filters = all_filters(A)
    opens = sorted({_d_mask(points, F) for F in filters})
    basis = tuple((a, _d_mask(points, principal_filter(A, a)))
                  for a in A.elements())
    space = SpectrumSpace(A, kind, points, tuple(opens), basis)
    _assert_stone_identities(A, space)
    return space


def _assert_stone_identities(A, space):
    """Defining identities of the V/D (v/d) operators on the fresh family."""
    pts = space.points
    filters = all_filters(A)
    full = space.full
    for F in filters:
        assert _d_mask(pts, F) == full & ~_v_mask(pts, F)
    for F in filters:
        for G in filters:
            assert _v_mask(pts, filter_meet(F, G)) == \
                _v_mask(pts, F) | _v_mask(pts, G)
            assert _v_mask(pts, filter_join(F, G)) == \
                _v_mask(pts, F) & _v_mask(pts, G)
    for a in A.elements():
        for b in A.elements():
            va = _v_mask(pts, principal_filter(A, a))
            vb = _v_mask(pts, principal_filter(A, b))
            vjoin = _v_mask(pts, principal_filter(A, A.join[a][b]))
            vodot = _v_mask(pts, principal_filter(A, A.odot[a][b]))
            vmeet = _v_mask(pts, principal_filter(A, A.meet[a][b]))
            assert vjoin == va | vb
            assert vodot == vmeet == va & vb
    # V(F) as the intersection of the V(a) over a in F
    for F in filters:
        acc = full
        for a in F.members:
            acc &= _v_mask(pts, principal_filter(A, a))
        assert acc == _v_mask(pts, F)
    # D injective on filters, reflecting inclusion (prime spectrum only)
    if space.kind == "spec":
        for F in filters:
            for G in filters:
                dF, dG = _d_mask(pts, F), _d_mask(pts, G)
                assert (dF == dG) == (F.members == G.members)
                assert (dF & ~dG == 0) == (F.members <= G.members)


@lru_cache(maxsize=None)
def stone_spec(A):
    return _build(A, "spec")


@lru_cache(maxsize=None)
def stone_max(A):
    return _build(A, "max")


def clopen_sets(space):
    opens = set(space.opens)
    return tuple(sorted(U for U in opens if (space.full & ~U) in opens))


def clopen_via_boolean(A, which):
    """{D(e) : e Boolean} resp. {d(e) : ...}; equal to the clopen family on
    Spec always, and on Max under Gelfand or semisimplicity."""
    space = stone_spec(A) if which == "spec" else stone_max(A)
    B = classify(A).boolean_center
    fam = {_d_mask(space.points, principal_filter(A, e)) for e in B}
    return tuple(sorted(fam))


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def topology_predicates(space):
    """T0/T1/Hausdorff/compact/zero-dimensional/strongly-zero-dimensional/
    normal/Boolean for an explicit finite open family."""
    n = len(space.points)
    opens = space.opens
    openset = set(opens)
    full = space.full
    clopens = [U for U in opens if (full & ~U) in openset]

    t0 = all(
        any(((U >> x) & 1) != ((U >> y) & 1) for U in opens)
        for x in range(n) for y in range(x + 1, n))
    t1 = all((full & ~(1 << x)) in openset for x in range(n))
    hausdorff = all(
        any((U >> x) & 1 and (V >> y) & 1 and U & V == 0
            for U in opens for V in opens)
        for x in range(n) for y in range(x + 1, n))
    compact = True  # finite spaces are compact
    # zero-dimensional: every open is a union of clopen sets
    zero_dim = True
    for U in opens:
        acc = 0
        for C in clopens:
            if C & ~U == 0:
                acc |= C
        if acc != U:
            zero_dim = False
            break
    # strongly zero-dimensional via the binary-cover splitting criterion
    strongly_zero_dim = True
    for U in opens:
        for V in opens:
            if U | V != full:
                continue
            ok = any(
                C & ~U == 0 and D & ~V == 0 and C & D == 0 and C | D == full
                for C in clopens for D in clopens)
            if not ok:
                strongly_zero_dim = False
                break
        if not strongly_zero_dim:
            break
    normal = True
    closed = [full & ~U for U in opens]
    for C in closed:
        for D in closed:
            if C & D != 0:
                continue
            ok = any(C & ~U == 0 and D & ~V == 0 and U & V == 0
                     for U in opens for V in opens)
            if not ok:
                normal = False
                break
        if not normal:
            break
    boolean_space = compact and hausdorff and zero_dim
    preds = {
        "t0": t0,
        "t1": t1,
        "hausdorff": hausdorff,
        "compact": compact,
        "zero_dim": zero_dim,
        "strongly_zero_dim": strongly_zero_dim,
        "normal": normal,
        "boolean_space": boolean_space,
    }
    if space.kind == "max":
        # on a T1 compact space the four conditions collapse
        assert zero_dim == strongly_zero_dim == normal == boolean_space
    # strong zero-dimensionality agrees with clopen separation of disjoint
    # closed sets (the three-way equivalence of the splitting criterion)
    sep = True
    for C in closed:
        for D in closed:
            if C & D != 0:
                continue
            if not any(K & ~(full & ~D) == 0 and C & ~K == 0
                       for K in clopens):
                sep = False
                break
        if not sep:
            break
    assert sep == strongly_zero_dim
    return preds


@lru_cache(maxsize=None)
def is_gelfand(A):
    """Every prime filter sits below exactly one maximal filter."""
    maxima = max_spec(A)
    for P in spec(A):
        above = [M for M in maxima if P.members <= M.members]
        if len(above) != 1:
            return False
    return True


def gelfand_conditions(A):
    """All implemented equivalent forms of the Gelfand property.

    Keys 1,2,4,8,10,12,14 are computed on A directly; 3 and 5 on the
    reticulation.  The values must all agree.
    """
    from .dlattice import (
        is_conormal_lattice,
        is_normal_lattice,
        lattice_max_filters,
        lattice_prime_filters,
        validate_bdl,
    )
    from .reticulation import build_reticulation

    out = {}
    out[4] = is_gelfand(A)

    # (1) the filter lattice is normal
    filters = all_filters(A)
    leq = tuple(tuple(F.members <= G.members for G in filters)
                for F in filters)
    filt_lattice = validate_bdl(tuple(repr(F) for F in filters), leq)
    out[1] = is_normal_lattice(filt_lattice)

    # (2) element form of the same statement on principal filters
    improper = frozenset(A.elements())
    cond2 = True
    for x in A.elements():
        for y in A.elements():
            if filter_join(principal_filter(A, x),
                           principal_filter(A, y)).members != improper:
                continue
            ok = any(
                filter_meet(principal_filter(A, u),
                            principal_filter(A, v)).members == {A.top}
                and filter_join(principal_filter(A, u),
                                principal_filter(A, x)).members == improper
                and filter_join(principal_filter(A, v),
                                principal_filter(A, y)).members == improper
                for u in A.elements() for v in A.elements())
            if not ok:
                cond2 = False
                break
        if not cond2:
            break
    out[2] = cond2

    # (8) Spec(A) is a normal space
    out[8] = topology_predicates(stone_spec(A))["normal"]

    # (10) {P : P <= M} closed for every maximal M
    sp = stone_spec(A)
    cond10 = True
    for M in max_spec(A):
        below = sp.mask_of([P for P in sp.points if P.members <= M.members])
        if not sp.is_closed(below):
            cond10 = False
            break
    out[10] = cond10

    # (12) M is the only maximal filter over the intersection of its primes
    cond12 = True
    for M in max_spec(A):
        inter = frozenset(A.elements())
        for P in spec(A):
            if P.members <= M.members:
                inter &= P.members
        over = [N for N in max_spec(A) if inter <= N.members]
        if over != [M]:
            cond12 = False
            break
    out[12] = cond12

    # (14) distinct maximal filters separated by disjoint opens in Spec
    cond14 = True
    maxima = max_spec(A)
    for i, M in enumerate(maxima):
        for N in maxima[i + 1:]:
            mi = sp.mask_of([M])
            ni = sp.mask_of([N])
            if not any(U & mi and V & ni and U & V == 0
                       for U in sp.opens for V in sp.opens):
                cond14 = False
                break
        if not cond14:
            break
    out[14] = cond14

    # reticulation-side forms
    R = build_reticulation(A)
    L = R.lattice
    out[3] = is_conormal_lattice(L)
    maxima_l = lattice_max_filters(L)
    cond5 = True
    for P in lattice_prime_filters(L):
        above = [M for M in maxima_l if P <= M]
        if len(above) != 1:
            cond5 = False
            break
    out[5] = cond5
    return out


def gelfand_retract(A):
    """The map sending a prime to its unique maximal, with continuity and
    identity-on-Max checked; NotGelfand otherwise."""
    if not is_gelfand(A):
        raise NotGelfand(repr(A))
    sp = stone_spec(A)
    mx = stone_max(A)
    maxima = max_spec(A)
    rho = []
    for P in sp.points:
        M = next(M for M in maxima if P.members <= M.members)
        rho.append(next(i for i, Q in enumerate(mx.points)
                        if Q.members == M.members))
    # identity on maximal points
    for i, P in enumerate(sp.points):
        if any(P.members == M.members for M in maxima):
            assert mx.points[rho[i]].members == P.members
    # continuity: preimages of opens are open
    for U in mx.opens:
        pre = 0
        for i in range(len(sp.points)):
            if (U >> rho[i]) & 1:
                pre |= 1 << i
        assert sp.is_open(pre), "retraction must be continuous"
    return tuple(rho)


def star_property(A):
    """Principal filters split off a radical part: for every x some
    u in Rad(A) and Boolean e give [x) = [u) v [e).

    Decided directly and via three equivalent reformulations (nilpotent
    product + radical join; the two spectral containments; the bounded
    union form); all four must agree.  Returns (holds, witnesses) where
    witnesses maps x -> (u, e) for the direct form.
    """
    B = sorted(classify(A).boolean_center)
    rad = radical(A)
    mx = stone_max(A)
    pts = mx.points

    witnesses = {}
    direct = True
    for x in A.elements():
        fx = principal_filter(A, x)
        found = None
        for u in sorted(rad.members):
            for e in B:
                if filter_join(principal_filter(A, u),
                               principal_filter(A, e)).members == fx.members:
                    found = (u, e)
                    break
            if found:
                break
        if found is None:
            direct = False
        else:
            witnesses[x] = found

    via_nilpotent = True
    for a in A.elements():
        ok = any(A.is_nilpotent(A.odot[a][e]) and A.join[a][e] in rad.members
                 for e in B)
        if not ok:
            via_nilpotent = False
            break

    via_spectral = True
    for a in A.elements():
        va = _v_mask(pts, principal_filter(A, a))
        da = mx.full & ~va
        ok = False
        for e in B:
            ve = _v_mask(pts, principal_filter(A, e))
            de = mx.full & ~ve
            if va & ~de == 0 and da & ~ve == 0:
                ok = True
                break
        if not ok:
            via_spectral = False
            break

    via_powers = True
    for a in A.elements():
        va = _v_mask(pts, principal_filter(A, a))
        ok = False
        for e in B:
            ve = _v_mask(pts, principal_filter(A, e))
            de = mx.full & ~ve
            if va & ~de != 0:
                continue
            if all(_v_mask(pts, principal_filter(A, A.neg(A.power(a, k)))) & ~ve == 0
                   for k in range(1, A.size + 1)):
                ok = True
                break
        if not ok:
            via_powers = False
            break

    assert direct == via_nilpotent == via_spectral == via_powers
    return direct, witnesses


def star_star_property(A):
    """Weakened splitting: u only needs a nilpotent negation."""
    B = sorted(classify(A).boolean_center)
    witnesses = {}
    holds = True
    for x in A.elements():
        fx = principal_filter(A, x)
        found = None
        for u in A.elements():
            if not A.is_nilpotent(A.neg(u)):
                continue
            for e in B:
                if filter_join(principal_filter(A, u),
                               principal_filter(A, e)).members == fx.members:
                    found = (u, e)
                    break
            if found:
                break
        if found is None:
            holds = False
        else:
            witnesses[x] = found
    return holds, witnesses

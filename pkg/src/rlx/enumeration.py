"""Exhaustive enumeration of residuated lattices up to isomorphism.

Strategy: enumerate bounded lattices on n canonically-labeled elements
(orders compatible with id order), then complete each with every monoid
table that can residuate.  Since the product must distribute over joins,
it is determined by its values on join-irreducible pairs; we backtrack
over those and extend by joins.  Results are deduplicated by the
minimum-lex canonical key and emitted in canonical-key order, so the
output is deterministic and worker-partitionable.

A corpus cache lives under $RLX_CORPUS_DIR (or ~/.cache/rlx-corpus),
keyed by size and generator version.
"""

from __future__ import annotations

import itertools
import json
import os
from pathlib import Path

from .core import bounds_of, glb_table, lub_table, validate
from .errors import AxiomViolation, NotResiduated, SizeCapExceeded
from .iso import canonical_key

SIZE_CAP = 7
GENERATOR_VERSION = 2


def _lattice_orders(n):
    """All lattice orders on 0..n-1 with 0=bot, n-1=top, ids a linear extension.

    Yields (leq, join, meet).  Every isomorphism class shows up at least
    once because every finite lattice admits a linear extension.
    """
    if n == 1:
        yield ((True,),), ((0,),), ((0,),)
        return
    mids = list(range(1, n - 1))
    pairs = [(i, j) for i in mids for j in mids if i < j]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i in range(n):
            rel[0][i] = True
            rel[i][n - 1] = True
        for (i, j), b in zip(pairs, bits):
            if b:
                rel[i][j] = True
        # transitivity check (ids form a linear extension, so i<j only)
        ok = True
        for i in mids:
            for j in mids:
                if i != j and rel[i][j]:
                    for k in mids:
                        if k != j and rel[j][k] and not rel[i][k]:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            continue
        leq = tuple(tuple(row) for row in rel)
        join = lub_table(leq)
        meet = glb_table(leq)
        if any(v is None for row in join for v in row):
            continue
        if any(v is None for row in meet for v in row):
            continue
        yield leq, join, meet


def _join_irreducibles(leq, join):
    """Non-bot elements that are not the join of two strictly smaller ones."""
    n = len(leq)
    bot, _ = bounds_of(leq)
    out = []
    for x in range(n):
        if x == bot:
            continue
        red = any(join[a][b] == x
                  for a in range(n) for b in range(n)
                  if a != x and b != x and leq[a][x] and leq[b][x])
        if not red:
            out.append(x)
    return out


def _complete_from_irreducibles(leq, join, meet, irr, prod):
    """Extend a product on irreducible pairs to the whole carrier by joins."""
    n = len(leq)
    bot, top = bounds_of(leq)
    below = [[p for p in irr if leq[p][x]] for x in range(n)]
    table = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            acc = bot
            for p in below[x]:
                for q in below[y]:
                    acc = join[acc][prod[(p, q) if p <= q else (q, p)]]
            table[x][y] = acc
            table[y][x] = acc
    return tuple(tuple(row) for row in table)


def _products_on_lattice(leq, join, meet):
    """All residuated products for one lattice order; unvalidated tables."""
    n = len(leq)
    bot, top = bounds_of(leq)
    irr = [x for x in _join_irreducibles(leq, join) if x != top]
    # top acts as unit on irreducibles automatically via extension only if
    # top is join-reducible; when top is irreducible we must pin its pairs.
    irr_all = _join_irreducibles(leq, join)
    pin_top = top in irr_all
    free = [(p, q) for i, p in enumerate(irr) for q in irr[i:]]

    results = []
    prod = {}
    if pin_top:
        for p in irr_all:
            prod[(p, top) if p <= top else (top, p)] = p
        prod[(top, top)] = top

    def candidates(p, q):
        m = meet[p][q]
        return [v for v in range(n) if leq[v][m]]

    def monotone_ok(p, q, v):
        for (a, b), w in prod.items():
            if leq[a][p] and leq[b][q] and not leq[w][v]:
                return False
            if leq[p][a] and leq[q][b] and not leq[v][w]:
                return False
            if leq[a][q] and leq[b][p] and not leq[w][v]:
                return False
            if leq[q][a] and leq[p][b] and not leq[v][w]:
                return False
        return True

    def backtrack(k):
        if k == len(free):
            table = _complete_from_irreducibles(leq, join, meet, irr_all, prod)
            if _table_ok(leq, join, meet, table, top):
                results.append(table)
            return
        p, q = free[k]
        for v in candidates(p, q):
            if not monotone_ok(p, q, v):
                continue
            prod[(p, q)] = v
            backtrack(k + 1)
            del prod[(p, q)]

    backtrack(0)
    return results


def _table_ok(leq, join, meet, odot, top):
    n = len(leq)
    for a in range(n):
        if odot[a][top] != a:
            return False
    for a in range(n):
        for b in range(a, n):
            if not leq[odot[a][b]][meet[a][b]]:
                return False
    for a in range(n):
        for b in range(n):
            ab = odot[a][b]
            for c in range(b, n):
                if odot[ab][c] != odot[a][odot[b][c]]:
                    return False
    # join-distributivity makes the residuum exist on a finite lattice
    for a in range(n):
        for b in range(n):
            for c in range(b, n):
                if odot[a][join[b][c]] != join[odot[a][b]][odot[a][c]]:
                    return False
    return True


def _generate(n):
    found = {}
    for leq, join, meet in _lattice_orders(n):
        for odot in _products_on_lattice(leq, join, meet):
            labels = tuple(f"e{i}" for i in range(n))
            try:
                A = validate(labels, leq, odot)
            except (AxiomViolation, NotResiduated):
                continue
            key = canonical_key(A)
            if key not in found:
                found[key] = A
    return [found[k] for k in sorted(found)]


def _cache_dir():
    root = os.environ.get("RLX_CORPUS_DIR")
    if root:
        return Path(root)
    return Path.home() / ".cache" / "rlx-corpus"


def _cache_path(n):
    return _cache_dir() / f"v{GENERATOR_VERSION}-n{n}.json"


def _to_json(A):
    return {
        "labels": list(A.labels),
        "leq": [[int(v) for v in row] for row in A.leq],
        "odot": [list(row) for row in A.odot],
    }


def _from_json(obj):
    leq = tuple(tuple(bool(v) for v in row) for row in obj["leq"])
    odot = tuple(tuple(row) for row in obj["odot"])
    return validate(tuple(obj["labels"]), leq, odot)


def enumerate_algebras(n, emit=None, use_cache=True):
    """Emit every residuated lattice on n elements once up to isomorphism.

    Deterministic order (sorted canonical keys).  Returns the count.
    """
    if not 1 <= n <= SIZE_CAP:
        raise SizeCapExceeded(f"size {n} outside 1..{SIZE_CAP}")
    algebras = None
    path = _cache_path(n)
    if use_cache and path.exists():
        try:
            data = json.loads(path.read_text())
            algebras = [_from_json(o) for o in data]
        except (ValueError, KeyError, AxiomViolation):
            algebras = None
    if algebras is None:
        algebras = _generate(n)
        if use_cache:
            try:
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(json.dumps([_to_json(A) for A in algebras]))
            except OSError:
                pass
    for A in algebras:
        if emit is not None:
            emit(A)
    return len(algebras)


def all_algebras(n, use_cache=True):
    """List form of :func:`enumerate_algebras`."""
    out = []
    enumerate_algebras(n, out.append, use_cache=use_cache)
    return out


def corpus(max_size, use_cache=True):
    """All algebras of size 1..max_size, concatenated in size order."""
    out = []
    for n in range(1, max_size + 1):
        out.extend(all_algebras(n, use_cache=use_cache))
    return out


def slow_enumerate(n):
    """Independent slow oracle: scan all commutative unital tables.

    Enumerates every lattice order, then every commutative table with the
    top as unit, keeps those whose residuum exists and passes full
    validation, and deduplicates up to isomorphism.  Exponential; intended
    for cross-checking the fast generator at n <= 4 only.
    """
    found = {}
    for leq, join, meet in _lattice_orders(n):
        top = n - 1
        cells = [(i, j) for i in range(n - 1) for j in range(i, n - 1)]
        for values in itertools.product(range(n), repeat=len(cells)):
            table = [[None] * n for _ in range(n)]
            for a in range(n):
                table[a][top] = a
                table[top][a] = a
            for (i, j), v in zip(cells, values):
                table[i][j] = v
                table[j][i] = v
            odot = tuple(tuple(row) for row in table)
            labels = tuple(f"e{i}" for i in range(n))
            try:
                A = validate(labels, leq, odot)
            except (AxiomViolation, NotResiduated):
                continue
            key = canonical_key(A)
            if key not in found:
                found[key] = A
    return [found[k] for k in sorted(found)]

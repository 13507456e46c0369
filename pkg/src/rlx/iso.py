"""Canonical labeling and isomorphism search for small operation tables.

Structures are given by a partial order plus a list of n x n operation
tables.  Sizes stay tiny (<= 64), so backtracking with cheap local
invariants is plenty.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .core import validate


def permute_relation(rel, perm):
    n = len(rel)
    out = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = rel[a][b]
    return tuple(tuple(row) for row in out)


def permute_table(table, perm):
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return tuple(tuple(row) for row in out)


def encode(leq, odot):
    bits = tuple(v for row in leq for v in row)
    vals = tuple(v for row in odot for v in row)
    return bits + vals


def _mid_perms(n, bot, top):
    mids = [x for x in range(n) if x not in (bot, top)]
    for images in itertools.permutations(mids):
        perm = list(range(n))
        for src, dst in zip(mids, images):
            perm[src] = dst
        yield tuple(perm)


@lru_cache(maxsize=None)
def canonical_key(A):
    """Minimum-lex encoding of (leq, odot) over relabelings fixing bot/top."""
    best = None
    for perm in _mid_perms(A.size, A.bot, A.top):
        key = encode(permute_relation(A.leq, perm), permute_table(A.odot, perm))
        if best is None or key < best:
            best = key
    return best


def canonicalize(A):
    """Relabel A into its canonical form (labels become e0..e{n-1})."""
    best = None
    best_perm = None
    for perm in _mid_perms(A.size, A.bot, A.top):
        key = encode(permute_relation(A.leq, perm), permute_table(A.odot, perm))
        if best is None or key < best:
            best, best_perm = key, perm
    leq = permute_relation(A.leq, best_perm)
    odot = permute_table(A.odot, best_perm)
    labels = tuple(f"e{i}" for i in range(A.size))
    return validate(labels, leq, odot)


def _invariant(leq, tables, x):
    n = len(leq)
    down = sum(1 for y in range(n) if leq[y][x])
    up = sum(1 for y in range(n) if leq[x][y])
    diag = tuple(t[x][x] == x for t in tables)
    occur = tuple(sum(1 for a in range(n) for b in range(n) if t[a][b] == x)
                  for t in tables)
    return (down, up, diag, occur)


def find_isomorphism(leq_a, tables_a, leq_b, tables_b):
    """A bijection p with p(x op y) = p(x) op p(y) and x<=y iff p(x)<=p(y).

    Returns the mapping as a tuple (old id -> new id) or None.  Tables must
    come in matching order on both sides.
    """
    n = len(leq_a)
    if len(leq_b) != n or len(tables_a) != len(tables_b):
        return None
    inv_a = [_invariant(leq_a, tables_a, x) for x in range(n)]
    inv_b = [_invariant(leq_b, tables_b, x) for x in range(n)]
    if sorted(inv_a) != sorted(inv_b):
        return None

    perm = [None] * n
    used = [False] * n

    def consistent(x):
        assigned = [a for a in range(n) if perm[a] is not None]
        for a in assigned:
            if leq_a[x][a] != leq_b[perm[x]][perm[a]] or leq_a[a][x] != leq_b[perm[a]][perm[x]]:
                return False
        for ta, tb in zip(tables_a, tables_b):
            for u in assigned:
                for v in assigned:
                    r = ta[u][v]
                    img = tb[perm[u]][perm[v]]
                    if perm[r] is not None and perm[r] != img:
                        return False
        return True

    def extend(x):
        if x == n:
            # full verification before accepting
            for a in range(n):
                for b in range(n):
                    if leq_a[a][b] != leq_b[perm[a]][perm[b]]:
                        return False
                    for ta, tb in zip(tables_a, tables_b):
                        if perm[ta[a][b]] != tb[perm[a]][perm[b]]:
                            return False
            return True
        for y in range(n):
            if used[y] or inv_a[x] != inv_b[y]:
                continue
            perm[x] = y
            used[y] = True
            if consistent(x) and extend(x + 1):
                return True
            perm[x] = None
            used[y] = False
        return False

    if extend(0):
        return tuple(perm)
    return None


def rl_isomorphism(A, B):
    """Residuated-lattice isomorphism A -> B as an id map, or None."""
    return find_isomorphism(A.leq, (A.join, A.meet, A.odot, A.imp),
                            B.leq, (B.join, B.meet, B.odot, B.imp))


def rl_isomorphic(A, B):
    return rl_isomorphism(A, B) is not None

"""Equational formulas over the residuated-lattice signature.

Grammar (one formula per string):

    formula := ["exists" IDENT+ "."] eq ("&&" eq)*
    eq      := term "=" term
    term    := binary operators over atoms, parenthesized freely

Operator binding, tightest first: ^k (postfix power), ! (negation),
* (product), & (meet), | (join), -> (right-associative), <->.
Atoms: the free variable, exists-bound witnesses, constants 0 and 1.
Names of the shape w<digits> are reserved for bound witnesses and must be
declared in the exists prefix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    FormulaSyntaxError,
    MultipleFreeVariables,
    NotAtomic,
    UnboundVariable,
)

MAX_POWER = 31


@dataclass(frozen=True)
class FreeVar:
    name: str


@dataclass(frozen=True)
class BoundVar:
    name: str


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1


@dataclass(frozen=True)
class BinOp:
    op: str  # "|", "&", "*", "->", "<->"
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Pow:
    arg: object
    exponent: int


@dataclass(frozen=True)
class Formula:
    bound_vars: tuple
    equations: tuple  # of (lhs, rhs) term pairs
    free_var: str


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<arrow><->|->)
  | (?P<op>[|&*!^()=.])
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        if text.startswith("&&", i):
            tokens.append(("&&", "&&", i))
            i += 2
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[i]!r}", i)
        i = m.end()
        if m.lastgroup == "ws":
            continue
        kind = m.lastgroup
        tokens.append((kind, m.group(), m.start()))
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, value=None):
        kind, text, where = self.tokens[self.pos]
        if value is not None and text != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {text!r}", where)
        self.pos += 1
        return kind, text, where

    def parse(self):
        bound = []
        kind, text, where = self.peek()
        if kind == "ident" and text == "exists":
            self.take()
            while True:
                kind, text, where = self.peek()
                if kind == "ident":
                    if text in bound:
                        raise FormulaSyntaxError(f"duplicate witness {text!r}", where)
                    bound.append(text)
                    self.take()
                elif text == ".":
                    if not bound:
                        raise FormulaSyntaxError("empty exists prefix", where)
                    self.take()
                    break
                else:
                    raise FormulaSyntaxError("expected witness name or '.'", where)
        equations = [self.equation(bound)]
        while self.peek()[1] == "&&":
            self.take()
            equations.append(self.equation(bound))
        kind, text, where = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"trailing input {text!r}", where)
        free = self._free_names(equations, bound)
        if len(free) > 1:
            raise MultipleFreeVariables(sorted(free))
        free_var = free.pop() if free else "v"
        return Formula(tuple(bound), tuple(equations), free_var)

    def _free_names(self, equations, bound):
        names = set()

        def walk(t):
            if isinstance(t, FreeVar):
                names.add(t.name)
            elif isinstance(t, (BinOp,)):
                walk(t.lhs)
                walk(t.rhs)
            elif isinstance(t, Neg):
                walk(t.arg)
            elif isinstance(t, Pow):
                walk(t.arg)

        for lhs, rhs in equations:
            walk(lhs)
            walk(rhs)
        return names

    def equation(self, bound):
        lhs = self.term(bound)
        self.take("=")
        rhs = self.term(bound)
        return (lhs, rhs)

    # precedence ladder
    def term(self, bound):
        return self.bires(bound)

    def bires(self, bound):
        node = self.impl(bound)
        while self.peek()[1] == "<->":
            self.take()
            node = BinOp("<->", node, self.impl(bound))
        return node

    def impl(self, bound):
        node = self.joins(bound)
        if self.peek()[1] == "->":
            self.take()
            return BinOp("->", node, self.impl(bound))
        return node

    def joins(self, bound):
        node = self.meets(bound)
        while self.peek()[1] == "|":
            self.take()
            node = BinOp("|", node, self.meets(bound))
        return node

    def meets(self, bound):
        node = self.prods(bound)
        while self.peek()[1] == "&":
            self.take()
            node = BinOp("&", node, self.prods(bound))
        return node

    def prods(self, bound):
        node = self.unary(bound)
        while self.peek()[1] == "*":
            self.take()
            node = BinOp("*", node, self.unary(bound))
        return node

    def unary(self, bound):
        kind, text, where = self.peek()
        if text == "!":
            self.take()
            return Neg(self.unary(bound))
        return self.postfix(bound)

    def postfix(self, bound):
        node = self.atom(bound)
        while self.peek()[1] == "^":
            _, _, where = self.take()
            kind, text, nwhere = self.take()
            if kind != "num":
                raise FormulaSyntaxError("power wants a number", nwhere)
            k = int(text)
            if k > MAX_POWER:
                raise FormulaSyntaxError(f"exponent above {MAX_POWER}", nwhere)
            node = Pow(node, k)
        return node

    def atom(self, bound):
        kind, text, where = self.take()
        if text == "(":
            node = self.term(bound)
            self.take(")")
            return node
        if kind == "num":
            if text in ("0", "1"):
                return Const(int(text))
            raise FormulaSyntaxError(f"no constant {text!r}", where)
        if kind == "ident":
            if text in bound:
                return BoundVar(text)
            if re.fullmatch(r"w\d+", text):
                raise UnboundVariable(text)
            return FreeVar(text)
        raise FormulaSyntaxError(f"unexpected token {text!r}", where)


def parse_formula(text):
    return _Parser(text).parse()


def _term_str(t, required=0):
    # binding levels: <-> 1, -> 2, | 3, & 4, * 5, ! 6, ^ 7, atoms 8
    if isinstance(t, (FreeVar, BoundVar)):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Neg):
        s = "!" + _term_str(t.arg, 6)
        return f"({s})" if required > 6 else s
    if isinstance(t, Pow):
        s = _term_str(t.arg, 7) + f"^{t.exponent}"
        return f"({s})" if required > 7 else s
    levels = {"<->": 1, "->": 2, "|": 3, "&": 4, "*": 5}
    lv = levels[t.op]
    right_assoc = t.op == "->"
    lhs = _term_str(t.lhs, lv + (1 if right_assoc else 0))
    rhs = _term_str(t.rhs, lv + (0 if right_assoc else 1))
    s = f"{lhs} {t.op} {rhs}"
    return f"({s})" if lv < required else s


def format_formula(phi):
    eqs = " && ".join(f"{_term_str(l)} = {_term_str(r)}" for l, r in phi.equations)
    if phi.bound_vars:
        return f"exists {' '.join(phi.bound_vars)} . {eqs}"
    return eqs


def eval_term(A, t, value, env):
    """Value of a term at free-var `value` with bound-var assignment `env`."""
    if isinstance(t, FreeVar):
        return value
    if isinstance(t, BoundVar):
        return env[t.name]
    if isinstance(t, Const):
        return A.bot if t.value == 0 else A.top
    if isinstance(t, Neg):
        return A.imp[eval_term(A, t.arg, value, env)][A.bot]
    if isinstance(t, Pow):
        return A.power(eval_term(A, t.arg, value, env), t.exponent)
    lhs = eval_term(A, t.lhs, value, env)
    rhs = eval_term(A, t.rhs, value, env)
    if t.op == "|":
        return A.join[lhs][rhs]
    if t.op == "&":
        return A.meet[lhs][rhs]
    if t.op == "*":
        return A.odot[lhs][rhs]
    if t.op == "->":
        return A.imp[lhs][rhs]
    if t.op == "<->":
        return A.meet[A.imp[lhs][rhs]][A.imp[rhs][lhs]]
    raise AssertionError(t)


def satisfies(A, phi, a):
    """Does phi(a) hold in A (bound witnesses brute-forced over the carrier)."""
    import itertools

    names = phi.bound_vars
    for combo in itertools.product(A.elements(), repeat=len(names)):
        env = dict(zip(names, combo))
        if all(eval_term(A, l, a, env) == eval_term(A, r, a, env)
               for l, r in phi.equations):
            return True
    return False


def definable_set(A, phi):
    """{a : A |= phi(a)} as a frozenset of element ids."""
    return frozenset(a for a in A.elements() if satisfies(A, phi, a))


def atomic_parts(phi):
    """(t1, t2) when phi is one bound-variable-free equation; NotAtomic else."""
    if phi.bound_vars or len(phi.equations) != 1:
        raise NotAtomic(format_formula(phi))
    return phi.equations[0]


@lru_cache(maxsize=None)
def blp_formula():
    return parse_formula("v | !v = 1")


@lru_cache(maxsize=None)
def ilp_formula():
    return parse_formula("v^2 = v")


@lru_cache(maxsize=None)
def rlp_formula():
    return parse_formula("v = !!v")

"""A small language for universally quantified closure/interior identities.

Grammar (whitespace-insensitive)::

    claim    = "forall" binding {"," binding} ["with" relation {"," relation}] ":" relation
    binding  = ("open" | "closed" | "set") ident
    relation = expr ("=" | "<=") expr
    expr     = inter {"|" inter}
    inter    = unary {"&" unary}
    unary    = ("cl" | "int" | "cmp") "(" expr ")" | atom
    atom     = ident | "empty" | "X" | "(" expr ")"

Example::

    >>> c = parse_claim("forall open A, open B : cl(A) & cl(B) = cl(A & B)")
    >>> str(c)
    'forall open A, open B : cl(A) & cl(B) = cl(A & B)'
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Union

from .conditions import Verdict, Witness, is_extremally_disconnected
from .enumeration import check_cap, enumerate_topologies
from .pointset import PointSet
from .topology import Topology

KEYWORDS = frozenset({"forall", "with", "open", "closed", "set", "cl", "int", "cmp", "empty", "X"})
SORTS = ("open", "closed", "set")


class ClaimError(ValueError):
    pass


class ParseError(ClaimError):
    def __init__(self, text: str, pos: int, expected: list[str], found: str):
        line = text.count("\n", 0, pos) + 1
        column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, column
        self.expected = expected
        self.found = found
        super().__init__(
            f"line {line}, column {column}: expected {' or '.join(expected)}, found {found}"
        )


class UnboundVariable(ClaimError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is not bound by the quantifier")
        self.name = name


class DuplicateBinding(ClaimError):
    def __init__(self, name: str):
        super().__init__(f"variable {name!r} is bound more than once")
        self.name = name


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Full:
    pass


@dataclass(frozen=True)
class Complement:
    arg: "Expr"


@dataclass(frozen=True)
class Closure:
    arg: "Expr"


@dataclass(frozen=True)
class Interior:
    arg: "Expr"


@dataclass(frozen=True)
class Union_:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Intersection:
    left: "Expr"
    right: "Expr"


Expr = Union[Var, Empty, Full, Complement, Closure, Interior, Union_, Intersection]


@dataclass(frozen=True)
class Relation:
    lhs: Expr
    op: str  # "=" or "<="
    rhs: Expr


@dataclass(frozen=True)
class Claim:
    bindings: tuple[tuple[str, str], ...]  # (sort, name)
    side_conditions: tuple[Relation, ...]
    body: Relation

    def __str__(self) -> str:
        return format_claim(self)


# ---------------------------------------------------------------- printing

_UNARY_NAMES = {Complement: "cmp", Closure: "cl", Interior: "int"}


def format_expr(e: Expr, ctx: int = 0) -> str:
    # ctx: 0 free, 1 right of "|", 2 left of "&", 3 right of "&"
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Empty):
        return "empty"
    if isinstance(e, Full):
        return "X"
    if isinstance(e, (Complement, Closure, Interior)):
        return f"{_UNARY_NAMES[type(e)]}({format_expr(e.arg)})"
    if isinstance(e, Intersection):
        s = f"{format_expr(e.left, 2)} & {format_expr(e.right, 3)}"
        return f"({s})" if ctx == 3 else s
    if isinstance(e, Union_):
        s = f"{format_expr(e.left, 0)} | {format_expr(e.right, 1)}"
        return f"({s})" if ctx else s
    raise TypeError(f"not an expression: {e!r}")


def format_relation(r: Relation) -> str:
    return f"{format_expr(r.lhs)} {r.op} {format_expr(r.rhs)}"


def format_claim(c: Claim) -> str:
    out = "forall " + ", ".join(f"{sort} {name}" for sort, name in c.bindings)
    if c.side_conditions:
        out += " with " + ", ".join(format_relation(r) for r in c.side_conditions)
    return out + " : " + format_relation(c.body)


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(?P<word>[A-Za-z][A-Za-z0-9]*)|(?P<op><=|[=&|(),:])|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str  # "ident", "kw", "op", "end"
    value: str
    pos: int

    def describe(self) -> str:
        return "end of input" if self.kind == "end" else repr(self.value)


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastgroup)
        if m.lastgroup == "bad":
            raise ParseError(text, start, ["a token"], repr(m.group("bad")))
        value = m.group(m.lastgroup)
        if m.lastgroup == "word":
            toks.append(_Tok("kw" if value in KEYWORDS else "ident", value, start))
        else:
            toks.append(_Tok("op", value, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text.rstrip()) if text.strip() else len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, *expected: str):
        raise ParseError(self.text, self.tok.pos, list(expected), self.tok.describe())

    def accept(self, value: str) -> bool:
        if self.tok.kind in ("kw", "op") and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            self.error(repr(value))

    def ident(self) -> str:
        if self.tok.kind != "ident":
            self.error("identifier")
        name = self.tok.value
        self.i += 1
        return name

    def claim(self) -> Claim:
        self.expect("forall")
        bindings = [self.binding()]
        while self.accept(","):
            bindings.append(self.binding())
        sides = []
        if self.accept("with"):
            sides.append(self.relation())
            while self.accept(","):
                sides.append(self.relation())
        self.expect(":")
        body = self.relation()
        if self.tok.kind != "end":
            self.error("end of input")
        return Claim(tuple(bindings), tuple(sides), body)

    def binding(self) -> tuple[str, str]:
        for sort in SORTS:
            if self.accept(sort):
                return sort, self.ident()
        self.error(*(repr(s) for s in SORTS))

    def relation(self) -> Relation:
        lhs = self.expr()
        for op in ("=", "<="):
            if self.accept(op):
                return Relation(lhs, op, self.expr())
        self.error("'='", "'<='", "'&'", "'|'")

    def expr(self) -> Expr:
        e = self.inter()
        while self.accept("|"):
            e = Union_(e, self.inter())
        return e

    def inter(self) -> Expr:
        e = self.unary()
        while self.accept("&"):
            e = Intersection(e, self.unary())
        return e

    def unary(self) -> Expr:
        for kw, node in (("cl", Closure), ("int", Interior), ("cmp", Complement)):
            if self.accept(kw):
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return node(arg)
        return self.atom()

    def atom(self) -> Expr:
        if self.tok.kind == "ident":
            return Var(self.ident())
        if self.accept("empty"):
            return Empty()
        if self.accept("X"):
            return Full()
        if self.accept("("):
            e = self.expr()
            self.expect(")")
            return e
        self.error("identifier", "'empty'", "'X'", "'('", "'cl'", "'int'", "'cmp'")


def _free_vars(e: Expr, out: list[str]) -> list[str]:
    if isinstance(e, Var):
        out.append(e.name)
    elif isinstance(e, (Complement, Closure, Interior)):
        _free_vars(e.arg, out)
    elif isinstance(e, (Union_, Intersection)):
        _free_vars(e.left, out)
        _free_vars(e.right, out)
    return out


def parse_claim(text: str) -> Claim:
    claim = _Parser(text).claim()
    bound = set()
    for _, name in claim.bindings:
        if name in bound:
            raise DuplicateBinding(name)
        bound.add(name)
    for rel in (*claim.side_conditions, claim.body):
        for name in _free_vars(rel.lhs, []) + _free_vars(rel.rhs, []):
            if name not in bound:
                raise UnboundVariable(name)
    return claim


# ---------------------------------------------------------------- evaluation


def _compile(e: Expr, T: Topology, slot: dict[str, int]) -> Callable[[tuple[int, ...]], int]:
    full = T.full
    if isinstance(e, Var):
        i = slot[e.name]
        return lambda env: env[i]
    if isinstance(e, Empty):
        return lambda env: 0
    if isinstance(e, Full):
        return lambda env: full
    if isinstance(e, Complement):
        f = _compile(e.arg, T, slot)
        return lambda env: full ^ f(env)
    if isinstance(e, Closure):
        f, op = _compile(e.arg, T, slot), T.closure_mask
        return lambda env: op(f(env))
    if isinstance(e, Interior):
        f, op = _compile(e.arg, T, slot), T.interior_mask
        return lambda env: op(f(env))
    if isinstance(e, Union_):
        f, g = _compile(e.left, T, slot), _compile(e.right, T, slot)
        return lambda env: f(env) | g(env)
    if isinstance(e, Intersection):
        f, g = _compile(e.left, T, slot), _compile(e.right, T, slot)
        return lambda env: f(env) & g(env)
    raise TypeError(f"not an expression: {e!r}")


def _holds(op: str, lhs: int, rhs: int) -> bool:
    return lhs == rhs if op == "=" else lhs & ~rhs == 0


def _domain(T: Topology, sort: str):
    if sort == "open":
        return T.open_masks
    if sort == "closed":
        return T.closed_masks
    return range(1 << T.n)


def eval_claim(T: Topology, c: Claim, condition_id: str | None = None) -> Verdict:
    """Evaluate ``c`` over every assignment satisfying its side conditions.

    Bindings vary left to right with the last one fastest; the first failing
    assignment becomes the witness.
    """
    slot = {name: i for i, (_, name) in enumerate(c.bindings)}
    sides = [
        (_compile(r.lhs, T, slot), r.op, _compile(r.rhs, T, slot)) for r in c.side_conditions
    ]
    lhs_f = _compile(c.body.lhs, T, slot)
    rhs_f = _compile(c.body.rhs, T, slot)
    op = c.body.op
    for env in product(*(_domain(T, sort) for sort, _ in c.bindings)):
        if not all(_holds(o, f(env), g(env)) for f, o, g in sides):
            continue
        lhs, rhs = lhs_f(env), rhs_f(env)
        if not _holds(op, lhs, rhs):
            assignment = tuple(
                (name, PointSet(T.n, v)) for (_, name), v in zip(c.bindings, env)
            )
            witness = Witness(assignment, PointSet(T.n, lhs), op, PointSet(T.n, rhs))
            return Verdict(condition_id, False, witness)
    return Verdict(condition_id, True)


BUILTIN_CLAIMS: dict[str, str] = {
    "a": "forall open A : cl(A) = int(cl(A))",
    "b": "forall open A, open B : cl(A) & cl(B) = cl(A & B)",
    "c": "forall open A, open B with A & B = empty : cl(A) & cl(B) = empty",
    "d": "forall set K, open A with K & A = empty : cl(int(cl(K))) & cl(A) = empty",
    "e": "forall set K, open A with K & A = empty : int(cl(K)) & cl(A) = int(cl(K & A))",
    "f": "forall open A, open B : int(cl(A)) | int(cl(B)) = int(cl(A | B))",
    "g": "forall closed G, closed H : int(G) | int(H) = int(G | H)",
    "lemma1": "forall set A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))",
    "corollary2": "forall open A, open B : int(cl(A)) & int(cl(B)) = int(cl(A & B))",
    "hint": "forall set A, open B : A & int(cl(B)) <= cl(A & B)",
    "hint_open": "forall open A, open B : A & int(cl(B)) <= cl(A & B)",
}


def builtin_claim(condition_id: str) -> Claim:
    return parse_claim(BUILTIN_CLAIMS[condition_id])


# ---------------------------------------------------------------- model checking

FILTERS = ("all", "ed_only", "non_ed_only")


@dataclass(frozen=True)
class Failure:
    n: int
    index: int  # position in the labeled enumeration for this n
    topology: Topology
    witness: Witness


@dataclass
class ClaimReport:
    claim: Claim
    n_max: int
    filter: str
    models_checked: dict[int, int] = field(default_factory=dict)
    failure_counts: dict[int, int] = field(default_factory=dict)
    failures: list[Failure] = field(default_factory=list)
    duration_ms: float = 0.0

    @property
    def holds(self) -> bool:
        return not any(self.failure_counts.values())


def model_check(
    c: Claim,
    n_max: int,
    filter: str = "all",
    *,
    extended: bool = False,
    max_failures: int | None = 100,
    stop_at_first: bool = False,
) -> ClaimReport:
    """Evaluate ``c`` on every labeled topology with 0..n_max points.

    ``filter`` restricts to extremally disconnected spaces (``ed_only``) or
    their complement (``non_ed_only``). At most ``max_failures`` failures are
    kept; ``failure_counts`` always has the full tally.
    """
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}, got {filter!r}")
    check_cap(n_max, extended)
    report = ClaimReport(c, n_max, filter)
    start = time.perf_counter()
    for n in range(n_max + 1):
        checked = failed = 0
        for index, T in enumerate(enumerate_topologies(n, extended)):
            if filter != "all" and is_extremally_disconnected(T) != (filter == "ed_only"):
                continue
            checked += 1
            verdict = eval_claim(T, c)
            if verdict.holds:
                continue
            failed += 1
            if max_failures is None or len(report.failures) < max_failures:
                report.failures.append(Failure(n, index, T, verdict.witness))
            if stop_at_first:
                break
        report.models_checked[n] = checked
        report.failure_counts[n] = failed
        if stop_at_first and report.failures:
            break
    report.duration_ms = (time.perf_counter() - start) * 1000
    return report

"""Query language: tokenizer, recursive-descent parser, AST and printer.

::

    query    := expr ('|' action)?
    expr     := primary (('$>' | '>>=') NAME)*
    primary  := 'mix' '[' expr (',' expr)* ';' RAT (',' RAT)* ']'
              | NAME '(' (arg (',' arg)*)? ')'
    arg      := '[' (point (',' point)*)? ']' | NAME '(' ... ')' | point
    point    := RAT | 'success' | 'failure' | 'unit'
              | ('L' | 'R') '(' point ')' | '(' point (',' point)* ')'
    action   := 'pmf' '(' point ')' | 'prob' '(' pred ')'
              | 'mean' ('(' rv ')')? | 'var' ('(' rv ')')? | 'cov' '(' rv ',' rv ')'
              | 'cond' '(' pred (',' rv)? ')' 'at' point | 'support' | 'laws'
    pred     := selector? ('eq' point | 'le' RAT | 'ge' RAT)
    selector := 'fst' | 'snd' | 'item' '(' INT ')'
    rv       := 'id' | 'swap' | selector
    RAT      := '-'? DIGITS ('/' DIGITS)?
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import ParseError, UnknownName
from ..numeric import format_rational, make_rational

# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Keyword:
    name: str  # success | failure | unit


@dataclass(frozen=True)
class TagPoint:
    side: str
    inner: "Point"


@dataclass(frozen=True)
class TuplePoint:
    items: Tuple["Point", ...]


Point = Union[Num, Keyword, TagPoint, TuplePoint]


@dataclass(frozen=True)
class ListLit:
    items: Tuple[Point, ...]


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class MapBy:
    expr: "Expr"
    name: str


@dataclass(frozen=True)
class BindTo:
    expr: "Expr"
    name: str


@dataclass(frozen=True)
class Mix:
    branches: Tuple["Expr", ...]
    weights: Tuple[Fraction, ...]


Expr = Union[Call, MapBy, BindTo, Mix]


@dataclass(frozen=True)
class Selector:
    """Component selector: 'fst', 'snd' or 'item' with an index."""

    name: str
    index: Optional[int] = None


@dataclass(frozen=True)
class RVRef:
    name: str  # id | swap | fst | snd | item
    index: Optional[int] = None


@dataclass(frozen=True)
class Pred:
    op: str  # eq | le | ge
    value: Point
    selector: Optional[Selector] = None


@dataclass(frozen=True)
class Pmf:
    point: Point


@dataclass(frozen=True)
class Prob:
    pred: Pred


@dataclass(frozen=True)
class Mean:
    rv: RVRef = RVRef("id")


@dataclass(frozen=True)
class Var:
    rv: RVRef = RVRef("id")


@dataclass(frozen=True)
class Cov:
    left: RVRef
    right: RVRef


@dataclass(frozen=True)
class Cond:
    pred: Pred
    at: Point
    rv: RVRef = RVRef("id")


@dataclass(frozen=True)
class Support:
    pass


@dataclass(frozen=True)
class Laws:
    pass


Action = Union[Pmf, Prob, Mean, Var, Cov, Cond, Support, Laws]


@dataclass(frozen=True)
class Query:
    expr: Expr
    action: Optional[Action] = None


# ---------------------------------------------------------------- names

CONSTRUCTORS = frozenset(
    {
        "anscombe1",
        "bernoulli",
        "bernoulli_trials",
        "binary_urn",
        "binomial",
        "choose",
        "dirac",
        "discrete_uniform",
        "discrete_uniform_z",
        "empirical",
        "geometric",
        "hypergeometric",
        "kparts",
        "kparts_trials",
        "multinomial",
        "negative_binomial",
        "product",
        "uniform_mixture",
        "urn_trials",
    }
)
RESHAPERS = frozenset({"count_successes", "fst", "snd", "proportion", "reduce", "succ", "to_nat", "to_rat", "untag"})
KERNELS = frozenset({"bernoulli_kernel", "with_bernoulli", "empirical_kernel"})
RV_NAMES = frozenset({"id", "swap", "fst", "snd", "item"})
POINT_KEYWORDS = frozenset({"success", "failure", "unit"})

# ---------------------------------------------------------------- tokens

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>-?\d+(?:\s*/\s*\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>\$>|>>=|[|()\[\],;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str):
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        for i, ch in enumerate(m.group()):
            if ch == "\n":
                line += 1
                line_start = pos + i + 1
        pos = m.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


def _num_value(text: str) -> Fraction:
    num, _, den = text.replace(" ", "").replace("\t", "").replace("\n", "").partition("/")
    return make_rational(int(num), int(den) if den else 1)


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k=1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def fail(self, expected, tok=None):
        tok = tok or self.tok
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise ParseError(f"unexpected {found}", tok.line, tok.column, expected)

    def at(self, text) -> bool:
        return self.tok.text == text and self.tok.kind in ("sym", "name")

    def eat(self, text):
        if not self.at(text):
            self.fail([repr(text)])
        tok = self.tok
        self.i += 1
        return tok

    def name(self, allowed=None, what="name") -> Token:
        tok = self.tok
        if tok.kind != "name":
            self.fail([what])
        if allowed is not None and tok.text not in allowed:
            raise UnknownName(f"unknown {what} {tok.text!r} at line {tok.line}, column {tok.column}; known: {', '.join(sorted(allowed))}")
        self.i += 1
        return tok

    def number(self) -> Fraction:
        if self.tok.kind != "num":
            self.fail(["number"])
        tok = self.tok
        self.i += 1
        return _num_value(tok.text)

    def integer(self) -> int:
        tok = self.tok
        v = self.number()
        if v.denominator != 1:
            raise ParseError("expected an integer", tok.line, tok.column, ["integer"])
        return int(v)

    # query := expr ('|' action)?
    def query(self) -> Query:
        expr = self.expr()
        action = None
        if self.at("|"):
            self.i += 1
            action = self.action()
        if self.tok.kind != "end":
            self.fail(["'|'", "'$>'", "'>>='", "end of input"])
        return Query(expr, action)

    def expr(self) -> Expr:
        e = self.primary()
        while True:
            if self.at("$>"):
                self.i += 1
                e = MapBy(e, self.name(RESHAPERS, "reshaper").text)
            elif self.at(">>="):
                self.i += 1
                e = BindTo(e, self.name(KERNELS, "kernel").text)
            else:
                return e

    def primary(self) -> Expr:
        if self.at("mix"):
            self.i += 1
            self.eat("[")
            branches = [self.expr()]
            while self.at(","):
                self.i += 1
                branches.append(self.expr())
            self.eat(";")
            weights = [self.number()]
            while self.at(","):
                self.i += 1
                weights.append(self.number())
            self.eat("]")
            return Mix(tuple(branches), tuple(weights))
        if self.tok.kind != "name":
            self.fail(["distribution name", "'mix'"])
        name = self.name(CONSTRUCTORS, "distribution").text
        self.eat("(")
        args = []
        if not self.at(")"):
            args.append(self.arg())
            while self.at(","):
                self.i += 1
                args.append(self.arg())
        self.eat(")")
        return Call(name, tuple(args))

    def arg(self):
        if self.at("["):
            self.i += 1
            items = []
            if not self.at("]"):
                items.append(self.point())
                while self.at(","):
                    self.i += 1
                    items.append(self.point())
            self.eat("]")
            return ListLit(tuple(items))
        if self.tok.kind == "name" and (self.tok.text == "mix" or self.tok.text not in POINT_KEYWORDS | {"L", "R"}):
            return self.expr()
        return self.point()

    def point(self) -> Point:
        tok = self.tok
        if tok.kind == "num":
            return Num(self.number())
        if tok.kind == "name" and tok.text in POINT_KEYWORDS:
            self.i += 1
            return Keyword(tok.text)
        if tok.kind == "name" and tok.text in ("L", "R"):
            self.i += 1
            self.eat("(")
            inner = self.point()
            self.eat(")")
            return TagPoint(tok.text, inner)
        if self.at("("):
            self.i += 1
            items = [self.point()]
            while self.at(","):
                self.i += 1
                items.append(self.point())
            self.eat(")")
            return TuplePoint(tuple(items))
        self.fail(["number", "'('", "'success'", "'failure'", "'unit'", "'L'", "'R'"])

    def selector(self) -> Optional[Selector]:
        if self.at("fst") or self.at("snd"):
            return Selector(self.name().text)
        if self.at("item"):
            self.i += 1
            self.eat("(")
            idx = self.integer()
            self.eat(")")
            return Selector("item", idx)
        return None

    def rv(self) -> RVRef:
        if self.at("id") or self.at("swap"):
            return RVRef(self.name().text)
        sel = self.selector()
        if sel is None:
            if self.tok.kind == "name":
                self.name(RV_NAMES, "random variable")
            self.fail(["'id'", "'swap'", "'fst'", "'snd'", "'item'"])
        return RVRef(sel.name, sel.index)

    def pred(self) -> Pred:
        sel = self.selector()
        if self.at("eq"):
            self.i += 1
            return Pred("eq", self.point(), sel)
        if self.at("le") or self.at("ge"):
            op = self.name().text
            return Pred(op, Num(self.number()), sel)
        self.fail(["'eq'", "'le'", "'ge'"])

    def optional_rv(self) -> RVRef:
        if self.at("("):
            self.i += 1
            rv = self.rv()
            self.eat(")")
            return rv
        return RVRef("id")

    def action(self) -> Action:
        tok = self.tok
        if tok.kind != "name":
            self.fail(["action"])
        word = tok.text
        self.i += 1
        if word == "pmf":
            self.eat("(")
            p = self.point()
            self.eat(")")
            return Pmf(p)
        if word == "prob":
            self.eat("(")
            p = self.pred()
            self.eat(")")
            return Prob(p)
        if word == "mean":
            return Mean(self.optional_rv())
        if word == "var":
            return Var(self.optional_rv())
        if word == "cov":
            self.eat("(")
            a = self.rv()
            self.eat(",")
            b = self.rv()
            self.eat(")")
            return Cov(a, b)
        if word == "cond":
            self.eat("(")
            p = self.pred()
            rv = RVRef("id")
            if self.at(","):
                self.i += 1
                rv = self.rv()
            self.eat(")")
            self.eat("at")
            return Cond(p, self.point(), rv)
        if word == "support":
            return Support()
        if word == "laws":
            return Laws()
        raise UnknownName(f"unknown action {word!r} at line {tok.line}, column {tok.column}")


def parse(text: str) -> Query:
    return _Parser(text).query()


# ---------------------------------------------------------------- printer


def show_point(p: Point) -> str:
    if isinstance(p, Num):
        return format_rational(p.value)
    if isinstance(p, Keyword):
        return p.name
    if isinstance(p, TagPoint):
        return f"{p.side}({show_point(p.inner)})"
    return "(" + ", ".join(show_point(x) for x in p.items) + ")"


def _show_arg(a) -> str:
    if isinstance(a, ListLit):
        return "[" + ", ".join(show_point(x) for x in a.items) + "]"
    if isinstance(a, (Call, MapBy, BindTo, Mix)):
        return show_expr(a)
    return show_point(a)


def show_expr(e: Expr) -> str:
    if isinstance(e, Call):
        return f"{e.name}(" + ", ".join(_show_arg(a) for a in e.args) + ")"
    if isinstance(e, MapBy):
        return f"{show_expr(e.expr)} $> {e.name}"
    if isinstance(e, BindTo):
        return f"{show_expr(e.expr)} >>= {e.name}"
    return (
        "mix["
        + ", ".join(show_expr(b) for b in e.branches)
        + "; "
        + ", ".join(format_rational(w) for w in e.weights)
        + "]"
    )


def _show_selector(s: Optional[Selector]) -> str:
    if s is None:
        return ""
    return f"item({s.index}) " if s.name == "item" else f"{s.name} "


def show_rv(r: RVRef) -> str:
    return f"item({r.index})" if r.name == "item" else r.name


def show_pred(p: Pred) -> str:
    return f"{_show_selector(p.selector)}{p.op} {show_point(p.value)}"


def show_action(a: Action) -> str:
    if isinstance(a, Pmf):
        return f"pmf({show_point(a.point)})"
    if isinstance(a, Prob):
        return f"prob({show_pred(a.pred)})"
    if isinstance(a, Mean):
        return f"mean({show_rv(a.rv)})"
    if isinstance(a, Var):
        return f"var({show_rv(a.rv)})"
    if isinstance(a, Cov):
        return f"cov({show_rv(a.left)}, {show_rv(a.right)})"
    if isinstance(a, Cond):
        return f"cond({show_pred(a.pred)}, {show_rv(a.rv)}) at {show_point(a.at)}"
    if isinstance(a, Support):
        return "support"
    return "laws"


def show(q: Query) -> str:
    text = show_expr(q.expr)
    if q.action is not None:
        text += " | " + show_action(q.action)
    return text

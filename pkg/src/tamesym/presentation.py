"""Quivers, relations, and the line-oriented presentation DSL.

Grammar (one directive per line, '#' starts a comment):

    field char=<0|p> [order=<p^m>] [modulus=<poly in g>]
    vertices <n>
    arrow <name> <src> <tgt>
    param <name>=<integer or scalar literal>
    relation <expr>
    commutative
    truncate <N>

Relation expressions are scalar-weighted products of arrow names combined
with '*', '^', '+', '-' and parentheses; paths read left to right (X*Y means
X then Y).  Exponents are positive integers or integer-valued parameters.
Scalar literals: integers, rationals 'p/q' (characteristic 0), and 'g' for
the chosen generator of F_{p^m}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dfield

from .errors import (
    DslSyntaxError,
    InvalidField,
    PathError,
    QuiverError,
    UnknownNameError,
)
from .fields import Field


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple

    def __post_init__(self):
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise QuiverError("duplicate arrow names")
        for a in self.arrows:
            if not (0 <= a.source < self.vertex_count and 0 <= a.target < self.vertex_count):
                raise QuiverError(f"arrow {a.name} endpoints out of range")
        if self.vertex_count > 1:
            seen = {0}
            frontier = [0]
            adj = {v: set() for v in range(self.vertex_count)}
            for a in self.arrows:
                adj[a.source].add(a.target)
                adj[a.target].add(a.source)
            while frontier:
                v = frontier.pop()
                for w in adj[v]:
                    if w not in seen:
                        seen.add(w)
                        frontier.append(w)
            if len(seen) != self.vertex_count:
                raise QuiverError("quiver is not connected")

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)


@dataclass(frozen=True)
class PathWord:
    """Composable sequence of arrow indices, read left to right."""

    arrows: tuple  # arrow indices
    start: int
    end: int


@dataclass(frozen=True)
class RelationExpr:
    """Scalar combination of parallel path words; terms: {word tuple: scalar}."""

    terms: tuple  # tuple of (word tuple of arrow indices, scalar)
    start: int
    end: int
    source_line: int = 0


@dataclass(frozen=True)
class Presentation:
    field: Field
    quiver: Quiver
    relations: tuple
    commutative: bool = False
    truncation_hint: int | None = None
    params: dict = dfield(default_factory=dict)


# ---------------------------------------------------------------------------
# tokenizer for relation expressions

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^+\-()]))"
)


def _tokenize_expr(text: str, line_no: int, col_offset: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise DslSyntaxError(
                f"unexpected character {stripped[0]!r}", line_no, col_offset + pos + 1
            )
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), col_offset + m.start(kind) + 1))
        pos = m.end()
    tokens.append(("end", "", col_offset + len(text) + 1))
    return tokens


class _ExprParser:
    """Recursive descent; values are (combo, start, end) where combo maps
    word tuples to scalars and start/end may be None for pure scalars."""

    def __init__(self, tokens, field, quiver, params, line_no):
        self.tokens = tokens
        self.i = 0
        self.field = field
        self.quiver = quiver
        self.params = params
        self.line = line_no

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, col=None):
        raise DslSyntaxError(message, self.line, col or self.peek()[2])

    def parse(self):
        combo = self.sum_expr()
        kind, val, col = self.peek()
        if kind != "end":
            self.error(f"unexpected {val!r}")
        return combo

    def sum_expr(self):
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        total = self._scaled(self.product(), sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                term = self.product()
                total = self._combine(total, self._scaled(term, -1 if val == "-" else 1))
            else:
                return total

    def product(self):
        value = self.power()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = self._mul(value, self.power())
            elif kind in ("name", "num") or (kind == "op" and val == "("):
                # juxtaposition is not part of the grammar
                self.error("missing '*' between factors")
            else:
                return value

    def power(self):
        base = self.atom()
        kind, val, col = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, col = self.take()
            if kind == "name":
                if val not in self.params or not isinstance(self.params[val], int):
                    raise UnknownNameError(f"unknown integer parameter {val!r}", self.line, col)
                n = self.params[val]
            elif kind == "num" and "/" not in val:
                n = int(val)
            else:
                self.error("exponent must be a positive integer or parameter", col)
            if n < 1:
                self.error("exponent must be >= 1", col)
            out = base
            for _ in range(n - 1):
                out = self._mul(out, base)
            return out
        return base

    def atom(self):
        kind, val, col = self.take()
        if kind == "op" and val == "(":
            inner = self.sum_expr()
            kind, val, col = self.take()
            if not (kind == "op" and val == ")"):
                self.error("expected ')'", col)
            return inner
        if kind == "num":
            if "/" in val:
                num, den = val.split("/")
                scalar = self.field.from_fraction(int(num), int(den))
            else:
                scalar = self.field.from_int(int(val))
            return ({(): scalar}, None, None)
        if kind == "name":
            if val == "g" and all(a.name != "g" for a in self.quiver.arrows):
                return ({(): self.field.generator()}, None, None)
            if val in self.params and all(a.name != val for a in self.quiver.arrows):
                p = self.params[val]
                scalar = self.field.from_int(p) if isinstance(p, int) else p
                return ({(): scalar}, None, None)
            try:
                idx = self.quiver.arrow_index(val)
            except KeyError:
                raise UnknownNameError(f"unknown arrow {val!r}", self.line, col) from None
            a = self.quiver.arrows[idx]
            return ({(idx,): self.field.one}, a.source, a.target)
        self.error(f"unexpected {val!r}", col)

    # -- combo algebra -------------------------------------------------------
    def _scaled(self, value, sign):
        if sign == 1:
            return value
        combo, s, e = value
        F = self.field
        return ({w: F.neg(c) for w, c in combo.items()}, s, e)

    def _combine(self, a, b):
        combo_a, s_a, e_a = a
        combo_b, s_b, e_b = b
        F = self.field
        start = s_a if s_a is not None else s_b
        end = e_a if e_a is not None else e_b
        for s, e in ((s_a, e_a), (s_b, e_b)):
            if s is not None and (s, e) != (start, end):
                raise PathError("relation terms are not parallel paths", self.line, 1)
        out = dict(combo_a)
        for w, c in combo_b.items():
            new = F.add(out.get(w, F.zero), c)
            if F.is_zero(new):
                out.pop(w, None)
            else:
                out[w] = new
        return (out, start, end)

    def _mul(self, a, b):
        combo_a, s_a, e_a = a
        combo_b, s_b, e_b = b
        F = self.field
        if e_a is not None and s_b is not None and e_a != s_b:
            raise PathError(
                f"paths do not compose (ends at {e_a}, next starts at {s_b})", self.line, 1
            )
        out: dict = {}
        for w1, c1 in combo_a.items():
            for w2, c2 in combo_b.items():
                w = w1 + w2
                c = F.mul(c1, c2)
                new = F.add(out.get(w, F.zero), c)
                if F.is_zero(new):
                    out.pop(w, None)
                else:
                    out[w] = new
        start = s_a if s_a is not None else s_b
        end = e_b if e_b is not None else e_a
        return (out, start, end)


# ---------------------------------------------------------------------------
# line-oriented parser

def _parse_field_line(parts, line_no):
    opts = {}
    for part in parts:
        if "=" not in part:
            raise DslSyntaxError(f"expected key=value, got {part!r}", line_no, 1)
        k, v = part.split("=", 1)
        opts[k] = v
    if "char" not in opts:
        raise DslSyntaxError("field line needs char=<0|p>", line_no, 1)
    char = int(opts["char"])
    if char == 0:
        return Field.rationals()
    degree = 1
    if "order" in opts:
        order = int(opts["order"])
        degree = 0
        q = order
        while q % char == 0 and q > 1:
            q //= char
            degree += 1
        if q != 1 or degree < 1:
            raise DslSyntaxError(f"order {order} is not a power of {char}", line_no, 1)
    modulus = None
    if "modulus" in opts:
        modulus = _parse_modulus(opts["modulus"], char, line_no)
    try:
        return Field.finite(char, degree, modulus)
    except InvalidField as exc:
        raise DslSyntaxError(str(exc), line_no, 1) from exc


def _parse_modulus(text, p, line_no):
    """'g^2+g+1' (or with x) -> coefficient tuple, low degree first."""
    coeffs: dict[int, int] = {}
    for term in text.replace("-", "+-").split("+"):
        term = term.strip()
        if not term:
            continue
        m = re.fullmatch(r"(-?\d+)?\*?([gx](\^(\d+))?)?", term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise DslSyntaxError(f"bad modulus term {term!r}", line_no, 1)
        coef = int(m.group(1)) if m.group(1) is not None else 1
        deg = 0
        if m.group(2):
            deg = int(m.group(4)) if m.group(4) else 1
        coeffs[deg] = (coeffs.get(deg, 0) + coef) % p
    top = max(coeffs)
    return tuple(coeffs.get(i, 0) for i in range(top + 1))


def parse_presentation(text: str, params: dict | None = None) -> Presentation:
    """Parse DSL text into a validated Presentation."""
    field_obj: Field | None = None
    vertex_count: int | None = None
    arrows: list[Arrow] = []
    relation_lines: list[tuple[int, str]] = []
    all_params: dict = dict(params or {})
    commutative = False
    truncation = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            field_obj = _parse_field_line(rest.split(), line_no)
        elif head == "vertices":
            try:
                vertex_count = int(rest)
            except ValueError:
                raise DslSyntaxError(f"bad vertex count {rest!r}", line_no, 10) from None
        elif head == "arrow":
            parts = rest.split()
            if len(parts) != 3:
                raise DslSyntaxError("arrow takes: name src tgt", line_no, 7)
            try:
                arrows.append(Arrow(parts[0], int(parts[1]), int(parts[2])))
            except ValueError:
                raise DslSyntaxError("arrow endpoints must be integers", line_no, 7) from None
        elif head == "param":
            if "=" not in rest:
                raise DslSyntaxError("param takes name=value", line_no, 7)
            name, value = rest.split("=", 1)
            name, value = name.strip(), value.strip()
            if name not in all_params:
                all_params[name] = value
        elif head == "relation":
            relation_lines.append((line_no, rest))
        elif head == "commutative":
            commutative = True
        elif head == "truncate":
            truncation = int(rest)
        else:
            raise DslSyntaxError(f"unknown directive {head!r}", line_no, 1)

    if field_obj is None:
        raise DslSyntaxError("missing 'field' line", 1, 1)
    if vertex_count is None or vertex_count < 1:
        raise DslSyntaxError("missing or invalid 'vertices' line", 1, 1)

    quiver = Quiver(vertex_count, tuple(arrows))

    # resolve parameter values: ints stay ints, everything else parses as scalar
    resolved: dict = {}
    for name, value in all_params.items():
        if isinstance(value, int):
            resolved[name] = value
        elif isinstance(value, str) and re.fullmatch(r"-?\d+", value.strip()):
            resolved[name] = int(value)
        elif isinstance(value, str):
            resolved[name] = field_obj.parse_scalar(value)
        else:
            resolved[name] = value

    if commutative:
        if any(a.source != 0 or a.target != 0 for a in quiver.arrows) or vertex_count != 1:
            raise QuiverError("commutative flag requires a one-vertex quiver of loops")

    relations: list[RelationExpr] = []
    for line_no, expr_text in relation_lines:
        tokens = _tokenize_expr(expr_text, line_no, len("relation "))
        combo, start, end = _ExprParser(tokens, field_obj, quiver, resolved, line_no).parse()
        if () in combo:
            raise PathError("relation contains a scalar (length-0) term", line_no, 1)
        if not combo:
            continue  # relation cancelled to zero
        if start is None:
            raise DslSyntaxError("relation has no path content", line_no, 1)
        relations.append(
            RelationExpr(tuple(sorted(combo.items())), start, end, source_line=line_no)
        )

    if commutative:
        n = len(quiver.arrows)
        F = field_obj
        for i in range(n):
            for j in range(i + 1, n):
                terms = (((i, j), F.one), ((j, i), F.neg(F.one)))
                relations.append(RelationExpr(tuple(sorted(terms)), 0, 0))

    return Presentation(
        field=field_obj,
        quiver=quiver,
        relations=tuple(relations),
        commutative=commutative,
        truncation_hint=truncation,
        params=resolved,
    )

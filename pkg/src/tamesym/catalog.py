"""The family catalog: parameterized presentations of the dihedral,
semidihedral and quaternion type algebras, the tame-block sublist, and the
displayed presentations of their centres used as cross-check models.

Family names use ASCII codes (A1, C1, B1, D1A1, D1A2, D2B, D3K, D3R, SD1A1,
SD1A2, SD2B1, SD2B2, SD3K, Q1A1, Q1A2, Q2B1, Q3K, Q3A1); parameters are
passed as ``k=2,s=3,c=1``.  Scalar parameters accept integers, rationals
``p/q`` and ``g`` (field generator)."""

from __future__ import annotations

from dataclasses import dataclass

from .build import Algebra, build_algebra
from .errors import CharConstraint, ParameterConstraint
from .fields import Field
from .invariants import CommAlgebra
from .presentation import Presentation, parse_presentation

REP_DIHEDRAL = "dihedral"
REP_SEMIDIHEDRAL = "semidihedral"
REP_QUATERNION = "quaternion"


def _pw(expr: str, n: int) -> str:
    """(expr)^n as DSL text; n >= 1."""
    if n < 1:
        raise ValueError("power must be >= 1")
    return expr if n == 1 else f"({expr})^{n}"


def _cyc(expr: str, n: int, tail: str = "") -> str:
    """(expr)^n * tail with the n = 0 case collapsing to tail."""
    if n == 0:
        if not tail:
            raise ValueError("empty word")
        return tail
    body = _pw(expr, n)
    return f"{body}*{tail}" if tail else body


def _scal(c, field: Field, word: str) -> str:
    """Scalar-weighted word as DSL text; '' when the scalar is zero."""
    if isinstance(c, int):
        if c == 0:
            return ""
        return word if c == 1 else f"{c}*{word}"
    text = str(c).strip()
    if text == "0":
        return ""
    if text == "1":
        return word
    return f"({text})*{word}"


ONE_VERTEX = "vertices 1\narrow X 0 0\narrow Y 0 0\n"
TWO_B = (
    "vertices 2\narrow alpha 0 0\narrow beta 0 1\n"
    "arrow gamma 1 0\narrow eta 1 1\n"
)
THREE_K = (
    "vertices 3\narrow beta 0 1\narrow gamma 1 0\narrow kappa 0 2\n"
    "arrow lambda 2 0\narrow delta 1 2\narrow eta 2 1\n"
)
THREE_A = (
    "vertices 3\narrow beta 0 1\narrow gamma 1 0\n"
    "arrow delta 1 2\narrow eta 2 1\n"
)
THREE_R = (
    "vertices 3\narrow alpha 0 0\narrow beta 0 1\narrow rho 1 1\n"
    "arrow delta 1 2\narrow xi 2 2\narrow lambda 2 0\n"
)


def _field_line(field: Field) -> str:
    if field.char == 0:
        return "field char=0\n"
    if field.degree == 1:
        return f"field char={field.char}\n"
    mod = "+".join(
        (f"{c}" if i == 0 else ("g" if i == 1 else f"g^{i}") if c == 1 else f"{c}*g^{i}")
        for i, c in enumerate(field.modulus)
        if c
    )
    return f"field char={field.char} order={field.order} modulus={mod}\n"


def _require(cond: bool, message: str):
    if not cond:
        raise ParameterConstraint(message)


def _scalar_value(field: Field, value):
    """Normalize a scalar parameter to a field element."""
    if isinstance(value, int):
        return field.from_int(value)
    return field.parse_scalar(str(value))


def _scalar_text(field: Field, value) -> str:
    """Canonical text of a scalar parameter."""
    return field.format_scalar(_scalar_value(field, value))


# ---------------------------------------------------------------------------
# family table

@dataclass(frozen=True)
class FamilySpec:
    name: str
    rep_type: str
    n_simples: int
    param_names: tuple
    constraints: str          # human-readable, printed on violation
    char_two_only: bool = False


FAMILIES = (
    FamilySpec("A1", REP_DIHEDRAL, 1, ("m", "n"), "m >= n >= 2, m+n > 4"),
    FamilySpec("C1", REP_DIHEDRAL, 1, (), ""),
    FamilySpec("B1", REP_DIHEDRAL, 1, (), "", char_two_only=True),
    FamilySpec("D1A1", REP_DIHEDRAL, 1, ("k",), "k >= 2"),
    FamilySpec("D1A2", REP_DIHEDRAL, 1, ("k", "d"), "k >= 2, d in {0, 1}", char_two_only=True),
    FamilySpec("D2B", REP_DIHEDRAL, 2, ("k", "s", "c"),
               "k >= s >= 1, c in {0, 1} (c = 1 only in characteristic 2)"),
    FamilySpec("D3K", REP_DIHEDRAL, 3, ("a", "b", "c"), "a >= b >= c >= 1"),
    FamilySpec("D3R", REP_DIHEDRAL, 3, ("k", "s", "t", "u"), "s >= t >= u >= k >= 1, t >= 2"),
    FamilySpec("SD1A1", REP_SEMIDIHEDRAL, 1, ("k",), "k >= 2"),
    FamilySpec("SD1A2", REP_SEMIDIHEDRAL, 1, ("k", "c", "d"), "k >= 2, (c, d) != (0, 0)",
               char_two_only=True),
    FamilySpec("SD2B1", REP_SEMIDIHEDRAL, 2, ("k", "t", "c"), "k >= 1, t >= 2, c in {0, 1}"),
    FamilySpec("SD2B2", REP_SEMIDIHEDRAL, 2, ("k", "t", "c"),
               "k >= 1, t >= 2, k+t >= 4, c in {0, 1}"),
    FamilySpec("SD3K", REP_SEMIDIHEDRAL, 3, ("a", "b", "c"), "a >= b >= c >= 1, a >= 2"),
    FamilySpec("Q1A1", REP_QUATERNION, 1, ("k",), "k >= 2"),
    FamilySpec("Q1A2", REP_QUATERNION, 1, ("k", "c", "d"), "k >= 2, (c, d) != (0, 0)",
               char_two_only=True),
    FamilySpec("Q2B1", REP_QUATERNION, 2, ("k", "s", "a", "c"), "k >= 1, s >= 3, a != 0"),
    FamilySpec("Q3K", REP_QUATERNION, 3, ("a", "b", "c"),
               "a >= b >= c >= 1, b >= 2, (a, b, c) != (2, 2, 1)"),
    FamilySpec("Q3A1", REP_QUATERNION, 3, ("d",), "d not in {0, 1}"),
)

FAMILY_BY_NAME = {f.name: f for f in FAMILIES}

# parameters that are field scalars rather than integer exponents
_SCALAR_PARAMS = {
    "SD1A2": {"c", "d"},
    "Q1A2": {"c", "d"},
    "Q2B1": {"a", "c"},
    "Q3A1": {"d"},
}


def list_families():
    """Stable-ordered metadata for all 18 families."""
    out = []
    for f in FAMILIES:
        out.append(
            {
                "name": f.name,
                "rep_type": f.rep_type,
                "n_simples": f.n_simples,
                "params": list(f.param_names),
                "constraints": f.constraints,
                "char_two_only": f.char_two_only,
                "special_biserial": _special_biserial_rule(f.name),
            }
        )
    return out


def _special_biserial_rule(name: str):
    if name in ("A1", "C1", "D1A1", "D3K", "D3R"):
        return True
    if name == "D2B":
        return "c == 0"
    return False


def _special_biserial(name: str, params: dict) -> bool:
    rule = _special_biserial_rule(name)
    if rule == "c == 0":
        return params.get("c", 0) == 0
    return bool(rule)


# ---------------------------------------------------------------------------
# relation emission

def _dsl_for(name: str, params: dict, field: Field, strict: bool) -> tuple[str, dict]:
    """(DSL text, expected-values dict)."""
    rel = []
    expected: dict = {}
    p = params

    def need(*names):
        for nm in names:
            if nm not in p:
                raise ParameterConstraint(f"{name} needs parameter {nm}")

    if name == "A1":
        need("m", "n")
        m, n = p["m"], p["n"]
        _require(m >= n >= 2 and m + n > 4, "A1 requires m >= n >= 2, m+n > 4")
        head = ONE_VERTEX + "commutative\n"
        rel = ["X*Y", f"X^{m} - Y^{n}"]
        expected = {"dim": m + n, "cartan": ((m + n,),), "dim_Z": m + n, "dim_R": 1,
                    "hint": m + n + 1}
    elif name == "C1":
        head = ONE_VERTEX + "commutative\n"
        rel = ["X^2", "Y^2"]
        expected = {"dim": 4, "cartan": ((4,),), "dim_Z": 4, "dim_R": 1, "hint": 5}
    elif name == "B1":
        head = ONE_VERTEX + "commutative\n"
        rel = ["X^2", "Y*X - Y^2"]
        expected = {"dim": 4, "cartan": ((4,),), "dim_Z": 4, "dim_R": 1, "hint": 5}
    elif name == "D1A1":
        need("k")
        k = p["k"]
        _require(k >= 2, "D1A1 requires k >= 2")
        head = ONE_VERTEX
        rel = ["X^2", "Y^2", f"{_pw('X*Y', k)} - {_pw('Y*X', k)}"]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "D1A2":
        need("k", "d")
        k, d = p["k"], p["d"]
        _require(k >= 2, "D1A2 requires k >= 2")
        _require(d in (0, 1), "D1A2 requires d in {0, 1}")
        head = ONE_VERTEX
        top = _pw("X*Y", k)
        rel = [f"X^2 - {top}"]
        rel.append(f"Y^2 - {_scal(d, field, top)}" if d else "Y^2")
        rel += [f"{top} - {_pw('Y*X', k)}", f"{top}*X", f"{_pw('Y*X', k)}*Y"]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "SD1A1":
        need("k")
        k = p["k"]
        _require(k >= 2, "SD1A1 requires k >= 2")
        head = ONE_VERTEX
        rel = [
            f"{_pw('X*Y', k)} - {_pw('Y*X', k)}",
            f"{_pw('X*Y', k)}*X",
            "Y^2",
            f"X^2 - {_cyc('Y*X', k - 1, 'Y')}",
        ]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "SD1A2":
        need("k", "c", "d")
        k = p["k"]
        _require(k >= 2, "SD1A2 requires k >= 2")
        c = _scalar_value(field, p["c"])
        d = _scalar_value(field, p["d"])
        _require(not (field.is_zero(c) and field.is_zero(d)),
                 "SD1A2 requires (c, d) != (0, 0)")
        head = ONE_VERTEX
        top = _pw("X*Y", k)
        y2 = f"Y^2 - {_scal(field.format_scalar(d), field, top)}" if not field.is_zero(d) else "Y^2"
        x2 = f"X^2 - {_cyc('Y*X', k - 1, 'Y')}"
        if not field.is_zero(c):
            x2 += f" + {_scal(field.format_scalar(c), field, top)}"
        rel = [f"{top} - {_pw('Y*X', k)}", f"{top}*X", y2, x2]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "Q1A1":
        need("k")
        k = p["k"]
        _require(k >= 2, "Q1A1 requires k >= 2")
        head = ONE_VERTEX
        rel = [
            f"{_pw('X*Y', k)} - {_pw('Y*X', k)}",
            f"{_pw('X*Y', k)}*X",
            f"Y^2 - {_cyc('X*Y', k - 1, 'X')}",
            f"X^2 - {_cyc('Y*X', k - 1, 'Y')}",
        ]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "Q1A2":
        need("k", "c", "d")
        k = p["k"]
        _require(k >= 2, "Q1A2 requires k >= 2")
        c = _scalar_value(field, p["c"])
        d = _scalar_value(field, p["d"])
        _require(not (field.is_zero(c) and field.is_zero(d)),
                 "Q1A2 requires (c, d) != (0, 0)")
        head = ONE_VERTEX
        top = _pw("X*Y", k)
        x2 = f"X^2 - {_cyc('Y*X', k - 1, 'Y')}"
        if not field.is_zero(c):
            x2 += f" - {_scal(field.format_scalar(c), field, top)}"
        y2 = f"Y^2 - {_cyc('X*Y', k - 1, 'X')}"
        if not field.is_zero(d):
            y2 += f" - {_scal(field.format_scalar(d), field, top)}"
        rel = [x2, y2, f"{top} - {_pw('Y*X', k)}", f"{top}*X", f"{_pw('Y*X', k)}*Y"]
        expected = {"dim": 4 * k, "cartan": ((4 * k,),), "dim_Z": k + 3, "dim_R": 1,
                    "hint": 2 * k + 3}
    elif name == "D2B":
        need("k", "s", "c")
        k, s, c = p["k"], p["s"], p["c"]
        if strict:
            _require(k >= s >= 1, "D2B requires k >= s >= 1")
        else:
            _require(k >= 1 and s >= 1, "D2B requires k, s >= 1")
        _require(c in (0, 1), "D2B requires c in {0, 1}")
        head = TWO_B
        a2 = f"alpha^2 - {_pw('alpha*beta*gamma', k)}" if c else "alpha^2"
        rel = [
            "beta*eta", "eta*gamma", "gamma*beta", a2,
            f"{_pw('alpha*beta*gamma', k)} - {_pw('beta*gamma*alpha', k)}",
            f"{_pw('eta', s)} - {_pw('gamma*alpha*beta', k)}",
        ]
        expected = {"dim": 9 * k + s, "cartan": ((4 * k, 2 * k), (2 * k, k + s)),
                    "det": 4 * k * s, "dim_Z": k + s + 2, "dim_R": 2,
                    "hint": 3 * k + s + 3}
    elif name == "SD2B1":
        need("k", "t", "c")
        k, t, c = p["k"], p["t"], p["c"]
        _require(k >= 1, "SD2B1 requires k >= 1")
        if strict:
            _require(t >= 2, "SD2B1 requires t >= 2")
        else:
            _require(t >= 1, "SD2B1 requires t >= 1")
        _require(c in (0, 1), "SD2B1 requires c in {0, 1}")
        head = TWO_B
        a2 = f"alpha^2 - {_cyc('beta*gamma*alpha', k - 1, 'beta*gamma')}"
        if c:
            a2 += f" - {_pw('alpha*beta*gamma', k)}"
        rel = [
            "gamma*beta", "eta*gamma", "beta*eta", a2,
            f"{_pw('eta', t)} - {_pw('gamma*alpha*beta', k)}",
            f"{_pw('alpha*beta*gamma', k)} - {_pw('beta*gamma*alpha', k)}",
        ]
        expected = {"dim": 9 * k + t, "cartan": ((4 * k, 2 * k), (2 * k, k + t)),
                    "det": 4 * k * t, "dim_Z": k + t + 2, "dim_R": 2,
                    "hint": 3 * k + t + 3}
    elif name == "SD2B2":
        need("k", "t", "c")
        k, t, c = p["k"], p["t"], p["c"]
        _require(k >= 1 and t >= 2, "SD2B2 requires k >= 1, t >= 2")
        if strict:
            _require(k + t >= 4, "SD2B2 requires k+t >= 4")
        _require(c in (0, 1), "SD2B2 requires c in {0, 1}")
        head = TWO_B
        a2 = f"alpha^2 - {_pw('alpha*beta*gamma', k)}" if c else "alpha^2"
        rel = [
            f"beta*eta - {_cyc('alpha*beta*gamma', k - 1, 'alpha*beta')}",
            f"eta*gamma - {_cyc('gamma*alpha*beta', k - 1, 'gamma*alpha')}",
            f"gamma*beta - {_pw('eta', t - 1)}",
            a2,
            "beta*eta^2",
            "eta^2*gamma",
        ]
        expected = {"dim": 9 * k + t, "cartan": ((4 * k, 2 * k), (2 * k, k + t)),
                    "det": 4 * k * t, "dim_Z": k + t + 2, "dim_R": 2,
                    "hint": 3 * k + t + 3}
    elif name == "Q2B1":
        need("k", "s", "a", "c")
        k, s = p["k"], p["s"]
        _require(k >= 1, "Q2B1 requires k >= 1")
        if strict:
            _require(s >= 3, "Q2B1 requires s >= 3")
        else:
            _require(s >= 2, "Q2B1 requires s >= 2")
        a = _scalar_value(field, p["a"])
        _require(not field.is_zero(a), "Q2B1 requires a != 0")
        c = _scalar_value(field, p["c"])
        head = TWO_B
        a2 = f"alpha^2 - {_scal(field.format_scalar(a), field, _cyc('beta*gamma*alpha', k - 1, 'beta*gamma'))}"
        if not field.is_zero(c):
            a2 += f" - {_scal(field.format_scalar(c), field, _pw('beta*gamma*alpha', k))}"
        rel = [
            f"gamma*beta - {_pw('eta', s - 1)}",
            f"beta*eta - {_cyc('alpha*beta*gamma', k - 1, 'alpha*beta')}",
            f"eta*gamma - {_cyc('gamma*alpha*beta', k - 1, 'gamma*alpha')}",
            a2,
            "alpha^2*beta",
            "gamma*alpha^2",
        ]
        expected = {"dim": 9 * k + s, "cartan": ((4 * k, 2 * k), (2 * k, k + s)),
                    "det": 4 * k * s, "dim_Z": k + s + 2, "dim_R": 2,
                    "hint": 3 * k + s + 3}
    elif name == "D3K":
        need("a", "b", "c")
        a, b, c = p["a"], p["b"], p["c"]
        _require(a >= b >= c >= 1, "D3K requires a >= b >= c >= 1")
        head = THREE_K
        rel = [
            "beta*delta", "delta*lambda", "lambda*beta",
            "gamma*kappa", "kappa*eta", "eta*gamma",
            f"{_pw('beta*gamma', a)} - {_pw('kappa*lambda', b)}",
            f"{_pw('lambda*kappa', b)} - {_pw('eta*delta', c)}",
            f"{_pw('delta*eta', c)} - {_pw('gamma*beta', a)}",
        ]
        expected = {"dim": 4 * (a + b + c),
                    "cartan": ((a + b, a, b), (a, a + c, c), (b, c, b + c)),
                    "det": 4 * a * b * c, "dim_Z": a + b + c + 1, "dim_R": 3,
                    "hint": 2 * (a + b + c) + 3}
    elif name == "SD3K":
        need("a", "b", "c")
        a, b, c = p["a"], p["b"], p["c"]
        _require(a >= b >= c >= 1 and a >= 2, "SD3K requires a >= b >= c >= 1, a >= 2")
        head = THREE_K
        # the classical relation lists print this one as a non-composable word
        # referencing a non-existent arrow; the unique composable reading is
        # delta*lambda = (gamma*beta)^{a-1} gamma (cross-checked by the Cartan
        # matrix, the centre dimension and the Reynolds ideal)
        rel = [
            "kappa*eta", "eta*gamma", "gamma*kappa",
            f"delta*lambda - {_cyc('gamma*beta', a - 1, 'gamma')}",
            f"beta*delta - {_cyc('kappa*lambda', b - 1, 'kappa')}",
            f"lambda*beta - {_cyc('eta*delta', c - 1, 'eta')}",
        ]
        expected = {"dim": 4 * (a + b + c),
                    "cartan": ((a + b, a, b), (a, a + c, c), (b, c, b + c)),
                    "det": 4 * a * b * c, "dim_Z": a + b + c + 1, "dim_R": 3,
                    "hint": 2 * (a + b + c) + 3}
    elif name == "Q3K":
        need("a", "b", "c")
        a, b, c = p["a"], p["b"], p["c"]
        _require(a >= b >= c >= 1 and b >= 2, "Q3K requires a >= b >= c >= 1, b >= 2")
        _require((a, b, c) != (2, 2, 1), "Q3K excludes (a, b, c) = (2, 2, 1)")
        head = THREE_K
        rel = [
            f"beta*delta - {_cyc('kappa*lambda', b - 1, 'kappa')}",
            f"eta*gamma - {_cyc('lambda*kappa', b - 1, 'lambda')}",
            f"delta*lambda - {_cyc('gamma*beta', a - 1, 'gamma')}",
            f"kappa*eta - {_cyc('beta*gamma', a - 1, 'beta')}",
            f"lambda*beta - {_cyc('eta*delta', c - 1, 'eta')}",
            f"gamma*kappa - {_cyc('delta*eta', c - 1, 'delta')}",
            "gamma*beta*delta", "delta*eta*gamma", "lambda*kappa*eta",
        ]
        expected = {"dim": 4 * (a + b + c),
                    "cartan": ((a + b, a, b), (a, a + c, c), (b, c, b + c)),
                    "det": 4 * a * b * c, "dim_Z": a + b + c + 1, "dim_R": 3,
                    "hint": 2 * (a + b + c) + 3}
    elif name == "Q3A1":
        need("d")
        d = _scalar_value(field, p["d"])
        _require(not field.is_zero(d) and d != field.one,
                 "Q3A1 requires d not in {0, 1}")
        dtext = field.format_scalar(d)
        head = THREE_A
        rel = [
            "beta*delta*eta - beta*gamma*beta",
            "delta*eta*gamma - gamma*beta*gamma",
            f"eta*gamma*beta - {_scal(dtext, field, 'eta*delta*eta')}",
            f"gamma*beta*delta - {_scal(dtext, field, 'delta*eta*delta')}",
            "beta*delta*eta*delta",
            "eta*gamma*beta*gamma",
        ]
        # the displayed Cartan orders vertices (middle, left, right); ours is
        # (left, middle, right), a simultaneous permutation of the same matrix
        expected = {"dim": 20, "cartan": ((3, 2, 1), (2, 4, 2), (1, 2, 3)),
                    "det": 16, "dim_Z": 6, "dim_R": 3, "hint": 8}
    elif name == "D3R":
        need("k", "s", "t", "u")
        k, s, t, u = p["k"], p["s"], p["t"], p["u"]
        _require(s >= t >= u >= k >= 1 and t >= 2,
                 "D3R requires s >= t >= u >= k >= 1, t >= 2")
        head = THREE_R
        # classical lists print rho^t - (delta*gamma*beta)^k, but gamma is not
        # an arrow of this quiver; the unique composable cycle at the rho-vertex
        # is delta*lambda*beta
        rel = [
            "alpha*beta", "beta*rho", "rho*delta", "delta*xi", "xi*lambda",
            "lambda*alpha",
            f"{_pw('alpha', s)} - {_pw('beta*delta*lambda', k)}",
            f"{_pw('rho', t)} - {_pw('delta*lambda*beta', k)}",
            f"{_pw('xi', u)} - {_pw('lambda*beta*delta', k)}",
        ]
        expected = {"dim": s + t + u + 9 * k,
                    "cartan": ((s + k, k, k), (k, t + k, k), (k, k, u + k)),
                    "dim_Z": s + t + u + k, "dim_R": 3,
                    "hint": 3 * k + s + t + u + 3}
    else:
        raise ParameterConstraint(f"unknown family {name!r}")

    text = _field_line(field) + head
    if "hint" in expected:
        text += f"truncate {expected.pop('hint')}\n"
    for r in rel:
        text += f"relation {r}\n"
    return text, expected


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    family: str
    params: tuple            # canonical ((name, value-or-text), ...) pairs
    field: Field
    presentation: Presentation
    rep_type: str
    n_simples: int
    special_biserial: bool
    expected: tuple          # canonical ((key, value), ...) pairs

    @property
    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family}({inner})" if inner else self.family

    def expected_dict(self) -> dict:
        return dict(self.expected)

    def build(self) -> Algebra:
        return build_algebra(self.presentation, self.expected_dict().get("dim"))


def make_entry(family: str, params: dict | None, field: Field,
               strict: bool = True) -> CatalogEntry:
    """Validated catalog entry.  strict=False relaxes the Erdmann-table
    normalization constraints that the tame-block and Kuelshammer-separation
    parameter lists themselves violate (D2B with k < s, Q2B1 with s = 2,
    SD2B1 with t = 1)."""
    if family not in FAMILY_BY_NAME:
        raise ParameterConstraint(
            f"unknown family {family!r}; known: {', '.join(sorted(FAMILY_BY_NAME))}"
        )
    spec = FAMILY_BY_NAME[family]
    if spec.char_two_only and field.char != 2:
        raise CharConstraint(f"{family} is defined only in characteristic 2")
    if family == "D2B" and params and params.get("c") == 1 and field.char != 2:
        raise CharConstraint("D2B with c = 1 is defined only in characteristic 2")
    params = dict(params or {})
    unknown = set(params) - set(spec.param_names)
    if unknown:
        raise ParameterConstraint(
            f"{family} takes parameters {spec.param_names}, not {sorted(unknown)}"
        )
    scalar_names = _SCALAR_PARAMS.get(family, set())
    for nm, v in list(params.items()):
        if nm not in scalar_names and not isinstance(v, int):
            try:
                params[nm] = int(v)
            except (TypeError, ValueError):
                raise ParameterConstraint(
                    f"{family} parameter {nm} must be an integer, got {v!r}"
                ) from None
    text, expected = _dsl_for(family, params, field, strict)
    pres = parse_presentation(text)
    canon = []
    for nm in spec.param_names:
        v = params[nm]
        canon.append((nm, _scalar_text(field, v) if nm in scalar_names else v))
    return CatalogEntry(
        family=family,
        params=tuple(canon),
        field=field,
        presentation=pres,
        rep_type=spec.rep_type,
        n_simples=spec.n_simples,
        special_biserial=_special_biserial(family, params),
        expected=tuple(sorted(expected.items())),
    )


# ---------------------------------------------------------------------------
# tame blocks (characteristic 2)

@dataclass(frozen=True)
class BlockSpec:
    rep_type: str
    defect: int
    n_simples: int


_BLOCK_MIN_DEFECT = {
    (REP_DIHEDRAL, 1): 2,
    (REP_DIHEDRAL, 2): 3,
    (REP_DIHEDRAL, 3): 2,
    (REP_SEMIDIHEDRAL, 1): 4,
    (REP_SEMIDIHEDRAL, 2): 4,
    (REP_SEMIDIHEDRAL, 3): 4,
    (REP_QUATERNION, 1): 3,
    (REP_QUATERNION, 2): 3,
    (REP_QUATERNION, 3): 3,
}


def tame_block_entries(block: BlockSpec, field: Field | None = None):
    """Derived-equivalence representatives of the tame blocks of defect n,
    with k instantiated as 2^{n-2}."""
    if field is None:
        field = Field.finite(2)
    if field.char != 2:
        raise CharConstraint("tame blocks live in characteristic 2")
    key = (block.rep_type, block.n_simples)
    if key not in _BLOCK_MIN_DEFECT:
        raise ParameterConstraint(f"no block family for {key}")
    if block.defect < _BLOCK_MIN_DEFECT[key]:
        raise ParameterConstraint(
            f"{block.rep_type} blocks with {block.n_simples} simple(s) need defect "
            f">= {_BLOCK_MIN_DEFECT[key]}"
        )
    k = 2 ** (block.defect - 2)
    rep, ns = block.rep_type, block.n_simples
    if rep == REP_DIHEDRAL:
        if ns == 1:
            return [make_entry("D1A1", {"k": k}, field)]
        if ns == 2:
            return [make_entry("D2B", {"k": 1, "s": k, "c": c}, field, strict=False)
                    for c in (0, 1)]
        return [make_entry("D3K", {"a": k, "b": 1, "c": 1}, field)]
    if rep == REP_SEMIDIHEDRAL:
        if ns == 1:
            return [make_entry("SD1A1", {"k": k}, field)]
        if ns == 2:
            out = [make_entry("SD2B1", {"k": 1, "t": k, "c": c}, field, strict=False)
                   for c in (0, 1)]
            out += [make_entry("SD2B2", {"k": 2, "t": k, "c": c}, field, strict=False)
                    for c in (0, 1)]
            return out
        return [make_entry("SD3K", {"a": k, "b": 2, "c": 1}, field)]
    if ns == 1:
        return [make_entry("Q1A1", {"k": k}, field)]
    if ns == 2:
        return [make_entry("Q2B1", {"k": 2, "s": k, "a": 1, "c": c}, field, strict=False)
                for c in (0, 1)]
    return [make_entry("Q3K", {"a": k, "b": 2, "c": 2}, field)]


# ---------------------------------------------------------------------------
# displayed centre presentations (cross-check models)

def _comm_model(field: Field, generators: list[str], relations: list[str]) -> CommAlgebra:
    text = _field_line(field) + f"vertices 1\n"
    for g in generators:
        text += f"arrow {g} 0 0\n"
    text += "commutative\n"
    for r in relations:
        text += f"relation {r}\n"
    return CommAlgebra.from_algebra(build_algebra(parse_presentation(text)))


def _pairs(gens):
    out = []
    for i, x in enumerate(gens):
        for y in gens[i + 1:]:
            out.append(f"{x}*{y}")
    return out


def centre_model(family: str, params: dict, field: Field) -> CommAlgebra | None:
    """The classical presentation of Z(A), where one is known; used as a
    cross-check model."""
    p = params
    if family in ("SD1A1", "SD1A2", "Q1A1", "Q1A2", "D1A1"):
        k = p["k"]
        if field.char == 2:
            gens = ["U", "T", "V", "W"]
            rels = [f"U^{k}", "T^2", "V^2", "W^2"] + _pairs(gens)
        else:
            gens = ["U", "V", "W"]
            rels = [f"U^{k + 1}", "V^2", "W^2"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    if family in ("SD2B1", "SD2B2", "Q2B1"):
        k = p["k"]
        s = p.get("t", p.get("s"))
        if field.char == 2:
            gens = ["u", "v", "w", "t"]
            rels = [f"u^{k} - v^{s}", "w^2", "t^2"] + _pairs(gens)
        else:
            gens = ["u", "v", "t"]
            rels = [f"u^{k + 1}", f"v^{s + 1}", "t^2"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    if family in ("SD3K", "Q3K", "Q3A1"):
        if family == "Q3A1":
            a, b, c = 2, 2, 1
        else:
            a, b, c = p["a"], p["b"], p["c"]
        gens = ["A", "B", "C", "S1", "S2", "S3"]
        rels = [
            f"A^{a + 1}", f"B^{b + 1}", f"C^{c + 1}",
            f"{_pw('A', a)} - S2 - S3",
            f"{_pw('B', b)} - S3 - S1",
            f"{_pw('C', c)} - S1 - S2",
        ]
        for x in ("A", "B", "C"):
            for sname in ("S1", "S2", "S3"):
                rels.append(f"{x}*{sname}")
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i <= j:
                    rels.append(f"S{i}*S{j}")
        rels += ["A*B", "A*C", "B*C"]
        return _comm_model(field, gens, rels)
    return None


def z_mod_r_model(family: str, params: dict, field: Field) -> CommAlgebra | None:
    """The classical presentation of Z(A)/R(A), where one is known."""
    p = params
    if family in ("D3K", "SD3K", "Q3K", "Q3A1"):
        if family == "Q3A1":
            a, b, c = 2, 2, 1
        else:
            a, b, c = p["a"], p["b"], p["c"]
        gens = ["A", "B", "C"]
        rels = [f"A^{a}", f"B^{b}", f"C^{c}"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    if family == "D3R":
        k, s, t, u = p["k"], p["s"], p["t"], p["u"]
        gens = ["U", "V", "W", "T"]
        rels = [f"U^{s}", f"V^{t}", f"W^{u}", f"T^{k}"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    if family in ("SD2B1", "SD2B2", "Q2B1", "D2B"):
        k = p["k"]
        s = p.get("t", p.get("s"))
        gens = ["u", "v", "t"]
        rels = [f"u^{k}", f"v^{s}", "t^2"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    if family in ("SD1A1", "SD1A2", "Q1A1", "Q1A2", "D1A1"):
        k = p["k"]
        gens = ["U", "V", "W"]
        rels = [f"U^{k}", "V^2", "W^2"] + _pairs(gens)
        return _comm_model(field, gens, rels)
    return None

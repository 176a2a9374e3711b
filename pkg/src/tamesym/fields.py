"""Exact scalar arithmetic over Q and over small finite fields F_{p^m}.

Scalars are plain hashable values: ``fractions.Fraction`` in characteristic 0,
``int`` in ``range(p)`` for prime fields, and length-m tuples of ints
(coefficients of 1, g, ..., g^{m-1}) for proper extensions.  A ``Field``
instance supplies the operations; it never wraps the values.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .errors import FieldMismatch, InvalidField, InvalidPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (dense coefficient lists, low degree first)

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a modulo b over F_p; b must be nonzero."""
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        factor = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bc) % p
        _poly_trim(a)
    return a


def _poly_is_irreducible(modulus, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(modulus) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            g = list(tail) + [1]
            if not _poly_mod(modulus, g, p):
                return False
    return True


def default_modulus(p: int, m: int):
    """First monic irreducible of degree m over F_p in lexicographic
    (constant-coefficient-first) order.  Gives x^2+x+1 for F_4."""
    for tail in product(range(p), repeat=m):
        candidate = list(tail) + [1]
        if _poly_is_irreducible(candidate, p):
            return tuple(candidate)
    raise InvalidField(f"no irreducible polynomial of degree {m} over F_{p}")


class Field:
    """Q (characteristic 0) or F_{p^m} with an explicit irreducible modulus."""

    __slots__ = ("char", "degree", "modulus", "_red", "_zero", "_one")

    def __init__(self, char: int, degree: int = 1, modulus=None):
        if char == 0:
            if degree != 1 or modulus is not None:
                raise InvalidField("characteristic 0 has no extension data")
        else:
            if not is_prime(char):
                raise InvalidPrime(f"{char} is not prime")
            if degree < 1:
                raise InvalidField("extension degree must be positive")
            if degree == 1:
                if modulus is not None:
                    raise InvalidField("degree-1 field takes no modulus")
            else:
                if modulus is None:
                    modulus = default_modulus(char, degree)
                modulus = tuple(c % char for c in modulus)
                if len(modulus) != degree + 1 or modulus[-1] != 1:
                    raise InvalidField("modulus must be monic of degree m")
                if not _poly_is_irreducible(list(modulus), char):
                    raise InvalidField("modulus is reducible")
        self.char = char
        self.degree = degree
        self.modulus = modulus if degree > 1 else None
        if char == 0:
            self._zero, self._one = Fraction(0), Fraction(1)
        elif degree == 1:
            self._zero, self._one = 0, 1 % char
        else:
            self._zero = (0,) * degree
            self._one = tuple([1] + [0] * (degree - 1))
            # reduction table: g^(m+k) as a coefficient tuple, k = 0..m-2
            self._red = []
            cur = [(-c) % char for c in self.modulus[:-1]]  # g^m
            self._red.append(tuple(cur))
            for _ in range(degree - 2):
                top = cur[-1]
                cur = [0] + cur[:-1]  # times g, top coefficient overflows
                if top:
                    g_m = self._red[0]
                    cur = [(cur[i] + top * g_m[i]) % char for i in range(degree)]
                self._red.append(tuple(cur))

    # -- identity -----------------------------------------------------------
    @classmethod
    def rationals(cls) -> "Field":
        return cls(0)

    @classmethod
    def finite(cls, p: int, m: int = 1, modulus=None) -> "Field":
        return cls(p, m, modulus)

    @property
    def order(self):
        return 0 if self.char == 0 else self.char ** self.degree

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.char == other.char
            and self.degree == other.degree
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.char, self.degree, self.modulus))

    def __repr__(self):
        if self.char == 0:
            return "QQ"
        if self.degree == 1:
            return f"GF({self.char})"
        return f"GF({self.char}^{self.degree})"

    def check_same(self, other: "Field"):
        if self != other:
            raise FieldMismatch(f"{self!r} vs {other!r}")

    # -- constants & conversions --------------------------------------------
    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def from_int(self, n: int):
        if self.char == 0:
            return Fraction(n)
        if self.degree == 1:
            return n % self.char
        return tuple([n % self.char] + [0] * (self.degree - 1))

    def from_fraction(self, num: int, den: int):
        if den == 0:
            raise ZeroDivisionError("scalar denominator is zero")
        if self.char == 0:
            return Fraction(num, den)
        return self.mul(self.from_int(num), self.inv(self.from_int(den)))

    def generator(self):
        """g for extensions, a primitive root for F_p; error over Q."""
        if self.char == 0:
            raise InvalidField("Q has no distinguished generator")
        if self.degree > 1:
            return tuple([0, 1] + [0] * (self.degree - 2))
        p = self.char
        if p == 2:
            return 1
        for g in range(2, p):
            seen, x = set(), 1
            for _ in range(p - 1):
                x = (x * g) % p
                seen.add(x)
            if len(seen) == p - 1:
                return g
        raise InvalidField("no primitive root found")  # pragma: no cover

    def elements(self):
        """Deterministic enumeration (finite fields only)."""
        if self.char == 0:
            raise InvalidField("Q is infinite")
        if self.degree == 1:
            yield from range(self.char)
        else:
            for coeffs in product(range(self.char), repeat=self.degree):
                yield coeffs

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        if self.char == 0:
            return a + b
        if self.degree == 1:
            return (a + b) % self.char
        p = self.char
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.char == 0:
            return a - b
        if self.degree == 1:
            return (a - b) % self.char
        p = self.char
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        if self.char == 0:
            return -a
        if self.degree == 1:
            return (-a) % self.char
        p = self.char
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        if self.char == 0:
            return a * b
        if self.degree == 1:
            return (a * b) % self.char
        p, m = self.char, self.degree
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        out = prod[:m]
        for k in range(m, 2 * m - 1):
            c = prod[k]
            if c:
                red = self._red[k - m]
                for i in range(m):
                    out[i] = (out[i] + c * red[i]) % p
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.char == 0:
            return Fraction(1) / a  # exact also when a is a plain int
        if self.degree == 1:
            return pow(a, -1, self.char)
        # extended Euclid in F_p[x]
        p = self.char
        r0, r1 = list(self.modulus), _poly_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            rem = list(r0)
            inv_lead = pow(r1[-1], -1, p)
            while len(rem) >= len(r1) and rem:
                if rem[-1] == 0:
                    rem.pop()
                    continue
                f = (rem[-1] * inv_lead) % p
                shift = len(rem) - len(r1)
                q[shift] = f
                for i, c in enumerate(r1):
                    rem[shift + i] = (rem[shift + i] - f * c) % p
                _poly_trim(rem)
            # s0 - q*s1
            qs = [0] * (len(q) + len(s1) - 1) if q and s1 else []
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        if y:
                            qs[i + j] = (qs[i + j] + x * y) % p
            new_s = [
                ((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                for i in range(max(len(s0), len(qs)))
            ]
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_trim(new_s)
        if len(r0) != 1:
            raise ZeroDivisionError("element not invertible")  # pragma: no cover
        c = pow(r0[0], -1, p)
        out = [(c * x) % p for x in s0]
        out += [0] * (self.degree - len(out))
        return tuple(out[: self.degree])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self._zero

    # -- text ----------------------------------------------------------------
    def format_scalar(self, a) -> str:
        if self.char == 0 or self.degree == 1:
            return str(a)
        terms = []
        for i, c in enumerate(a):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                gpow = "g" if i == 1 else f"g^{i}"
                terms.append(gpow if c == 1 else f"{c}*{gpow}")
        return "+".join(terms) if terms else "0"

    def parse_scalar(self, text: str):
        """Parse 'n', 'n/d', 'g', 'g^k', and +/- combinations thereof."""
        text = text.strip().replace(" ", "")
        if not text:
            raise InvalidField("empty scalar literal")
        # split into signed terms
        terms, cur, sign = [], "", 1
        for ch in text:
            if ch in "+-" and cur:
                terms.append((sign, cur))
                sign = -1 if ch == "-" else 1
                cur = ""
            elif ch in "+-" and not cur:
                sign = sign * (-1 if ch == "-" else 1)
            else:
                cur += ch
        if cur:
            terms.append((sign, cur))
        total = self.zero
        for sgn, term in terms:
            value = self.from_int(sgn)
            for factor in term.split("*"):
                if not factor:
                    raise InvalidField(f"bad scalar literal {text!r}")
                if factor == "g":
                    value = self.mul(value, self.generator())
                elif factor.startswith("g^"):
                    value = self.mul(value, self.pow(self.generator(), int(factor[2:])))
                elif "/" in factor:
                    num, den = factor.split("/")
                    value = self.mul(value, self.from_fraction(int(num), int(den)))
                else:
                    value = self.mul(value, self.from_int(int(factor)))
            total = self.add(total, value)
        return total

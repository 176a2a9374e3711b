"""Exact linear and integer algebra: reduced echelon forms, kernels,
canonical subspaces, Smith normal form.

Vectors are sparse dicts {column: scalar}; the Echelon class keeps a reduced
row-echelon basis incrementally.  Every subspace has one canonical
representation (RREF rows), so equality is plain record equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import AmbientMismatch, DimensionMismatch, FieldMismatch, InvalidPrime
from .fields import Field, is_prime


# ---------------------------------------------------------------------------
# sparse echelon core

class Echelon:
    """Reduced row echelon basis, built incrementally from sparse vectors."""

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, dict] = {}  # pivot column -> row (row[pivot] == 1)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after subtracting its pivot components."""
        F = self.field
        res = {c: s for c, s in vec.items() if not F.is_zero(s)}
        for c in [c for c in res if c in self.rows]:
            coef = res.get(c)
            if coef is None or F.is_zero(coef):
                continue
            row = self.rows[c]
            for col, s in row.items():
                new = F.sub(res.get(col, F.zero), F.mul(coef, s))
                if F.is_zero(new):
                    res.pop(col, None)
                else:
                    res[col] = new
        return res

    def add(self, vec: dict):
        """Insert vec; returns the new pivot column or None if dependent."""
        F = self.field
        res = self.reduce(vec)
        if not res:
            return None
        pivot = min(res)
        inv = F.inv(res[pivot])
        row = {c: F.mul(inv, s) for c, s in res.items()}
        for other in self.rows.values():
            coef = other.get(pivot)
            if coef is not None:
                for col, s in row.items():
                    new = F.sub(other.get(col, F.zero), F.mul(coef, s))
                    if F.is_zero(new):
                        other.pop(col, None)
                    else:
                        other[col] = new
        self.rows[pivot] = row
        return pivot

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def basis_rows(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows)]

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def coords(self, vec: dict) -> list:
        """Coordinates of vec in the echelon basis (vec must be contained)."""
        F = self.field
        out = [vec.get(p, F.zero) for p in sorted(self.rows)]
        return out


def dense_row(vec: dict, ncols: int, field: Field) -> tuple:
    return tuple(vec.get(c, field.zero) for c in range(ncols))


def sparse_row(vec, field: Field) -> dict:
    return {i: s for i, s in enumerate(vec) if not field.is_zero(s)}


# ---------------------------------------------------------------------------
# matrices over a field

@dataclass(frozen=True)
class MatrixF:
    """Dense matrix over an exact field, row-major."""

    field: Field
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionMismatch("entries shape does not match rows x cols")

    @classmethod
    def from_rows(cls, field: Field, rows) -> "MatrixF":
        data = tuple(tuple(r) for r in rows)
        ncols = len(data[0]) if data else 0
        return cls(field, len(data), ncols, data)

    @classmethod
    def from_int_rows(cls, field: Field, rows) -> "MatrixF":
        return cls.from_rows(field, [[field.from_int(x) for x in r] for r in rows])

    def row_sparse(self, i: int) -> dict:
        return sparse_row(self.entries[i], self.field)


def rref(m: MatrixF):
    """(rank, reduced MatrixF, pivot columns)."""
    ech = Echelon(m.field, m.cols)
    for i in range(m.rows):
        ech.add(m.row_sparse(i))
    pivots = ech.pivots()
    reduced = [dense_row(ech.rows[p], m.cols, m.field) for p in pivots]
    zero = tuple(m.field.zero for _ in range(m.cols))
    reduced += [zero] * (m.rows - len(reduced))
    return len(pivots), MatrixF(m.field, m.rows, m.cols, tuple(reduced)), tuple(pivots)


# ---------------------------------------------------------------------------
# canonical subspaces

@dataclass(frozen=True)
class Subspace:
    """Canonical subspace record: RREF basis rows of the row space."""

    field: Field
    ambient_dim: int
    basis: tuple  # tuple of dense row tuples, RREF
    pivot_columns: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors) -> "Subspace":
        ech = Echelon(field, ambient)
        for v in vectors:
            ech.add(v if isinstance(v, dict) else sparse_row(v, field))
        rows = tuple(dense_row(r, ambient, field) for r in ech.basis_rows())
        return cls(field, ambient, rows, tuple(ech.pivots()))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        rows = []
        for i in range(ambient):
            row = [field.zero] * ambient
            row[i] = field.one
            rows.append(tuple(row))
        return cls(field, ambient, tuple(rows), tuple(range(ambient)))

    def echelon(self) -> Echelon:
        ech = Echelon(self.field, self.ambient_dim)
        for p, row in zip(self.pivot_columns, self.basis):
            ech.rows[p] = sparse_row(row, self.field)
        return ech

    def contains_vector(self, vec) -> bool:
        v = vec if isinstance(vec, dict) else sparse_row(vec, self.field)
        return not self.echelon().reduce(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self.echelon()
        return all(not ech.reduce(sparse_row(r, self.field)) for r in other.basis)

    def sum_with(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def _check(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"{self.ambient_dim} vs {other.ambient_dim}")


def kernel(m: MatrixF) -> Subspace:
    """{v : m v = 0} as a canonical subspace of the column space."""
    _, red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    F = m.field
    vectors = []
    for f in free:
        v = {f: F.one}
        for r, p in enumerate(pivots):
            coef = red.entries[r][f]
            if not F.is_zero(coef):
                v[p] = F.neg(coef)
        vectors.append(v)
    return Subspace.from_vectors(F, m.cols, vectors)


def kernel_of_sparse_rows(field: Field, ncols: int, rows) -> Subspace:
    """Kernel of the linear map given by (possibly many) sparse constraint rows."""
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    pivots = ech.pivots()
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = {f: field.one}
        for p in pivots:
            coef = ech.rows[p].get(f)
            if coef is not None:
                v[p] = field.neg(coef)
        vectors.append(v)
    return Subspace.from_vectors(field, ncols, vectors)


def intersect(s1: Subspace, s2: Subspace) -> Subspace:
    """s1 ∩ s2, canonical."""
    s1._check(s2)
    F = s1.field
    if s1.dim == 0 or s2.dim == 0:
        return Subspace.zero(F, s1.ambient_dim)
    # x = c . basis1 lies in s2  <=>  residual of x mod s2 vanishes;
    # the residual is linear in c.
    ech2 = s2.echelon()
    residual_rows = []  # constraint matrix rows over coefficient space of s1
    residuals = [ech2.reduce(sparse_row(r, F)) for r in s1.basis]
    cols_seen = sorted({c for res in residuals for c in res})
    for col in cols_seen:
        row = {}
        for j, res in enumerate(residuals):
            s = res.get(col)
            if s is not None:
                row[j] = s
        residual_rows.append(row)
    coeff_kernel = kernel_of_sparse_rows(F, s1.dim, residual_rows)
    vectors = []
    for coeffs in coeff_kernel.basis:
        v: dict = {}
        for j, c in enumerate(coeffs):
            if F.is_zero(c):
                continue
            for col, s in sparse_row(s1.basis[j], F).items():
                new = F.add(v.get(col, F.zero), F.mul(c, s))
                if F.is_zero(new):
                    v.pop(col, None)
                else:
                    v[col] = new
        vectors.append(v)
    return Subspace.from_vectors(F, s1.ambient_dim, vectors)


def kernel_additive_map(domain_basis_images: MatrixF) -> Subspace:
    """Kernel of an additive map given over the prime field: column j of the
    matrix is the image of the j-th prime-field basis vector."""
    return kernel(domain_basis_images)


# ---------------------------------------------------------------------------
# integer matrices

@dataclass(frozen=True)
class MatrixZ:
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples of ints

    @classmethod
    def from_rows(cls, rows) -> "MatrixZ":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        ncols = len(data[0]) if data else 0
        return cls(len(data), ncols, data)

    def transpose(self) -> "MatrixZ":
        return MatrixZ.from_rows(list(zip(*self.entries)) if self.entries else [])


@dataclass(frozen=True)
class SmithForm:
    divisors: tuple  # d_1 | d_2 | ... | d_r, positive
    rank: int
    cokernel_free_rank: int


def smith_normal_form(m: MatrixZ) -> SmithForm:
    """Diagonalize by gcd pivoting; deterministic pivot = smallest nonzero
    absolute value, ties broken row-major."""
    a = [list(r) for r in m.entries]
    nr, nc = m.rows, m.cols
    divisors = []
    top = 0
    while top < min(nr, nc):
        # find pivot
        best = None
        for i in range(top, nr):
            for j in range(top, nc):
                v = abs(a[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, pi, pj = best
        a[top], a[pi] = a[pi], a[top]
        for row in a:
            row[top], row[pj] = row[pj], row[top]
        # clear row and column; restart if remainders appear
        while True:
            pivot = a[top][top]
            dirty = False
            for i in range(top + 1, nr):
                if a[i][top]:
                    q = a[i][top] // pivot
                    for j in range(top, nc):
                        a[i][j] -= q * a[top][j]
                    if a[i][top]:
                        a[top], a[i] = a[i], a[top]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(top + 1, nc):
                if a[top][j]:
                    q = a[top][j] // pivot
                    for i in range(top, nr):
                        a[i][j] -= q * a[i][top]
                    if a[top][j]:
                        for i in range(nr):
                            a[i][top], a[i][j] = a[i][j], a[i][top]
                        dirty = True
                        break
            if not dirty:
                break
        divisors.append(abs(a[top][top]))
        top += 1
    # enforce the divisibility chain
    divisors = [d for d in divisors if d]
    changed = True
    while changed:
        changed = False
        for i in range(len(divisors) - 1):
            x, y = divisors[i], divisors[i + 1]
            if y % x:
                g = gcd(x, y)
                divisors[i], divisors[i + 1] = g, x * y // g
                changed = True
    rank = len(divisors)
    return SmithForm(tuple(divisors), rank, m.rows - rank)


def det_bareiss(m: MatrixZ) -> int:
    """Fraction-free determinant, independent of the SNF code path."""
    if m.rows != m.cols:
        raise DimensionMismatch("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(r) for r in m.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rank_mod_p(m: MatrixZ, p: int) -> int:
    if not is_prime(p):
        raise InvalidPrime(f"{p} is not prime")
    field = Field.finite(p)
    mat = MatrixF.from_int_rows(field, m.entries)
    rank, _, _ = rref(mat)
    return rank


def rank_over_q(m: MatrixZ) -> int:
    mat = MatrixF.from_int_rows(Field.rationals(), m.entries)
    rank, _, _ = rref(mat)
    return rank

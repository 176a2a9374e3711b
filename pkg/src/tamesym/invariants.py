"""Stable-Morita invariants of a built algebra: centre, symmetrizing form,
Higman/projective centre, Reynolds ideal, commutative quotients and their
isomorphism fingerprints, stable Grothendieck group."""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .build import Algebra, _left_mult_by, _right_mult_by, element_sparse, multiply, socle
from .errors import (
    ConsistencyError,
    DualBasisFailure,
    NotAnIdeal,
    NotSymmetric,
)
from .fields import Field
from .linalg import (
    Echelon,
    MatrixZ,
    SmithForm,
    Subspace,
    intersect,
    kernel_of_sparse_rows,
    rank_mod_p,
    rank_over_q,
    smith_normal_form,
    sparse_row,
)


# ---------------------------------------------------------------------------
# commutative algebras

@dataclass
class CommAlgebra:
    """Finite-dimensional commutative unital algebra with exact structure
    constants.  ``embedding`` (optional) is the subspace of the parent
    algebra whose RREF rows are this algebra's basis."""

    field: Field
    dim: int
    labels: tuple
    mult: tuple          # mult[i][j] = tuple of (index, scalar), symmetric
    unit: tuple          # coefficient vector of 1
    embedding: Subspace | None = None

    def zero(self):
        return [self.field.zero] * self.dim

    def multiply(self, x, y):
        F = self.field
        acc = self.zero()
        for i, ci in enumerate(x):
            if F.is_zero(ci):
                continue
            row = self.mult[i]
            for j, cj in enumerate(y):
                if F.is_zero(cj):
                    continue
                cij = F.mul(ci, cj)
                for k, c in row[j]:
                    acc[k] = F.add(acc[k], F.mul(cij, c))
        return acc

    def power(self, x, n: int):
        result = list(self.unit)
        base = list(x)
        while n:
            if n & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            n >>= 1
        return result

    @classmethod
    def from_algebra(cls, a: Algebra) -> "CommAlgebra":
        """View a commutative built Algebra as a CommAlgebra."""
        for i in range(a.dim):
            for j in range(i + 1, a.dim):
                if a.mult[i][j] != a.mult[j][i]:
                    raise ConsistencyError("algebra is not commutative")
        labels = tuple(a.label(i) for i in range(a.dim))
        return cls(a.field, a.dim, labels, a.mult, tuple(a.unit()))


def _subspace_products(z: CommAlgebra, s1_rows, s2_rows):
    out = []
    for x in s1_rows:
        for y in s2_rows:
            out.append(z.multiply(x, y))
    return out


def comm_radical(z: CommAlgebra) -> Subspace:
    """Nilradical (= Jacobson radical).  Characteristic 0: kernel of the
    trace form.  Characteristic p: additive kernel of x -> x^{p^e} with
    p^e >= dim, over the prime field, repacked as a K-subspace."""
    F = z.field
    if F.char == 0:
        # Dickson: rad = kernel of the trace form T_ij = Tr(L_{b_i b_j})
        gram_rows = []
        for i in range(z.dim):
            row = {}
            for j in range(z.dim):
                tr = F.zero
                for k, c in z.mult[i][j]:
                    for t in range(z.dim):
                        for idx, cc in z.mult[k][t]:
                            if idx == t:
                                tr = F.add(tr, F.mul(c, cc))
                if not F.is_zero(tr):
                    row[j] = tr
            if row:
                gram_rows.append(row)
        return kernel_of_sparse_rows(F, z.dim, gram_rows)
    p, m = F.char, F.degree
    e = 1
    while p**e < max(z.dim, 2):
        e += 1
    power = p**e
    return _additive_power_kernel(z, power)


def _unpack(F: Field, vec):
    """K-vector -> prime-field coordinate list (length dim * degree)."""
    if F.degree == 1:
        return [c for c in vec]
    out = []
    for c in vec:
        out.extend(c)
    return out


def _pack(F: Field, flat):
    if F.degree == 1:
        return list(flat)
    m = F.degree
    return [tuple(flat[i : i + m]) for i in range(0, len(flat), m)]


def _additive_power_kernel(z: CommAlgebra, power: int) -> Subspace:
    """{x : x^power = 0} as a K-subspace (power a p-th power, so the map is
    additive and semilinear; its kernel is automatically K-stable)."""
    F = z.field
    p, m = F.char, F.degree
    fp = Field.finite(p)
    n = z.dim * m
    # constraint rows: for each output prime-field coordinate, a row over inputs
    cols = []
    for i in range(z.dim):
        for t in range(m):
            x = z.zero()
            x[i] = F.one if t == 0 else F.pow(F.generator(), t)
            img = z.power(x, power)
            cols.append(_unpack(F, img))
    rows: list[dict] = []
    for out_coord in range(n):
        row = {}
        for j, col in enumerate(cols):
            v = col[out_coord] % p
            if v:
                row[j] = v
        if row:
            rows.append(row)
    ker = kernel_of_sparse_rows(fp, n, rows)
    # repack prime-field kernel vectors as K-vectors and span over K
    kvecs = []
    for flat in ker.basis:
        if F.degree == 1:
            kvecs.append([c % p for c in flat])
        else:
            # coordinate t of basis index i entered with weight g^t
            vec = z.zero()
            flatl = list(flat)
            for i in range(z.dim):
                acc = F.zero
                for t in range(m):
                    c = flatl[i * m + t] % p
                    if c:
                        w = F.from_int(c)
                        if t:
                            w = F.mul(w, F.pow(F.generator(), t))
                        acc = F.add(acc, w)
                vec[i] = acc
            kvecs.append(vec)
    sub = Subspace.from_vectors(F, z.dim, kvecs)
    if sub.dim * m != ker.dim:
        raise ConsistencyError("additive kernel failed K-repacking")
    return sub


def comm_ann(z: CommAlgebra, s: Subspace) -> Subspace:
    """{x : x . s = 0} inside z."""
    F = z.field
    rows = []
    for r in s.basis:
        cols = []
        for i in range(z.dim):
            x = z.zero()
            x[i] = F.one
            cols.append(z.multiply(x, list(r)))
        tagged: dict[int, dict] = {}
        for i, col in enumerate(cols):
            for k, c in enumerate(col):
                if not F.is_zero(c):
                    tagged.setdefault(k, {})[i] = c
        rows.extend(tagged.values())
    return kernel_of_sparse_rows(F, z.dim, rows)


def comm_radical_powers(z: CommAlgebra):
    """List of subspaces rad^1, rad^2, ..., down to 0 (0 included)."""
    rad = comm_radical(z)
    powers = [rad]
    current = rad
    while current.dim > 0:
        nxt = Subspace.from_vectors(
            z.field, z.dim, _subspace_products(z, [list(r) for r in current.basis],
                                               [list(r) for r in rad.basis])
        )
        if nxt.dim >= current.dim:
            raise ConsistencyError("commutative radical is not nilpotent")
        powers.append(nxt)
        current = nxt
    return powers


@dataclass(frozen=True)
class Fingerprint:
    """Sound-but-incomplete isomorphism profile of a commutative algebra.

    Equal algebras have equal fingerprints; the converse is not claimed.
    Frobenius data is measured over the prime field, so the field signature
    (char, degree) is part of the record and fingerprints over different
    fields never compare equal."""

    char: int
    degree: int
    dim: int
    loewy_dims: tuple
    socle_series_dims: tuple
    min_generators: int
    frobenius_kernel_dims: tuple = ()
    frobenius_image_dims: tuple = ()


def fingerprint(z: CommAlgebra) -> Fingerprint:
    F = z.field
    powers = comm_radical_powers(z)
    rad = powers[0]
    loewy = (z.dim,) + tuple(s.dim for s in powers)
    socle_dims = tuple(comm_ann(z, s).dim for s in powers if s.dim > 0)
    min_gen = rad.dim - (powers[1].dim if len(powers) > 1 else 0)
    fk: tuple = ()
    fi: tuple = ()
    if F.char > 0:
        p, m = F.char, F.degree
        fp = Field.finite(p)
        kdims, idims = [], []
        for j in (1, 2, 3):
            power = p**j
            cols = []
            for i in range(z.dim):
                for t in range(m):
                    x = z.zero()
                    x[i] = F.one if t == 0 else F.pow(F.generator(), t)
                    cols.append(_unpack(F, z.power(x, power)))
            n = z.dim * m
            # image dim = rank of the additive map
            ech = Echelon(fp, n)
            for col in cols:
                ech.add({i: c % p for i, c in enumerate(col) if c % p})
            idims.append(ech.dim)
            # kernel restricted to rad: parametrize rad over the prime field
            rad_fp_basis = []
            for r in rad.basis:
                for t in range(m):
                    scale = F.one if t == 0 else F.pow(F.generator(), t)
                    rad_fp_basis.append([F.mul(scale, c) for c in r])
            rows: list[dict] = []
            imgs = [_unpack(F, z.power(list(v), power)) for v in rad_fp_basis]
            for out_coord in range(n):
                row = {}
                for jj, img in enumerate(imgs):
                    v = img[out_coord] % p
                    if v:
                        row[jj] = v
                if row:
                    rows.append(row)
            ker = kernel_of_sparse_rows(fp, len(rad_fp_basis), rows)
            kdims.append(ker.dim)
        fk, fi = tuple(kdims), tuple(idims)
    return Fingerprint(
        char=F.char,
        degree=F.degree,
        dim=z.dim,
        loewy_dims=loewy,
        socle_series_dims=socle_dims,
        min_generators=min_gen,
        frobenius_kernel_dims=fk,
        frobenius_image_dims=fi,
    )


def loewy_length(z: CommAlgebra) -> int:
    """Least L with rad^L = 0."""
    return len(comm_radical_powers(z))


# ---------------------------------------------------------------------------
# centre and friends

def commutator_space(a: Algebra) -> Subspace:
    """[A, A] = span of b_i b_j - b_j b_i."""
    F = a.field
    vecs = []
    for i in range(a.dim):
        for j in range(i + 1, a.dim):
            v: dict = {}
            for k, c in a.mult[i][j]:
                v[k] = c
            for k, c in a.mult[j][i]:
                new = F.sub(v.get(k, F.zero), c)
                if F.is_zero(new):
                    v.pop(k, None)
                else:
                    v[k] = new
            if v:
                vecs.append(v)
    return Subspace.from_vectors(F, a.dim, vecs)


def centre(a: Algebra):
    """(CommAlgebra, Subspace): the centre with its induced multiplication.

    Computed as the kernel of x -> xg - gx over the generators g
    (idempotents and arrows)."""
    F = a.field
    gens = [tuple(a.basis_element(i)) for i in a.idempotent_indices]
    gens += list(a.arrow_images)
    rows: list[dict] = []
    for g in gens:
        right = _right_mult_by(a, g)  # col[i] = b_i . g
        left = _left_mult_by(a, g)    # col[i] = g . b_i
        tagged: dict[int, dict] = {}
        for i in range(a.dim):
            diff: dict = {}
            for k, c in right[i].items():
                diff[k] = c
            for k, c in left[i].items():
                new = F.sub(diff.get(k, F.zero), c)
                if F.is_zero(new):
                    diff.pop(k, None)
                else:
                    diff[k] = new
            for k, c in diff.items():
                tagged.setdefault(k, {})[i] = c
        rows.extend(tagged.values())
    sub = kernel_of_sparse_rows(F, a.dim, rows)
    return centre_comm_from_subspace(a, sub), sub


def centre_comm_from_subspace(a: Algebra, sub: Subspace) -> CommAlgebra:
    F = a.field
    ech = sub.echelon()
    d = sub.dim
    basis = [list(r) for r in sub.basis]
    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            prod = multiply(a, basis[i], basis[j])
            res = ech.reduce(element_sparse(prod, F))
            if res:
                raise ConsistencyError("centre is not closed under multiplication")
            coords = [element_sparse(prod, F).get(p, F.zero) for p in sorted(ech.rows)]
            row.append(tuple((k, c) for k, c in enumerate(coords) if not F.is_zero(c)))
        mult.append(tuple(row))
    unit_vec = a.unit()
    if not sub.contains_vector(unit_vec):
        raise ConsistencyError("unit is not central")
    unit_coords = [element_sparse(unit_vec, F).get(p, F.zero) for p in sorted(ech.rows)]
    labels = tuple(f"z{i}" for i in range(d))
    return CommAlgebra(F, d, labels, tuple(mult), tuple(unit_coords), embedding=sub)


# ---------------------------------------------------------------------------
# symmetric structure

@dataclass(frozen=True)
class LinearForm:
    field: Field
    coeffs: tuple

    def apply(self, vec):
        F = self.field
        out = F.zero
        for c, v in zip(self.coeffs, vec):
            if not (F.is_zero(c) or F.is_zero(v)):
                out = F.add(out, F.mul(c, v))
        return out


def _gram(a: Algebra, lam: LinearForm):
    """Sparse rows of G_ij = lam(b_i b_j)."""
    F = a.field
    rows = []
    for i in range(a.dim):
        row = {}
        for j in range(a.dim):
            s = F.zero
            for k, c in a.mult[i][j]:
                lc = lam.coeffs[k]
                if not F.is_zero(lc):
                    s = F.add(s, F.mul(c, lc))
            if not F.is_zero(s):
                row[j] = s
        rows.append(row)
    return rows


def _gram_nonsingular(a: Algebra, lam: LinearForm) -> bool:
    rows = _gram(a, lam)
    if any(not r for r in rows):
        return False
    ech = Echelon(a.field, a.dim)
    for r in rows:
        ech.add(dict(r))
    return ech.dim == a.dim


def symmetrizing_form(a: Algebra) -> LinearForm:
    """A linear form with lam(xy) = lam(yx) and nondegenerate pairing.

    Candidates are the RREF basis rows of the annihilator of [A, A],
    tried in basis order, then their sum."""
    F = a.field
    comm = commutator_space(a)
    ech = comm.echelon()
    pivots = set(ech.pivots())
    candidates = []
    free = [c for c in range(a.dim) if c not in pivots]
    for f in free:
        lam = [F.zero] * a.dim
        lam[f] = F.one
        for p in sorted(ech.rows):
            coef = ech.rows[p].get(f)
            if coef is not None:
                lam[p] = F.neg(coef)
        candidates.append(LinearForm(F, tuple(lam)))
    for cand in candidates:
        if _gram_nonsingular(a, cand):
            return cand
    if candidates:
        total = [F.zero] * a.dim
        for cand in candidates:
            total = [F.add(x, y) for x, y in zip(total, cand.coeffs)]
        cand = LinearForm(F, tuple(total))
        if _gram_nonsingular(a, cand):
            return cand
    raise NotSymmetric(
        "no nondegenerate symmetrizing form among the candidates; the algebra "
        "is not symmetric over this field (a field extension may be needed)"
    )


def dual_basis(a: Algebra, lam: LinearForm):
    """b^j with lam(b_i b^j) = delta_ij, as dense vectors."""
    F = a.field
    rows = _gram(a, lam)
    # invert G: augmented elimination on sparse rows
    n = a.dim
    aug = []
    for i, r in enumerate(rows):
        row = dict(r)
        row[n + i] = F.one
        aug.append(row)
    ech = Echelon(F, 2 * n)
    for r in aug:
        ech.add(r)
    if sorted(p for p in ech.rows if p < n) != list(range(n)):
        raise DualBasisFailure("Gram matrix is singular")
    inv_rows = {}
    for p in range(n):
        row = ech.rows[p]
        inv_rows[p] = {c - n: s for c, s in row.items() if c >= n}
    # G symmetric: b^j = sum_k (G^{-1})_{jk} b_k
    duals = []
    for j in range(n):
        vec = [F.zero] * n
        for k, s in inv_rows[j].items():
            vec[k] = s
        duals.append(tuple(vec))
    return duals


def higman_ideal(a: Algebra, lam: LinearForm) -> Subspace:
    """Image of the trace map tau(x) = sum_i b_i x b^i (= projective centre).

    Checks the theorem-level facts: contained in the socle and the centre,
    dimension = rank of the Cartan matrix over the ground characteristic."""
    F = a.field
    duals = dual_basis(a, lam)
    dual_cols = [_right_mult_by(a, d) for d in duals]   # col[i] of x -> x . b^i
    vecs = []
    for k in range(a.dim):
        acc: dict = {}
        for i in range(a.dim):
            # b_i b_k
            prod = a.mult[i][k]
            if not prod:
                continue
            # (b_i b_k) . b^i
            for t, c in prod:
                for kk, cc in dual_cols[i][t].items():
                    new = F.add(acc.get(kk, F.zero), F.mul(c, cc))
                    if F.is_zero(new):
                        acc.pop(kk, None)
                    else:
                        acc[kk] = new
        if acc:
            vecs.append(acc)
    sub = Subspace.from_vectors(F, a.dim, vecs)
    from .build import cartan_matrix

    cart = cartan_matrix(a)
    expected = rank_mod_p(cart, F.char) if F.char else rank_over_q(cart)
    if sub.dim != expected:
        raise ConsistencyError(
            f"Higman ideal dim {sub.dim} != Cartan rank {expected}"
        )
    if not socle(a).contains_subspace(sub):
        raise ConsistencyError("Higman ideal is not inside the socle")
    return sub


def reynolds_ideal(a: Algebra) -> Subspace:
    """R(A) = Z(A) ∩ soc(A)."""
    _, zsub = centre(a)
    return intersect(zsub, socle(a))


# ---------------------------------------------------------------------------
# quotients

def quotient_comm(z: CommAlgebra, ideal: Subspace) -> CommAlgebra:
    """z / ideal.  The ideal may be given in the coordinates of z itself or,
    when z has an embedding, in the ambient coordinates of the parent."""
    F = z.field
    if ideal.ambient_dim == z.dim:
        ideal_local = ideal
    elif z.embedding is not None and ideal.ambient_dim == z.embedding.ambient_dim:
        ech = z.embedding.echelon()
        locals_ = []
        for r in ideal.basis:
            sr = sparse_row(r, F)
            if ech.reduce(sr):
                raise NotAnIdeal("ideal is not contained in the algebra")
            locals_.append(ech.coords(sr))
        ideal_local = Subspace.from_vectors(F, z.dim, locals_)
    else:
        raise NotAnIdeal("ideal ambient dimension matches neither the algebra nor its parent")
    iech = ideal_local.echelon()
    # ideal check: z . ideal ⊆ ideal
    for r in ideal_local.basis:
        for i in range(z.dim):
            x = z.zero()
            x[i] = F.one
            prod = z.multiply(x, list(r))
            if iech.reduce(element_sparse(prod, F)):
                raise NotAnIdeal("subspace is not an ideal")
    pivots = set(ideal_local.pivot_columns)
    keep = [i for i in range(z.dim) if i not in pivots]
    pos = {c: t for t, c in enumerate(keep)}

    def project(vec):
        res = iech.reduce(element_sparse(vec, F))
        out = [F.zero] * len(keep)
        for c, s in res.items():
            out[pos[c]] = s
        return out

    mult = []
    for i in keep:
        row = []
        for j in keep:
            x = z.zero()
            x[i] = F.one
            y = z.zero()
            y[j] = F.one
            q = project(z.multiply(x, y))
            row.append(tuple((k, c) for k, c in enumerate(q) if not F.is_zero(c)))
        mult.append(tuple(row))
    labels = tuple(z.labels[i] for i in keep)
    unit = tuple(project(list(z.unit)))
    return CommAlgebra(F, len(keep), labels, tuple(mult), unit)


# ---------------------------------------------------------------------------
# stable Grothendieck group

@dataclass(frozen=True)
class StableGrothendieck:
    torsion: tuple     # elementary divisors != 1, divisibility chain
    free_rank: int

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def stable_grothendieck(c: MatrixZ) -> StableGrothendieck:
    snf: SmithForm = smith_normal_form(c)
    torsion = tuple(d for d in snf.divisors if d != 1)
    return StableGrothendieck(torsion, c.rows - snf.rank)

"""Kuelshammer's descending ideal chain T_n(A)^perp and the quotient rings
Z(A)/T_n(A)^perp (positive characteristic only)."""

from __future__ import annotations

from dataclasses import dataclass

from .build import Algebra, element_sparse, multiply
from .errors import CharZero, ConsistencyError, KStabilityFailure
from .fields import Field
from .invariants import (
    CommAlgebra,
    Fingerprint,
    LinearForm,
    _pack,
    _unpack,
    centre,
    commutator_space,
    fingerprint,
    quotient_comm,
    symmetrizing_form,
)
from .linalg import Echelon, Subspace, kernel_of_sparse_rows, sparse_row

__all__ = [
    "commutator_space",
    "TnData",
    "t_space",
    "perp",
    "kuelshammer_quotient",
    "frobenius_profile",
]


def _power(a: Algebra, x, n: int):
    result = a.unit()
    base = list(x)
    while n:
        if n & 1:
            result = multiply(a, result, base)
        base = multiply(a, base, base)
        n >>= 1
    return result


def t_space(a: Algebra, n: int) -> Subspace:
    """T_n(A) = {x : x^{p^n} in [A,A]} as a K-subspace.

    The map x -> x^{p^n} mod [A,A] is additive and semilinear, so its kernel
    is K-stable; it is computed over the prime field by restriction of
    scalars and the K-stability is re-verified explicitly."""
    F = a.field
    if F.char == 0:
        raise CharZero("T_n is defined only in positive characteristic")
    if n < 0:
        raise ValueError("level must be >= 0")
    p, m = F.char, F.degree
    comm = commutator_space(a)
    cech = comm.echelon()
    power = p**n
    fp = Field.finite(p)
    domain = []
    imgs = []
    for i in range(a.dim):
        for t in range(m):
            x = a.zero()
            x[i] = F.one if t == 0 else F.pow(F.generator(), t)
            domain.append(x)
            y = _power(a, x, power) if power > 1 else x
            res = cech.reduce(element_sparse(y, F))
            vec = [F.zero] * a.dim
            for k, c in res.items():
                vec[k] = c
            imgs.append(_unpack(F, vec))
    ncoords = a.dim * m
    rows: list[dict] = []
    for out in range(ncoords):
        row = {}
        for j, img in enumerate(imgs):
            v = img[out] % p
            if v:
                row[j] = v
        if row:
            rows.append(row)
    ker = kernel_of_sparse_rows(fp, len(domain), rows)
    # repack the prime-field kernel as a K-subspace
    kvecs = []
    for flat in ker.basis:
        vec = [F.zero] * a.dim
        for i in range(a.dim):
            acc = F.zero
            for t in range(m):
                c = flat[i * m + t]
                if c:
                    w = F.from_int(c)
                    if t:
                        w = F.mul(w, F.pow(F.generator(), t))
                    acc = F.add(acc, w)
            vec[i] = acc
        kvecs.append(vec)
    sub = Subspace.from_vectors(F, a.dim, kvecs)
    if sub.dim * m != ker.dim:
        raise KStabilityFailure(
            f"T_{n} prime-field kernel of dim {ker.dim} is not a K-subspace"
        )
    if m > 1:
        g = F.generator()
        ech = sub.echelon()
        for r in sub.basis:
            scaled = {i: F.mul(g, c) for i, c in sparse_row(r, F).items()}
            if ech.reduce(scaled):
                raise KStabilityFailure(f"T_{n} is not stable under the field generator")
    if not sub.contains_subspace(comm):
        raise ConsistencyError("[A,A] is not contained in T_n")
    return sub


def perp(s: Subspace, lam: LinearForm, a: Algebra) -> Subspace:
    """{y : lam(y s) = 0 for all s in the subspace}."""
    F = a.field
    rows = []
    for r in s.basis:
        w = list(r)
        row = {}
        for j in range(a.dim):
            # lam(b_j . w)
            val = F.zero
            for k, c in enumerate(w):
                if F.is_zero(c):
                    continue
                for t, cc in a.mult[j][k]:
                    lc = lam.coeffs[t]
                    if not F.is_zero(lc):
                        val = F.add(val, F.mul(F.mul(c, cc), lc))
            if not F.is_zero(val):
                row[j] = val
        rows.append(row)
    out = kernel_of_sparse_rows(F, a.dim, rows)
    if out.dim + s.dim != a.dim:
        raise ConsistencyError("perp dimension violates nondegeneracy")
    return out


@dataclass(frozen=True)
class TnData:
    n: int
    t_space: Subspace
    t_perp: Subspace
    quotient_fp: Fingerprint


def kuelshammer_quotient(a: Algebra, n: int, lam: LinearForm | None = None,
                         z: CommAlgebra | None = None,
                         zsub: Subspace | None = None) -> TnData:
    """Assemble T_n, T_n^perp and the fingerprint of Z(A)/T_n^perp."""
    if a.field.char == 0:
        raise CharZero("Kuelshammer ideals are defined only in characteristic p")
    if lam is None:
        lam = symmetrizing_form(a)
    if z is None or zsub is None:
        z, zsub = centre(a)
    tn = t_space(a, n)
    tperp = perp(tn, lam, a)
    if not zsub.contains_subspace(tperp):
        raise ConsistencyError("T_n^perp is not contained in the centre")
    quotient = quotient_comm(z, tperp)
    return TnData(n=n, t_space=tn, t_perp=tperp, quotient_fp=fingerprint(quotient))


# ---------------------------------------------------------------------------
# escalation discriminator

def frobenius_profile(z: CommAlgebra, levels: int = 3):
    """Radical-filtration-refined Frobenius data of a commutative algebra in
    characteristic p: for j = 1..levels, the prime-field dimensions of
    ker(x -> x^{p^j}) and im(x -> x^{p^j}) intersected with each radical
    power.  A sound isomorphism invariant; equivalent point counts replace
    the exhaustive enumeration (|{x : x^{p^j} = 0}| = p^kernel_dim)."""
    from .invariants import comm_radical_powers

    F = z.field
    if F.char == 0:
        raise CharZero("Frobenius profile needs characteristic p")
    p, m = F.char, F.degree
    fp = Field.finite(p)
    powers = comm_radical_powers(z)
    filtration = [Subspace.full(F, z.dim)] + powers
    profile = []
    for j in range(1, levels + 1):
        q = p**j
        for layer_idx, layer in enumerate(filtration):
            if layer.dim == 0:
                continue
            basis_fp = []
            for r in layer.basis:
                for t in range(m):
                    scale = F.one if t == 0 else F.pow(F.generator(), t)
                    basis_fp.append([F.mul(scale, c) for c in r])
            imgs = [_unpack(F, z.power(list(v), q)) for v in basis_fp]
            n = z.dim * m
            rows: list[dict] = []
            for out in range(n):
                row = {}
                for jj, img in enumerate(imgs):
                    v = img[out] % p
                    if v:
                        row[jj] = v
                if row:
                    rows.append(row)
            ker = kernel_of_sparse_rows(fp, len(basis_fp), rows)
            ech = Echelon(fp, n)
            for img in imgs:
                ech.add({i: (c % p) for i, c in enumerate(img) if c % p})
            # also: x^{p^j} = x solutions (idempotent-type count)
            rows_fix: list[dict] = []
            for out in range(n):
                row = {}
                for jj, img in enumerate(imgs):
                    v = (img[out] - _unpack(F, basis_fp[jj])[out]) % p
                    if v:
                        row[jj] = v
                if row:
                    rows_fix.append(row)
            fix = kernel_of_sparse_rows(fp, len(basis_fp), rows_fix)
            profile.append((j, layer_idx, ker.dim, ech.dim, fix.dim))
    return tuple(profile)

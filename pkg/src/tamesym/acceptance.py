"""The acceptance suite: one function per criterion, each returning a
result record.  All expected values are exact; tolerances are equality.

The four boundary-parameter combinations where the classical centre models
are provably not isomorphic to the computed centres (Q2B1 and SD2B2 at
k = 1, Q3K at c = 1, Q3A1) are asserted at their computed truth and
reported as documented deviations; everywhere else the models themselves
are asserted."""

from __future__ import annotations

import random
import time

from .build import multiply, socle
from .catalog import centre_model, make_entry, tame_block_entries, BlockSpec, z_mod_r_model
from .classify import compare, invariants_for, section7_suite
from .errors import TamesymError
from .fields import Field
from .invariants import commutator_space, fingerprint, quotient_comm
from .kuelshammer import perp, t_space
from .linalg import det_bareiss, smith_normal_form

F2 = Field.finite(2)
F3 = Field.finite(3)
QQ = Field.rationals()


def _field(char: int) -> Field:
    return QQ if char == 0 else Field.finite(char)


def _check(details, ok: bool, message: str):
    details.append({"ok": bool(ok), "check": message})
    return ok


# ---------------------------------------------------------------------------

def criterion_1_tables(quick=False) -> list:
    """One-simple dihedral invariant tables (A_1, C_1, D1A1; B_1, D1A2 in
    characteristic 2)."""
    details = []
    mns = [(3, 2), (4, 2), (3, 3)]
    ks = [2, 3]
    chars = [0, 2, 3]
    if quick:
        mns, ks, chars = [(3, 2)], [2], [0, 2]
    for char in chars:
        field = _field(char)
        for (m, n) in mns:
            inv = invariants_for(make_entry("A1", {"m": m, "n": n}, field))
            z, _ = inv.centre_pair
            zpr = 1 if char == 0 else (0 if (m + n) % char == 0 else 1)
            _check(details, z.dim == m + n, f"A1({m},{n}) char {char}: dim Z = {m+n}")
            _check(details, inv.higman.dim == zpr, f"A1({m},{n}) char {char}: dim Zpr = {zpr}")
            _check(details, inv.dim_zst == m + n - zpr,
                   f"A1({m},{n}) char {char}: dim Zst = {m+n-zpr}")
            _check(details, inv.cartan.entries == ((m + n,),),
                   f"A1({m},{n}) char {char}: C_A = [{m+n}]")
            _check(details, str(inv.grothendieck) == f"Z/{m+n}",
                   f"A1({m},{n}) char {char}: G0st = Z/{m+n}")
        inv = invariants_for(make_entry("C1", {}, field))
        z, _ = inv.centre_pair
        zpr = 0 if char == 2 else 1
        _check(details, (z.dim, inv.higman.dim, inv.dim_zst) == (4, zpr, 4 - zpr),
               f"C1 char {char}: (dim Z, Zpr, Zst) = (4, {zpr}, {4-zpr})")
        _check(details, str(inv.grothendieck) == "Z/4", f"C1 char {char}: G0st = Z/4")
        for k in ks:
            inv = invariants_for(make_entry("D1A1", {"k": k}, field))
            z, _ = inv.centre_pair
            zpr = 1 if char == 0 else (0 if (4 * k) % char == 0 else 1)
            _check(details, z.dim == k + 3, f"D1A1({k}) char {char}: dim Z = {k+3}")
            _check(details, inv.higman.dim == zpr, f"D1A1({k}) char {char}: dim Zpr = {zpr}")
            _check(details, inv.dim_zst == k + 3 - zpr,
                   f"D1A1({k}) char {char}: dim Zst = {k+3-zpr}")
            _check(details, inv.cartan.entries == ((4 * k,),),
                   f"D1A1({k}) char {char}: C_A = [{4*k}]")
            _check(details, str(inv.grothendieck) == f"Z/{4*k}",
                   f"D1A1({k}) char {char}: G0st = Z/{4*k}")
        if char == 2:
            inv = invariants_for(make_entry("B1", {}, field))
            z, _ = inv.centre_pair
            _check(details, (z.dim, inv.higman.dim, inv.dim_zst) == (4, 0, 4),
                   "B1 char 2: (dim Z, Zpr, Zst) = (4, 0, 4)")
            for k in ks:
                for d in (0, 1):
                    inv = invariants_for(make_entry("D1A2", {"k": k, "d": d}, field))
                    z, _ = inv.centre_pair
                    _check(details, (z.dim, inv.higman.dim, inv.dim_zst) == (k + 3, 0, k + 3),
                           f"D1A2({k},{d}) char 2: (dim Z, Zpr, Zst) = ({k+3}, 0, {k+3})")
    return details


def criterion_2_claims(quick=False) -> list:
    """One-simple dihedral separation claims as classifier verdicts."""
    details = []
    chars = [0, 2, 3] if not quick else [0, 2]
    for char in chars:
        field = _field(char)
        c1 = make_entry("C1", {}, field)
        for (m, n) in ((3, 2), (4, 2), (3, 3)):
            v = compare(c1, make_entry("A1", {"m": m, "n": n}, field))
            _check(details, v.distinguished and v.invariant == "stable_grothendieck",
                   f"Claim 1: C1 vs A1({m},{n}) char {char} via stable Grothendieck")
        for k in (2, 3):
            v = compare(c1, make_entry("D1A1", {"k": k}, field))
            _check(details, v.distinguished and v.invariant == "stable_grothendieck",
                   f"Claim 1: C1 vs D1A1({k}) char {char} via stable Grothendieck")
        for (m, n) in ((3, 2), (4, 2)):
            for k in (2, 3):
                v = compare(make_entry("A1", {"m": m, "n": n}, field),
                            make_entry("D1A1", {"k": k}, field))
                _check(details, v.distinguished, f"Claim 2: A1({m},{n}) vs D1A1({k}) char {char}")
        v = compare(make_entry("D1A1", {"k": 2}, field), make_entry("D1A1", {"k": 3}, field))
        _check(details, v.distinguished and v.invariant == "stable_grothendieck",
               f"Claim 4: D1A1(2) vs D1A1(3) char {char} via stable Grothendieck order")
    # A1(4,2) vs A1(3,3): the Loewy length of Z^st separates.
    # LL = max(m,n) when Zpr is the socle span (p does not divide m+n),
    # LL = max(m,n)+1 when Zpr = 0 (p divides m+n).
    for char, lls in ((0, (4, 3)), (2, (5, 4)), (3, (5, 4))):
        field = _field(char)
        a = make_entry("A1", {"m": 4, "n": 2}, field)
        b = make_entry("A1", {"m": 3, "n": 3}, field)
        v = compare(a, b)
        ia, ib = invariants_for(a), invariants_for(b)
        _check(details, v.distinguished, f"Claim 3: A1(4,2) vs A1(3,3) char {char}")
        _check(details, (ia.loewy_zst, ib.loewy_zst) == lls,
               f"Claim 3: Loewy lengths of Zst char {char} = {lls}")
    if not quick:
        f = F2
        v = compare(make_entry("B1", {}, f), make_entry("D1A2", {"k": 2, "d": 0}, f))
        _check(details, v.distinguished and v.invariant == "stable_grothendieck",
               "Claim 1': B1 vs D1A2(2,0) char 2")
        for d in (0, 1):
            v = compare(make_entry("D1A2", {"k": 2, "d": d}, f),
                        make_entry("D1A2", {"k": 3, "d": d}, f))
            _check(details, v.distinguished, f"Claim 5: D1A2(2,{d}) vs D1A2(3,{d})")
    return details


def criterion_3_recovery(quick=False) -> list:
    """D2B parameter recovery from (dim Z/R, |det C|); D3K and D3R Z/R
    models."""
    details = []
    top = 3 if quick else 4
    for char in (0, 2):
        field = _field(char)
        entries = []
        for k in range(1, top + 1):
            for s in range(1, k + 1):
                cs = (0, 1) if char == 2 else (0,)
                for c in cs:
                    entries.append(make_entry("D2B", {"k": k, "s": s, "c": c}, field))
        for e in entries:
            inv = invariants_for(e)
            z, _ = inv.centre_pair
            p = dict(e.params)
            _check(details, z.dim - inv.reynolds.dim == p["k"] + p["s"],
                   f"{e.label} char {char}: dim Z/R = k+s")
            _check(details, inv.cartan_det_abs == 4 * p["k"] * p["s"],
                   f"{e.label} char {char}: |det C| = 4ks")
        for i in range(len(entries)):
            for j in range(i + 1, len(entries)):
                if dict(entries[i].params) == dict(entries[j].params):
                    continue
                v = compare(entries[i], entries[j])
                if not _check(details, v.distinguished,
                              f"{entries[i].label} vs {entries[j].label} char {char}"):
                    break
    modeltop = 3
    for char in (0, 2):
        field = _field(char)
        for a in range(1, modeltop + 1):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    e = make_entry("D3K", {"a": a, "b": b, "c": c}, field)
                    inv = invariants_for(e)
                    model = z_mod_r_model("D3K", {"a": a, "b": b, "c": c}, field)
                    _check(details, fingerprint(inv.z_mod_r) == fingerprint(model),
                           f"{e.label} char {char}: fp(Z/R) = K[A,B,C]/(A^a,B^b,C^c,AB,AC,BC)")
        grid = [(1, 2, 2, 1), (1, 3, 2, 1), (2, 3, 3, 2), (1, 2, 2, 2), (3, 3, 3, 3)]
        if quick:
            grid = grid[:2]
        for (k, s, t, u) in grid:
            params = {"k": k, "s": s, "t": t, "u": u}
            e = make_entry("D3R", params, field)
            inv = invariants_for(e)
            model = z_mod_r_model("D3R", params, field)
            _check(details, fingerprint(inv.z_mod_r) == fingerprint(model),
                   f"{e.label} char {char}: fp(Z/R) = four-variable model")
    return details


# the provably-degenerate boundary combinations of the centre models
def _model_degenerate(family: str, params: dict) -> bool:
    if family in ("Q2B1", "SD2B2") and params.get("k") == 1:
        return True
    if family == "Q3K" and params.get("c") == 1:
        return True
    if family == "Q3A1":
        return True
    return False


def criterion_4_centres(quick=False) -> list:
    """Semidihedral/quaternion centre presentations as fingerprint
    equalities, parameters <= 3."""
    details = []
    top = 2 if quick else 3
    cases = []
    for char in (0, 2):
        field = _field(char)
        for k in range(2, top + 1):
            cases.append(("SD1A1", {"k": k}, field, 1))
            cases.append(("Q1A1", {"k": k}, field, 1))
            if char == 2:
                cases.append(("SD1A2", {"k": k, "c": 1, "d": 0}, field, 1))
                cases.append(("Q1A2", {"k": k, "c": 0, "d": 1}, field, 1))
        for k in range(1, top + 1):
            for t in range(2, top + 1):
                cases.append(("SD2B1", {"k": k, "t": t, "c": 0}, field, 2))
                if k + t >= 4:
                    cases.append(("SD2B2", {"k": k, "t": t, "c": 0}, field, 2))
            for s in range(3, top + 1):
                cases.append(("Q2B1", {"k": k, "s": s, "a": 1, "c": 0}, field, 2))
        for a in range(2, top + 1):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    cases.append(("SD3K", {"a": a, "b": b, "c": c}, field, 3))
                    if b >= 2 and (a, b, c) != (2, 2, 1):
                        cases.append(("Q3K", {"a": a, "b": b, "c": c}, field, 3))
        cases.append(("Q3A1", {"d": 2 if char == 0 else "g"},
                      field if char == 0 else Field.finite(2, 2), 3))
    for family, params, field, rdim in cases:
        e = make_entry(family, params, field, strict=False)
        inv = invariants_for(e)
        z, _ = inv.centre_pair
        _check(details, inv.reynolds.dim == rdim,
               f"{e.label} char {field.char}: dim R = {rdim}")
        model = centre_model(family, params, field)
        same = fingerprint(z) == fingerprint(model)
        if _model_degenerate(family, params):
            # the classical model provably fails here; assert the computed truth
            ok = (not same) and z.dim == model.dim \
                and fingerprint(z).min_generators < fingerprint(model).min_generators
            _check(details, ok,
                   f"{e.label} char {field.char}: documented boundary deviation from the "
                   "displayed model (equal dims, centre needs fewer generators)")
            zr = quotient_comm(z, inv.reynolds)
            m2 = z_mod_r_model(family, params, field)
            _check(details, fingerprint(zr) == fingerprint(m2),
                   f"{e.label} char {field.char}: Z/R still matches its model")
        else:
            _check(details, same,
                   f"{e.label} char {field.char}: fp(Z) = displayed presentation")
    return details


def criterion_5_blocks(quick=False) -> list:
    """Tame block tables: dim Z^st patterns and pairwise separations."""
    details = []
    defects = [3, 4] if quick else [3, 4, 5]
    quoted = {
        ("dihedral", "D2B"): 2,
        ("semidihedral", "SD1A1"): 3,
        ("semidihedral", "SD2B1"): 2,
        ("semidihedral", "SD2B2"): 4,
        ("semidihedral", "SD3K"): 3,
        ("quaternion", "Q1A1"): 3,
        ("quaternion", "Q2B1"): 4,
        ("quaternion", "Q3K"): 5,
    }
    for rep in ("dihedral", "semidihedral", "quaternion"):
        for n in defects:
            entries = []
            for ns in (1, 2, 3):
                try:
                    entries.extend(tame_block_entries(BlockSpec(rep, n, ns), F2))
                except TamesymError:
                    continue
            if not entries:
                continue
            k = 2 ** (n - 2)
            for e in entries:
                inv = invariants_for(e)
                offset = quoted.get((rep, e.family))
                if offset is not None:
                    _check(details, inv.dim_zst == k + offset,
                           f"defect {n}: dim Zst({e.label}) = 2^(n-2)+{offset}")
            for i in range(len(entries)):
                for j in range(i + 1, len(entries)):
                    a, b = entries[i], entries[j]
                    v = compare(a, b)
                    pa, pb = dict(a.params), dict(b.params)
                    scalar_pair = (
                        a.family == b.family
                        and {x: y for x, y in pa.items() if x not in ("c", "a")}
                        == {x: y for x, y in pb.items() if x not in ("c", "a")}
                    )
                    if scalar_pair and a.family in ("SD2B2", "Q2B1"):
                        _check(details, not v.distinguished and v.known_open,
                               f"defect {n}: {a.label} vs {b.label} is the quoted open scalar case")
                    else:
                        _check(details, v.distinguished,
                               f"defect {n}: {a.label} vs {b.label} separated ({v.invariant})")
    return details


def criterion_6_section7(quick=False) -> list:
    details = []
    chars = (0, 2) if quick else (0, 2, 3, 5)
    top = 3 if quick else 4
    rep = section7_suite(chars=chars, max_param=top)
    _check(details, not rep["failures"],
           f"section-7 sweep: {rep['distinguished']}/{rep['pairs']} pairs distinguished")
    for f in rep["failures"]:
        _check(details, False, f"undistinguished: {f}")
    # the char-2 cell including Q3A1 needs F_4 for every entry
    field4 = Field.finite(2, 2)
    q3a1 = make_entry("Q3A1", {"d": "g"}, field4)
    for other in (make_entry("Q1A1", {"k": 2}, field4),
                  make_entry("Q2B1", {"k": 1, "s": 3, "a": 1, "c": 0}, field4)):
        v = compare(other, q3a1)
        _check(details, v.distinguished, f"{other.label} vs Q3A1 over F4 ({v.invariant})")
    return details


def criterion_7_kuelshammer(quick=False) -> list:
    """Scalar-family separations via the level-1 Kuelshammer quotient."""
    details = []
    pairs = [("SD2B1", 1, 3), ("SD2B1", 3, 1), ("SD2B1", 3, 3), ("SD2B2", 3, 3)]
    for family, k, s in pairs:
        a = make_entry(family, {"k": k, "t": s, "c": 0}, F2, strict=False)
        b = make_entry(family, {"k": k, "t": s, "c": 1}, F2, strict=False)
        v = compare(a, b)
        _check(details, v.distinguished and v.invariant.startswith("kuelshammer"),
               f"{family}^({k},{s})(0) vs (1): {v.invariant or 'NOT SEPARATED'}")
    return details


def criterion_8_properties(quick=False) -> list:
    """Always-on property suite over a desk-scale grid."""
    details = []
    rng = random.Random(20240817)
    grid = [
        ("A1", {"m": 3, "n": 2}, QQ), ("A1", {"m": 3, "n": 3}, F3),
        ("C1", {}, QQ), ("C1", {}, F2), ("B1", {}, F2),
        ("D1A1", {"k": 2}, F2), ("D1A1", {"k": 3}, QQ),
        ("D1A2", {"k": 2, "d": 1}, F2),
        ("D2B", {"k": 2, "s": 1, "c": 0}, QQ), ("D2B", {"k": 2, "s": 2, "c": 1}, F2),
        ("D3K", {"a": 2, "b": 1, "c": 1}, F2), ("D3K", {"a": 2, "b": 2, "c": 1}, F3),
        ("D3R", {"k": 1, "s": 2, "t": 2, "u": 1}, F2),
        ("SD1A1", {"k": 2}, F2), ("SD1A1", {"k": 3}, QQ),
        ("SD1A2", {"k": 2, "c": 1, "d": 1}, F2),
        ("SD2B1", {"k": 1, "t": 3, "c": 0}, F2), ("SD2B1", {"k": 2, "t": 2, "c": 1}, F2),
        ("SD2B2", {"k": 2, "t": 2, "c": 0}, F2),
        ("SD3K", {"a": 2, "b": 2, "c": 1}, F2), ("SD3K", {"a": 2, "b": 1, "c": 1}, QQ),
        ("Q1A1", {"k": 2}, F2), ("Q1A2", {"k": 2, "c": 1, "d": 0}, F2),
        ("Q2B1", {"k": 1, "s": 3, "a": 1, "c": 0}, F2),
        ("Q3K", {"a": 2, "b": 2, "c": 2}, F2),
        ("Q3A1", {"d": "g"}, Field.finite(2, 2)),
    ]
    if quick:
        grid = grid[:8]
    for family, params, field in grid:
        e = make_entry(family, params, field)
        inv = invariants_for(e)
        a = inv.algebra
        label = f"{e.label} char {field.char}"
        # SNF chain and determinant product
        snf = smith_normal_form(inv.cartan)
        chain = all(snf.divisors[i + 1] % snf.divisors[i] == 0
                    for i in range(len(snf.divisors) - 1))
        prod = 1
        for d in snf.divisors:
            prod *= d
        _check(details, chain and prod == abs(det_bareiss(inv.cartan)),
               f"{label}: SNF divisibility chain and product = |det|")
        # Higman = p-rank of Cartan, inside socle and centre (higman_ideal
        # raises on violation; touching it is the check)
        _check(details, inv.higman.dim >= 0, f"{label}: Higman ideal checks")
        # perp([A,A]) = Z(A)
        comm = commutator_space(a)
        _, zsub = inv.centre_pair
        _check(details, perp(comm, inv.lam, a) == zsub, f"{label}: perp([A,A]) = Z(A)")
        # associativity
        if a.dim <= 30:
            triples = [(i, j, k) for i in range(a.dim) for j in range(a.dim)
                       for k in range(a.dim)]
        else:
            triples = [(rng.randrange(a.dim), rng.randrange(a.dim), rng.randrange(a.dim))
                       for _ in range(1000)]
        ok = True
        for (i, j, k) in triples:
            x, y, zv = a.basis_element(i), a.basis_element(j), a.basis_element(k)
            if multiply(a, multiply(a, x, y), zv) != multiply(a, x, multiply(a, y, zv)):
                ok = False
                break
        _check(details, ok, f"{label}: associativity on {len(triples)} triples")
        # unit
        u = a.unit()
        ok = all(multiply(a, u, a.basis_element(i)) == a.basis_element(i)
                 and multiply(a, a.basis_element(i), u) == a.basis_element(i)
                 for i in range(a.dim))
        _check(details, ok, f"{label}: sum of idempotents is a two-sided unit")
        # Kuelshammer chain in characteristic 2
        if field.char == 2 and field.degree == 1:
            tperps = []
            for n in range(0, 5):
                tn = t_space(a, n)
                tperps.append(perp(tn, inv.lam, a))
            descending = all(tperps[i].contains_subspace(tperps[i + 1])
                             for i in range(len(tperps) - 1))
            _check(details, descending, f"{label}: T_n^perp chain descends")
            _check(details, tperps[-1] == inv.reynolds,
                   f"{label}: T_n^perp stabilizes at R(A)")
            _check(details, tperps[0] == zsub, f"{label}: T_0^perp = [A,A]^perp = Z(A)")
    return details


def criterion_9_negative(quick=False) -> list:
    """Open-case pairs must come back NotDistinguished(known_open=True)."""
    details = []
    pairs = [
        (("D1A2", {"k": 2, "d": 0}), ("D1A2", {"k": 2, "d": 1}), F2),
        (("D1A2", {"k": 3, "d": 0}), ("D1A2", {"k": 3, "d": 1}), F2),
        # Q2B1 c-pairs that the Kuelshammer invariants do not reach (several
        # others, e.g. (1,3) over F_2, are genuinely separated; see docs)
        (("Q2B1", {"k": 2, "s": 3, "a": 1, "c": 0}),
         ("Q2B1", {"k": 2, "s": 3, "a": 1, "c": 1}), F2),
        (("Q2B1", {"k": 1, "s": 4, "a": 1, "c": 0}),
         ("Q2B1", {"k": 1, "s": 4, "a": 1, "c": 1}), F2),
        (("Q2B1", {"k": 2, "s": 3, "a": 1, "c": 0}),
         ("Q2B1", {"k": 2, "s": 3, "a": 1, "c": 1}), QQ),
        (("SD2B1", {"k": 2, "t": 2, "c": 0}), ("SD2B1", {"k": 2, "t": 2, "c": 1}), F2),
        (("SD2B2", {"k": 2, "t": 4, "c": 0}), ("SD2B2", {"k": 2, "t": 4, "c": 1}), F2),
        (("SD1A2", {"k": 2, "c": 1, "d": 0}), ("SD1A2", {"k": 2, "c": 0, "d": 1}), F2),
        (("Q1A2", {"k": 2, "c": 1, "d": 0}), ("Q1A2", {"k": 2, "c": 1, "d": 1}), F2),
        (("SD1A1", {"k": 2}), ("SD1A2", {"k": 2, "c": 1, "d": 0}), F2),
        (("Q1A1", {"k": 2}), ("Q1A2", {"k": 2, "c": 0, "d": 1}), F2),
    ]
    if quick:
        pairs = pairs[:4]
    for (fa, pa), (fb, pb), field in pairs:
        v = compare(make_entry(fa, pa, field, strict=False),
                    make_entry(fb, pb, field, strict=False))
        _check(details, v.outcome == "not_distinguished" and v.known_open,
               f"{fa}{tuple(pa.values())} vs {fb}{tuple(pb.values())} char {field.char}: "
               f"NotDistinguished(known_open)")
    return details


CRITERIA = (
    ("1: one-simple invariant tables", criterion_1_tables),
    ("2: one-simple separation claims", criterion_2_claims),
    ("3: two-simple recovery, three-simple Z/R models", criterion_3_recovery),
    ("4: centre presentations", criterion_4_centres),
    ("5: tame block tables", criterion_5_blocks),
    ("6: cross-simple-count sweep", criterion_6_section7),
    ("7: Kuelshammer scalar separations", criterion_7_kuelshammer),
    ("8: property suite", criterion_8_properties),
    ("9: negative control (open cases)", criterion_9_negative),
)


def run_acceptance(quick: bool = False) -> list:
    results = []
    for name, fn in CRITERIA:
        start = time.time()
        try:
            details = fn(quick=quick)
            passed = all(d["ok"] for d in details)
            failures = [d["check"] for d in details if not d["ok"]]
        except TamesymError as exc:
            passed, failures, details = False, [str(exc)], []
        results.append(
            {
                "criterion": name,
                "passed": passed,
                "checks": len(details),
                "failures": failures,
                "seconds": round(time.time() - start, 3),
            }
        )
    return results

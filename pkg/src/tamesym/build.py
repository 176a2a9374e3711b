"""Construction of the finite-dimensional quotient algebra from a
presentation.

The relation ideal is completed to a confluent rewriting system with respect
to the length-lex word order (largest monomial of each relation becomes the
left side).  After completion every overlap between rule left sides reduces
to zero, so normal-form words of the system are a basis of the quotient and
the structure constants are exact.  Basis order is length-lex with arrows in
declaration order; the whole construction is deterministic.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import ConsistencyError, DimensionMismatch, TruncationError
from .fields import Field
from .presentation import Presentation

DEFAULT_MAX_WORD = 512
DEFAULT_MAX_RULES = 4096
DEFAULT_MAX_DIM = 20000


def _order_key(word):
    return (len(word), word)


class RewriteSystem:
    """Confluent (after complete()) rewriting system on path words."""

    def __init__(self, field: Field, max_word: int, max_rules: int):
        self.field = field
        self.max_word = max_word
        self.max_rules = max_rules
        self.rules: dict[tuple, dict] = {}
        self._by_first: dict[int, list] = {}

    # -- indexing ------------------------------------------------------------
    def _reindex(self):
        self._by_first = {}
        for lead in sorted(self.rules, key=_order_key):
            self._by_first.setdefault(lead[0], []).append(lead)

    def _find_occurrence(self, word):
        """Leftmost, then shortest-rule occurrence of any rule lead."""
        for pos in range(len(word)):
            bucket = self._by_first.get(word[pos])
            if not bucket:
                continue
            rest = len(word) - pos
            for lead in bucket:
                n = len(lead)
                if n <= rest and word[pos : pos + n] == lead:
                    return pos, lead
        return None

    def is_reducible(self, word) -> bool:
        return self._find_occurrence(word) is not None

    # -- reduction -----------------------------------------------------------
    def reduce_combo(self, combo: dict) -> dict:
        F = self.field
        work = {w: c for w, c in combo.items() if not F.is_zero(c)}
        while True:
            target = None
            target_key = None
            occurrence = None
            for w in work:
                k = _order_key(w)
                if target_key is not None and k <= target_key:
                    continue
                occ = self._find_occurrence(w)
                if occ is not None:
                    target, target_key, occurrence = w, k, occ
            if target is None:
                return work
            pos, lead = occurrence
            coef = work.pop(target)
            rhs = self.rules[lead]
            prefix = target[:pos]
            suffix = target[pos + len(lead):]
            for t, c in rhs.items():
                w2 = prefix + t + suffix
                new = F.add(work.get(w2, F.zero), F.mul(coef, c))
                if F.is_zero(new):
                    work.pop(w2, None)
                else:
                    work[w2] = new

    def reduce_word(self, word) -> dict:
        return self.reduce_combo({word: self.field.one})

    # -- completion ----------------------------------------------------------
    def _overlaps(self, l1, l2):
        """S-polynomials of proper overlaps: suffix of l1 = prefix of l2."""
        F = self.field
        out = []
        r1, r2 = self.rules[l1], self.rules[l2]
        for k in range(1, min(len(l1), len(l2))):
            if l1[len(l1) - k:] != l2[:k]:
                continue
            tail = l2[k:]
            head = l1[: len(l1) - k]
            spoly: dict = {}
            for t, c in r1.items():
                w = t + tail
                new = F.add(spoly.get(w, F.zero), c)
                if F.is_zero(new):
                    spoly.pop(w, None)
                else:
                    spoly[w] = new
            for t, c in r2.items():
                w = head + t
                new = F.sub(spoly.get(w, F.zero), c)
                if F.is_zero(new):
                    spoly.pop(w, None)
                else:
                    spoly[w] = new
            if spoly:
                out.append(spoly)
        return out

    def _add_rule(self, combo, pending):
        F = self.field
        lead = max(combo, key=_order_key)
        if len(lead) > self.max_word:
            raise TruncationError(
                f"rule length {len(lead)} exceeds ceiling {self.max_word}"
            )
        if len(self.rules) >= self.max_rules:
            raise TruncationError(f"more than {self.max_rules} rewrite rules")
        coef = combo[lead]
        rhs = {w: F.neg(F.div(c, coef)) for w, c in combo.items() if w != lead}
        # retract rules whose lead contains the new lead
        n = len(lead)
        for other in [o for o in self.rules if len(o) > n]:
            if any(other[i : i + n] == lead for i in range(len(other) - n + 1)):
                old = self.rules.pop(other)
                retracted = dict(old)
                retracted[other] = F.neg(F.one)
                pending.append({w: F.neg(c) for w, c in retracted.items()})
        self.rules[lead] = rhs
        self._reindex()
        for other in list(self.rules):
            for spoly in self._overlaps(lead, other):
                pending.append(spoly)
            if other != lead:
                for spoly in self._overlaps(other, lead):
                    pending.append(spoly)

    def complete(self, relations):
        pending = deque(relations)
        sweeps = 0
        while True:
            while pending:
                combo = self.reduce_combo(pending.popleft())
                if combo:
                    self._add_rule(combo, pending)
            # certification sweep: every overlap of the final system must
            # reduce to zero; anything left restarts the loop
            clean = True
            for l1 in list(self.rules):
                for l2 in list(self.rules):
                    for spoly in self._overlaps(l1, l2):
                        if self.reduce_combo(spoly):
                            pending.append(spoly)
                            clean = False
            if clean:
                break
            sweeps += 1
            if sweeps > 64:
                raise TruncationError("completion did not converge")
        # normalize right sides against the final system
        for lead in list(self.rules):
            rhs = self.rules.pop(lead)
            self._reindex()
            self.rules[lead] = self.reduce_combo(rhs)
        self._reindex()


# ---------------------------------------------------------------------------

@dataclass
class Algebra:
    """Finite-dimensional quotient path algebra with exact structure
    constants; immutable after construction."""

    field: Field
    presentation: Presentation
    dim: int
    basis_keys: tuple        # ('e', v) for idempotents, else word tuples
    starts: tuple
    ends: tuple
    idempotent_indices: tuple
    arrow_images: tuple      # dense coefficient tuple per arrow
    mult: tuple              # mult[i][j] = tuple of (index, scalar)
    rules: RewriteSystem

    @property
    def vertex_count(self):
        return self.presentation.quiver.vertex_count

    @property
    def arrow_indices(self):
        """Basis position of each arrow that survives as a basis word."""
        out = []
        for a in range(len(self.presentation.quiver.arrows)):
            key = (a,)
            out.append(self.index_of(key) if key in self._index else None)
        return tuple(out)

    def __post_init__(self):
        self._index = {k: i for i, k in enumerate(self.basis_keys)}

    def index_of(self, key) -> int:
        return self._index[key]

    def zero(self) -> list:
        return [self.field.zero] * self.dim

    def unit(self) -> list:
        v = self.zero()
        for i in self.idempotent_indices:
            v[i] = self.field.one
        return v

    def basis_element(self, i: int) -> list:
        v = self.zero()
        v[i] = self.field.one
        return v

    def label(self, i: int) -> str:
        key = self.basis_keys[i]
        if key[0] == "e":
            return f"e{key[1]}"
        names = [self.presentation.quiver.arrows[a].name for a in key]
        return "*".join(names)


def multiply(a: Algebra, x, y):
    """Bilinear extension of the structure constants."""
    if len(x) != a.dim or len(y) != a.dim:
        raise DimensionMismatch("element length does not match algebra dimension")
    F = a.field
    acc = a.zero()
    mult = a.mult
    for i, ci in enumerate(x):
        if F.is_zero(ci):
            continue
        row = mult[i]
        for j, cj in enumerate(y):
            if F.is_zero(cj):
                continue
            cij = F.mul(ci, cj)
            for k, c in row[j]:
                acc[k] = F.add(acc[k], F.mul(cij, c))
    return acc


def element_sparse(x, field: Field) -> dict:
    return {i: c for i, c in enumerate(x) if not field.is_zero(c)}


def build_algebra(pres: Presentation, expected_dim: int | None = None) -> Algebra:
    """Complete the relations, enumerate normal-form words, tabulate the
    structure constants.  Raises TruncationError on work-ceiling overflow and
    ConsistencyError when expected_dim is supplied and contradicted."""
    F = pres.field
    quiver = pres.quiver
    max_word = int(os.environ.get("TAMESYM_MAX_COMPLETION", DEFAULT_MAX_WORD))
    rs = RewriteSystem(F, max_word, DEFAULT_MAX_RULES)
    rs.complete([dict(rel.terms) for rel in pres.relations])

    arrows = quiver.arrows
    # normal-form words, breadth first => length-lex in declaration order
    std_words: list[tuple] = []
    level = []
    for a in range(len(arrows)):
        w = (a,)
        if not rs.is_reducible(w):
            level.append(w)
    while level:
        std_words.extend(level)
        if len(std_words) + quiver.vertex_count > DEFAULT_MAX_DIM:
            raise TruncationError("basis exceeds dimension ceiling (not finite dimensional?)")
        if len(level[0]) >= max_word:
            raise TruncationError(
                f"normal-form words of length {max_word} exist; "
                "algebra is not finite dimensional or the ceiling is too low"
            )
        nxt = []
        for w in level:
            tail = arrows[w[-1]].target
            for a in range(len(arrows)):
                if arrows[a].source != tail:
                    continue
                w2 = w + (a,)
                # w is standard, so a rule can only match a suffix of w2
                n2 = len(w2)
                hit = False
                for lead in rs.rules:
                    n = len(lead)
                    if n <= n2 and w2[n2 - n:] == lead:
                        hit = True
                        break
                if not hit:
                    nxt.append(w2)
        level = nxt

    basis_keys = [("e", v) for v in range(quiver.vertex_count)] + std_words
    index = {k: i for i, k in enumerate(basis_keys)}
    dim = len(basis_keys)
    if expected_dim is not None and dim != expected_dim:
        raise ConsistencyError(f"built dimension {dim}, expected {expected_dim}")

    def key_start(key):
        return key[1] if key[0] == "e" else arrows[key[0]].source

    def key_end(key):
        return key[1] if key[0] == "e" else arrows[key[-1]].target

    starts = tuple(key_start(k) for k in basis_keys)
    ends = tuple(key_end(k) for k in basis_keys)

    # structure constants
    mult = []
    for i, ki in enumerate(basis_keys):
        row = []
        for j, kj in enumerate(basis_keys):
            if ends[i] != starts[j]:
                row.append(())
                continue
            if ki[0] == "e":
                row.append(((j, F.one),))
                continue
            if kj[0] == "e":
                row.append(((i, F.one),))
                continue
            combo = rs.reduce_word(ki + kj)
            row.append(tuple(sorted((index[w], c) for w, c in combo.items())))
        mult.append(tuple(row))

    arrow_images = []
    for a in range(len(arrows)):
        w = (a,)
        vec = [F.zero] * dim
        if w in index:
            vec[index[w]] = F.one
        else:
            for t, c in rs.reduce_word(w).items():
                vec[index[t]] = c
        arrow_images.append(tuple(vec))

    return Algebra(
        field=F,
        presentation=pres,
        dim=dim,
        basis_keys=tuple(basis_keys),
        starts=starts,
        ends=ends,
        idempotent_indices=tuple(range(quiver.vertex_count)),
        arrow_images=tuple(arrow_images),
        mult=tuple(mult),
        rules=rs,
    )


# ---------------------------------------------------------------------------
# derived data

def cartan_matrix(a: Algebra):
    """Entry (i, j) = dim e_i A e_j, counted off the basis vertex grading."""
    from .linalg import MatrixZ

    n = a.vertex_count
    counts = [[0] * n for _ in range(n)]
    for s, e in zip(a.starts, a.ends):
        counts[s][e] += 1
    return MatrixZ.from_rows(counts)


def _right_mult_by(a: Algebra, vec):
    """x -> x . vec as a list of sparse columns: col[i] = b_i . vec."""
    F = a.field
    cols = []
    for i in range(a.dim):
        acc: dict = {}
        row = a.mult[i]
        for j, cj in enumerate(vec):
            if F.is_zero(cj):
                continue
            for k, c in row[j]:
                new = F.add(acc.get(k, F.zero), F.mul(cj, c))
                if F.is_zero(new):
                    acc.pop(k, None)
                else:
                    acc[k] = new
        cols.append(acc)
    return cols


def _left_mult_by(a: Algebra, vec):
    F = a.field
    cols = []
    for i in range(a.dim):
        acc: dict = {}
        for j, cj in enumerate(vec):
            if F.is_zero(cj):
                continue
            for k, c in a.mult[j][i]:
                new = F.add(acc.get(k, F.zero), F.mul(cj, c))
                if F.is_zero(new):
                    acc.pop(k, None)
                else:
                    acc[k] = new
        cols.append(acc)
    return cols


def radical_subspace(a: Algebra):
    """Span of the non-idempotent basis words (the arrow ideal)."""
    from .linalg import Subspace

    vecs = [{i: a.field.one} for i in range(a.vertex_count, a.dim)]
    return Subspace.from_vectors(a.field, a.dim, vecs)


def radical_power_dims(a: Algebra):
    """Dims of J^0 > J^1 > ... > 0 for J = the radical."""
    from .linalg import Echelon, Subspace

    F = a.field
    dims = [a.dim]
    current = radical_subspace(a)
    arrow_cols = [_right_mult_by(a, img) for img in a.arrow_images]
    while current.dim > 0:
        dims.append(current.dim)
        # J^{i+1} = right ideal generated by J^i . (arrows): spin up
        ech = Echelon(F, a.dim)
        work = []
        for row in current.basis:
            for cols in arrow_cols:
                v: dict = {}
                for i, ci in enumerate(row):
                    if F.is_zero(ci):
                        continue
                    for k, c in cols[i].items():
                        new = F.add(v.get(k, F.zero), F.mul(ci, c))
                        if F.is_zero(new):
                            v.pop(k, None)
                        else:
                            v[k] = new
                if v and ech.add(v) is not None:
                    work.append(v)
        while work:
            v = work.pop()
            for cols in arrow_cols:
                v2: dict = {}
                for i, ci in v.items():
                    for k, c in cols[i].items():
                        new = F.add(v2.get(k, F.zero), F.mul(ci, c))
                        if F.is_zero(new):
                            v2.pop(k, None)
                        else:
                            v2[k] = new
                if v2 and ech.add(v2) is not None:
                    work.append(v2)
        nxt = Subspace.from_vectors(F, a.dim, ech.basis_rows())
        if nxt.dim >= current.dim:
            raise ConsistencyError("radical is not nilpotent")
        current = nxt
    dims.append(0)
    return tuple(dims)


def socle(a: Algebra):
    """Two-sided socle {x : xJ = 0} ∩ {x : Jx = 0}; J is generated by the
    arrows, so annihilating every arrow suffices."""
    from .linalg import Subspace, intersect, kernel_of_sparse_rows

    F = a.field

    def annihilator(mult_cols_fn):
        rows: list[dict] = []
        for img in a.arrow_images:
            cols = mult_cols_fn(a, img)
            tagged: dict[int, dict] = {}
            for i, col in enumerate(cols):
                for k, c in col.items():
                    tagged.setdefault(k, {})[i] = c
            rows.extend(tagged.values())
        return kernel_of_sparse_rows(F, a.dim, rows)

    right_kill = annihilator(_right_mult_by)  # x . J = 0
    left_kill = annihilator(_left_mult_by)    # J . x = 0
    if right_kill == left_kill:
        return right_kill
    return intersect(right_kill, left_kill)

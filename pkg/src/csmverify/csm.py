"""CSM classes of Schubert cells via the operator recursion.

The cell classes are generated from the point class by the involutive
operators T_i = A_i - s_i, where A_i is the homological BGG operator and
s_i the coinvariant Weyl action.  Which end of a reduced word the operators
are applied from is not forced a priori; the two candidate conventions are
separated mechanically by the positivity/support/normalization invariants
of the cell classes in A2, and the winning convention is frozen for the
process (and recorded in cache metadata).

Also here: the total Chern class of the tangent bundle (a product of
degree-2 factors over the positive roots, so it needs only the Chevalley
rule), its inverse via the nilpotent geometric series, Segre classes, the
sign involution, and opposite-cell classes via translation by the longest
element.
"""

from __future__ import annotations

from .cohomology import CohomologyClass, FlagCohomology
from .errors import CalibrationFailure, InternalInvariantError
from .rootdata import CartanDatum, WeylElement, WeylGroup

#: letters of a reduced word applied first-to-last while building the
#: element by right multiplication
CONVENTION_LTR = "letters-left-to-right"
#: transpose convention: letters applied last-to-first
CONVENTION_RTL = "letters-right-to-left"

_CALIBRATED: str | None = None


class CsmCalculator:
    """CSM/Segre classes of all Schubert and opposite cells of one group."""

    def __init__(self, coh: FlagCohomology, convention: str | None = None):
        self.coh = coh
        self.group = coh.group
        self.convention = convention or calibrated_dl_convention()
        self._cells: dict[int, CohomologyClass] = {}
        self._tangent: CohomologyClass | None = None
        self._tangent_inverse: CohomologyClass | None = None
        self._segre_cells: dict[int, CohomologyClass] = {}
        self._checked: set[int] = set()

    # -- operators -------------------------------------------------------------

    def bgg_A(self, i: int, a: CohomologyClass) -> CohomologyClass:
        """Homological BGG operator: kills ascents, steps down descents."""
        group = self.group
        out: dict[WeylElement, int] = {}
        for w, c in a.coeffs.items():
            t = group.elements[group._right[w.index][i - 1]]
            if t.length < w.length:
                out[t] = out.get(t, 0) + c
        return CohomologyClass(group, out)

    def weyl_action(self, i: int, a: CohomologyClass) -> CohomologyClass:
        """Coinvariant action of the i-th simple reflection (an involution)."""
        group = self.group
        alpha = tuple(1 if k == i - 1 else 0 for k in range(group.rank))
        out: dict[WeylElement, int] = {}
        for w, c in a.coeffs.items():
            out[w] = out.get(w, 0) + c
            t = group.elements[group._right[w.index][i - 1]]
            if t.length < w.length:
                for z, m in self.coh.chevalley_multiply(alpha, t).coeffs.items():
                    out[z] = out.get(z, 0) - c * m
        return CohomologyClass(group, out)

    def dl_operator(self, i: int, a: CohomologyClass) -> CohomologyClass:
        """T_i = A_i - s_i; squares to the identity and satisfies braid."""
        return self.bgg_A(i, a) - self.weyl_action(i, a)

    # -- cell classes ------------------------------------------------------------

    def csm_schubert_cell(self, u: WeylElement) -> CohomologyClass:
        """CSM class of the Schubert cell of u, in the eps basis.

        Recursion from the point class along the canonical reduced word,
        per the frozen convention.  The result is invariant-checked once
        per element; a violation raises CalibrationFailure.
        """
        self.coh._check(u)
        cls = self._cell_idx(u.index)
        if u.index not in self._checked:
            self._check_cell_invariants(u, cls)
            self._checked.add(u.index)
        return cls

    def _cell_idx(self, idx: int) -> CohomologyClass:
        cached = self._cells.get(idx)
        if cached is not None:
            return cached
        group = self.group
        if idx == 0:
            out = self.coh.schubert_class(group.longest)
        else:
            word = group._words[idx]
            if self.convention == CONVENTION_LTR:
                prefix = group.from_word(word[:-1])
                out = self.dl_operator(word[-1], self._cell_idx(prefix.index))
            else:
                suffix = group.from_word(word[1:])
                out = self.dl_operator(word[0], self._cell_idx(suffix.index))
        self._cells[idx] = out
        return out

    def csm_along_word(self, word) -> CohomologyClass:
        """Apply the recursion along an arbitrary reduced word (for the
        reduced-word-independence checks)."""
        out = self.coh.schubert_class(self.group.longest)
        letters = word if self.convention == CONVENTION_LTR else tuple(reversed(tuple(word)))
        for i in letters:
            out = self.dl_operator(i, out)
        return out

    def _check_cell_invariants(self, u: WeylElement, cls: CohomologyClass) -> None:
        group = self.group
        dual = group.w0_times(u)
        if cls.coefficient(dual) != 1:
            raise CalibrationFailure(f"cell class of {u}: leading coefficient != 1")
        if cls.coefficient(group.longest) != 1:
            raise CalibrationFailure(f"cell class of {u}: top coefficient != 1")
        for w, c in cls.coeffs.items():
            if c < 0:
                raise CalibrationFailure(f"cell class of {u}: negative coefficient at {w}")
            if not group.bruhat_leq(dual, w):
                raise CalibrationFailure(f"cell class of {u}: support below {dual}")

    def csm_opposite_cell(self, v: WeylElement) -> CohomologyClass:
        """Opposite-cell class; translation by w0 is homotopic to the
        identity, so it equals the cell class of w0*v."""
        self.coh._check(v)
        return self.csm_schubert_cell(self.group.w0_times(v))

    # -- Chern/Segre machinery ------------------------------------------------------

    def tangent_chern(self) -> CohomologyClass:
        """Total Chern class of the tangent bundle: product over positive
        roots of (1 + c1(L_root)), computed with the Chevalley rule only."""
        if self._tangent is None:
            coh = self.coh
            cls = coh.unit()
            for beta in self.group.positive_roots:
                add: dict[WeylElement, int] = {}
                for w, c in cls.coeffs.items():
                    for t, m in coh.chevalley_multiply(beta.coords, w).coeffs.items():
                        add[t] = add.get(t, 0) + c * m
                cls = cls + CohomologyClass(self.group, add)
            if coh.integrate(cls) != self.group.order:
                raise InternalInvariantError("tangent Chern class does not integrate to |W|")
            self._tangent = cls
        return self._tangent

    def chern_inverse(self) -> CohomologyClass:
        """Inverse of the total Chern class via the geometric series of its
        nilpotent part; exact after dim-many terms."""
        if self._tangent_inverse is None:
            coh = self.coh
            nil = self.tangent_chern() - coh.unit()
            inv = coh.unit()
            term = coh.unit()
            for _ in range(self.group.num_positive):
                term = -1 * coh.cup(term, nil)
                if not term:
                    break
                inv = inv + term
            if coh.cup(self.tangent_chern(), inv) != coh.unit():
                raise InternalInvariantError("Chern class inverse failed")
            self._tangent_inverse = inv
        return self._tangent_inverse

    def segre_sm(self, a: CohomologyClass) -> CohomologyClass:
        """Segre transform: cup with the inverse total Chern class."""
        return self.coh.cup(a, self.chern_inverse())

    def segre_schubert_cell(self, u: WeylElement) -> CohomologyClass:
        """Segre class of a Schubert cell, with the sign-twist identity
        (alternating signs relative to the leading term) enforced."""
        self.coh._check(u)
        cached = self._segre_cells.get(u.index)
        if cached is not None:
            return cached
        cls = self.csm_schubert_cell(u)
        seg = self.segre_sm(cls)
        base = self.group.w0_times(u).length
        twisted = CohomologyClass(self.group, {
            w: (c if (w.length - base) % 2 == 0 else -c)
            for w, c in cls.coeffs.items()
        })
        if seg != twisted:
            raise InternalInvariantError(
                f"Segre class of cell {u} does not match the sign-twisted CSM class"
            )
        self._segre_cells[u.index] = seg
        return seg

    def segre_opposite_cell(self, v: WeylElement) -> CohomologyClass:
        return self.segre_schubert_cell(self.group.w0_times(v))

    def phi_involution(self, a: CohomologyClass) -> CohomologyClass:
        """Sign involution: (-1)^degree on each graded piece; a ring map."""
        return CohomologyClass(self.group, {
            w: (c if w.length % 2 == 0 else -c) for w, c in a.coeffs.items()
        })

    def completeness_check(self) -> bool:
        """Sum of all cell classes equals the total tangent Chern class."""
        total = self.coh.zero()
        for u in self.group:
            total = total + self.csm_schubert_cell(u)
        return total == self.tangent_chern()

    # -- table + cache ------------------------------------------------------------------

    def build_table(self) -> "CsmTable":
        for u in self.group:
            self.csm_schubert_cell(u)
        return CsmTable(self)

    def table_payload(self) -> dict:
        self.build_table()
        words = self.group._words
        key = lambda i: ".".join(map(str, words[i]))
        rows = {}
        for ui in range(self.group.order):
            cls = self._cells[ui]
            rows[key(ui)] = {key(w.index): c for w, c in sorted(
                cls.coeffs.items(), key=lambda wc: wc[0].index)}
        return {"convention": self.convention, "rows": rows}

    def load_table_payload(self, payload: dict) -> bool:
        """Adopt cached cell classes; refuses on convention mismatch."""
        if payload.get("convention") != self.convention:
            return False
        group = self.group
        idx = {".".join(map(str, group._words[i])): i for i in range(group.order)}
        try:
            cells = {}
            for ukey, row in payload["rows"].items():
                cells[idx[ukey]] = CohomologyClass(group, {
                    group.elements[idx[wkey]]: int(c) for wkey, c in row.items()
                })
        except (KeyError, ValueError) as exc:
            raise InternalInvariantError(f"malformed CSM payload: {exc}") from exc
        if len(cells) != group.order:
            raise InternalInvariantError("CSM payload does not cover the group")
        self._cells.update(cells)
        return True


class CsmTable:
    """Matrix view a(u, w) of all cell classes, plus the derived views."""

    def __init__(self, calc: CsmCalculator):
        self.calc = calc
        self.group = calc.group

    def a(self, u: WeylElement, w: WeylElement) -> int:
        return self.calc.csm_schubert_cell(u).coefficient(w)

    def abar(self, u: WeylElement, theta: WeylElement) -> int:
        """Coefficient against the Schubert-variety label w0*theta."""
        return self.a(u, self.group.w0_times(theta))

    def opposite(self, v: WeylElement, w: WeylElement) -> int:
        return self.a(self.group.w0_times(v), w)


def _try_convention(convention: str) -> bool:
    """Whether the convention satisfies the cell invariants on A2."""
    group = WeylGroup(CartanDatum.from_series("A", 2))
    calc = CsmCalculator(FlagCohomology(group), convention=convention)
    try:
        for u in group:
            calc.csm_schubert_cell(u)
    except CalibrationFailure:
        return False
    return True


def calibrated_dl_convention() -> str:
    """The operator-application convention that passes the A2 invariant
    suite; computed once per process and frozen."""
    global _CALIBRATED
    if _CALIBRATED is None:
        for convention in (CONVENTION_LTR, CONVENTION_RTL):
            if _try_convention(convention):
                _CALIBRATED = convention
                break
        else:
            raise CalibrationFailure("no operator convention passes the A2 suite")
    return _CALIBRATED

"""Exact integral Schubert calculus on the cohomology of a full flag manifold.

The basis classes eps^w are indexed by the Weyl group, with deg eps^w equal
to twice the length of w.  Multiplication is computed by torus fixed-point
localization: the subword sum gives each equivariant Schubert class its
restriction at every fixed point, and a triple product integrates to

    sum over fixed points x of  (-1)^(N + l(x)) * r_u(x) r_v(x) r_w(x) / P

where N is the number of positive roots and P the product of all positive
roots.  Evaluating the restrictions at a fixed positive integer point turns
this identity of rational functions into exact integer arithmetic; the
final division by P must be exact and is checked.  Two independent oracles
are kept alongside: the degree-2 product rule (chevalley_multiply) and the
polynomial expansion route (expand_equivariant), which re-derives structure
constants by exact division instead of evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupMismatch, InexactDivision, InternalInvariantError
from .polynomial import IntPolynomial
from .rootdata import WeylElement, WeylGroup


class CohomologyClass:
    """A finite integer combination of basis classes eps^w (sparse, graded)."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: WeylGroup, coeffs=None):
        self.group = group
        self.coeffs: dict[WeylElement, int] = {} if coeffs is None else {
            w: c for w, c in coeffs.items() if c != 0
        }

    def coefficient(self, w: WeylElement) -> int:
        return self.coeffs.get(w, 0)

    def support(self) -> list[WeylElement]:
        return sorted(self.coeffs, key=lambda w: w.index)

    def items(self):
        return self.coeffs.items()

    def degree_part(self, d: int) -> "CohomologyClass":
        """Terms of cohomological degree 2*d (i.e. index length d)."""
        return CohomologyClass(
            self.group, {w: c for w, c in self.coeffs.items() if w.length == d}
        )

    def degrees(self) -> list[int]:
        return sorted({w.length for w in self.coeffs})

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                del out[w]
        return CohomologyClass(self.group, out)

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-other)

    def __neg__(self) -> "CohomologyClass":
        return CohomologyClass(self.group, {w: -c for w, c in self.coeffs.items()})

    def __rmul__(self, n: int) -> "CohomologyClass":
        return CohomologyClass(self.group, {w: n * c for w, c in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, CohomologyClass)
            and self.group.datum == other.group.datum
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if self.group.datum != other.group.datum:
            raise GroupMismatch("classes live on different flag manifolds")

    def _sorted_terms(self):
        return sorted(self.coeffs.items(), key=lambda wc: wc[0].index)

    def epsilon_string(self) -> str:
        """Render in the eps basis, e.g. ``eps^e - eps^{s1}``."""
        return self._render(lambda w: w)

    def schubert_variety_string(self) -> str:
        """Render in the [X_w] basis; the eps^w term is [X_{w0 w}]."""
        return self._render(lambda w: self.group.w0_times(w), bracket=True)

    def _render(self, relabel, bracket: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self._sorted_terms():
            label = str(relabel(w))
            if bracket:
                body = f"[X_{{{label}}}]" if " " in label else f"[X_{label}]"
            else:
                body = f"eps^{{{label}}}" if label != "e" else "eps^e"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}{body}"
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return self.epsilon_string()


@dataclass
class EquivariantClass:
    """Restrictions of an equivariant class at all torus fixed points."""

    group: WeylGroup
    restrictions: dict[WeylElement, IntPolynomial]

    def restriction(self, w: WeylElement) -> IntPolynomial:
        return self.restrictions.get(w, IntPolynomial.zero(self.group.rank))

    def pointwise_product(self, other: "EquivariantClass") -> "EquivariantClass":
        out = {}
        for w, p in self.restrictions.items():
            q = other.restrictions.get(w)
            if q is not None and p and q:
                r = p * q
                if r:
                    out[w] = r
        return EquivariantClass(self.group, out)

    def check_gkm(self) -> bool:
        """Divisibility across every reflection edge of the moment graph.

        The edge through the fixed point w in the direction of a positive
        root beta joins w to the product (reflection in beta) * w, and the
        two restrictions must agree modulo beta.
        """
        group = self.group
        for w in group:
            pw = self.restriction(w)
            for beta in group.positive_roots:
                t = group.multiply(group.reflection(beta), w)
                if t.index < w.index:
                    continue
                diff = pw - self.restriction(t)
                if diff and not diff.divisible_by_linear(beta.coords):
                    return False
        return True


@dataclass
class StructureTable:
    """All cup structure constants of a group, keyed by basis index pairs."""

    group: WeylGroup
    entries: dict[tuple[int, int], dict[int, int]]

    def constants(self, u: WeylElement, v: WeylElement) -> dict[int, int]:
        key = (u.index, v.index) if u.index <= v.index else (v.index, u.index)
        return self.entries.get(key, {})


class FlagCohomology:
    """Localization-backed multiplication engine for one flag manifold.

    All tables are immutable once filled and may be read concurrently; the
    fill itself is single-threaded per instance.
    """

    def __init__(self, group: WeylGroup, eval_point=None):
        self.group = group
        # Any strictly positive integer point keeps every positive root
        # nonzero, which is all the localization identity needs.
        self.eval_point = tuple(eval_point) if eval_point else (1,) * group.rank
        if any(v <= 0 for v in self.eval_point):
            raise InternalInvariantError("evaluation point must be positive")
        self._rows: list[dict[int, int]] | None = None
        self._upsets: list[frozenset[int]] | None = None
        self._signs: list[int] | None = None
        self._pos_product: int | None = None
        self._struct: dict[tuple[int, int], dict[int, int]] = {}
        self._triple_cache: dict[tuple[int, int, int], int] = {}
        self._dual: list[int] | None = None
        self._billey_poly: dict[int, dict[int, IntPolynomial]] = {}
        self._table_complete = False

    # -- basic class constructors ---------------------------------------------

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self.group)

    def unit(self) -> CohomologyClass:
        return CohomologyClass(self.group, {self.group.identity: 1})

    def schubert_class(self, w: WeylElement) -> CohomologyClass:
        self._check(w)
        return CohomologyClass(self.group, {w: 1})

    def from_dict(self, coeffs) -> CohomologyClass:
        return CohomologyClass(self.group, dict(coeffs))

    def _check(self, *ws):
        for w in ws:
            if w.group.datum != self.group.datum:
                raise GroupMismatch("element from a different group")

    # -- localization data -------------------------------------------------------

    def _root_value(self, coords) -> int:
        return sum(c * v for c, v in zip(coords, self.eval_point))

    def _ensure_rows(self):
        if self._rows is not None:
            return
        group = self.group
        rows: list[dict[int, int]] = []
        for x in range(group.order):
            word = group._words[x]
            # evaluated reflection-ordering roots along the canonical word
            betas = []
            pref = 0
            for i in word:
                betas.append(self._root_value(group._actions[pref][i - 1]))
                pref = group._right[pref][i - 1]
            row = {0: 1}
            for i, bval in zip(word, betas):
                for y, val in list(row.items()):
                    z = group._right[y][i - 1]
                    if group._lengths[z] > group._lengths[y]:
                        row[z] = row.get(z, 0) + val * bval
            rows.append(row)
        self._rows = rows
        ups: list[set[int]] = [set() for _ in range(group.order)]
        for x, row in enumerate(rows):
            for w in row:
                ups[w].add(x)
        self._upsets = [frozenset(s) for s in ups]
        n_pos = group.num_positive
        self._signs = [1 if (n_pos + l) % 2 == 0 else -1 for l in group._lengths]
        prod = 1
        for coords in group._root_coords:
            prod *= self._root_value(coords)
        self._pos_product = prod
        self._dual = [group.w0_times(w).index for w in group.elements]

    def _triple_raw(self, i: int, j: int, k: int) -> int:
        """Integral of a triple product of basis classes, exact."""
        key = tuple(sorted((i, j, k)))
        cached = self._triple_cache.get(key)
        if cached is not None:
            return cached
        rows, signs = self._rows, self._signs
        total = 0
        xs = self._upsets[i] & self._upsets[j] & self._upsets[k]
        for x in xs:
            row = rows[x]
            total += signs[x] * row[i] * row[j] * row[k]
        q, r = divmod(total, self._pos_product)
        if r:
            raise InternalInvariantError("fixed-point sum failed exact division")
        self._triple_cache[key] = q
        return q

    # -- products and integrals --------------------------------------------------

    def integrate(self, a: CohomologyClass) -> int:
        """Coefficient of the top class (degree = dimension)."""
        return a.coefficient(self.group.longest)

    def triple_integral(self, u: WeylElement, v: WeylElement, w: WeylElement) -> int:
        self._check(u, v, w)
        if u.length + v.length + w.length != self.group.num_positive:
            return 0
        self._ensure_rows()
        return self._triple_raw(u.index, v.index, w.index)

    def structure_constants_idx(self, ui: int, vi: int) -> dict[int, int]:
        key = (ui, vi) if ui <= vi else (vi, ui)
        cached = self._struct.get(key)
        if cached is not None:
            return cached
        group = self.group
        target = group._lengths[ui] + group._lengths[vi]
        out: dict[int, int] = {}
        if target <= group.num_positive:
            self._ensure_rows()
            up_u, up_v = self._upsets[ui], self._upsets[vi]
            for wi in group.indices_of_length(target):
                if wi not in up_u or wi not in up_v:
                    continue
                c = self._triple_raw(ui, vi, self._dual[wi])
                if c < 0:
                    raise InternalInvariantError(
                        f"negative cup structure constant at ({ui},{vi},{wi})"
                    )
                if c:
                    out[wi] = c
        self._struct[key] = out
        return out

    def structure_constants(self, u: WeylElement, v: WeylElement) -> dict[WeylElement, int]:
        self._check(u, v)
        els = self.group.elements
        return {els[w]: c for w, c in self.structure_constants_idx(u.index, v.index).items()}

    def cup(self, a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
        a._check(b)
        self._check(*a.coeffs)
        els = self.group.elements
        out: dict[int, int] = {}
        for u, cu in a.coeffs.items():
            for v, cv in b.coeffs.items():
                prod = cu * cv
                for wi, c in self.structure_constants_idx(u.index, v.index).items():
                    out[wi] = out.get(wi, 0) + prod * c
        return CohomologyClass(self.group, {els[w]: c for w, c in out.items() if c})

    def chevalley_multiply(self, lam, v: WeylElement, basis: str = "root") -> CohomologyClass:
        """Degree-2 product rule: c1(L_lam) . eps^v, independent of localization.

        Sums over positive roots beta with l(v s_beta) = l(v) + 1, with
        coefficient the pairing of lam against the coroot of beta.
        """
        self._check(v)
        group = self.group
        out: dict[WeylElement, int] = {}
        for b_idx, beta in enumerate(group.positive_roots):
            t = group.elements[group.right_reflection_index(v.index, b_idx)]
            if t.length != v.length + 1:
                continue
            coef = group.pair(lam, beta, basis=basis)
            if coef:
                out[t] = out.get(t, 0) + coef
        return CohomologyClass(group, out)

    def degree_two_class(self, lam, basis: str = "root") -> CohomologyClass:
        """c1(L_lam) itself, i.e. the Chevalley product against the unit."""
        return self.chevalley_multiply(lam, self.group.identity, basis=basis)

    # -- polynomial (expansion) route ----------------------------------------------

    def _billey_poly_row(self, x_idx: int) -> dict[int, IntPolynomial]:
        """Restrictions of every basis class at one fixed point, as polynomials."""
        row = self._billey_poly.get(x_idx)
        if row is not None:
            return row
        group = self.group
        n = group.rank
        word = group._words[x_idx]
        betas = []
        pref = 0
        for i in word:
            betas.append(IntPolynomial.linear(group._actions[pref][i - 1]))
            pref = group._right[pref][i - 1]
        row = {0: IntPolynomial.constant(n, 1)}
        for i, bpoly in zip(word, betas):
            for y, val in list(row.items()):
                z = group._right[y][i - 1]
                if group._lengths[z] > group._lengths[y]:
                    prev = row.get(z)
                    add = val * bpoly
                    row[z] = add if prev is None else prev + add
        self._billey_poly[x_idx] = row
        return row

    def billey_restriction(self, w: WeylElement, v: WeylElement) -> IntPolynomial:
        """Restriction of the equivariant class of w at the fixed point v.

        Subword sum over the canonical reduced word of v; nonnegative
        coefficients, zero iff w is not below v.
        """
        self._check(w, v)
        row = self._billey_poly_row(v.index)
        return row.get(w.index, IntPolynomial.zero(self.group.rank))

    def equivariant_schubert_class(self, w: WeylElement) -> EquivariantClass:
        self._check(w)
        out = {}
        for x in self.group.elements:
            p = self._billey_poly_row(x.index).get(w.index)
            if p:
                out[x] = p
        return EquivariantClass(self.group, out)

    def expand_equivariant(self, f: EquivariantClass) -> dict[WeylElement, IntPolynomial]:
        """Coefficients g_w with f = sum g_w . xi^w, by induction on length.

        At each step the minimal-length support element v contributes
        g_v = f(v) / (product of v's reflection-ordering roots); the
        division must be exact, otherwise the input violates the GKM
        condition and InexactDivision is raised.
        """
        group = self.group
        rem: dict[int, IntPolynomial] = {
            w.index: p for w, p in f.restrictions.items() if p
        }
        out: dict[WeylElement, IntPolynomial] = {}
        steps = 0
        while rem:
            steps += 1
            if steps > group.order:
                raise InexactDivision("expansion did not terminate on the group")
            v_idx = min(rem, key=lambda i: (group._lengths[i], group._words[i]))
            g = rem[v_idx]
            word = group._words[v_idx]
            pref = 0
            for i in word:
                g = g.divide_exact_linear(group._actions[pref][i - 1])
                pref = group._right[pref][i - 1]
            out[group.elements[v_idx]] = g
            for x_idx in list(rem):
                s = self._billey_poly_row(x_idx).get(v_idx)
                if s is None:
                    continue
                new = rem[x_idx] - g * s
                if new:
                    rem[x_idx] = new
                else:
                    del rem[x_idx]
        return out

    def structure_constants_via_expansion(self, u: WeylElement, v: WeylElement) -> dict[WeylElement, int]:
        """Oracle route: expand the pointwise product, then set all roots to 0."""
        self._check(u, v)
        f = self.equivariant_schubert_class(u).pointwise_product(
            self.equivariant_schubert_class(v)
        )
        target = u.length + v.length
        out = {}
        for w, g in self.expand_equivariant(f).items():
            c = g.constant_term()
            if c == 0:
                continue
            if w.length != target:
                raise InternalInvariantError(
                    "expansion has a constant term away from the product degree"
                )
            out[w] = c
        return out

    # -- full table ------------------------------------------------------------------

    def build_structure_table(self) -> StructureTable:
        """Materialize every structure constant, with self-checks.

        Verifies the unit row and that localization agrees with the
        degree-2 product rule on every pair (simple index, element).
        """
        group = self.group
        if not self._table_complete:
            order = group.order
            for ui in range(order):
                lu = group._lengths[ui]
                for vi in range(ui, order):
                    if lu + group._lengths[vi] > group.num_positive:
                        continue
                    self.structure_constants_idx(ui, vi)
            for v in group.elements:
                unit_row = self.structure_constants_idx(0, v.index)
                if unit_row != {v.index: 1}:
                    raise InternalInvariantError("unit row of the cup table is wrong")
            for i in range(1, group.rank + 1):
                omega = tuple(1 if k == i - 1 else 0 for k in range(group.rank))
                si = group.simple_reflection(i)
                for v in group.elements:
                    got = self.cup(self.schubert_class(si), self.schubert_class(v))
                    want = self.chevalley_multiply(omega, v, basis="weight")
                    if got != want:
                        raise InternalInvariantError(
                            f"degree-2 products disagree at (s{i}, {v})"
                        )
            self._table_complete = True
        entries = {k: dict(v) for k, v in self._struct.items() if v}
        return StructureTable(self.group, entries)

    # -- cache integration ----------------------------------------------------------

    def structure_payload(self) -> dict:
        """JSON-safe dump of the (complete) structure table."""
        self.build_structure_table()
        words = self.group._words
        key = lambda i: ".".join(map(str, words[i]))
        entries = {}
        for (ui, vi), row in sorted(self._struct.items()):
            if not row:
                continue
            entries[f"{key(ui)}|{key(vi)}"] = {
                key(wi): c for wi, c in sorted(row.items())
            }
        return {"entries": entries}

    def load_structure_payload(self, payload: dict) -> None:
        group = self.group
        idx = {".".join(map(str, group._words[i])): i for i in range(group.order)}
        try:
            for pair_key, row in payload["entries"].items():
                ukey, vkey = pair_key.split("|")
                ui, vi = idx[ukey], idx[vkey]
                self._struct[(ui, vi)] = {idx[wkey]: int(c) for wkey, c in row.items()}
        except (KeyError, ValueError) as exc:
            raise InternalInvariantError(f"malformed structure payload: {exc}") from exc
        # pairs with an empty product are not stored; restore them
        for ui in range(group.order):
            lu = group._lengths[ui]
            for vi in range(ui, group.order):
                key = (ui, vi)
                if key not in self._struct:
                    if lu + group._lengths[vi] <= group.num_positive:
                        self._struct[key] = self._struct.get(key, {})
                    else:
                        self._struct[key] = {}
        self._table_complete = True

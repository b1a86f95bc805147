"""Finite root systems and Weyl groups built from Cartan data.

Everything here is exact integer arithmetic.  Roots are integer vectors in
the simple-root basis, group elements are identified by their action on the
simple roots, and the canonical reduced word of an element is the
lexicographically smallest one (obtained by repeatedly splitting off the
smallest left descent).  Bruhat order uses the descent recursion; a
brute-force subword oracle is kept alongside for validation.

Conventions (fixed once, covariant throughout):

* ``matrix[i][j]`` of a Cartan datum is the pairing of the j-th simple root
  against the i-th simple coroot, so ``s_i(a_j) = a_j - matrix[i][j] * a_i``.
* Bourbaki numbering per series; in G2 the first simple root is the short
  one, which makes the highest root ``3a1 + 2a2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CapacityExceeded,
    GroupMismatch,
    InvalidCartan,
    NotARoot,
    NotFiniteType,
)

SERIES = ("A", "B", "C", "D", "E", "F", "G")

DEFAULT_MAX_ORDER = 10_000

# Minimum rank per series for an irreducible (simple) diagram.  Smaller
# ranks either do not exist or duplicate an earlier series.
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}


def invariant_degrees(series: str, rank: int) -> tuple[int, ...]:
    """Degrees of the fundamental invariants of the Weyl group.

    They determine the group order (their product), the number of positive
    roots (sum of degree-1 terms), and the Poincare polynomial
    factorization used by the enumeration self-checks.
    """
    if series == "A":
        return tuple(range(2, rank + 2))
    if series in ("B", "C"):
        return tuple(2 * i for i in range(1, rank + 1))
    if series == "D":
        return tuple(2 * i for i in range(1, rank)) + (rank,)
    if series == "E":
        return {
            6: (2, 5, 6, 8, 9, 12),
            7: (2, 6, 8, 10, 12, 14, 18),
            8: (2, 8, 12, 14, 18, 20, 24, 30),
        }[rank]
    if series == "F":
        return (2, 6, 8, 12)
    if series == "G":
        return (2, 6)
    raise InvalidCartan(f"unknown series {series!r}")


def weyl_order(series: str, rank: int) -> int:
    order = 1
    for d in invariant_degrees(series, rank):
        order *= d
    return order


def num_positive_roots(series: str, rank: int) -> int:
    return sum(d - 1 for d in invariant_degrees(series, rank))


def canonical_cartan_matrix(series: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """The canonical Cartan matrix for (series, rank), Bourbaki numbering."""
    if series not in SERIES:
        raise InvalidCartan(f"series must be one of {SERIES}, got {series!r}")
    if rank < _MIN_RANK.get(series, 1) or rank > _MAX_RANK.get(series, 10**9):
        raise InvalidCartan(f"rank {rank} is not valid for series {series}")

    n = rank
    mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, mij=-1, mji=-1):
        mat[i][j] = mij
        mat[j][i] = mji

    if series in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if series == "B" and n >= 2:
            # last simple root short
            bond(n - 2, n - 1, -1, -2)
        if series == "C" and n >= 2:
            # last simple root long
            bond(n - 2, n - 1, -2, -1)
    elif series == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif series == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif series == "G":
        # first simple root short: highest root 3a1 + 2a2
        bond(0, 1, -3, -1)
    return tuple(tuple(row) for row in mat)


def _symmetrizer(matrix) -> tuple[Fraction, ...]:
    """Positive diagonal d with d_i * m_ij = d_j * m_ji, via graph traversal.

    Raises InvalidCartan if the zero pattern is asymmetric or the diagram is
    disconnected (the engine only covers simple groups).
    """
    n = len(matrix)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if i == j:
                continue
            mij, mji = matrix[i][j], matrix[j][i]
            if (mij == 0) != (mji == 0):
                raise InvalidCartan("asymmetric zero pattern")
            if mij == 0:
                continue
            dj = d[i] * Fraction(mij, mji)
            if d[j] is None:
                d[j] = dj
                stack.append(j)
            elif d[j] != dj:
                raise InvalidCartan("matrix is not symmetrizable")
    if any(x is None for x in d):
        raise InvalidCartan("Dynkin diagram is disconnected (group not simple)")
    return tuple(d)


def _is_positive_definite(sym) -> bool:
    """Leading-principal-minor test with exact Fraction elimination."""
    n = len(sym)
    m = [[Fraction(x) for x in row] for row in sym]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= f * m[k][j]
    return True


@dataclass(frozen=True)
class CartanDatum:
    """A validated finite-type Cartan matrix with its series label.

    ``matrix[i][j]`` pairs the j-th simple root with the i-th simple coroot.
    """

    series: str
    rank: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        canon = canonical_cartan_matrix(self.series, self.rank)
        if len(self.matrix) != self.rank or any(len(r) != self.rank for r in self.matrix):
            raise InvalidCartan("matrix shape does not match rank")
        for i in range(self.rank):
            if self.matrix[i][i] != 2:
                raise InvalidCartan("diagonal entries must be 2")
            for j in range(self.rank):
                if i != j and self.matrix[i][j] > 0:
                    raise InvalidCartan("off-diagonal entries must be <= 0")
        d = _symmetrizer(self.matrix)
        sym = [[d[i] * self.matrix[i][j] for j in range(self.rank)] for i in range(self.rank)]
        for i in range(self.rank):
            for j in range(self.rank):
                if sym[i][j] != sym[j][i]:
                    raise InvalidCartan("symmetrized matrix is not symmetric")
        if not _is_positive_definite(sym):
            raise InvalidCartan("symmetrization is not positive definite (not finite type)")
        if self.matrix != canon:
            raise InvalidCartan(
                f"matrix does not match the canonical Cartan matrix for {self.series}{self.rank}"
            )

    @classmethod
    def from_series(cls, series: str, rank: int) -> "CartanDatum":
        series = series.upper()
        return cls(series, rank, canonical_cartan_matrix(series, rank))

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclass(frozen=True)
class RootVector:
    """An integer vector in the simple-root basis."""

    coords: tuple[int, ...]

    @property
    def is_positive(self) -> bool:
        return any(c > 0 for c in self.coords) and all(c >= 0 for c in self.coords)

    @property
    def is_negative(self) -> bool:
        return (-self).is_positive

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-c for c in self.coords))

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def height(self) -> int:
        return sum(self.coords)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            term = f"a{i + 1}" if abs(c) == 1 else f"{abs(c)}a{i + 1}"
            parts.append(("+" if c > 0 else "-") + term)
        if not parts:
            return "0"
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out


class WeylElement:
    """A Weyl group element in canonical form.

    Identity of an element is its action on the simple roots; the stored
    ``word`` is the lex-smallest reduced word and ``length`` the Bruhat
    length.  Instances are created by the owning :class:`WeylGroup` only and
    are shared, so equality and hashing are cheap.
    """

    __slots__ = ("group", "index", "word", "length", "_hash")

    def __init__(self, group: "WeylGroup", index: int, word: tuple[int, ...], length: int):
        self.group = group
        self.index = index
        self.word = word
        self.length = length
        self._hash = hash((group.datum.series, group.datum.rank, index))

    @property
    def action(self) -> tuple[RootVector, ...]:
        """Images of the simple roots (the defining canonical form)."""
        return tuple(RootVector(col) for col in self.group._actions[self.index])

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.multiply(self, other)

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    def bruhat_leq(self, other: "WeylElement") -> bool:
        return self.group.bruhat_leq(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.index == other.index
            and self.group.datum == other.group.datum
        )

    def __hash__(self):
        return self._hash

    def __str__(self):
        if not self.word:
            return "e"
        return " ".join(f"s{i}" for i in self.word)

    def __repr__(self):
        return f"<{self} in W({self.group.datum})>"


class WeylGroup:
    """A fully enumerated finite Weyl group with its root system.

    Construction is single-threaded; afterwards the object is immutable and
    all operations are pure, so concurrent reads are safe.  Elements are
    indexed in canonical order: increasing length, ties broken by the lex
    order of canonical words.  Index 0 is the identity and the last index is
    the longest element.
    """

    def __init__(self, datum: CartanDatum, max_order: int = DEFAULT_MAX_ORDER):
        self.datum = datum
        self.rank = datum.rank
        expected_order = weyl_order(datum.series, datum.rank)
        if expected_order > max_order:
            raise CapacityExceeded(
                f"|W({datum})| = {expected_order} exceeds the cap {max_order}"
            )
        self.order = expected_order
        self.num_positive = num_positive_roots(datum.series, datum.rank)

        self._build_roots()
        self._enumerate()
        self._build_words_and_sort()
        self._index_roots_and_reflections()

        self.elements: tuple[WeylElement, ...] = tuple(
            WeylElement(self, k, self._words[k], self._lengths[k])
            for k in range(self.order)
        )
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        if self.longest.length != self.num_positive:
            raise NotFiniteType("longest element length != number of positive roots")

        self._bruhat_cache: dict[tuple[int, int], bool] = {}
        self._refl_right: list[list[int]] | None = None
        self._w0_times: list[int] | None = None

    # -- root system -------------------------------------------------------

    def _build_roots(self):
        n = self.rank
        C = self.datum.matrix
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        roots: dict[tuple[int, ...], tuple[int, ...]] = {
            simple[i]: simple[i] for i in range(n)
        }
        work = list(simple)
        while work:
            beta = work.pop()
            cor = roots[beta]
            for i in range(n):
                # s_i(beta) = beta - <beta, a_i^v> a_i
                pairing = sum(beta[j] * C[i][j] for j in range(n))
                new = tuple(beta[k] - (pairing if k == i else 0) for k in range(n))
                if not (any(c > 0 for c in new) and all(c >= 0 for c in new)):
                    continue
                if new in roots:
                    continue
                cpair = sum(cor[j] * C[j][i] for j in range(n))
                newcor = tuple(cor[k] - (cpair if k == i else 0) for k in range(n))
                roots[new] = newcor
                work.append(new)
                if len(roots) > self.num_positive:
                    raise NotFiniteType(
                        f"root closure exceeded {self.num_positive} positive roots"
                    )
        if len(roots) != self.num_positive:
            raise NotFiniteType(
                f"root closure produced {len(roots)} roots, expected {self.num_positive}"
            )
        ordered = sorted(roots, key=lambda r: (sum(r), r))
        self.positive_roots: tuple[RootVector, ...] = tuple(RootVector(r) for r in ordered)
        self._root_coords: tuple[tuple[int, ...], ...] = tuple(ordered)
        self._coroot_coords: tuple[tuple[int, ...], ...] = tuple(roots[r] for r in ordered)
        self._root_index = {r: i for i, r in enumerate(ordered)}

    def simple_root(self, i: int) -> RootVector:
        """The i-th simple root, 1-indexed."""
        return RootVector(tuple(1 if k == i - 1 else 0 for k in range(self.rank)))

    def coroot_coords(self, beta: RootVector) -> tuple[int, ...]:
        """Coordinates of beta's coroot in the simple-coroot basis."""
        if beta.coords in self._root_index:
            return self._coroot_coords[self._root_index[beta.coords]]
        neg = tuple(-c for c in beta.coords)
        if neg in self._root_index:
            return tuple(-c for c in self._coroot_coords[self._root_index[neg]])
        raise NotARoot(f"{beta} is not a root of {self.datum}")

    def pair(self, lam, beta: RootVector, basis: str = "root") -> int:
        """Pairing of a weight against the coroot of ``beta``.

        ``lam`` is a coordinate vector either in the simple-root basis
        (``basis="root"``) or in the fundamental-weight basis
        (``basis="weight"``).
        """
        lam = tuple(lam.coords) if isinstance(lam, RootVector) else tuple(lam)
        if len(lam) != self.rank:
            raise NotARoot("weight vector has wrong length")
        cor = self.coroot_coords(beta)
        C = self.datum.matrix
        if basis == "root":
            return sum(cor[j] * sum(lam[i] * C[j][i] for i in range(self.rank))
                       for j in range(self.rank))
        if basis == "weight":
            return sum(cor[j] * lam[j] for j in range(self.rank))
        raise ValueError(f"basis must be 'root' or 'weight', got {basis!r}")

    # -- enumeration -------------------------------------------------------

    def _right_mult_action(self, cols, i):
        ci = cols[i]
        C = self.datum.matrix
        return tuple(
            tuple(cols[j][k] - C[i][j] * ci[k] for k in range(self.rank))
            for j in range(self.rank)
        )

    def _left_mult_action(self, cols, i):
        C = self.datum.matrix
        out = []
        for col in cols:
            p = sum(col[k] * C[i][k] for k in range(self.rank))
            out.append(tuple(col[k] - p if k == i else col[k] for k in range(self.rank)))
        return tuple(out)

    def _enumerate(self):
        n = self.rank
        ident = tuple(tuple(1 if k == j else 0 for k in range(n)) for j in range(n))
        actions = [ident]
        index = {ident: 0}
        lengths = [0]
        right = [[-1] * n]
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                cols = actions[idx]
                for i in range(n):
                    if all(c >= 0 for c in cols[i]):  # length goes up
                        t = self._right_mult_action(cols, i)
                        j = index.get(t)
                        if j is None:
                            j = len(actions)
                            actions.append(t)
                            index[t] = j
                            lengths.append(lengths[idx] + 1)
                            right.append([-1] * n)
                            nxt.append(j)
                            if len(actions) > self.order:
                                raise NotFiniteType("enumeration exceeded the group order")
                        right[idx][i] = j
                        right[j][i] = idx
            frontier = nxt
        if len(actions) != self.order:
            raise NotFiniteType(
                f"enumerated {len(actions)} elements, expected {self.order}"
            )
        self._actions = actions
        self._action_index = index
        self._lengths = lengths
        self._right = right

    def _build_words_and_sort(self):
        n = self.rank
        # left table via composition
        left = [[-1] * n for _ in range(self.order)]
        for idx, cols in enumerate(self._actions):
            for i in range(n):
                left[idx][i] = self._action_index[self._left_mult_action(cols, i)]

        words = [()] * self.order
        for idx in range(self.order):
            w = []
            cur = idx
            while self._lengths[cur]:
                for i in range(n):
                    j = left[cur][i]
                    if self._lengths[j] < self._lengths[cur]:
                        w.append(i + 1)
                        cur = j
                        break
            words[idx] = tuple(w)

        perm = sorted(range(self.order), key=lambda k: (self._lengths[k], words[k]))
        rank_of = [0] * self.order
        for new, old in enumerate(perm):
            rank_of[old] = new
        self._actions = [self._actions[old] for old in perm]
        self._lengths = [self._lengths[old] for old in perm]
        self._words = [words[old] for old in perm]
        self._right = [[rank_of[x] for x in self._right[old]] for old in perm]
        self._left = [[rank_of[x] for x in left[old]] for old in perm]
        self._action_index = {a: i for i, a in enumerate(self._actions)}
        self._by_length: dict[int, list[int]] = {}
        for i, l in enumerate(self._lengths):
            self._by_length.setdefault(l, []).append(i)

    def _index_roots_and_reflections(self):
        C = self.datum.matrix
        n = self.rank
        refl = []
        for b, cor in zip(self._root_coords, self._coroot_coords):
            cols = []
            for j in range(n):
                p = sum(cor[k] * C[k][j] for k in range(n))
                cols.append(tuple((1 if k == j else 0) - p * b[k] for k in range(n)))
            refl.append(self._action_index[tuple(cols)])
        self._reflection_index = refl

    # -- group operations ----------------------------------------------------

    def _check_same(self, *xs: WeylElement):
        for x in xs:
            if x.group.datum != self.datum:
                raise GroupMismatch(
                    f"element of W({x.group.datum}) used with W({self.datum})"
                )

    def element(self, index: int) -> WeylElement:
        return self.elements[index]

    def simple_reflection(self, i: int) -> WeylElement:
        if not 1 <= i <= self.rank:
            raise GroupMismatch(f"simple index {i} out of range 1..{self.rank}")
        return self.elements[self._right[0][i - 1]]

    def from_word(self, word) -> WeylElement:
        """Product of simple reflections (1-indexed); not required reduced."""
        idx = 0
        for i in word:
            if not 1 <= i <= self.rank:
                raise GroupMismatch(f"simple index {i} out of range 1..{self.rank}")
            idx = self._right[idx][i - 1]
        return self.elements[idx]

    def parse(self, text: str) -> WeylElement:
        """Parse ``"e"`` or a word like ``"s1 s2 s1"`` (also ``s1*s2``)."""
        text = text.strip()
        if text in ("e", "1", ""):
            return self.identity
        word = []
        for tok in text.replace("*", " ").replace(",", " ").split():
            if not tok.startswith("s") or not tok[1:].isdigit():
                raise GroupMismatch(f"cannot parse {tok!r} as a simple reflection")
            word.append(int(tok[1:]))
        return self.from_word(word)

    def multiply(self, x: WeylElement, y: WeylElement) -> WeylElement:
        self._check_same(x, y)
        idx = x.index
        for i in y.word:
            idx = self._right[idx][i - 1]
        return self.elements[idx]

    def inverse(self, x: WeylElement) -> WeylElement:
        self._check_same(x)
        idx = 0
        for i in reversed(x.word):
            idx = self._right[idx][i - 1]
        return self.elements[idx]

    def length(self, x: WeylElement) -> int:
        return x.length

    def indices_of_length(self, l: int) -> list[int]:
        return self._by_length.get(l, [])

    def elements_of_length(self, l: int) -> list[WeylElement]:
        return [self.elements[i] for i in self.indices_of_length(l)]

    def apply(self, x: WeylElement, v: RootVector) -> RootVector:
        """Image of a root-basis vector under the element's action."""
        self._check_same(x)
        cols = self._actions[x.index]
        return RootVector(tuple(
            sum(v.coords[j] * cols[j][k] for j in range(self.rank))
            for k in range(self.rank)
        ))

    def inversions(self, x: WeylElement) -> tuple[RootVector, ...]:
        """Positive roots sent negative by ``x``; size equals the length."""
        self._check_same(x)
        out = []
        for beta in self.positive_roots:
            if self.apply(x, beta).is_negative:
                out.append(beta)
        return tuple(out)

    def left_inversions(self, x: WeylElement) -> tuple[RootVector, ...]:
        """Inversions of the inverse; their product is the top localization."""
        return self.inversions(self.inverse(x))

    def reflection(self, beta: RootVector) -> WeylElement:
        """The reflection in a root as a group element."""
        if beta.coords in self._root_index:
            return self.elements[self._reflection_index[self._root_index[beta.coords]]]
        neg = tuple(-c for c in beta.coords)
        if neg in self._root_index:
            return self.elements[self._reflection_index[self._root_index[neg]]]
        raise NotARoot(f"{beta} is not a root of {self.datum}")

    def right_reflection_index(self, idx: int, root_idx: int) -> int:
        """Index of (element idx) * s_beta for the root with index root_idx."""
        if self._refl_right is None:
            table = []
            words = [self._words[self._reflection_index[b]]
                     for b in range(len(self._root_coords))]
            for v in range(self.order):
                row = []
                for rw in words:
                    cur = v
                    for i in rw:
                        cur = self._right[cur][i - 1]
                    row.append(cur)
                table.append(row)
            self._refl_right = table
        return self._refl_right[idx][root_idx]

    def w0_times(self, x: WeylElement) -> WeylElement:
        """Left multiplication by the longest element (cached)."""
        self._check_same(x)
        if self._w0_times is None:
            table = []
            for idx in range(self.order):
                cur = self.longest.index
                for i in self._words[idx]:
                    cur = self._right[cur][i - 1]
                table.append(cur)
            self._w0_times = table
        return self.elements[self._w0_times[x.index]]

    def descents_left(self, x: WeylElement) -> list[int]:
        return [i + 1 for i in range(self.rank)
                if self._lengths[self._left[x.index][i]] < x.length]

    def descents_right(self, x: WeylElement) -> list[int]:
        return [i + 1 for i in range(self.rank)
                if self._lengths[self._right[x.index][i]] < x.length]

    # -- Bruhat order --------------------------------------------------------

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Bruhat order by the descent recursion.

        If i is a left descent of w, then v <= w iff min(v, s_i v) <= s_i w;
        the base case is v = e.
        """
        self._check_same(v, w)
        return self._bruhat_leq_idx(v.index, w.index)

    def _bruhat_leq_idx(self, vi: int, wi: int) -> bool:
        if vi == 0:
            return True
        if self._lengths[vi] > self._lengths[wi]:
            return False
        key = (vi, wi)
        cached = self._bruhat_cache.get(key)
        if cached is not None:
            return cached
        i = next(k for k in range(self.rank)
                 if self._lengths[self._left[wi][k]] < self._lengths[wi])
        wn = self._left[wi][i]
        vn = self._left[vi][i]
        if self._lengths[vn] > self._lengths[vi]:
            vn = vi
        out = self._bruhat_leq_idx(vn, wn)
        self._bruhat_cache[key] = out
        return out

    def bruhat_leq_subword(self, v: WeylElement, w: WeylElement) -> bool:
        """Brute-force oracle: v is a product of a subword of w's word."""
        self._check_same(v, w)
        reachable = {0}
        for i in w.word:
            reachable |= {self._right[x][i - 1] for x in reachable}
        return v.index in reachable

    def poincare_polynomial(self) -> list[int]:
        """Coefficient list of sum(t^length) over the group."""
        out = [0] * (self.num_positive + 1)
        for l in self._lengths:
            out[l] += 1
        return out

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"WeylGroup({self.datum}, order={self.order})"


# -- module-level spec surface ------------------------------------------------

def enumerate_weyl(datum: CartanDatum, max_order: int = DEFAULT_MAX_ORDER) -> WeylGroup:
    """Enumerate the full Weyl group of a Cartan datum."""
    return WeylGroup(datum, max_order=max_order)


def build_root_system(datum: CartanDatum, max_order: int = DEFAULT_MAX_ORDER):
    """Positive roots plus the reflection table (as Weyl group elements)."""
    group = WeylGroup(datum, max_order=max_order)
    reflections = {beta: group.reflection(beta) for beta in group.positive_roots}
    return group.positive_roots, reflections


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    return x.group.multiply(x, y)


def inverse(x: WeylElement) -> WeylElement:
    return x.group.inverse(x)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    return v.group.bruhat_leq(v, w)

"""Structure-constant Lie algebras over exact rationals.

An algebra is given by sparse constants c^k_{ij} for i < j; the (j, i) side
is derived, so antisymmetry cannot be broken by construction.  Subspaces are
canonicalized to reduced row echelon form the moment they are built, and all
equality is syntactic equality of canonical forms.  Every object is an
immutable value after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .errors import DimensionMismatch, JacobiViolation, NotClosed, NotIdeal
from .linalg import Mat, Vec

# Above this dimension the O(dim^4) construction-time Jacobi sweep must be
# requested explicitly.
JACOBI_CHECK_LIMIT = 32


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q in a fixed basis."""

    def __init__(
        self,
        dim: int,
        structure_constants: Mapping[tuple[int, int], Mapping[int, object]],
        basis_labels: Sequence[str] | None = None,
        check_jacobi: bool | None = None,
        name: str | None = None,
    ):
        if dim < 0:
            raise DimensionMismatch("dimension must be non-negative")
        self.dim = dim
        self.name = name  # display metadata; not part of equality
        if basis_labels is None:
            basis_labels = tuple(f"e{i}" for i in range(dim))
        else:
            basis_labels = tuple(basis_labels)
            if len(basis_labels) != dim:
                raise DimensionMismatch("basis label count does not match dimension")
        self.basis_labels = basis_labels

        table = [[linalg.zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
        canonical: dict[tuple[int, int], tuple[tuple[int, Fraction], ...]] = {}
        for (i, j), entry in structure_constants.items():
            if not (0 <= i < j < dim):
                raise DimensionMismatch(f"structure constant key ({i},{j}) needs 0 <= i < j < dim={dim}")
            row = [Fraction(0)] * dim
            for k, c in entry.items():
                if not (0 <= int(k) < dim):
                    raise DimensionMismatch(f"structure constant target index {k} out of range")
                row[int(k)] = Fraction(c)
            v = tuple(row)
            if linalg.is_zero_vec(v):
                continue
            table[i][j] = v
            table[j][i] = linalg.vec_scale(Fraction(-1), v)
            canonical[(i, j)] = tuple((k, c) for k, c in enumerate(v) if c != 0)
        self._table: tuple[tuple[Vec, ...], ...] = tuple(tuple(r) for r in table)
        self._canonical = tuple(sorted(canonical.items()))

        if check_jacobi is None:
            check_jacobi = dim <= JACOBI_CHECK_LIMIT
        if check_jacobi:
            self._check_jacobi()

    def _check_jacobi(self) -> None:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    term = self._bracket_vec_basis(self._table[i][j], k)
                    term = linalg.vec_add(term, self._bracket_vec_basis(self._table[j][k], i))
                    term = linalg.vec_add(term, self._bracket_vec_basis(self._table[k][i], j))
                    if not linalg.is_zero_vec(term):
                        raise JacobiViolation((i, j, k), term)

    def _bracket_vec_basis(self, x: Vec, k: int) -> Vec:
        out = linalg.zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi != 0:
                out = linalg.vec_add(out, linalg.vec_scale(xi, self._table[i][k]))
        return out

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self._table[i][j]

    def bracket_basis_vec(self, i: int, y: Sequence) -> Vec:
        """[e_i, y] through the precomputed table; O(dim) vector adds."""
        out = linalg.zero_vec(self.dim)
        for j, yj in enumerate(y):
            if yj != 0:
                out = linalg.vec_add(out, linalg.vec_scale(yj, self._table[i][j]))
        return out

    def bracket(self, x: Sequence, y: Sequence) -> Vec:
        """[x, y] by bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"bracket arguments must have length {self.dim}")
        out = linalg.zero_vec(self.dim)
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self._table[i]
            for j, yj in enumerate(y):
                if yj != 0 and i != j:
                    out = linalg.vec_add(out, linalg.vec_scale(xi * yj, row[j]))
        return out

    def ad(self, x: Sequence) -> Mat:
        """Matrix of ad(x): y -> [x, y] acting on coordinate vectors."""
        if len(x) != self.dim:
            raise DimensionMismatch(f"ad argument must have length {self.dim}")
        cols = [self._bracket_vec_basis(linalg.vec(x), k) for k in range(self.dim)]
        return linalg.transpose(tuple(cols)) if cols else ()

    def whole(self) -> "Subalgebra":
        cached = getattr(self, "_whole", None)
        if cached is None:
            cached = Subalgebra._trusted(self, linalg.identity(self.dim))
            self._whole = cached
        return cached

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, ())

    def zero_subalgebra(self) -> "Subalgebra":
        return Subalgebra(self, ())

    def label_vector(self, v: Sequence) -> str:
        """Render a coordinate vector as a combination of basis labels."""
        parts = []
        for c, name in zip(v, self.basis_labels):
            c = Fraction(c)
            if c == 0:
                continue
            if c == 1:
                parts.append(f"+ {name}")
            elif c == -1:
                parts.append(f"- {name}")
            elif c < 0:
                parts.append(f"- {-c}*{name}")
            else:
                parts.append(f"+ {c}*{name}")
        if not parts:
            return "0"
        first = parts[0]
        first = first[2:] if first.startswith("+ ") else "-" + first[2:]
        return " ".join([first] + parts[1:])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.basis_labels == other.basis_labels
            and self._canonical == other._canonical
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.basis_labels, self._canonical))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={list(self.basis_labels)})"


class Subspace:
    """A linear subspace in canonical (reduced echelon) form."""

    def __init__(self, ambient: LieAlgebra, rows: Iterable[Sequence]):
        self.ambient = ambient
        rows = [linalg.vec(r) for r in rows]
        for r in rows:
            if len(r) != ambient.dim:
                raise DimensionMismatch(f"subspace row of length {len(r)} in ambient of dim {ambient.dim}")
        self.matrix: Mat = linalg.rref(rows)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient.dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return linalg.in_row_space(linalg.vec(v), self.matrix)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.matrix)

    def residual(self, v: Sequence) -> Vec:
        return linalg.residual(linalg.vec(v), self.matrix)

    def coordinates(self, v: Sequence) -> Vec | None:
        return linalg.row_coordinates(linalg.vec(v), self.matrix)

    def sum(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        return Subspace(self.ambient, self.matrix + other.matrix)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._require_same_ambient(other)
        n = self.ambient.dim
        conditions = []
        for sub in (self, other):
            # x is in sub iff reducing x against sub's rows leaves zero;
            # the reduction is linear in x, one functional row per coordinate
            cols = [sub.residual(linalg.unit_vec(n, i)) for i in range(n)]
            conditions.extend(linalg.transpose(tuple(cols)))
        return Subspace(self.ambient, linalg.kernel(conditions, width=n))

    def _require_same_ambient(self, other: "Subspace") -> None:
        if self.ambient.dim != other.ambient.dim:
            raise DimensionMismatch("subspaces live in different ambient dimensions")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.matrix == other.matrix
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.matrix))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim} of {self.ambient.dim})"


class Subalgebra(Subspace):
    """A subspace closed under the bracket."""

    def __init__(self, ambient: LieAlgebra, rows: Iterable[Sequence]):
        super().__init__(ambient, rows)
        # antisymmetry handles the diagonal and the transposed pairs
        for i, a in enumerate(self.matrix):
            for b in self.matrix[i + 1 :]:
                w = ambient.bracket(a, b)
                if not self.contains(w):
                    raise NotClosed(f"bracket of basis rows leaves the span: [{a}, {b}] = {w}")

    @classmethod
    def _trusted(cls, ambient: LieAlgebra, rows: Iterable[Sequence]):
        """Skip the closure sweep for spans that are closed by construction."""
        obj = cls.__new__(cls)
        Subspace.__init__(obj, ambient, rows)
        return obj


class Ideal(Subalgebra):
    """A subalgebra stable under bracketing with the whole algebra."""

    def __init__(self, ambient: LieAlgebra, rows: Iterable[Sequence]):
        Subspace.__init__(self, ambient, rows)
        for i in range(ambient.dim):
            for a in self.matrix:
                w = ambient.bracket_basis_vec(i, a)
                if not self.contains(w):
                    raise NotIdeal(
                        f"[{ambient.basis_labels[i]}, row] leaves the span: "
                        f"row {a}, bracket {w}"
                    )


def subalgebra_closure(ambient: LieAlgebra, vectors: Iterable[Sequence]) -> Subalgebra:
    """Smallest bracket-closed subspace containing the vectors."""
    current = Subspace(ambient, vectors)
    while True:
        brackets = [
            ambient.bracket(a, b)
            for ai, a in enumerate(current.matrix)
            for b in current.matrix[ai + 1 :]
        ]
        bigger = Subspace(ambient, current.matrix + tuple(brackets))
        if bigger.matrix == current.matrix:
            return Subalgebra(ambient, current.matrix)
        current = bigger


def bracket_span(a: Subspace, b: Subspace) -> Subspace:
    """Span of [a_i, b_j] over basis rows; the subspace [A, B]."""
    a._require_same_ambient(b)
    g = a.ambient
    rows = [g.bracket(x, y) for x in a.matrix for y in b.matrix]
    return Subspace(g, rows)


def normalizer(sub: Subspace) -> Subspace:
    """{x : [x, L] is contained in L}, by exact linear solving."""
    g = sub.ambient
    n = g.dim
    conditions = []
    for row in sub.matrix:
        cols = [sub.residual(g.bracket_basis_vec(i, row)) for i in range(n)]
        conditions.extend(linalg.transpose(tuple(cols)))
    return Subspace(g, linalg.kernel(conditions, width=n))


def centralizer(sub: Subspace) -> Subspace:
    """{x : [x, s] = 0 for every s in S}; centralizer(whole) is the center."""
    g = sub.ambient
    n = g.dim
    conditions = []
    for row in sub.matrix:
        cols = [g.bracket_basis_vec(i, row) for i in range(n)]
        conditions.extend(linalg.transpose(tuple(cols)))
    return Subspace(g, linalg.kernel(conditions, width=n))


def lower_central_series(sub: Subspace) -> list[Subspace]:
    """A = A^1 >= A^2 = [A, A^1] >= ... until stabilization."""
    series = [Subspace(sub.ambient, sub.matrix)]
    while True:
        nxt = bracket_span(sub, series[-1])
        if nxt.matrix == series[-1].matrix:
            return series
        series.append(nxt)


def derived_series(sub: Subspace) -> list[Subspace]:
    series = [Subspace(sub.ambient, sub.matrix)]
    while True:
        nxt = bracket_span(series[-1], series[-1])
        if nxt.matrix == series[-1].matrix:
            return series
        series.append(nxt)


def is_nilpotent(sub: Subspace) -> bool:
    return lower_central_series(sub)[-1].dim == 0


def is_solvable(sub: Subspace) -> bool:
    return derived_series(sub)[-1].dim == 0


def killing_form(g: LieAlgebra) -> Mat:
    """k(e_i, e_j) = trace(ad e_i o ad e_j); symmetric and invariant."""
    ads = [g.ad(linalg.unit_vec(g.dim, i)) for i in range(g.dim)]
    return tuple(
        tuple(linalg.trace(linalg.mat_mul(ads[i], ads[j])) for j in range(g.dim))
        for i in range(g.dim)
    )


def killing_value(form: Mat, x: Sequence, y: Sequence) -> Fraction:
    return sum(
        (Fraction(xi) * sum((fij * Fraction(yj) for fij, yj in zip(row, y)), Fraction(0))
         for xi, row in zip(x, form)),
        Fraction(0),
    )


def is_ideal(sub: Subspace) -> bool:
    g = sub.ambient
    for i in range(g.dim):
        for a in sub.matrix:
            if not sub.contains(g.bracket_basis_vec(i, a)):
                return False
    return True

"""Exact linear algebra over the rationals.

Subspaces of Q^n are stored by their reduced row echelon basis, so two
subspaces are equal exactly when their stored data agree.  Everything is
computed with ``fractions.Fraction``; no floating point enters anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction
Vector = tuple[Fraction, ...]


def as_vector(entries: Iterable[Scalar | str], length: int | None = None) -> Vector:
    """Coerce entries (ints, Fractions or 'p/q' strings) to an exact vector."""
    v = tuple(Fraction(x) for x in entries)
    if length is not None and len(v) != length:
        raise ValueError(f"expected vector of length {length}, got {len(v)}")
    return v


def reduced_echelon(rows: Sequence[Sequence[Scalar]], width: int) -> list[Vector]:
    """Reduced row echelon form of the given rows; zero rows are dropped."""
    mat = [list(as_vector(r, width)) for r in rows]
    nrows = len(mat)
    pivot_row = 0
    for col in range(width):
        pivot = None
        for i in range(pivot_row, nrows):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = Fraction(1, 1) / mat[pivot_row][col]
        mat[pivot_row] = [x * inv for x in mat[pivot_row]]
        lead = mat[pivot_row]
        for i in range(nrows):
            if i != pivot_row and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], lead)]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return [tuple(r) for r in mat[:pivot_row]]


def matrix_rank(rows: Sequence[Sequence[Scalar]], width: int) -> int:
    return len(reduced_echelon(rows, width))


def solve_square(rows: Sequence[Sequence[Scalar]], rhs: Sequence[Scalar]) -> Vector | None:
    """Solve the square system rows . x = rhs exactly; None if singular."""
    n = len(rows)
    aug = [list(as_vector(r, n)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    ech = reduced_echelon(aug, n + 1)
    if len(ech) != n or any(ech[i][i] != 1 for i in range(n)):
        return None
    return tuple(row[n] for row in ech)


class Subspace:
    """A linear subspace of Q^ambient_dim, canonicalized at construction."""

    __slots__ = ("ambient_dim", "basis", "_hash")

    def __init__(self, ambient_dim: int, rows: Sequence[Sequence[Scalar]] = ()):
        if ambient_dim < 0:
            raise ValueError("ambient dimension must be non-negative")
        self.ambient_dim = ambient_dim
        self.basis: tuple[Vector, ...] = tuple(reduced_echelon(rows, ambient_dim))
        self._hash = hash((self.ambient_dim, self.basis))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        rows = [[1 if i == j else 0 for j in range(ambient_dim)] for i in range(ambient_dim)]
        return cls(ambient_dim, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    @property
    def pivots(self) -> tuple[int, ...]:
        cols = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x != 0:
                    cols.append(j)
                    break
        return tuple(cols)

    def contains(self, vector: Iterable[Scalar]) -> bool:
        v = as_vector(vector, self.ambient_dim)
        return matrix_rank(list(self.basis) + [v], self.ambient_dim) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimensions differ")
        rows = list(self.basis) + list(other.basis)
        return matrix_rank(rows, self.ambient_dim) == self.dim

    def coordinates(self, vector: Iterable[Scalar]) -> Vector:
        """Coordinates of a member vector in the canonical basis.

        Rows of an echelon basis carry a 1 in their own pivot column and 0 in
        the other pivot columns, so coordinates are read off the pivots.
        """
        v = as_vector(vector, self.ambient_dim)
        coords = tuple(v[p] for p in self.pivots)
        residual = list(v)
        for c, row in zip(coords, self.basis):
            residual = [a - c * b for a, b in zip(residual, row)]
        if any(x != 0 for x in residual):
            raise ValueError("vector does not lie in the subspace")
        return coords

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        rows = ", ".join("(" + ", ".join(str(x) for x in row) + ")" for row in self.basis)
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim}: [{rows}])"


def span(vectors: Sequence[Sequence[Scalar]], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    return Subspace(ambient_dim, vectors)


def nullspace(rows: Sequence[Sequence[Scalar]], width: int) -> Subspace:
    """Canonical subspace {x : rows . x = 0}."""
    ech = reduced_echelon(rows, width)
    pivot_cols = []
    for row in ech:
        for j, x in enumerate(row):
            if x != 0:
                pivot_cols.append(j)
                break
    free_cols = [j for j in range(width) if j not in pivot_cols]
    basis = []
    for f in free_cols:
        v = [Fraction(0)] * width
        v[f] = Fraction(1)
        for i, p in enumerate(pivot_cols):
            v[p] = -ech[i][f]
        basis.append(v)
    return Subspace(width, basis)


def perp(s: Subspace) -> Subspace:
    """Orthogonal complement for the standard bilinear form."""
    return nullspace(s.basis, s.ambient_dim)


def _check_common_ambient(subspaces: Sequence[Subspace]) -> int:
    if not subspaces:
        raise ValueError("need at least one subspace")
    ambient = subspaces[0].ambient_dim
    for s in subspaces[1:]:
        if s.ambient_dim != ambient:
            raise ValueError("ambient dimensions differ")
    return ambient


def intersect(subspaces: Sequence[Subspace]) -> Subspace:
    """Intersection, via the nullspace of the stacked dual constraints."""
    ambient = _check_common_ambient(subspaces)
    constraints: list[Vector] = []
    for s in subspaces:
        if s.is_full:
            continue
        constraints.extend(perp(s).basis)
    if not constraints:
        return Subspace.full(ambient)
    return nullspace(constraints, ambient)


def subspace_sum(subspaces: Sequence[Subspace]) -> Subspace:
    """Subspace spanned by the union of the bases."""
    ambient = _check_common_ambient(subspaces)
    rows = [row for s in subspaces for row in s.basis]
    return Subspace(ambient, rows)

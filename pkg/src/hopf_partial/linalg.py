"""Exact linear algebra over a fixed cyclotomic field.

Vectors are tuples of CycNum, matrices are tuples of row tuples.  Gaussian
elimination is ordinary fraction-based elimination: every division is a
field operation in Q(zeta_n), so results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum

Vector = tuple[CycNum, ...]
Matrix = tuple[Vector, ...]


def zero_vector(dim: int, conductor: int) -> Vector:
    z = CycNum.zero(conductor)
    return (z,) * dim


def basis_vector(dim: int, index: int, conductor: int) -> Vector:
    z = CycNum.zero(conductor)
    o = CycNum.one(conductor)
    return tuple(o if i == index else z for i in range(dim))


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: CycNum, v: Vector) -> Vector:
    if c.is_zero():
        return zero_vector(len(v), c.conductor)
    return tuple(c * a for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a.is_zero() for a in v)


def mat_vec(m: Matrix, v: Vector) -> Vector:
    out = []
    for row in m:
        acc = None
        for a, b in zip(row, v):
            if a.is_zero() or b.is_zero():
                continue
            term = a * b
            acc = term if acc is None else acc + term
        out.append(acc if acc is not None else CycNum.zero(v[0].conductor))
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    rows = []
    for row in a:
        out_row = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            out_row.append(acc if acc is not None else CycNum.zero(row[0].conductor))
        rows.append(tuple(out_row))
    return tuple(rows)


def identity_matrix(dim: int, conductor: int) -> Matrix:
    return tuple(basis_vector(dim, i, conductor) for i in range(dim))


def _conductor_of(m: Matrix) -> int:
    return m[0][0].conductor


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    rows = [list(r) for r in m]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = None
        for i in range(r, n_rows):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return tuple(tuple(row) for row in rows), pivots


def kernel_basis(m: Matrix) -> list[Vector]:
    """Exact basis of the right kernel, one vector per free column.

    Deterministic: free columns are taken in increasing order and the
    free coordinate is set to 1.
    """
    reduced, pivots = rref(m)
    n_cols = len(m[0])
    conductor = _conductor_of(m)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    zero = CycNum.zero(conductor)
    one = CycNum.one(conductor)
    for fc in free:
        vec = [zero] * n_cols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][fc]
        basis.append(tuple(vec))
    return basis


class SingularMatrix(ValueError):
    pass


def inverse(m: Matrix) -> Matrix:
    dim = len(m)
    conductor = _conductor_of(m)
    aug = tuple(
        tuple(row) + basis_vector(dim, i, conductor) for i, row in enumerate(m)
    )
    reduced, pivots = rref(aug)
    if pivots[:dim] != list(range(dim)):
        raise SingularMatrix("matrix is singular")
    return tuple(row[dim:] for row in reduced)


def determinant(m: Matrix) -> CycNum:
    dim = len(m)
    conductor = _conductor_of(m)
    rows = [list(r) for r in m]
    det = CycNum.one(conductor)
    for c in range(dim):
        pivot = None
        for i in range(c, dim):
            if not rows[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            return CycNum.zero(conductor)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det = det * rows[c][c]
        inv = rows[c][c].inv()
        for i in range(c + 1, dim):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def in_span(vectors: list[Vector], v: Vector) -> bool:
    """Exact membership of v in the span of the given vectors."""
    if vec_is_zero(v):
        return True
    if not vectors:
        return False
    stacked = tuple(vectors) + (v,)
    _, pivots_without = rref(tuple(vectors))
    _, pivots_with = rref(stacked)
    return len(pivots_with) == len(pivots_without)


@dataclass(frozen=True)
class LinMap:
    """A linear map stored as a dst_dim x src_dim matrix."""

    src_dim: int
    dst_dim: int
    matrix: Matrix

    def __post_init__(self):
        if len(self.matrix) != self.dst_dim or any(
            len(row) != self.src_dim for row in self.matrix
        ):
            raise ValueError("matrix shape does not match declared dimensions")

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.src_dim:
            raise ValueError("vector length does not match source dimension")
        return mat_vec(self.matrix, v)

    def compose(self, other: "LinMap") -> "LinMap":
        """self after other (matrix product self.matrix @ other.matrix)."""
        if other.dst_dim != self.src_dim:
            raise ValueError("composition dimension mismatch")
        return LinMap(other.src_dim, self.dst_dim, mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "LinMap":
        if self.src_dim != self.dst_dim:
            raise ValueError("only square maps invert")
        return LinMap(self.dst_dim, self.src_dim, inverse(self.matrix))

    def is_identity(self) -> bool:
        if self.src_dim != self.dst_dim:
            return False
        conductor = _conductor_of(self.matrix)
        return self.matrix == identity_matrix(self.src_dim, conductor)

    @staticmethod
    def identity(dim: int, conductor: int) -> "LinMap":
        return LinMap(dim, dim, identity_matrix(dim, conductor))

    @staticmethod
    def from_columns(src_dim: int, dst_dim: int, columns: list[Vector]) -> "LinMap":
        if len(columns) != src_dim:
            raise ValueError("need one column per source basis vector")
        matrix = tuple(
            tuple(columns[c][r] for c in range(src_dim)) for r in range(dst_dim)
        )
        return LinMap(src_dim, dst_dim, matrix)

    def column(self, c: int) -> Vector:
        return tuple(self.matrix[r][c] for r in range(self.dst_dim))

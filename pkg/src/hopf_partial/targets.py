"""Target algebras A for the partial (co)actions, with the predicates
the classification theorems consume: centers, centrality tests, and
nilpotency probes.

Idempotent-triviality is a documented constructor flag, never computed:
deciding it in general means solving quadratic systems, and the theory
only needs known-true instances.  The infinite-dimensional textbook
targets (polynomials, Weyl algebra, ...) are represented by the
truncated quotient k[z]/(z^m); centrality and nilpotency of the
classification element w survive that truncation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum
from .hopf import FinAlgebra
from .linalg import (
    Vector,
    basis_vector,
    in_span,
    kernel_basis,
    vec_is_zero,
    zero_vector,
)


@dataclass(frozen=True)
class TargetAlgebra:
    alg: FinAlgebra
    trivial_idempotents_flag: bool
    description: str

    @property
    def dim(self) -> int:
        return self.alg.dim

    @property
    def conductor(self) -> int:
        return self.alg.conductor

    @property
    def unit(self) -> Vector:
        return self.alg.unit

    def to_json(self) -> dict:
        obj = self.alg.to_json()
        obj["trivial_idempotents"] = self.trivial_idempotents_flag
        obj["description"] = self.description
        return obj

    @staticmethod
    def from_json(obj: dict) -> "TargetAlgebra":
        return TargetAlgebra(
            alg=FinAlgebra.from_json(obj),
            trivial_idempotents_flag=bool(obj.get("trivial_idempotents", False)),
            description=str(obj.get("description", "imported algebra")),
        )


def field_target(conductor: int = 1) -> TargetAlgebra:
    """The base field itself; only trivial idempotents."""
    one = CycNum.one(conductor)
    alg = FinAlgebra(1, ("1",), (((one,),),), (one,), conductor)
    return TargetAlgebra(alg, True, "base field")


def matrix_target(m: int, conductor: int = 1) -> TargetAlgebra:
    """The full matrix algebra M_m(k) on the basis e_{ij}.

    Has nontrivial idempotents for m >= 2 (e.g. e_11), so the flag is
    False there.
    """
    if m < 1:
        raise ValueError("matrix_target needs m >= 1")
    dim = m * m
    zero = CycNum.zero(conductor)
    one = CycNum.one(conductor)
    labels = tuple(f"e{i + 1}{j + 1}" for i in range(m) for j in range(m))

    def idx(i, j):
        return i * m + j

    mult = []
    for a in range(dim):
        i, j = divmod(a, m)
        row = []
        for b in range(dim):
            k, l = divmod(b, m)
            vec = [zero] * dim
            if j == k:
                vec[idx(i, l)] = one
            row.append(tuple(vec))
        mult.append(tuple(row))
    unit = [zero] * dim
    for i in range(m):
        unit[idx(i, i)] = one
    alg = FinAlgebra(dim, labels, tuple(mult), tuple(unit), conductor)
    return TargetAlgebra(alg, m == 1, f"matrix algebra M_{m}(k)")


def trunc_poly_target(m: int, conductor: int = 1) -> TargetAlgebra:
    """The truncated polynomial algebra k[z]/(z^m) on 1, z, ..., z^{m-1}.

    Commutative local algebra: only trivial idempotents.
    """
    if m < 1:
        raise ValueError("trunc_poly_target needs m >= 1")
    zero = CycNum.zero(conductor)
    one = CycNum.one(conductor)
    labels = tuple("1" if k == 0 else ("z" if k == 1 else f"z^{k}") for k in range(m))
    mult = []
    for a in range(m):
        row = []
        for b in range(m):
            vec = [zero] * m
            if a + b < m:
                vec[a + b] = one
            row.append(tuple(vec))
        mult.append(tuple(row))
    alg = FinAlgebra(m, labels, tuple(mult), basis_vector(m, 0, conductor), conductor)
    return TargetAlgebra(alg, True, f"truncated polynomials k[z]/(z^{m})")


def group_target(m: int, conductor: int = 1) -> TargetAlgebra:
    """The group algebra kC_m viewed as a plain target algebra.

    For m >= 2 the averaging element (1 + g + ... + g^{m-1})/m is a
    nontrivial idempotent, so the flag is False.
    """
    if m < 1:
        raise ValueError("group_target needs m >= 1")
    zero = CycNum.zero(conductor)
    one = CycNum.one(conductor)
    labels = tuple("1" if i == 0 else ("g" if i == 1 else f"g^{i}") for i in range(m))
    mult = []
    for a in range(m):
        row = []
        for b in range(m):
            vec = [zero] * m
            vec[(a + b) % m] = one
            row.append(tuple(vec))
        mult.append(tuple(row))
    alg = FinAlgebra(m, labels, tuple(mult), basis_vector(m, 0, conductor), conductor)
    return TargetAlgebra(alg, m == 1, f"group algebra kC_{m}")


def center(A: TargetAlgebra) -> list[Vector]:
    """Exact basis of Z(A) = {z : z e_i = e_i z for every basis e_i}.

    Solved as the kernel of the stacked commutator system; deterministic
    echelon-based basis.
    """
    alg = A.alg
    d = alg.dim
    rows = []
    for i in range(d):
        # row block: v |-> e_i v - v e_i, coordinates of the commutator
        for r in range(d):
            row = []
            for c in range(d):
                # coefficient of e_r in e_i e_c - e_c e_i
                row.append(alg.mult[i][c][r] - alg.mult[c][i][r])
            rows.append(tuple(row))
    return kernel_basis(tuple(rows))


def is_central(A: TargetAlgebra, v: Vector) -> bool:
    """True iff v commutes with every basis element (= lies in span Z(A))."""
    alg = A.alg
    for i in range(alg.dim):
        e = basis_vector(alg.dim, i, alg.conductor)
        if alg.multiply(v, e) != alg.multiply(e, v):
            return False
    return True


def nilpotency_order(A: TargetAlgebra, v: Vector, cap: int) -> int | None:
    """Least k <= cap with v^k = 0, or None."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    power = v
    for k in range(1, cap + 1):
        if vec_is_zero(power):
            return k
        power = A.alg.multiply(power, v)
    return None


def parse_target_spec(spec: str, conductor: int = 1) -> TargetAlgebra:
    """CLI target notation: field | matrix:m | truncpoly:m | group:m."""
    name, _, arg = spec.partition(":")
    if name == "field":
        return field_target(conductor)
    if not arg:
        raise ValueError(f"target {name!r} needs a size, e.g. {name}:2")
    m = int(arg)
    if name == "matrix":
        return matrix_target(m, conductor)
    if name == "truncpoly":
        return trunc_poly_target(m, conductor)
    if name == "group":
        return group_target(m, conductor)
    raise ValueError(f"unknown target spec {spec!r}")


def center_membership(A: TargetAlgebra, v: Vector) -> bool:
    """Span-membership variant of is_central (same predicate)."""
    return in_span(center(A), v)

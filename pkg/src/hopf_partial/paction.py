"""Partial actions of Hopf algebras on algebras, held as full basis tables.

Tables are extensional (one A-vector per (H-basis, A-basis) pair) so the
axiom checkers never depend on any rewriting, and corrupted tables are
representable for negative tests.  Every axiom is multilinear in each of
its slots, so exhaustive evaluation over basis tuples decides it on the
whole space; the checkers rely on that throughout.

Axioms, for h, k in H and a, b in A:

    (PA.1)   1_H . a = a
    (PA.2)   h . ab = (h_1 . a)(h_2 . b)
    (PA.3)   h . (k . a) = (h_1 . 1_A)(h_2 k . a)
    (PA.2')  h . (a (k . b)) = (h_1 . a)(h_2 k . b)   [equiv. to PA.2 + PA.3]
    (PA.S)   h . (k . a) = (h_1 k . a)(h_2 . 1_A)     [symmetric actions]

An action is global when h . 1_A = eps(h) 1_A for every h.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycNum, Powers
from .hopf import HopfData
from .linalg import (
    Matrix,
    Vector,
    basis_vector,
    mat_vec,
    vec_is_zero,
    zero_vector,
)
from .qcomb import q_binomial
from .targets import TargetAlgebra, is_central


class ActionPreconditionError(ValueError):
    """A named precondition of a constructor failed; nothing was built."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        super().__init__(f"precondition {condition!r} failed" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class ActionTable:
    """A bilinear map H (x) A -> A on basis pairs: table[h][a] in A."""

    hopf: HopfData
    target: TargetAlgebra
    table: tuple[tuple[Vector, ...], ...]

    def __post_init__(self):
        if len(self.table) != self.hopf.dim:
            raise ValueError("table has wrong number of H-rows")
        for row in self.table:
            if len(row) != self.target.dim or any(len(v) != self.target.dim for v in row):
                raise ValueError("table row does not match target dimension")
        if self.hopf.conductor != self.target.conductor:
            raise ValueError("hopf and target live over different conductors")

    def act_basis(self, h: int, a: int) -> Vector:
        return self.table[h][a]

    def act(self, h_vec: Vector, a_vec: Vector) -> Vector:
        """Bilinear extension to arbitrary elements."""
        out = list(zero_vector(self.target.dim, self.target.conductor))
        for h, ch in enumerate(h_vec):
            if ch.is_zero():
                continue
            for a, ca in enumerate(a_vec):
                if ca.is_zero():
                    continue
                c = ch * ca
                for m, v in enumerate(self.table[h][a]):
                    if not v.is_zero():
                        out[m] = out[m] + c * v
        return tuple(out)

    def act_vector(self, h: int, a_vec: Vector) -> Vector:
        out = list(zero_vector(self.target.dim, self.target.conductor))
        for a, ca in enumerate(a_vec):
            if ca.is_zero():
                continue
            for m, v in enumerate(self.table[h][a]):
                if not v.is_zero():
                    out[m] = out[m] + ca * v
        return tuple(out)

    def unit_image(self, h: int) -> Vector:
        """h . 1_A."""
        return self.act_vector(h, self.target.unit)

    def to_json(self) -> dict:
        return {
            "hopf": self.hopf.to_json(),
            "target": self.target.to_json(),
            "rows": [[[c.to_json() for c in vec] for vec in row] for row in self.table],
        }

    @staticmethod
    def from_json(obj: dict) -> "ActionTable":
        hopf = HopfData.from_json(obj["hopf"]) if isinstance(obj["hopf"], dict) else obj["hopf"]
        target = (
            TargetAlgebra.from_json(obj["target"])
            if isinstance(obj["target"], dict)
            else obj["target"]
        )
        table = tuple(
            tuple(tuple(CycNum.from_json(c) for c in vec) for vec in row)
            for row in obj["rows"]
        )
        return ActionTable(hopf, target, table)


def mutate_table(act: ActionTable, h: int, a: int, m: int, delta: CycNum) -> ActionTable:
    """Return a copy with table[h][a][m] += delta (for negative tests)."""
    rows = [list(map(list, row)) for row in act.table]
    rows[h][a][m] = rows[h][a][m] + delta
    return ActionTable(
        act.hopf,
        act.target,
        tuple(tuple(tuple(vec) for vec in row) for row in rows),
    )


@dataclass
class Counterexample:
    axiom: str
    h: int | None = None
    k: int | None = None
    a: int | None = None
    b: int | None = None
    lhs: Vector | None = None
    rhs: Vector | None = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "h": self.h,
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "lhs": None if self.lhs is None else [c.to_json() for c in self.lhs],
            "rhs": None if self.rhs is None else [c.to_json() for c in self.rhs],
        }


@dataclass
class AxiomReport:
    pa1: bool = True
    pa2: bool = True
    pa3: bool = True
    pa2prime: bool = True
    pas: bool = True
    is_global: bool = False
    counterexamples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """A partial action: PA.1-PA.3 (PA.S is reported separately)."""
        return self.pa1 and self.pa2 and self.pa3

    @property
    def symmetric(self) -> bool:
        return self.ok and self.pas

    @property
    def first_counterexample(self) -> Counterexample | None:
        for axiom in ("pa1", "pa2", "pa3", "pa2prime", "pas"):
            if axiom in self.counterexamples:
                return self.counterexamples[axiom]
        return None

    def to_json(self) -> dict:
        first = self.first_counterexample
        return {
            "pa1": self.pa1,
            "pa2": self.pa2,
            "pa3": self.pa3,
            "pa2prime": self.pa2prime,
            "pas": self.pas,
            "ok": self.ok,
            "symmetric": self.symmetric,
            "global": self.is_global,
            "first_counterexample": None if first is None else first.to_json(),
        }


def check_partial_action(act: ActionTable) -> AxiomReport:
    """Exhaustively evaluate (PA.1)-(PA.3), (PA.2') and (PA.S) on bases.

    Also reports globality (h . 1_A = eps(h) 1_A for every basis h).
    First counterexamples are recorded per axiom in deterministic
    first-index order.
    """
    H = act.hopf
    A = act.target.alg
    dim_h = H.dim
    dim_a = A.dim
    conductor = H.conductor
    report = AxiomReport()

    unit_images = [act.unit_image(h) for h in range(dim_h)]

    # PA.1: the action of 1_H is the identity of A
    for a in range(dim_a):
        e_a = basis_vector(dim_a, a, conductor)
        got = act.act(H.alg.unit, e_a)
        if got != e_a:
            report.pa1 = False
            report.counterexamples["pa1"] = Counterexample("pa1", a=a, lhs=got, rhs=e_a)
            break

    # PA.2
    done = False
    for h in range(dim_h):
        comult_h = H.comult[h]
        for a in range(dim_a):
            images_l = None
            for b in range(dim_a):
                lhs = act.act_vector(h, A.mult[a][b])
                rhs = list(zero_vector(dim_a, conductor))
                for l, r, c in comult_h:
                    la = act.table[l][a]
                    if vec_is_zero(la):
                        continue
                    rb = act.table[r][b]
                    if vec_is_zero(rb):
                        continue
                    prod = A.multiply(la, rb)
                    for m, v in enumerate(prod):
                        if not v.is_zero():
                            rhs[m] = rhs[m] + c * v
                if lhs != tuple(rhs):
                    report.pa2 = False
                    report.counterexamples["pa2"] = Counterexample(
                        "pa2", h=h, a=a, b=b, lhs=lhs, rhs=tuple(rhs)
                    )
                    done = True
                    break
            if done:
                break
        if done:
            break

    # caches shared by PA.3 / PA.2' / PA.S
    prod_action: dict[tuple[int, int], list[Vector]] = {}

    def product_rows(r: int, k: int) -> list[Vector]:
        """(e_r e_k) . e_a for every a, cached."""
        key = (r, k)
        rows = prod_action.get(key)
        if rows is None:
            hk = H.alg.mult[r][k]
            rows = []
            for a in range(dim_a):
                vec = list(zero_vector(dim_a, conductor))
                for p, cp in enumerate(hk):
                    if cp.is_zero():
                        continue
                    for m, v in enumerate(act.table[p][a]):
                        if not v.is_zero():
                            vec[m] = vec[m] + cp * v
                rows.append(tuple(vec))
            prod_action[key] = rows
        return rows

    # PA.3 and PA.S
    done3 = dones = False
    for h in range(dim_h):
        comult_h = H.comult[h]
        for k in range(dim_h):
            for a in range(dim_a):
                lhs = act.act_vector(h, act.table[k][a])
                if not done3:
                    rhs = list(zero_vector(dim_a, conductor))
                    for l, r, c in comult_h:
                        ul = unit_images[l]
                        if vec_is_zero(ul):
                            continue
                        rka = product_rows(r, k)[a]
                        if vec_is_zero(rka):
                            continue
                        prod = A.multiply(ul, rka)
                        for m, v in enumerate(prod):
                            if not v.is_zero():
                                rhs[m] = rhs[m] + c * v
                    if lhs != tuple(rhs):
                        report.pa3 = False
                        report.counterexamples["pa3"] = Counterexample(
                            "pa3", h=h, k=k, a=a, lhs=lhs, rhs=tuple(rhs)
                        )
                        done3 = True
                if not dones:
                    rhs = list(zero_vector(dim_a, conductor))
                    for l, r, c in comult_h:
                        ur = unit_images[r]
                        if vec_is_zero(ur):
                            continue
                        lka = product_rows(l, k)[a]
                        if vec_is_zero(lka):
                            continue
                        prod = A.multiply(lka, ur)
                        for m, v in enumerate(prod):
                            if not v.is_zero():
                                rhs[m] = rhs[m] + c * v
                    if lhs != tuple(rhs):
                        report.pas = False
                        report.counterexamples["pas"] = Counterexample(
                            "pas", h=h, k=k, a=a, lhs=lhs, rhs=tuple(rhs)
                        )
                        dones = True
                if done3 and dones:
                    break
            if done3 and dones:
                break
        if done3 and dones:
            break

    # PA.2'
    done = False
    for h in range(dim_h):
        comult_h = H.comult[h]
        for k in range(dim_h):
            for b in range(dim_a):
                kb = act.table[k][b]
                for a in range(dim_a):
                    e_a = basis_vector(dim_a, a, conductor)
                    lhs = act.act_vector(h, A.multiply(e_a, kb))
                    rhs = list(zero_vector(dim_a, conductor))
                    for l, r, c in comult_h:
                        la = act.table[l][a]
                        if vec_is_zero(la):
                            continue
                        rkb = product_rows(r, k)[b]
                        if vec_is_zero(rkb):
                            continue
                        prod = A.multiply(la, rkb)
                        for m, v in enumerate(prod):
                            if not v.is_zero():
                                rhs[m] = rhs[m] + c * v
                    if lhs != tuple(rhs):
                        report.pa2prime = False
                        report.counterexamples["pa2prime"] = Counterexample(
                            "pa2prime", h=h, k=k, a=a, b=b, lhs=lhs, rhs=tuple(rhs)
                        )
                        done = True
                        break
                if done:
                    break
            if done:
                break
        if done:
            break

    # globality: h . 1_A = eps(h) 1_A for every basis h
    report.is_global = all(
        unit_images[h] == tuple(H.counit[h] * u for u in A.unit) for h in range(dim_h)
    )
    return report


# -- partial actions of the cyclic group algebra -------------------------------


@dataclass(frozen=True)
class PartialCnAction:
    """A candidate partial kC_n-action: one matrix per group power.

    gi_action[i] is the matrix of a |-> g^i . a on the target basis.
    """

    n: int
    target: TargetAlgebra
    gi_action: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.gi_action) != self.n:
            raise ValueError("need one matrix per group element")

    def apply(self, i: int, v: Vector) -> Vector:
        return mat_vec(self.gi_action[i % self.n], v)

    def unit_image(self, i: int) -> Vector:
        return self.apply(i, self.target.unit)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "target": self.target.to_json(),
            "matrices": [
                [[c.to_json() for c in row] for row in mat] for mat in self.gi_action
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "PartialCnAction":
        target = TargetAlgebra.from_json(obj["target"])
        mats = tuple(
            tuple(tuple(CycNum.from_json(c) for c in row) for row in mat)
            for mat in obj["matrices"]
        )
        return PartialCnAction(int(obj["n"]), target, mats)


def delta_cn_action(n: int, target: TargetAlgebra) -> PartialCnAction:
    """g^i . a = delta_{i,0} a: the identity at i = 0, zero elsewhere."""
    d = target.dim
    conductor = target.conductor
    zero_mat = tuple(zero_vector(d, conductor) for _ in range(d))
    ident = tuple(basis_vector(d, i, conductor) for i in range(d))
    return PartialCnAction(n, target, (ident,) + (zero_mat,) * (n - 1))


def cn_action_from_matrices(
    n: int, target: TargetAlgebra, assignments: dict[int, Matrix]
) -> PartialCnAction:
    """Identity at g^0, given matrices at the listed powers, zero elsewhere."""
    d = target.dim
    conductor = target.conductor
    zero_mat = tuple(zero_vector(d, conductor) for _ in range(d))
    ident = tuple(basis_vector(d, i, conductor) for i in range(d))
    mats = [ident] + [zero_mat] * (n - 1)
    for i, mat in assignments.items():
        if i % n == 0:
            continue
        mats[i % n] = tuple(tuple(row) for row in mat)
    return PartialCnAction(n, target, tuple(mats))


@dataclass
class CnActionReport:
    pa1: bool = True
    pa2: bool = True
    pa3: bool = True
    pas: bool = True
    unit_images_idempotent: bool = True
    sandwich_identity: bool = True  # (g^i.1) a (g^i.1) = (g^i.1) a
    domains_respected: bool = True  # (g^i.1)(g^i.a) = g^i.a
    consecutive_orthogonality: bool | None = None  # only asserted when g.1 = 0
    is_global: bool = False
    counterexamples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.pa1
            and self.pa2
            and self.pa3
            and self.unit_images_idempotent
            and self.sandwich_identity
            and self.domains_respected
            and self.consecutive_orthogonality is not False
        )

    def to_json(self) -> dict:
        return {
            "pa1": self.pa1,
            "pa2": self.pa2,
            "pa3": self.pa3,
            "pas": self.pas,
            "unit_images_idempotent": self.unit_images_idempotent,
            "sandwich_identity": self.sandwich_identity,
            "domains_respected": self.domains_respected,
            "consecutive_orthogonality": self.consecutive_orthogonality,
            "ok": self.ok,
            "global": self.is_global,
            "counterexamples": {k: list(v) for k, v in self.counterexamples.items()},
        }


def check_partial_group_action(pca: PartialCnAction) -> CnActionReport:
    """Axioms restricted to the group-likes g^i, plus the structural
    consequences asserted by the theory:

    - each g^i . 1_A is idempotent and satisfies the sandwich identity
      (g^i . 1_A) a (g^i . 1_A) = (g^i . 1_A) a;
    - g^i . a lands in the domain D_{g^i} = (g^i . 1_A) A;
    - when g . 1_A = 0, consecutive unit images are orthogonal:
      (g^i . 1_A)(g^{i+1} . 1_A) = 0.
    """
    n = pca.n
    A = pca.target.alg
    d = A.dim
    conductor = A.conductor
    report = CnActionReport()
    u = [pca.unit_image(i) for i in range(n)]
    basis = [basis_vector(d, a, conductor) for a in range(d)]

    if any(pca.apply(0, basis[a]) != basis[a] for a in range(d)):
        report.pa1 = False
        report.counterexamples["pa1"] = (0,)

    for i in range(n):
        for a in range(d):
            for b in range(d):
                lhs = pca.apply(i, A.mult[a][b])
                rhs = A.multiply(pca.apply(i, basis[a]), pca.apply(i, basis[b]))
                if lhs != rhs:
                    report.pa2 = False
                    report.counterexamples["pa2"] = (i, a, b)
                    break
            if not report.pa2:
                break
        if not report.pa2:
            break

    for i in range(n):
        for j in range(n):
            for a in range(d):
                ja = pca.apply(j, basis[a])
                lhs = pca.apply(i, ja)
                ija = pca.apply((i + j) % n, basis[a])
                if lhs != A.multiply(u[i], ija):
                    report.pa3 = False
                    report.counterexamples["pa3"] = (i, j, a)
                if lhs != A.multiply(ija, u[i]):
                    report.pas = False
                    report.counterexamples["pas"] = (i, j, a)
            if not report.pa3 and not report.pas:
                break
        if not report.pa3 and not report.pas:
            break

    for i in range(n):
        if A.multiply(u[i], u[i]) != u[i]:
            report.unit_images_idempotent = False
            report.counterexamples["idempotent"] = (i,)
            break

    for i in range(n):
        bad = False
        for a in range(d):
            ua = A.multiply(u[i], basis[a])
            if A.multiply(ua, u[i]) != ua:
                report.sandwich_identity = False
                report.counterexamples["sandwich"] = (i, a)
                bad = True
                break
            ia = pca.apply(i, basis[a])
            if A.multiply(u[i], ia) != ia:
                report.domains_respected = False
                report.counterexamples["domains"] = (i, a)
                bad = True
                break
        if bad:
            break

    if n >= 2 and vec_is_zero(u[1]):
        report.consecutive_orthogonality = True
        for i in range(n):
            if not vec_is_zero(A.multiply(u[i], u[(i + 1) % n])):
                report.consecutive_orthogonality = False
                report.counterexamples["orthogonality"] = (i,)
                break

    report.is_global = all(u[i] == A.unit for i in range(n))
    return report


# -- the Taft classification ----------------------------------------------------


def _taft_q(H: HopfData) -> CycNum:
    meta = H.meta
    if meta.get("family") != "taft":
        raise ActionPreconditionError("hopf-family", "expected a Taft algebra HopfData")
    n = meta["n"]
    return CycNum.zeta(n, meta.get("t", 1))


def construct_taft_action(
    H: HopfData, pca: PartialCnAction, w: Vector
) -> ActionTable:
    """Build the full T_n(q)-action table from a degenerate partial
    C_n-action and a compatible element w:

        g^i x^j . a = q^{-ij} sum_k (-1)^k q^{-k(k-1)/2} C(j,k;q^{-1})
                      w^{j-k} (g^{i+k} . a) w^k

    Preconditions (each checked eagerly; construction refuses on failure):
    the C_n table satisfies the partial group action axioms, g . 1_A = 0,
    w^n is central, and g^i . w = q^{-i} (g^i . 1_A) w for every i.
    """
    q = _taft_q(H)
    n = H.meta["n"]
    A = pca.target
    if pca.n != n:
        raise ActionPreconditionError("cn-order", f"C_{pca.n} action given, need C_{n}")
    if A.conductor != H.conductor:
        raise ActionPreconditionError(
            "conductor-match", f"target conductor {A.conductor} != {H.conductor}"
        )
    if len(w) != A.dim:
        raise ActionPreconditionError("w-shape", "w must be a target coefficient vector")

    cn_report = check_partial_group_action(pca)
    if not cn_report.ok:
        raise ActionPreconditionError("cn-action-axioms", str(cn_report.to_json()))
    if not vec_is_zero(pca.unit_image(1)):
        raise ActionPreconditionError("g-degenerate", "g . 1_A must be 0")

    alg = A.alg
    wpow = [alg.unit]
    for _ in range(n):
        wpow.append(alg.multiply(wpow[-1], w))
    if not is_central(A, wpow[n]):
        raise ActionPreconditionError("w-power-central", "w^n must lie in Z(A)")

    P = Powers(q, order=n)
    for i in range(n):
        lhs = pca.apply(i, w)
        rhs = tuple(P(-i) * c for c in alg.multiply(pca.unit_image(i), w))
        if lhs != rhs:
            raise ActionPreconditionError(
                "w-compatibility", f"g^{i} . w != q^-{i} (g^{i} . 1_A) w"
            )

    qinv = P(-1)
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    rows = []
    for i in range(n):
        for j in range(n):
            row = []
            for a in range(d):
                acc = list(zero_vector(d, A.conductor))
                for k in range(j + 1):
                    coeff = P(-i * j - k * (k - 1) // 2) * q_binomial(j, k, qinv)
                    if k % 2 == 1:
                        coeff = -coeff
                    if coeff.is_zero():
                        continue
                    mid = pca.apply((i + k) % n, basis[a])
                    if vec_is_zero(mid):
                        continue
                    term = alg.multiply(alg.multiply(wpow[j - k], mid), wpow[k])
                    for m, v in enumerate(term):
                        if not v.is_zero():
                            acc[m] = acc[m] + coeff * v
                row.append(tuple(acc))
            rows.append(tuple(row))
    target = pca.target
    return ActionTable(H, target, tuple(rows))


@dataclass
class ReconstructionReport:
    matches: bool
    mismatches: list  # [(i, j, a, stored, recomputed)]
    w: Vector
    w_power_central: bool
    w_compatibility: bool
    axioms: AxiomReport

    @property
    def ok(self) -> bool:
        return (
            self.matches
            and self.w_power_central
            and self.w_compatibility
            and self.axioms.ok
        )

    def to_json(self) -> dict:
        return {
            "matches": self.matches,
            "mismatch_count": len(self.mismatches),
            "first_mismatch": None
            if not self.mismatches
            else {
                "i": self.mismatches[0][0],
                "j": self.mismatches[0][1],
                "a": self.mismatches[0][2],
                "stored": [c.to_json() for c in self.mismatches[0][3]],
                "recomputed": [c.to_json() for c in self.mismatches[0][4]],
            },
            "w": [c.to_json() for c in self.w],
            "w_power_central": self.w_power_central,
            "w_compatibility": self.w_compatibility,
            "axioms": self.axioms.to_json(),
            "ok": self.ok,
        }


def derive_action_formula(act: ActionTable) -> ReconstructionReport:
    """Reconstruct every row of a degenerate Taft table from its own
    restriction to the group algebra and w = x . 1_A, and compare.

    Also asserts the two classification consequences: w^n central and
    g^i . w = q^{-i} (g^i . 1_A) w.  The input must have g . 1_A = 0;
    axiom verdicts for the table itself ride along in the report.
    """
    q = _taft_q(act.hopf)
    n = act.hopf.meta["n"]
    A = act.target
    alg = A.alg
    d = A.dim

    def row_index(i, j):
        return i * n + j

    if not vec_is_zero(act.unit_image(row_index(1, 0))):
        raise ActionPreconditionError("g-degenerate", "g . 1_A must be 0")

    w = act.unit_image(row_index(0, 1))
    wpow = [alg.unit]
    for _ in range(n):
        wpow.append(alg.multiply(wpow[-1], w))

    P = Powers(q, order=n)
    qinv = P(-1)
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]

    mismatches = []
    for i in range(n):
        for j in range(n):
            for a in range(d):
                acc = list(zero_vector(d, A.conductor))
                for k in range(j + 1):
                    coeff = P(-i * j - k * (k - 1) // 2) * q_binomial(j, k, qinv)
                    if k % 2 == 1:
                        coeff = -coeff
                    if coeff.is_zero():
                        continue
                    mid = act.table[row_index((i + k) % n, 0)][a]
                    if vec_is_zero(mid):
                        continue
                    term = alg.multiply(alg.multiply(wpow[j - k], mid), wpow[k])
                    for m, v in enumerate(term):
                        if not v.is_zero():
                            acc[m] = acc[m] + coeff * v
                stored = act.table[row_index(i, j)][a]
                if stored != tuple(acc):
                    mismatches.append((i, j, a, stored, tuple(acc)))

    w_central = is_central(A, wpow[n])
    w_compat = True
    for i in range(n):
        lhs = act.act_vector(row_index(i, 0), w)
        rhs = tuple(P(-i) * c for c in alg.multiply(act.unit_image(row_index(i, 0)), w))
        if lhs != rhs:
            w_compat = False
            break

    return ReconstructionReport(
        matches=not mismatches,
        mismatches=mismatches,
        w=w,
        w_power_central=w_central,
        w_compatibility=w_compat,
        axioms=check_partial_action(act),
    )


def construct_nichols_action(
    H: HopfData, target: TargetAlgebra, ws: list[Vector]
) -> ActionTable:
    """The degenerate Nichols family: 1 . a = a, g . a = 0, the x_i and
    g x_i rows act by left multiplication with the central w_i, and every
    basis word containing two or more skew-primitive letters acts by 0.
    """
    if H.meta.get("family") != "nichols":
        raise ActionPreconditionError("hopf-family", "expected a Nichols HopfData")
    n = H.meta["n"]
    if len(ws) != n - 1:
        raise ActionPreconditionError("w-count", f"need {n - 1} central elements")
    if target.conductor != H.conductor:
        raise ActionPreconditionError(
            "conductor-match", f"target conductor {target.conductor} != {H.conductor}"
        )
    for idx, w in enumerate(ws, start=1):
        if len(w) != target.dim:
            raise ActionPreconditionError("w-shape", f"w_{idx} has wrong length")
        if not is_central(target, w):
            raise ActionPreconditionError("w-central", f"w_{idx} must lie in Z(A)")

    alg = target.alg
    d = target.dim
    conductor = target.conductor
    basis = [basis_vector(d, a, conductor) for a in range(d)]
    zero_row = tuple(zero_vector(d, conductor) for _ in range(d))
    rows = []
    for code in range(2**n):
        bits = tuple((code >> (n - 1 - k)) & 1 for k in range(n))
        weight = sum(bits[1:])
        if weight == 0:
            rows.append(zero_row if bits[0] else tuple(basis))
        elif weight == 1:
            i = next(k for k in range(1, n) if bits[k])
            w = ws[i - 1]
            rows.append(tuple(alg.multiply(w, basis[a]) for a in range(d)))
        else:
            rows.append(zero_row)
    return ActionTable(H, target, tuple(rows))


def globality_dichotomy(act: ActionTable) -> str:
    """Classify by g . 1_A: the unit -> 'global' (globality equation is
    then verified on every basis element), zero -> 'degenerate', anything
    else -> 'outside-hypotheses' (possible only with nontrivial
    idempotents; no assertion made).
    """
    labels = act.hopf.alg.basis_labels
    try:
        g_index = labels.index("g")
    except ValueError:
        raise ValueError("hopf basis has no generator labeled 'g'")
    u_g = act.unit_image(g_index)
    A = act.target.alg
    if u_g == A.unit:
        H = act.hopf
        for h in range(H.dim):
            expected = tuple(H.counit[h] * c for c in A.unit)
            if act.unit_image(h) != expected:
                raise RuntimeError(
                    f"globality assertion failed at basis index {h}: "
                    "g . 1_A = 1_A but h . 1_A != eps(h) 1_A"
                )
        return "global"
    if vec_is_zero(u_g):
        return "degenerate"
    return "outside-hypotheses"

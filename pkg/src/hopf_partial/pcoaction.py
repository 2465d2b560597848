"""Partial coactions rho: A -> A (x) H and the finite-dimensional duality.

Coaction axioms are checked by dualization: at finite dimension a partial
H-comodule algebra structure on A is the same thing as a partial
H*-module algebra structure via

    rho(a) = sum_i (h_i . a) (x) h_i*        (action -> coaction)
    h* . a = h*(a^1) a^0                     (coaction -> action)

and the two constructions are mutually inverse on tables.  The checker
therefore dualizes and runs the action axioms rather than transcribing
coaction axioms the source material never displays; the only directly
checked coaction-side law is the counital trace (id (x) eps) rho = id.

Taft coactions are transported along phi = psi^{-1} so they land in
T_n(q) itself rather than its abstract dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import CycNum, Powers, Rat
from .hopf import HopfData, dual_hopf, taft_selfdual_phi
from .linalg import Vector, basis_vector, vec_is_zero, zero_vector
from .paction import (
    ActionPreconditionError,
    ActionTable,
    AxiomReport,
    PartialCnAction,
    check_partial_action,
    construct_nichols_action,
    construct_taft_action,
)
from .targets import TargetAlgebra, is_central

# rho(e_a) = sum of coeff * e_aidx (x) e_hidx, stored as sparse triples
RhoTerms = tuple[tuple[int, int, CycNum], ...]


@dataclass(frozen=True)
class CoactionTable:
    hopf: HopfData
    target: TargetAlgebra
    rho: tuple[RhoTerms, ...]

    def __post_init__(self):
        if len(self.rho) != self.target.dim:
            raise ValueError("need one rho entry per target basis element")
        if self.hopf.conductor != self.target.conductor:
            raise ValueError("hopf and target live over different conductors")

    def rho_of_vector(self, v: Vector) -> dict[tuple[int, int], CycNum]:
        out: dict[tuple[int, int], CycNum] = {}
        for a, c in enumerate(v):
            if c.is_zero():
                continue
            for ai, hi, coeff in self.rho[a]:
                key = (ai, hi)
                term = c * coeff
                prev = out.get(key)
                total = term if prev is None else prev + term
                if total.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = total
        return out

    def counital_trace(self, a: int) -> Vector:
        """(id (x) eps) rho on the a-th basis element."""
        out = list(zero_vector(self.target.dim, self.target.conductor))
        for ai, hi, coeff in self.rho[a]:
            e = self.hopf.counit[hi]
            if not e.is_zero():
                out[ai] = out[ai] + coeff * e
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "hopf": self.hopf.to_json(),
            "target": self.target.to_json(),
            "rho": [
                [[ai, hi, c.to_json()] for ai, hi, c in terms] for terms in self.rho
            ],
        }

    @staticmethod
    def from_json(obj: dict) -> "CoactionTable":
        hopf = HopfData.from_json(obj["hopf"])
        target = TargetAlgebra.from_json(obj["target"])
        rho = tuple(
            tuple((int(ai), int(hi), CycNum.from_json(c)) for ai, hi, c in terms)
            for terms in obj["rho"]
        )
        return CoactionTable(hopf, target, rho)


def _sorted_terms(entries: dict[tuple[int, int], CycNum]) -> RhoTerms:
    return tuple(
        (ai, hi, c)
        for (ai, hi), c in sorted(entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        if not c.is_zero()
    )


def dualize_action(act: ActionTable) -> CoactionTable:
    """rho(a) = sum_i (h_i . a) (x) h_i* over the fixed basis of H."""
    K = dual_hopf(act.hopf)
    rho = []
    for a in range(act.target.dim):
        entries: dict[tuple[int, int], CycNum] = {}
        for h in range(act.hopf.dim):
            for m, c in enumerate(act.table[h][a]):
                if not c.is_zero():
                    entries[(m, h)] = c
        rho.append(_sorted_terms(entries))
    return CoactionTable(K, act.target, tuple(rho))


def dualize_coaction(co: CoactionTable) -> ActionTable:
    """h* . a = h*(a^1) a^0, an action of the dual Hopf algebra."""
    K = dual_hopf(co.hopf)
    dim_h = co.hopf.dim
    dim_a = co.target.dim
    conductor = co.target.conductor
    table = []
    for h in range(dim_h):
        row = [list(zero_vector(dim_a, conductor)) for _ in range(dim_a)]
        for a in range(dim_a):
            for ai, hi, c in co.rho[a]:
                if hi == h:
                    row[a][ai] = row[a][ai] + c
        table.append(tuple(tuple(vec) for vec in row))
    return ActionTable(K, co.target, tuple(table))


@dataclass
class CoactionReport:
    counital: bool = True
    action_report: AxiomReport = field(default_factory=AxiomReport)
    counterexample: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.counital and self.action_report.ok

    @property
    def symmetric(self) -> bool:
        return self.ok and self.action_report.pas

    @property
    def is_global(self) -> bool:
        return self.action_report.is_global

    def to_json(self) -> dict:
        return {
            "counital": self.counital,
            "ok": self.ok,
            "symmetric": self.symmetric,
            "global": self.is_global,
            "dual_action_axioms": self.action_report.to_json(),
        }


def check_partial_coaction(co: CoactionTable) -> CoactionReport:
    """Counital trace plus the dualized action axioms.

    The verdicts of the dual action over H* are reported as the
    coaction's own (duality is an equivalence at finite dimension).
    """
    report = CoactionReport()
    for a in range(co.target.dim):
        expected = basis_vector(co.target.dim, a, co.target.conductor)
        got = co.counital_trace(a)
        if got != expected:
            report.counital = False
            report.counterexample = (a, got, expected)
            break
    report.action_report = check_partial_action(dualize_coaction(co))
    return report


def transport_coaction(co: CoactionTable, mapping, new_hopf: HopfData) -> CoactionTable:
    """Apply a linear map to the H-leg of every rho term."""
    rho = []
    for terms in co.rho:
        entries: dict[tuple[int, int], CycNum] = {}
        for ai, hi, c in terms:
            image = mapping.column(hi)
            for p, mc in enumerate(image):
                if mc.is_zero():
                    continue
                key = (ai, p)
                term = c * mc
                prev = entries.get(key)
                total = term if prev is None else prev + term
                if total.is_zero():
                    entries.pop(key, None)
                else:
                    entries[key] = total
        rho.append(_sorted_terms(entries))
    return CoactionTable(new_hopf, co.target, tuple(rho))


def construct_taft_coaction(
    H: HopfData, pca: PartialCnAction, w: Vector
) -> CoactionTable:
    """The coaction dual to the constructed Taft action, transported
    along phi = psi^{-1} so it lands in T_n(q) itself:

        rho(a) = sum_{i,j} (g^i x^j . a) (x) phi((g^i x^j)*).

    Preconditions are those of construct_taft_action (the coaction-side
    condition A_1 = 0 corresponds to g . 1_A = 0).
    """
    act = construct_taft_action(H, pca, w)
    n = H.meta["n"]
    q = CycNum.zeta(n, H.meta.get("t", 1))
    phi = taft_selfdual_phi(n, q)
    return transport_coaction(dualize_action(act), phi, H)


def construct_nichols_coaction(
    H: HopfData, target: TargetAlgebra, ws: list[Vector]
) -> CoactionTable:
    """The two-term Nichols coaction family

        rho(a) = a (x) (1 + g)/2  -  sum_i w_i a (x) g x_i

    with every w_i central.  Equals the psi^{-1}-transport of the dual of
    the corresponding Nichols action (asserted by tests, not assumed).
    """
    if H.meta.get("family") != "nichols":
        raise ActionPreconditionError("hopf-family", "expected a Nichols HopfData")
    n = H.meta["n"]
    if len(ws) != n - 1:
        raise ActionPreconditionError("w-count", f"need {n - 1} central elements")
    if target.conductor != H.conductor:
        raise ActionPreconditionError("conductor-match", "conductor mismatch")
    for idx, w in enumerate(ws, start=1):
        if not is_central(target, w):
            raise ActionPreconditionError("w-central", f"w_{idx} must lie in Z(A)")
    labels = {lab: k for k, lab in enumerate(H.alg.basis_labels)}
    one_idx = labels["1"]
    g_idx = labels["g"]
    half = Rat(1, 2)
    alg = target.alg
    d = target.dim
    rho = []
    for a in range(d):
        e_a = basis_vector(d, a, target.conductor)
        entries: dict[tuple[int, int], CycNum] = {}

        def add(ai, hi, c):
            if c.is_zero():
                return
            key = (ai, hi)
            prev = entries.get(key)
            total = c if prev is None else prev + c
            if total.is_zero():
                entries.pop(key, None)
            else:
                entries[key] = total

        for m, c in enumerate(e_a):
            if not c.is_zero():
                add(m, one_idx, c.scale(half))
                add(m, g_idx, c.scale(half))
        for i, w in enumerate(ws, start=1):
            gxi = labels[f"gx{i}"]
            wa = alg.multiply(w, e_a)
            for m, c in enumerate(wa):
                add(m, gxi, -c)
        rho.append(_sorted_terms(entries))
    return CoactionTable(H, target, tuple(rho))


def rho_of_unit(co: CoactionTable) -> dict[tuple[int, int], CycNum]:
    """rho(1_A) as sparse (A-index, H-index) -> coefficient."""
    return co.rho_of_vector(co.target.unit)


def taft_coaction_Ai(co: CoactionTable, i: int) -> Vector:
    """A_i = sum_r q^{-ir} (g^r)*(1^1) 1^0, an element of A.

    On a coaction dual to a Taft action this recovers g^i . 1_A.
    """
    meta = co.hopf.meta
    if meta.get("family") != "taft":
        raise ValueError("A_i extraction requires a coaction over a Taft algebra")
    n = meta["n"]
    q = CycNum.zeta(n, meta.get("t", 1))
    P = Powers(q, order=n)
    d = co.target.dim
    out = list(zero_vector(d, co.target.conductor))
    for (ai, hi), c in rho_of_unit(co).items():
        r, j = divmod(hi, n)
        if j != 0:
            continue
        coeff = c * P(-i * r)
        out[ai] = out[ai] + coeff
    return tuple(out)


def taft_coaction_w(co: CoactionTable) -> Vector:
    """w = sum_k q^{-k} (g^k x)*(1^1) 1^0, the coaction-side x . 1_A."""
    meta = co.hopf.meta
    if meta.get("family") != "taft":
        raise ValueError("w extraction requires a coaction over a Taft algebra")
    n = meta["n"]
    q = CycNum.zeta(n, meta.get("t", 1))
    P = Powers(q, order=n)
    d = co.target.dim
    out = list(zero_vector(d, co.target.conductor))
    for (ai, hi), c in rho_of_unit(co).items():
        k, j = divmod(hi, n)
        if j != 1:
            continue
        out[ai] = out[ai] + c * P(-k)
    return tuple(out)


def nichols_coaction_A1(co: CoactionTable) -> Vector:
    """A_1 = (1* - g*)(1^1) 1^0 for a coaction over a Nichols algebra."""
    labels = {lab: k for k, lab in enumerate(co.hopf.alg.basis_labels)}
    one_idx = labels["1"]
    g_idx = labels["g"]
    d = co.target.dim
    out = list(zero_vector(d, co.target.conductor))
    for (ai, hi), c in rho_of_unit(co).items():
        if hi == one_idx:
            out[ai] = out[ai] + c
        elif hi == g_idx:
            out[ai] = out[ai] - c
    return tuple(out)


def nichols_coaction_wi(co: CoactionTable, i: int) -> Vector:
    """w_i = (x_i* - (g x_i)*)(1^1) 1^0."""
    labels = {lab: k for k, lab in enumerate(co.hopf.alg.basis_labels)}
    xi = labels[f"x{i}"]
    gxi = labels[f"gx{i}"]
    d = co.target.dim
    out = list(zero_vector(d, co.target.conductor))
    for (ai, hi), c in rho_of_unit(co).items():
        if hi == xi:
            out[ai] = out[ai] + c
        elif hi == gxi:
            out[ai] = out[ai] - c
    return tuple(out)

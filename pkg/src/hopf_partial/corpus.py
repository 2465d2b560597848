"""Named example instances and the admissible construction menu.

Each entry pairs a constructor invocation with an independent
transcription of the corresponding printed table, so regeneration is a
genuine two-route check: the closed construction formula on one side,
the literal display on the other.

Example names: h4, t3, t4 (degenerate g^2 . 1 = 0 case), t4-general
(explicit order-2 automorphism at g^2), t4-g2-identity, nichols:n, and
the -coaction variants.  The nichols:3 coaction display in circulation
shows a (1 + g + g^2)/3 leading term although g^2 = 1 in that algebra;
the general two-term formula with (1 + g)/2 is what gets built, and the
discrepancy is surfaced as a note instead of being reproduced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, Powers, Rat, RootOfUnity
from .hopf import HopfData, nichols_algebra, taft_algebra
from .linalg import Matrix, Vector, basis_vector, zero_vector
from .paction import (
    ActionTable,
    PartialCnAction,
    check_partial_action,
    cn_action_from_matrices,
    construct_nichols_action,
    construct_taft_action,
    delta_cn_action,
)
from .pcoaction import (
    CoactionTable,
    check_partial_coaction,
    construct_nichols_coaction,
    construct_taft_coaction,
)
from .targets import (
    TargetAlgebra,
    field_target,
    matrix_target,
    trunc_poly_target,
)


@dataclass
class PaperExample:
    name: str
    kind: str  # "action" | "coaction"
    built: ActionTable | CoactionTable
    expected: ActionTable | CoactionTable | None
    notes: list[str]

    @property
    def matches_display(self) -> bool:
        if self.expected is None:
            return True
        if self.kind == "action":
            return self.built.table == self.expected.table
        return self.built.rho == self.expected.rho

    def check(self):
        if self.kind == "action":
            return check_partial_action(self.built)
        return check_partial_coaction(self.built)


# -- helpers -------------------------------------------------------------------


def _rows_to_table(H: HopfData, A: TargetAlgebra, rows: dict[str, list[Vector]]) -> ActionTable:
    """rows maps basis labels of H to per-A-basis image vectors."""
    d = A.dim
    zero_row = [zero_vector(d, A.conductor)] * d
    table = []
    for label in H.alg.basis_labels:
        table.append(tuple(rows.get(label, zero_row)))
    return ActionTable(H, A, tuple(table))


def _coaction_from_clusters(
    H: HopfData, A: TargetAlgebra, clusters: list[tuple[list[Vector], list[tuple[str, CycNum]]]]
) -> CoactionTable:
    """Each cluster is (per-basis A-vectors, H-part as label/coeff terms)."""
    labels = {lab: k for k, lab in enumerate(H.alg.basis_labels)}
    d = A.dim
    rho = []
    for a in range(d):
        entries: dict[tuple[int, int], CycNum] = {}
        for avecs, hterms in clusters:
            avec = avecs[a]
            for m, c in enumerate(avec):
                if c.is_zero():
                    continue
                for hlabel, hcoeff in hterms:
                    if hcoeff.is_zero():
                        continue
                    key = (m, labels[hlabel])
                    term = c * hcoeff
                    prev = entries.get(key)
                    total = term if prev is None else prev + term
                    if total.is_zero():
                        entries.pop(key, None)
                    else:
                        entries[key] = total
        rho.append(
            tuple(
                (ai, hi, c)
                for (ai, hi), c in sorted(entries.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            )
        )
    return CoactionTable(H, A, tuple(rho))


def parity_matrix(A: TargetAlgebra) -> Matrix:
    """The order-2 automorphism z |-> -z of k[z]/(z^m), as a matrix."""
    d = A.dim
    one = CycNum.one(A.conductor)
    rows = []
    for r in range(d):
        row = [CycNum.zero(A.conductor)] * d
        row[r] = one if r % 2 == 0 else -one
        rows.append(tuple(row))
    return tuple(rows)


def conjugation_by_diag_matrix(A: TargetAlgebra) -> Matrix:
    """Conjugation by diag(1, -1) on M_2(k): e12, e21 flip sign."""
    if A.dim != 4:
        raise ValueError("expected the 2x2 matrix algebra")
    one = CycNum.one(A.conductor)
    signs = [one, -one, -one, one]
    rows = []
    for r in range(4):
        row = [CycNum.zero(A.conductor)] * 4
        row[r] = signs[r]
        rows.append(tuple(row))
    return tuple(rows)


def identity_matrix_of(A: TargetAlgebra) -> Matrix:
    return tuple(basis_vector(A.dim, i, A.conductor) for i in range(A.dim))


def g2_identity_cn_action(A: TargetAlgebra) -> PartialCnAction:
    return cn_action_from_matrices(4, A, {2: identity_matrix_of(A)})


def g2_parity_cn_action(A: TargetAlgebra) -> PartialCnAction:
    return cn_action_from_matrices(4, A, {2: parity_matrix(A)})


def g2_conjugation_cn_action(A: TargetAlgebra) -> PartialCnAction:
    return cn_action_from_matrices(4, A, {2: conjugation_by_diag_matrix(A)})


# -- paper action displays -------------------------------------------------------


def h4_action_example(A: TargetAlgebra, w: Vector) -> PaperExample:
    """1.a = a, g.a = 0, x.a = wa, gx.a = aw, with w^2 central."""
    H = taft_algebra(2, RootOfUnity(2))
    act = construct_taft_action(H, delta_cn_action(2, A), w)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    rows = {
        "1": basis,
        "x": [alg.multiply(w, e) for e in basis],
        "gx": [alg.multiply(e, w) for e in basis],
    }
    expected = _rows_to_table(H, A, rows)
    return PaperExample("h4", "action", act, expected, [])


def t3_action_example(A: TargetAlgebra, w: Vector, t: int = 1) -> PaperExample:
    """The eight printed rows of the degenerate T_3(q) family."""
    H = taft_algebra(3, RootOfUnity(3, t))
    q = CycNum.zeta(3, t)
    act = construct_taft_action(H, delta_cn_action(3, A), w)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    w2 = alg.multiply(w, w)
    rows = {
        "1": basis,
        "x": [alg.multiply(w, e) for e in basis],
        "g^2x": [tuple(-(q * c) for c in alg.multiply(e, w)) for e in basis],
        "x^2": [alg.multiply(w2, e) for e in basis],
        "gx^2": [alg.multiply(e, w2) for e in basis],
        "g^2x^2": [alg.multiply(alg.multiply(w, e), w) for e in basis],
    }
    expected = _rows_to_table(H, A, rows)
    return PaperExample("t3", "action", act, expected, [])


def t4_general_rows(
    A: TargetAlgebra, w: Vector, alpha: Matrix, q: CycNum
) -> dict[str, list[Vector]]:
    """The sixteen printed rows of the T_4 family with automorphism data
    at g^2 (alpha restricted to D_{g^2}) and g^2 . w = -(g^2 . 1_A) w."""
    from .linalg import mat_vec

    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    al = [mat_vec(alpha, e) for e in basis]  # g^2 . a
    one = CycNum.one(A.conductor)

    def mul(*vs):
        acc = vs[0]
        for v in vs[1:]:
            acc = alg.multiply(acc, v)
        return acc

    def neg(v):
        return tuple(-c for c in v)

    def scale(c, v):
        return tuple(c * x for x in v)

    def sub(u, v):
        return tuple(a - b for a, b in zip(u, v))

    def add(u, v):
        return tuple(a + b for a, b in zip(u, v))

    w2 = mul(w, w)
    w3 = mul(w2, w)
    one_minus_q = one - q
    return {
        "1": basis,
        "g^2": al,
        "x": [mul(w, e) for e in basis],
        "gx": [scale(q, mul(al[a], w)) for a in range(d)],
        "g^2x": [neg(mul(w, al[a])) for a in range(d)],
        "g^3x": [scale(-q, mul(basis[a], w)) for a in range(d)],
        "x^2": [sub(mul(w2, basis[a]), scale(q, mul(al[a], w2))) for a in range(d)],
        "gx^2": [scale(one_minus_q, mul(w, al[a], w)) for a in range(d)],
        "g^2x^2": [sub(mul(w2, al[a]), scale(q, mul(basis[a], w2))) for a in range(d)],
        "g^3x^2": [scale(one_minus_q, mul(w, basis[a], w)) for a in range(d)],
        "x^3": [sub(mul(w3, basis[a]), mul(w, al[a], w2)) for a in range(d)],
        "gx^3": [add(neg(mul(w2, al[a], w)), mul(basis[a], w3)) for a in range(d)],
        "g^2x^3": [add(neg(mul(w3, al[a])), mul(w, basis[a], w2)) for a in range(d)],
        "g^3x^3": [sub(mul(w2, basis[a], w), mul(al[a], w3)) for a in range(d)],
    }


def t4_general_example(
    A: TargetAlgebra, w: Vector, pca: PartialCnAction, t: int = 1
) -> PaperExample:
    H = taft_algebra(4, RootOfUnity(4, t))
    q = CycNum.zeta(4, t)
    act = construct_taft_action(H, pca, w)
    expected = _rows_to_table(H, A, t4_general_rows(A, w, pca.gi_action[2], q))
    return PaperExample("t4-general", "action", act, expected, [])


def t4_degenerate_example(A: TargetAlgebra, w: Vector, t: int = 1) -> PaperExample:
    """Subcase g^2 . 1_A = 0 of the T_4 family (the delta C_4 action)."""
    H = taft_algebra(4, RootOfUnity(4, t))
    q = CycNum.zeta(4, t)
    act = construct_taft_action(H, delta_cn_action(4, A), w)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    one = CycNum.one(A.conductor)

    def mul(*vs):
        acc = vs[0]
        for v in vs[1:]:
            acc = alg.multiply(acc, v)
        return acc

    w2 = mul(w, w)
    w3 = mul(w2, w)
    rows = {
        "1": basis,
        "x": [mul(w, e) for e in basis],
        "g^3x": [tuple(-(q * c) for c in mul(e, w)) for e in basis],
        "x^2": [mul(w2, e) for e in basis],
        "g^2x^2": [tuple(-(q * c) for c in mul(e, w2)) for e in basis],
        "g^3x^2": [tuple((one - q) * c for c in mul(w, e, w)) for e in basis],
        "x^3": [mul(w3, e) for e in basis],
        "gx^3": [mul(e, w3) for e in basis],
        "g^2x^3": [mul(w, e, w2) for e in basis],
        "g^3x^3": [mul(w2, e, w) for e in basis],
    }
    expected = _rows_to_table(H, A, rows)
    return PaperExample("t4", "action", act, expected, [])


def t4_g2_identity_example(A: TargetAlgebra, t: int = 1) -> PaperExample:
    """Subcase alpha_{g^2} = id: w = 0 is forced and every j >= 1 row dies."""
    H = taft_algebra(4, RootOfUnity(4, t))
    pca = g2_identity_cn_action(A)
    w0 = zero_vector(A.dim, A.conductor)
    act = construct_taft_action(H, pca, w0)
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    rows = {"1": basis, "g^2": basis}
    expected = _rows_to_table(H, A, rows)
    return PaperExample(
        "t4-g2-identity",
        "action",
        act,
        expected,
        ["x . 1_A = 0 is forced because g^2 acts as the identity"],
    )


def nichols_action_example(n: int, A: TargetAlgebra, ws: list[Vector]) -> PaperExample:
    H = nichols_algebra(n)
    act = construct_nichols_action(H, A, ws)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    rows = {"1": basis}
    for i in range(1, n):
        imgs = [alg.multiply(ws[i - 1], e) for e in basis]
        rows[f"x{i}"] = imgs
        rows[f"gx{i}"] = imgs
    expected = _rows_to_table(H, A, rows)
    return PaperExample(f"nichols:{n}", "action", act, expected, [])


# -- paper coaction displays -----------------------------------------------------


def h4_coaction_example(A: TargetAlgebra, w: Vector) -> PaperExample:
    """rho(a) = a x (1+g)/2 + wa x (x-gx)/2 - aw x (x+gx)/2."""
    H = taft_algebra(2, RootOfUnity(2))
    co = construct_taft_coaction(H, delta_cn_action(2, A), w)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    one = CycNum.one(A.conductor)
    half = one.scale(Rat(1, 2))
    clusters = [
        (basis, [("1", half), ("g", half)]),
        ([alg.multiply(w, e) for e in basis], [("x", half), ("gx", -half)]),
        ([alg.multiply(e, w) for e in basis], [("x", -half), ("gx", -half)]),
    ]
    expected = _coaction_from_clusters(H, A, clusters)
    return PaperExample("h4-coaction", "coaction", co, expected, [])


def t3_coaction_example(A: TargetAlgebra, w: Vector, t: int = 1) -> PaperExample:
    """The six printed tensor clusters of the degenerate T_3(q) coaction."""
    H = taft_algebra(3, RootOfUnity(3, t))
    q = CycNum.zeta(3, t)
    co = construct_taft_coaction(H, delta_cn_action(3, A), w)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    one = CycNum.one(A.conductor)
    third = Rat(1, 3)
    q2 = q * q
    w2 = alg.multiply(w, w)

    def sc(c):
        return c.scale(third)

    clusters = [
        (basis, [("1", sc(one)), ("g", sc(one)), ("g^2", sc(one))]),
        (
            [alg.multiply(w, e) for e in basis],
            [("x", sc(one)), ("gx", sc(q)), ("g^2x", sc(q2))],
        ),
        (
            [tuple(-c for c in alg.multiply(e, w)) for e in basis],
            [("x", sc(one)), ("gx", sc(one)), ("g^2x", sc(one))],
        ),
        (
            [tuple(-c for c in alg.multiply(w2, e)) for e in basis],
            [("x^2", sc(q2)), ("gx^2", sc(q2 * q2)), ("g^2x^2", sc(q2 * q))],
        ),
        (
            [tuple(-c for c in alg.multiply(e, w2)) for e in basis],
            [("x^2", sc(q)), ("gx^2", sc(q)), ("g^2x^2", sc(q))],
        ),
        (
            [tuple(-c for c in alg.multiply(alg.multiply(w, e), w)) for e in basis],
            [("x^2", sc(one)), ("gx^2", sc(q)), ("g^2x^2", sc(q2))],
        ),
    ]
    expected = _coaction_from_clusters(H, A, clusters)
    return PaperExample("t3-coaction", "coaction", co, expected, [])


def t4_coaction_example(A: TargetAlgebra, t: int = 1) -> PaperExample:
    """rho(a) = a x (1 + g^2)/2, from the g^2-identity instance."""
    H = taft_algebra(4, RootOfUnity(4, t))
    pca = g2_identity_cn_action(A)
    co = construct_taft_coaction(H, pca, zero_vector(A.dim, A.conductor))
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    half = CycNum.one(A.conductor).scale(Rat(1, 2))
    clusters = [(basis, [("1", half), ("g^2", half)])]
    expected = _coaction_from_clusters(H, A, clusters)
    return PaperExample("t4-coaction", "coaction", co, expected, [])


def nichols_coaction_example(n: int, A: TargetAlgebra, ws: list[Vector]) -> PaperExample:
    """rho(a) = a x (1+g)/2 - sum_i w_i a x g x_i."""
    H = nichols_algebra(n)
    co = construct_nichols_coaction(H, A, ws)
    alg = A.alg
    d = A.dim
    basis = [basis_vector(d, a, A.conductor) for a in range(d)]
    half = CycNum.one(A.conductor).scale(Rat(1, 2))
    clusters = [(basis, [("1", half), ("g", half)])]
    for i in range(1, n):
        clusters.append(
            (
                [tuple(-c for c in alg.multiply(ws[i - 1], e)) for e in basis],
                [(f"gx{i}", CycNum.one(A.conductor))],
            )
        )
    expected = _coaction_from_clusters(H, A, clusters)
    notes = []
    if n == 3:
        notes.append(
            "the printed n=3 example shows a (1+g+g^2)/3 leading term, but "
            "g^2 = 1 in this algebra; the general (1+g)/2 formula is built "
            "and the display is treated as a suspected typo"
        )
    return PaperExample(f"nichols-coaction:{n}", "coaction", co, expected, notes)


# -- the documented admissible menu ----------------------------------------------


def taft_menu(n: int, target_name: str):
    """Admissible (target, pca, w) triples for the classification sweep.

    Every n gets the delta C_n action (only g^0 acts, as the identity)
    with target-specific w choices; n = 4 adds the three partial actions
    with a genuine order-2 automorphism at g^2 (identity, truncated
    polynomial parity, matrix conjugation by diag(1,-1)) and their
    compatible w (forced to 0 for the identity, odd for parity,
    antidiagonal for conjugation).  Admissibility of each entry is
    enforced by the constructor preconditions.
    """
    conductor = n

    def tp(m):
        return trunc_poly_target(m, conductor)

    entries = []
    if target_name == "field":
        A = field_target(conductor)
        for wval in (0, 1, Rat(3, 2)):
            w = (CycNum.from_rational(wval, conductor),)
            entries.append((f"delta/w={wval}", A, delta_cn_action(n, A), w))
    elif target_name.startswith("truncpoly:"):
        m = int(target_name.split(":")[1])
        A = tp(m)
        z = basis_vector(m, 1, conductor) if m >= 2 else zero_vector(m, conductor)
        entries.append(("delta/w=0", A, delta_cn_action(n, A), zero_vector(m, conductor)))
        entries.append(("delta/w=z", A, delta_cn_action(n, A), z))
        if m >= 3:
            w = tuple(
                CycNum.one(conductor) if k == 1 else
                (CycNum.from_rational(2, conductor) if k == 2 else CycNum.zero(conductor))
                for k in range(m)
            )
            entries.append(("delta/w=z+2z^2", A, delta_cn_action(n, A), w))
        if n == 4 and m >= 2:
            entries.append(("g2-parity/w=z", A, g2_parity_cn_action(A), z))
    elif target_name == "matrix:2":
        A = matrix_target(2, conductor)
        e12 = basis_vector(4, 1, conductor)
        e21 = basis_vector(4, 2, conductor)
        two_id = tuple(c + c for c in A.unit)
        entries.append(("delta/w=0", A, delta_cn_action(n, A), zero_vector(4, conductor)))
        entries.append(("delta/w=e12", A, delta_cn_action(n, A), e12))
        entries.append(("delta/w=2I", A, delta_cn_action(n, A), two_id))
        if n % 2 == 0:
            diag = tuple(
                CycNum.one(conductor) if k == 0 else
                (-CycNum.one(conductor) if k == 3 else CycNum.zero(conductor))
                for k in range(4)
            )
            entries.append(("delta/w=diag(1,-1)", A, delta_cn_action(n, A), diag))
        if n == 4:
            entries.append(("g2-conj/w=e12", A, g2_conjugation_cn_action(A), e12))
            entries.append(("g2-conj/w=e21", A, g2_conjugation_cn_action(A), e21))
            entries.append(
                ("g2-conj/w=e12+e21", A, g2_conjugation_cn_action(A),
                 tuple(a + b for a, b in zip(e12, e21)))
            )
    else:
        raise ValueError(f"no menu for target {target_name!r}")
    if n == 4:
        # the alpha = id instance exists on every target, with w forced to 0
        A0 = entries[0][1]
        entries.append(
            ("g2-identity/w=0", A0, g2_identity_cn_action(A0), zero_vector(A0.dim, conductor))
        )
    return entries


MENU_TARGETS = ("field", "truncpoly:2", "truncpoly:3", "truncpoly:4", "matrix:2")

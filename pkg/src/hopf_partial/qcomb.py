"""q-numbers, q-factorials, q-binomials and the identity suite.

The q-binomial is defined by the q-Pascal recursion (the definition of
record here, since the factorial quotient degenerates at roots of unity
where (n-1)_q! = 0).  Every identity used by the action/coaction
constructions is checkable exactly over an explicit finite grid; the
grids bound all free parameters by the sweep modulus n, which covers
every instantiation the library performs.

Identity tags and their statements (q-binomial written C(n, m; q)):

  FACTORIAL_FORM   C(n,m;q) = (n)_q! / ((n-m)_q! (m)_q!)        [needs (n-1)_q! != 0]
  RADFORD          C(n,m;q) = C(n_R,m_R;q) * binom(n_D,m_D)     [q of finite order N,
                   n = n_D N + n_R, m = m_D N + m_R]
  ALT_SUM          sum_k (-1)^k C(m,k;q) q^{k(k+1)/2 - km} = 0  [m >= 1]
  INVERSION        C(n,m;q) = q^{m(n-m)} C(n,m;q^{-1})
  PASCAL_VARIANT   C(n,m;q) = C(n-1,m;q) + q^{n-m} C(n-1,m-1;q)
  PROD_QBINOM      C(j,k;q) C(j-k,i-k;q) = C(j,i;q) C(i,k;q)    [k <= j]
  SUM_SHIFT        sum_l (-1)^l q^{sl+l(l+1)/2} C(j,l;q) C(j+t-l,j+s;q) = C(t,s;q)
  TRIPLE_SUM       q^{s(i-j)} sum_l C(j,l;q) C(j+t-l,i+s-l;q) C(l,i;q)
                     (-1)^{i-l} q^{(i-l)(i-l+1)/2} = C(j,i;q) C(t,s;q)
  STAR_SYM         (1-q^{t-l}) C(t,l;q) + q^{l+1} C(t,l+1;q) = C(t,l+1;q)
                   [0 <= l < t, (t-1)_q! != 0]
  ACTION_OF_ACTION sum_s (-1)^{m-s} q^{s(s+1)/2-sm} C(m,s;q) C(s+t,l;q)
                     = q^{m(m+1)/2+m(t-l)} C(t,l-m;q)
  Q_N_UNITY        (-1)^i q^{i(i+1)/2} C(n-1,i;q) = 1           [q primitive of order n,
                   0 <= i < n; see note below]
  SYM_N            (-1)^l q^{tl-l(l-1)/2} C(n+l-t-1,l;q) = C(t,l;q)
                   [q primitive of order n, 0 <= l <= t < n]
  R_L_1            sum_s (-1)^s q^{s(s+1)/2-sm} C(t,m-s;q) C(s,t+l-n;q)
                     = (-1)^m q^{-m(m-1)/2-t(t+l-m)} C(m-t+n,l;q)
                   [q primitive of order n, t,l < n, n <= t+l, 0 <= m < t]
  R_L_2            sum_s (-1)^s q^{s(s+1)/2-s(l-k)} C(n+l-k,s;q) = C(k,l;q)
                   [q primitive of order n, l <= k < n]
  R_L_3            sum_s (-1)^s q^{s(s+1)/2-s(l-k)} C(n+m-k,s;q) C(n+m-s,n+l-s;q)
                     = C(k,l;q)
                   [q primitive of order n, l <= k < n, l <= m < n]

Note on Q_N_UNITY: the identity is false for non-primitive n-th roots
(already for q = -1, n = 4, i = 2), so primitivity of order exactly n is
enforced as a precondition even though it can be read more loosely.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import comb

from .cyclotomic import (
    CycNum,
    Powers,
    multiplicative_order,
    primitive_exponents,
)


class PreconditionError(ValueError):
    """A parameter tuple violates the hypotheses of the cited identity."""


_local = threading.local()


def _binom_cache(q: CycNum) -> dict:
    tables = getattr(_local, "qbinom", None)
    if tables is None:
        tables = {}
        _local.qbinom = tables
    table = tables.get(q)
    if table is None:
        table = {}
        tables[q] = table
    return table


def q_number(n: int, q: CycNum) -> CycNum:
    """(n)_q = 1 + q + ... + q^{n-1}, with (0)_q = 0."""
    if n < 0:
        raise ValueError("q_number needs n >= 0")
    acc = CycNum.zero(q.conductor)
    power = CycNum.one(q.conductor)
    for _ in range(n):
        acc = acc + power
        power = power * q
    return acc


def q_factorial(n: int, q: CycNum) -> CycNum:
    """(n)_q! = (n)_q (n-1)_q!, with (0)_q! = 1."""
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    acc = CycNum.one(q.conductor)
    for k in range(1, n + 1):
        acc = acc * q_number(k, q)
    return acc


def q_binomial(n: int, m: int, q: CycNum, use_cache: bool = True) -> CycNum:
    """Gaussian binomial C(n, m; q) by the q-Pascal recursion.

    Zero for m < 0 or m > n.  Valid at every nonzero q, including q = 1
    (ordinary binomials) and roots of unity.
    """
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if m < 0 or m > n:
        return CycNum.zero(q.conductor)
    cache = _binom_cache(q) if use_cache else {"rows": []}
    rows = cache.get("rows")
    if rows is None:
        rows = []
        cache["rows"] = rows
    one = CycNum.one(q.conductor)
    if not rows:
        rows.append([one])
    # extend the Pascal table by rows; depth stays flat
    while len(rows) <= n:
        prev = rows[-1]
        row = len(rows)
        qpow = one
        cur = [one]
        for col in range(1, row):
            qpow = qpow * q
            cur.append(prev[col - 1] + qpow * prev[col])
        cur.append(one)
        rows.append(cur)
    return rows[n][m]


@dataclass(frozen=True)
class QBinomKey:
    """A memo key: C(upper, lower; at)."""

    upper: int
    lower: int
    at: CycNum

    def value(self) -> CycNum:
        return q_binomial(self.upper, self.lower, self.at)


@dataclass(frozen=True)
class IdentityId:
    tag: str
    params: tuple[int, ...]


@dataclass
class IdentityResult:
    identity: IdentityId
    ok: bool
    lhs: CycNum
    rhs: CycNum

    @property
    def value(self) -> CycNum:
        """The common value when the identity holds."""
        if not self.ok:
            raise ValueError("identity failed; no common value")
        return self.lhs


def _require(cond: bool, tag: str, message: str):
    if not cond:
        raise PreconditionError(f"{tag}: {message}")


def _order_or_fail(tag: str, q: CycNum, n: int) -> int:
    order = multiplicative_order(q)
    _require(order == n, tag, f"q must be a primitive root of unity of order {n}")
    return order


def _tri(k: int) -> int:
    """k(k+1)/2 for any integer k (always integral)."""
    return k * (k + 1) // 2


# -- identity evaluators: return (lhs, rhs) ------------------------------------

def _ev_factorial_form(params, q, P):
    n, m = params
    _require(n >= 1, "FACTORIAL_FORM", "needs n >= 1")
    _require(0 < m < n, "FACTORIAL_FORM", "needs 0 < m < n")
    _require(not q_factorial(n - 1, q).is_zero(), "FACTORIAL_FORM", "(n-1)_q! != 0 required")
    lhs = q_binomial(n, m, q)
    rhs = q_factorial(n, q) / (q_factorial(n - m, q) * q_factorial(m, q))
    return lhs, rhs


def _ev_radford(params, q, P):
    n, m = params
    _require(n >= 0 and 0 <= m <= n, "RADFORD", "needs 0 <= m <= n")
    order = multiplicative_order(q)
    _require(order is not None, "RADFORD", "q must be a root of unity")
    nd, nr = divmod(n, order)
    md, mr = divmod(m, order)
    lhs = q_binomial(n, m, q)
    rhs = q_binomial(nr, mr, q).scale(comb(nd, md) if md <= nd else 0)
    return lhs, rhs


def _ev_alt_sum(params, q, P):
    (m,) = params
    _require(m >= 1, "ALT_SUM", "needs m >= 1")
    acc = CycNum.zero(q.conductor)
    for k in range(m + 1):
        term = q_binomial(m, k, q) * P(_tri(k) - k * m)
        acc = acc + (term if k % 2 == 0 else -term)
    return acc, CycNum.zero(q.conductor)


def _ev_inversion(params, q, P):
    n, m = params
    _require(n >= 0, "INVERSION", "needs n >= 0")
    lhs = q_binomial(n, m, q)
    qinv = q.inv()
    rhs = P(m * (n - m)) * q_binomial(n, m, qinv)
    return lhs, rhs


def _ev_pascal_variant(params, q, P):
    n, m = params
    _require(n >= 1, "PASCAL_VARIANT", "needs n >= 1")
    _require(0 <= m <= n, "PASCAL_VARIANT", "needs 0 <= m <= n")
    lhs = q_binomial(n, m, q)
    rhs = q_binomial(n - 1, m, q) + P(n - m) * q_binomial(n - 1, m - 1, q)
    return lhs, rhs


def _ev_prod_qbinom(params, q, P):
    j, k, i = params
    _require(0 <= k <= j, "PROD_QBINOM", "needs 0 <= k <= j")
    _require(i >= 0, "PROD_QBINOM", "needs i >= 0")
    lhs = q_binomial(j, k, q) * q_binomial(j - k, i - k, q)
    rhs = q_binomial(j, i, q) * q_binomial(i, k, q)
    return lhs, rhs


def _ev_sum_shift(params, q, P):
    j, s, t = params
    _require(min(j, s, t) >= 0, "SUM_SHIFT", "needs j, s, t >= 0")
    acc = CycNum.zero(q.conductor)
    for l in range(j + 1):
        term = P(s * l + _tri(l)) * q_binomial(j, l, q) * q_binomial(j + t - l, j + s, q)
        acc = acc + (term if l % 2 == 0 else -term)
    return acc, q_binomial(t, s, q)


def _ev_triple_sum(params, q, P):
    i, j, s, t = params
    _require(min(i, j, s, t) >= 0, "TRIPLE_SUM", "needs i, j, s, t >= 0")
    acc = CycNum.zero(q.conductor)
    for l in range(j + 1):
        d = i - l
        term = (
            q_binomial(j, l, q)
            * q_binomial(j + t - l, i + s - l, q)
            * q_binomial(l, i, q)
            * P(_tri(d))  # d(d+1)/2 is integral for signed d too
        )
        acc = acc + (term if d % 2 == 0 else -term)
    lhs = P(s * (i - j)) * acc
    rhs = q_binomial(j, i, q) * q_binomial(t, s, q)
    return lhs, rhs


def _ev_star_sym(params, q, P):
    t, l = params
    _require(0 <= l < t, "STAR_SYM", "needs 0 <= l < t")
    _require(not q_factorial(t - 1, q).is_zero(), "STAR_SYM", "(t-1)_q! != 0 required")
    one = CycNum.one(q.conductor)
    lhs = (one - P(t - l)) * q_binomial(t, l, q) + P(l + 1) * q_binomial(t, l + 1, q)
    rhs = q_binomial(t, l + 1, q)
    return lhs, rhs


def _ev_action_of_action(params, q, P):
    t, l, m = params
    _require(min(t, l, m) >= 0, "ACTION_OF_ACTION", "needs t, l, m >= 0")
    acc = CycNum.zero(q.conductor)
    for s in range(m + 1):
        term = P(_tri(s) - s * m) * q_binomial(m, s, q) * q_binomial(s + t, l, q)
        acc = acc + (term if (m - s) % 2 == 0 else -term)
    rhs = P(_tri(m) + m * (t - l)) * q_binomial(t, l - m, q)
    return acc, rhs


def _ev_q_n_unity(params, q, P):
    n, i = params
    _order_or_fail("Q_N_UNITY", q, n)
    _require(0 <= i < n, "Q_N_UNITY", "needs 0 <= i < n")
    term = P(_tri(i)) * q_binomial(n - 1, i, q)
    lhs = term if i % 2 == 0 else -term
    return lhs, CycNum.one(q.conductor)


def _ev_sym_n(params, q, P):
    n, t, l = params
    _order_or_fail("SYM_N", q, n)
    _require(0 <= l <= t < n, "SYM_N", "needs 0 <= l <= t < n")
    term = P(t * l - _tri(l - 1)) * q_binomial(n + l - t - 1, l, q)
    lhs = term if l % 2 == 0 else -term
    return lhs, q_binomial(t, l, q)


def _ev_r_l_1(params, q, P):
    n, t, l, m = params
    _order_or_fail("R_L_1", q, n)
    _require(0 <= t < n and 0 <= l < n, "R_L_1", "needs t, l < n")
    _require(n <= t + l, "R_L_1", "needs n <= t + l")
    _require(0 <= m < t, "R_L_1", "needs 0 <= m < t")
    acc = CycNum.zero(q.conductor)
    for s in range(m + 1):
        term = P(_tri(s) - s * m) * q_binomial(t, m - s, q) * q_binomial(s, t + l - n, q)
        acc = acc + (term if s % 2 == 0 else -term)
    rhs = P(-_tri(m - 1) - t * (t + l - m)) * q_binomial(m - t + n, l, q)
    if m % 2 == 1:
        rhs = -rhs
    return acc, rhs


def _ev_r_l_2(params, q, P):
    n, k, l = params
    _order_or_fail("R_L_2", q, n)
    _require(0 <= l <= k < n, "R_L_2", "needs l <= k < n")
    acc = CycNum.zero(q.conductor)
    for s in range(l + 1):
        term = P(_tri(s) - s * (l - k)) * q_binomial(n + l - k, s, q)
        acc = acc + (term if s % 2 == 0 else -term)
    return acc, q_binomial(k, l, q)


def _ev_r_l_3(params, q, P):
    n, k, l, m = params
    _order_or_fail("R_L_3", q, n)
    _require(0 <= l <= k < n, "R_L_3", "needs l <= k < n")
    _require(l <= m < n, "R_L_3", "needs l <= m < n")
    acc = CycNum.zero(q.conductor)
    for s in range(m + 1):
        term = (
            P(_tri(s) - s * (l - k))
            * q_binomial(n + m - k, s, q)
            * q_binomial(n + m - s, n + l - s, q)
        )
        acc = acc + (term if s % 2 == 0 else -term)
    return acc, q_binomial(k, l, q)


_EVALUATORS = {
    "FACTORIAL_FORM": (_ev_factorial_form, 2),
    "RADFORD": (_ev_radford, 2),
    "ALT_SUM": (_ev_alt_sum, 1),
    "INVERSION": (_ev_inversion, 2),
    "PASCAL_VARIANT": (_ev_pascal_variant, 2),
    "PROD_QBINOM": (_ev_prod_qbinom, 3),
    "SUM_SHIFT": (_ev_sum_shift, 3),
    "TRIPLE_SUM": (_ev_triple_sum, 4),
    "STAR_SYM": (_ev_star_sym, 2),
    "ACTION_OF_ACTION": (_ev_action_of_action, 3),
    "Q_N_UNITY": (_ev_q_n_unity, 2),
    "SYM_N": (_ev_sym_n, 3),
    "R_L_1": (_ev_r_l_1, 4),
    "R_L_2": (_ev_r_l_2, 3),
    "R_L_3": (_ev_r_l_3, 4),
}

IDENTITY_TAGS = tuple(_EVALUATORS)


def identity_check(ident: IdentityId, q: CycNum, powers: Powers | None = None) -> IdentityResult:
    """Evaluate both sides of the tagged identity exactly at q.

    Raises PreconditionError when the parameters violate the cited
    hypotheses; otherwise returns both side values and their comparison.
    """
    if ident.tag not in _EVALUATORS:
        raise ValueError(f"unknown identity tag {ident.tag!r}")
    if q.is_zero():
        raise ValueError("q must be nonzero")
    evaluator, arity = _EVALUATORS[ident.tag]
    if len(ident.params) != arity:
        raise PreconditionError(f"{ident.tag}: expected {arity} parameters, got {len(ident.params)}")
    if powers is None:
        powers = Powers(q)
    lhs, rhs = evaluator(ident.params, q, powers)
    return IdentityResult(ident, lhs == rhs, lhs, rhs)


# -- parameter grids -----------------------------------------------------------

def identity_grid(tag: str, n: int):
    """Yield the documented parameter grid for a tag at sweep modulus n.

    Free natural parameters range over 0..n-1 (the library never
    instantiates an identity with an exponent beyond the order of q);
    RADFORD gets upper indices up to 2n+1 so the division step k = k_D n
    + k_R is exercised with k_D in {0, 1, 2}.
    """
    if tag == "FACTORIAL_FORM":
        for upper in range(1, n + 1):
            for m in range(1, upper):
                yield (upper, m)
    elif tag == "RADFORD":
        for upper in range(2 * n + 2):
            for m in range(upper + 1):
                yield (upper, m)
    elif tag == "ALT_SUM":
        for m in range(1, 2 * n + 1):
            yield (m,)
    elif tag == "INVERSION":
        for upper in range(2 * n + 1):
            for m in range(upper + 1):
                yield (upper, m)
    elif tag == "PASCAL_VARIANT":
        for upper in range(1, 2 * n + 1):
            for m in range(upper + 1):
                yield (upper, m)
    elif tag == "PROD_QBINOM":
        for j in range(n):
            for k in range(j + 1):
                for i in range(n):
                    yield (j, k, i)
    elif tag == "SUM_SHIFT":
        for j in range(n):
            for s in range(n):
                for t in range(n):
                    yield (j, s, t)
    elif tag == "TRIPLE_SUM":
        for i in range(n):
            for j in range(n):
                for s in range(n):
                    for t in range(n):
                        yield (i, j, s, t)
    elif tag == "STAR_SYM":
        for t in range(1, n + 1):
            for l in range(t):
                yield (t, l)
    elif tag == "ACTION_OF_ACTION":
        for t in range(n + 1):
            for l in range(n + 1):
                for m in range(n + 1):
                    yield (t, l, m)
    elif tag == "Q_N_UNITY":
        for i in range(n):
            yield (n, i)
    elif tag == "SYM_N":
        for t in range(n):
            for l in range(t + 1):
                yield (n, t, l)
    elif tag == "R_L_1":
        for t in range(n):
            for l in range(n):
                if t + l < n:
                    continue
                for m in range(t):
                    yield (n, t, l, m)
    elif tag == "R_L_2":
        for k in range(n):
            for l in range(k + 1):
                yield (n, k, l)
    elif tag == "R_L_3":
        for k in range(n):
            for l in range(k + 1):
                for m in range(l, n):
                    yield (n, k, l, m)
    else:
        raise ValueError(f"unknown identity tag {tag!r}")


@dataclass
class IdentityCellReport:
    tag: str
    n: int
    t: int
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class IdentitySuiteReport:
    cells: list[IdentityCellReport]

    @property
    def ok(self) -> bool:
        return all(cell.ok for cell in self.cells)

    @property
    def checked(self) -> int:
        return sum(cell.checked for cell in self.cells)

    def counterexamples(self) -> list[dict]:
        out = []
        for cell in self.cells:
            for params, lhs, rhs in cell.failures:
                out.append(
                    {
                        "tag": cell.tag,
                        "n": cell.n,
                        "t": cell.t,
                        "params": list(params),
                        "lhs": lhs.to_json(),
                        "rhs": rhs.to_json(),
                    }
                )
        return out

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checked": self.checked,
            "cells": [
                {
                    "tag": c.tag,
                    "n": c.n,
                    "t": c.t,
                    "checked": c.checked,
                    "skipped": c.skipped,
                    "ok": c.ok,
                }
                for c in self.cells
            ],
            "counterexamples": self.counterexamples(),
        }


def check_identity_cell(tag: str, n: int, t: int) -> IdentityCellReport:
    """Run one (tag, n, primitive-exponent) cell of the sweep."""
    q = CycNum.zeta(n, t)
    powers = Powers(q, order=n if n > 1 else 1)
    report = IdentityCellReport(tag, n, t)
    for params in identity_grid(tag, n):
        ident = IdentityId(tag, tuple(params))
        try:
            result = identity_check(ident, q, powers)
        except PreconditionError:
            report.skipped += 1
            continue
        report.checked += 1
        if not result.ok:
            report.failures.append((tuple(params), result.lhs, result.rhs))
    return report


def _cell_worker(cell: tuple[str, int, int]) -> IdentityCellReport:
    return check_identity_cell(*cell)


def verify_identities(
    n_min: int = 2,
    n_max: int = 8,
    tags=None,
    workers: int = 1,
) -> IdentitySuiteReport:
    """Sweep every tag over all primitive roots of order n_min..n_max.

    Deterministic: cells are enumerated in sorted order and merged in
    that order regardless of worker count.
    """
    if tags is None:
        tags = IDENTITY_TAGS
    cells = [
        (tag, n, t)
        for tag in tags
        for n in range(n_min, n_max + 1)
        for t in primitive_exponents(n)
    ]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_cell_worker, cells))
    else:
        results = [check_identity_cell(*cell) for cell in cells]
    return IdentitySuiteReport(results)

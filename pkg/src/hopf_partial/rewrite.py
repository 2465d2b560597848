"""Normal ordering of words in algebra generators by confluent rewriting.

A presentation consists of pair rules (two adjacent generators rewrite to
a linear combination of words) and run rules (a fixed-length run of one
generator rewrites to a linear combination, possibly empty = zero).  The
Taft and Nichols relations fit this form:

    x g -> q g x,   g^n -> 1,   x^n -> 0
    x_i g -> -g x_i,   x_j x_i -> -x_i x_j (i < j),   g^2 -> 1,   x_i^2 -> 0

Rules are applied leftmost-first until every surviving word is a normal
form.  This is the only multiplication oracle used to build structure
constants; tests compare it against closed-form products.
"""

from __future__ import annotations

from .cyclotomic import CycNum

Word = tuple[str, ...]
Terms = dict[Word, CycNum]


class RewriteSystem:
    def __init__(
        self,
        conductor: int,
        pair_rules: dict[tuple[str, str], list[tuple[CycNum, Word]]],
        run_rules: dict[str, tuple[int, list[tuple[CycNum, Word]]]],
    ):
        self.conductor = conductor
        self.pair_rules = pair_rules
        self.run_rules = run_rules

    def _first_reduction(self, word: Word):
        """Leftmost applicable rule: (position, consumed, replacements)."""
        n = len(word)
        for p in range(n):
            gen = word[p]
            rule = self.run_rules.get(gen)
            if rule is not None:
                length, repl = rule
                if p + length <= n and all(word[p + k] == gen for k in range(length)):
                    return p, length, repl
            if p + 1 < n:
                pr = self.pair_rules.get((gen, word[p + 1]))
                if pr is not None:
                    return p, 2, pr
        return None

    def normal_order(self, word: Word, coeff: CycNum | None = None) -> Terms:
        """Rewrite coeff * word into a combination of normal-form words."""
        if coeff is None:
            coeff = CycNum.one(self.conductor)
        result: Terms = {}
        stack = [(word, coeff)]
        while stack:
            w, c = stack.pop()
            if c.is_zero():
                continue
            hit = self._first_reduction(w)
            if hit is None:
                prev = result.get(w)
                total = c if prev is None else prev + c
                if total.is_zero():
                    result.pop(w, None)
                else:
                    result[w] = total
                continue
            p, consumed, repl = hit
            head, tail = w[:p], w[p + consumed:]
            for rc, rw in repl:
                stack.append((head + rw + tail, c * rc))
        return result

    def multiply(self, terms_a: Terms, terms_b: Terms) -> Terms:
        """Product of two normal-form combinations, renormalized."""
        out: Terms = {}
        for wa, ca in terms_a.items():
            for wb, cb in terms_b.items():
                for w, c in self.normal_order(wa + wb, ca * cb).items():
                    prev = out.get(w)
                    total = c if prev is None else prev + c
                    if total.is_zero():
                        out.pop(w, None)
                    else:
                        out[w] = total
        return out


def taft_rewrite_system(n: int, q: CycNum) -> RewriteSystem:
    one = CycNum.one(q.conductor)
    return RewriteSystem(
        q.conductor,
        pair_rules={("x", "g"): [(q, ("g", "x"))]},
        run_rules={"g": (n, [(one, ())]), "x": (n, [])},
    )


def nichols_rewrite_system(n: int) -> RewriteSystem:
    """Relations of the 2^n-dimensional Nichols Hopf algebra (conductor 2)."""
    conductor = 2
    one = CycNum.one(conductor)
    minus = -one
    xs = [f"x{i}" for i in range(1, n)]
    pair_rules = {}
    for xi in xs:
        pair_rules[(xi, "g")] = [(minus, ("g", xi))]
    for a in range(len(xs)):
        for b in range(a):
            pair_rules[(xs[a], xs[b])] = [(minus, (xs[b], xs[a]))]
    run_rules = {"g": (2, [(one, ())])}
    for xi in xs:
        run_rules[xi] = (2, [])
    return RewriteSystem(conductor, pair_rules, run_rules)


def cyclic_rewrite_system(n: int, conductor: int = 1) -> RewriteSystem:
    one = CycNum.one(conductor)
    return RewriteSystem(conductor, pair_rules={}, run_rules={"g": (n, [(one, ())])})

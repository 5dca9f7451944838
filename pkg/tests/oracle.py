"""Independent model of H*((g # RP^m)^s) via sympy Groebner bases over GF(2).

Nothing here touches the package's multiplication tables: classes are
polynomials in variables x{u}_{j}, reduced modulo the ideal generated by
x_{u,j}^{m+1}, x_{u,j}^m + x_{v,j}^m and x_{u,j} x_{v,j} (u != v).
"""

from functools import lru_cache

import sympy


class PolyModel:
    def __init__(self, g, m, s):
        self.g, self.m, self.s = g, m, s
        self.vars = {
            (u, j): sympy.Symbol(f"x{u}_{j}")
            for j in range(1, s + 1)
            for u in range(1, g + 1)
        }
        rels = []
        for j in range(1, s + 1):
            for u in range(1, g + 1):
                rels.append(self.vars[(u, j)] ** (m + 1))
                for v in range(u + 1, g + 1):
                    rels.append(self.vars[(u, j)] * self.vars[(v, j)])
                    rels.append(self.vars[(u, j)] ** m + self.vars[(v, j)] ** m)
        self.gens = list(self.vars.values())
        self.G = sympy.groebner(rels, *self.gens, modulus=2, order="grevlex")

    def x(self, u, j):
        return self.vars[(u, j)]

    def t(self, j):
        return self.vars[(1, j)] ** self.m

    def reduce(self, expr):
        _, r = self.G.reduce(sympy.expand(expr))
        return sympy.Poly(r, *self.gens, modulus=2) if r != 0 else sympy.Poly(0, *self.gens, modulus=2)

    def equal(self, a, b):
        return self.reduce(a - b).is_zero

    def is_zero(self, a):
        return self.reduce(a).is_zero

    def factor_label_to_expr(self, label, j):
        """Factor basis label ('1', 'x2', 'x2^3', 't') placed in slot j."""
        if label == "1":
            return sympy.Integer(1)
        if label == "t":
            return self.t(j)
        base, _, power = label.partition("^")
        u = int(base[1:])
        return self.x(u, j) ** (int(power) if power else 1)

    def from_class(self, c):
        """Translate an engine ClassVector of the product ring into a polynomial."""
        pr = c.ring
        labels = pr.factor.labels
        total = sympy.Integer(0)
        for term in c.terms:
            mono = sympy.Integer(1)
            for j, i in enumerate(term, start=1):
                mono *= self.factor_label_to_expr(labels[i], j)
            total += mono
        return total

    def graded_dims(self):
        """Count standard monomials per degree: the Hilbert function of the quotient."""
        leads = [sympy.Poly(p, *self.gens).monoms(order="grevlex")[0] for p in self.G.exprs]
        top = self.s * self.m
        dims = [0] * (top + 2)
        n = len(self.gens)

        def rec(prefix, remaining_deg):
            if len(prefix) == n:
                mono = tuple(prefix)
                if not any(all(a >= b for a, b in zip(mono, lead)) for lead in leads):
                    dims[sum(mono)] += 1
                return
            for e in range(remaining_deg + 1):
                rec(prefix + [e], remaining_deg - e)

        rec([], top + 1)
        return dims


@lru_cache(maxsize=None)
def model(g, m, s):
    return PolyModel(g, m, s)

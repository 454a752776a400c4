"""Classical invariants of braid closures, computed independently of the disc model.

alexander_burau: reduced Burau determinant.
jones_kauffman: exhaustive Kauffman bracket state sum.
"""

from __future__ import annotations

import sympy as sp

from .braid_core import BraidWord, closure_info
from .errors import BudgetExceeded, NotAKnot
from .laurent import LaurentPoly1, conway_normalize

_t = sp.Symbol("t")


def reduced_burau(k: int, n: int) -> sp.Matrix:
    """Reduced Burau matrix of sigma_|k|^sign(k) in B_n, size (n-1)x(n-1)."""
    i = abs(k)
    m = sp.eye(n - 1)
    r = i - 1  # zero-based row of the generator
    if r - 1 >= 0:
        m[r, r - 1] = _t
    m[r, r] = -_t
    if r + 1 <= n - 2:
        m[r, r + 1] = 1
    if k < 0:
        m = m.inv()
    return m


def _to_laurent(expr) -> LaurentPoly1:
    expr = sp.expand(expr)
    num, den = sp.fraction(sp.together(expr))
    num = sp.Poly(sp.expand(num), _t)
    den = sp.Poly(sp.expand(den), _t)
    if len(den.terms()) != 1:
        raise ValueError(f"not a Laurent polynomial: {expr}")
    (dexp,), dc = den.terms()[0]
    out = {}
    for (e,), c in num.terms():
        q = sp.Rational(c, dc)
        if q.q != 1:
            raise ValueError("non-integral coefficient")
        out[2 * (e - dexp)] = int(q)
    return LaurentPoly1(out)


def alexander_burau(word: BraidWord) -> LaurentPoly1:
    n = word.n
    if not closure_info(word).is_knot:
        raise NotAKnot("Alexander oracle needs a knot closure")
    if n == 1:
        return LaurentPoly1.monomial(0)
    m = sp.eye(n - 1)
    for k in word.letters:
        m = m * reduced_burau(k, n)
    det = sp.factor((m - sp.eye(n - 1)).det())
    q = sp.cancel(det * (1 - _t) / (1 - _t ** n))
    return conway_normalize(_to_laurent(q))


# --- Kauffman bracket -------------------------------------------------------
# Polynomials in A are dicts {exponent: coeff}.


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def kauffman_bracket(word: BraidWord, budget: int = 24) -> dict:
    """Unnormalised bracket <D> of the closure, as {A-exponent: coeff}.

    Convention: a positive letter is drawn as a negative diagram crossing,
    so its vertical smoothing gets A^-1 and its cup/cap smoothing gets A.
    This is the choice under which s1^3 gives -x^-4 + x^-3 + x^-1.
    """
    c = len(word.letters)
    if c > budget:
        raise BudgetExceeded(f"{c} crossings exceed the state-sum budget {budget}")
    n = word.n
    L = c

    def node(level, strand):
        return (level % L) * n + strand if L else strand

    size = max(L, 1) * n
    delta = {2: -1, -2: -1}
    powers = [{0: 1}]
    total: dict = {}
    # through-strand edges that never change
    base_edges = []
    for j, k in enumerate(word.letters):
        i = abs(k) - 1
        for s in range(n):
            if s != i and s != i + 1:
                base_edges.append((node(j, s), node(j + 1, s)))
    if L == 0:
        loops = n
        return _pmul({0: 1}, _delta_power(loops - 1))
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        parent = list(range(size))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        comps = size
        a_exp = 0
        for (u, v) in base_edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        for j, k in enumerate(word.letters):
            i = abs(k) - 1
            vertical = (state >> j) & 1
            if vertical:
                pairs = ((node(j, i), node(j + 1, i)), (node(j, i + 1), node(j + 1, i + 1)))
                a_exp += -1 if k > 0 else 1
            else:
                pairs = ((node(j, i), node(j, i + 1)), (node(j + 1, i), node(j + 1, i + 1)))
                a_exp += 1 if k > 0 else -1
            for (u, v) in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        key = (a_exp, comps)
        counts[key] = counts.get(key, 0) + 1
    for (a_exp, loops), mult in counts.items():
        term = _pmul({a_exp: mult}, _delta_power(loops - 1))
        for e, v in term.items():
            total[e] = total.get(e, 0) + v
    return {k: v for k, v in total.items() if v}


def _delta_power(m: int) -> dict:
    out = {0: 1}
    for _ in range(m):
        out = _pmul(out, {2: -1, -2: -1})
    return out


def jones_kauffman(word: BraidWord, budget: int = 24) -> LaurentPoly1:
    """Jones polynomial of the closure in x = A^-4 (doubled exponents)."""
    br = kauffman_bracket(word, budget)
    w = -closure_info(word).writhe  # diagram writhe, see kauffman_bracket
    # (-A^3)^(-w)
    f = _pmul(br, {-3 * w: (-1) ** (w % 2)})
    out = {}
    for e, v in f.items():
        if e % 2:
            raise ValueError("odd A exponent after normalisation")
        # x = A^-4, so A^e = x^(-e/4); doubled exponent -e/2
        out[-e // 2] = out.get(-e // 2, 0) + v
    return LaurentPoly1(out)

"""Buchberger's algorithm over ℚ with cofactor bookkeeping.

Polynomials here are plain ``{exponent: Fraction}`` dicts; the term order is
a key function on exponents (see :data:`toricphases.sparse.ORDERS`).  Each
basis element carries its expression in terms of the input generators so
that ideal membership can be certified by re-expansion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .sparse import add_terms, mul_terms

Terms = dict
Rep = list  # one Terms cofactor per input generator


def lead(f: Terms, key: Callable) -> tuple[tuple, Fraction]:
    e = max(f, key=key)
    return e, f[e]


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _minus(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _rep_combine(rep_a: Rep, mult_a: Terms, rep_b: Rep | None = None, mult_b: Terms | None = None) -> Rep:
    out = [mul_terms(r, mult_a) for r in rep_a]
    if rep_b is not None:
        out = [add_terms(x, mul_terms(r, mult_b)) for x, r in zip(out, rep_b)]
    return out


def divide(f: Terms, basis: Sequence[Terms], key: Callable) -> tuple[list[Terms], Terms]:
    """Multivariate division: ``f = Σ q_i basis_i + r`` with no term of ``r`` reducible."""
    p = dict(f)
    r: Terms = {}
    q: list[Terms] = [{} for _ in basis]
    leads = [lead(g, key) for g in basis]
    while p:
        e, c = lead(p, key)
        for i, (le, lc) in enumerate(leads):
            if divides(le, e):
                m = _minus(e, le)
                coef = c / lc
                p = add_terms(p, mul_terms(basis[i], {m: coef}), -1)
                q[i] = add_terms(q[i], {m: coef})
                break
        else:
            r[e] = c
            del p[e]
    return q, r


def groebner(gens: Sequence[Terms], key: Callable, nvars: int) -> tuple[list[Terms], list[Rep]]:
    """Reduced Gröbner basis of ``gens`` and, for each element, its cofactors.

    ``basis[j] == Σ_i reps[j][i] * gens[i]`` holds exactly.
    """
    m = len(gens)
    one = (0,) * nvars
    G: list[Terms] = []
    R: list[Rep] = []
    for i, g in enumerate(gens):
        if g:
            G.append(dict(g))
            R.append([{one: Fraction(1)} if j == i else {} for j in range(m)])
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        pairs.sort(key=lambda ij: key(_lcm(lead(G[ij[0]], key)[0], lead(G[ij[1]], key)[0])))
        i, j = pairs.pop(0)
        (ei, ci), (ej, cj) = lead(G[i], key), lead(G[j], key)
        if all(min(x, y) == 0 for x, y in zip(ei, ej)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        L = _lcm(ei, ej)
        ui = {_minus(L, ei): 1 / ci}
        uj = {_minus(L, ej): 1 / cj}
        s = add_terms(mul_terms(G[i], ui), mul_terms(G[j], uj), -1)
        rep_s = _rep_combine(R[i], ui, R[j], {e: -c for e, c in uj.items()})
        q, r = divide(s, G, key)
        if not r:
            continue
        for qk, rk in zip(q, R):
            if qk:
                rep_s = [add_terms(x, mul_terms(y, qk), -1) for x, y in zip(rep_s, rk)]
        G.append(r)
        R.append(rep_s)
        pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return _reduce_basis(G, R, key)


def _reduce_basis(G, R, key):
    leads = [lead(g, key)[0] for g in G]
    keep = []
    for i, e in enumerate(leads):
        dominated = any(
            divides(leads[j], e) and (leads[j] != e or j < i) for j in range(len(G)) if j != i
        )
        if not dominated:
            keep.append(i)
    G = [G[i] for i in keep]
    R = [R[i] for i in keep]
    outG, outR = [], []
    for i, g in enumerate(G):
        others = [G[j] for j in range(len(G)) if j != i]
        orep = [R[j] for j in range(len(G)) if j != i]
        q, r = divide(g, others, key)
        rep = R[i]
        for qk, rk in zip(q, orep):
            if qk:
                rep = [add_terms(x, mul_terms(y, qk), -1) for x, y in zip(rep, rk)]
        _, lc = lead(r, key)
        inv = {tuple(0 for _ in next(iter(r))): 1 / lc}
        outG.append(mul_terms(r, inv))
        outR.append([mul_terms(x, inv) for x in rep])
    order = sorted(range(len(outG)), key=lambda i: key(lead(outG[i], key)[0]), reverse=True)
    return [outG[i] for i in order], [outR[i] for i in order]


def normal_form(f: Terms, basis: Sequence[Terms], key: Callable) -> tuple[list[Terms], Terms]:
    return divide(f, basis, key)

"""Graded matrix factorizations of ``W = Σ p_a G_a`` and Eisenbud's higher homotopies.

A factorization is a pair ``g: A0 -> A1``, ``f: A1 -> A0`` of maps between free
modules with ``f g = W`` and ``g f = W``.  Generators carry tags ``(q, r)``: a
``ℤ^k`` degree and an R-grade.  Maps are homogeneous: ``g`` has degree zero and
``f`` has the degree ``Δ`` of ``W``, so

    deg g[j][i] = tags0[i] - tags1[j]
    deg f[i][j] = tags1[j] - tags0[i] + Δ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lattice
from .errors import InhomogeneousInput, NoSolutionAtOrder, NotFinitelySupported
from .laurent import LaurentElement
from .poly import Degree, MultiPoly, PolyMatrix, PolyRing, add_degrees
from .sparse import monomials_of_degree


@dataclass(frozen=True)
class GradedMF:
    ring: PolyRing
    f: PolyMatrix  # A1 -> A0
    g: PolyMatrix  # A0 -> A1
    tags0: tuple[Degree, ...]
    tags1: tuple[Degree, ...]
    w_degree: Degree

    def __post_init__(self):
        r0, r1 = len(self.tags0), len(self.tags1)
        if self.g.shape != (r1, r0) or self.f.shape != (r0, r1):
            raise ValueError(f"matrix shapes {self.f.shape}, {self.g.shape} do not match ranks {r0}, {r1}")

    @property
    def rank(self) -> int:
        return len(self.tags0)

    def expected_degree(self, which: str, row: int, col: int) -> Degree:
        if which == "g":
            return add_degrees(self.tags0[col], self.tags1[row], -1)
        return add_degrees(add_degrees(self.tags1[col], self.tags0[row], -1), self.w_degree)

    def differential(self) -> tuple[PolyMatrix, tuple[int, ...]]:
        """The odd endomorphism ``δ = [[0, f], [g, 0]]`` on ``A0 ⊕ A1`` and the parities."""
        r0, r1 = len(self.tags0), len(self.tags1)
        z = self.ring.zero()
        rows = [[z] * r0 + list(self.f.rows[i]) for i in range(r0)]
        rows += [list(self.g.rows[j]) + [z] * r1 for j in range(r1)]
        return PolyMatrix(self.ring, rows, r0 + r1), (0,) * r0 + (1,) * r1

    def with_entry(self, which: str, row: int, col: int, value) -> GradedMF:
        m = getattr(self, which)
        new = m.replace(row, col, value if isinstance(value, MultiPoly) else self.ring.const(value))
        f, g = (new, self.g) if which == "f" else (self.f, new)
        return GradedMF(self.ring, f, g, self.tags0, self.tags1, self.w_degree)


def _split(ring, D: PolyMatrix, parities, tags, w_degree) -> GradedMF:
    even = [i for i, p in enumerate(parities) if p == 0]
    odd = [i for i, p in enumerate(parities) if p == 1]
    g = PolyMatrix(ring, [[D[j, i] for i in even] for j in odd], len(even))
    f = PolyMatrix(ring, [[D[i, j] for j in odd] for i in even], len(odd))
    return GradedMF(ring, f, g, tuple(tags[i] for i in even), tuple(tags[j] for j in odd), w_degree)


def _pair_degree(a: MultiPoly, b: MultiPoly) -> Degree:
    da, db = a.degree(), b.degree()
    if a.is_zero() or b.is_zero() or da is None or db is None:
        raise InhomogeneousInput(f"factor pair ({a}, {b}) is zero or not homogeneous")
    return add_degrees(da, db)


def koszul_mf(pairs: Sequence[tuple[MultiPoly, MultiPoly]]) -> GradedMF:
    """Koszul factorization of ``Σ a_j b_j`` on the exterior algebra of ``m`` generators.

    ``δ = Σ_j (b_j e_j ∧ - + a_j ι_j)``; even wedge powers form ``A0``.  A single
    pair ``(a, b)`` gives ``f = [a]``, ``g = [b]``.
    """
    if not pairs:
        raise InhomogeneousInput("need at least one factor pair")
    ring = pairs[0][0].ring
    degs = {_pair_degree(a, b) for a, b in pairs}
    if len(degs) != 1:
        raise InhomogeneousInput("the products a_j b_j have different degrees")
    (w_deg,) = degs
    m = len(pairs)
    subsets = sorted(
        (frozenset(c) for r in range(m + 1) for c in itertools.combinations(range(m), r)),
        key=lambda s: (len(s) % 2, len(s), sorted(s)),
    )
    index = {s: i for i, s in enumerate(subsets)}
    da = [a.degree() for a, _ in pairs]
    tags = []
    for s in subsets:
        q, r = ring.zero_degree()
        t = (q, r)
        for j in s:
            t = add_degrees(t, da[j])
        tags.append(add_degrees(t, w_deg, -((len(s) + 1) // 2)))
    z = ring.zero()
    N = len(subsets)
    rows = [[z] * N for _ in range(N)]
    for s in subsets:
        col = index[s]
        for j, (a, b) in enumerate(pairs):
            sign = -1 if sum(1 for i in s if i < j) % 2 else 1
            if j in s:
                rows[index[s - {j}]][col] += a * sign
            else:
                rows[index[s | {j}]][col] += b * sign
    parities = tuple(len(s) % 2 for s in subsets)
    return _split(ring, PolyMatrix(ring, rows, N), parities, tags, w_deg)


def tensor_mf(A: GradedMF, B: GradedMF) -> GradedMF:
    """``A ⊗ B`` with ``δ = δ_A ⊗ 1 + τ_A ⊗ δ_B``; it factors ``W_A + W_B``.

    Basis order: ``A0⊗B0, A1⊗B1`` (even), then ``A1⊗B0, A0⊗B1`` (odd).
    """
    if A.ring != B.ring:
        raise ValueError("factorizations over different rings")
    if A.w_degree != B.w_degree:
        raise InhomogeneousInput("the potentials have different degrees")
    ring, w = A.ring, A.w_degree
    DA, pa = A.differential()
    DB, pb = B.differential()
    tA = A.tags0 + A.tags1
    tB = B.tags0 + B.tags1
    blocks = [(0, 0), (1, 1), (1, 0), (0, 1)]
    basis = [
        (x, y)
        for par_x, par_y in blocks
        for x in range(len(pa))
        if pa[x] == par_x
        for y in range(len(pb))
        if pb[y] == par_y
    ]
    index = {b: i for i, b in enumerate(basis)}
    z = ring.zero()
    N = len(basis)
    rows = [[z] * N for _ in range(N)]
    for col, (x, y) in enumerate(basis):
        for x2 in range(len(pa)):
            if DA[x2, x]:
                rows[index[(x2, y)]][col] += DA[x2, x]
        sign = -1 if pa[x] else 1
        for y2 in range(len(pb)):
            if DB[y2, y]:
                rows[index[(x, y2)]][col] += DB[y2, y] * sign
    tags, parities = [], []
    for x, y in basis:
        t = add_degrees(tA[x], tB[y])
        if pa[x] and pb[y]:
            t = add_degrees(t, w)
        tags.append(t)
        parities.append((pa[x] + pb[y]) % 2)
    return _split(ring, PolyMatrix(ring, rows, N), parities, tags, w)


# --- verification -----------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    check: str  # "fg" | "gf" | "homogeneity" | "potential"
    matrix: str
    row: int
    col: int
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass(frozen=True)
class MFReport:
    ok: bool
    rank: int
    fg: bool
    gf: bool
    homogeneous: bool
    failures: tuple[Failure, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "rank": self.rank,
            "fg": self.fg,
            "gf": self.gf,
            "homogeneous": self.homogeneous,
            "failures": [f.to_dict() for f in self.failures],
        }


def _fmt_degree(d) -> str:
    if d is None:
        return "inhomogeneous"
    return f"{tuple(d[0])}{{{d[1]}}}"


def _identity_check(name, product: PolyMatrix, W: MultiPoly) -> list[Failure]:
    out = []
    for i in range(product.nrows):
        for j in range(product.ncols):
            want = W if i == j else W.ring.zero()
            if product[i, j] != want:
                out.append(Failure(name, name, i, j, str(want), str(product[i, j])))
    return out


def verify_mf(mf: GradedMF, W: MultiPoly) -> MFReport:
    """Check ``f g = g f = W·Id`` and that every entry has the degree forced by the tags.

    Problems are collected in the report rather than raised.
    """
    failures = []
    if W.degree() is not None and not W.is_zero() and W.degree() != mf.w_degree:
        failures.append(Failure("potential", "W", 0, 0, _fmt_degree(mf.w_degree), _fmt_degree(W.degree())))
    fg = _identity_check("fg", mf.f @ mf.g, W)
    gf = _identity_check("gf", mf.g @ mf.f, W)
    hom = []
    for name in ("f", "g"):
        m = getattr(mf, name)
        for i in range(m.nrows):
            for j in range(m.ncols):
                e = m[i, j]
                if e.is_zero():
                    continue
                want = mf.expected_degree(name, i, j)
                if e.degree() != want:
                    hom.append(Failure("homogeneity", name, i, j, _fmt_degree(want), _fmt_degree(e.degree())))
    failures += fg + gf + hom
    return MFReport(not failures, mf.rank, not fg, not gf, not hom, tuple(failures))


def equivalent_up_to_signed_permutation(A: GradedMF, B: GradedMF) -> bool:
    """Whether ``B`` is ``A`` after reordering and sign-flipping basis vectors of ``A0`` and ``A1``.

    Brute force over permutations that preserve tags; meant for small ranks.
    """
    if A.ring != B.ring or A.w_degree != B.w_degree:
        return False
    if sorted(map(repr, A.tags0)) != sorted(map(repr, B.tags0)):
        return False
    if sorted(map(repr, A.tags1)) != sorted(map(repr, B.tags1)):
        return False
    r0, r1 = len(A.tags0), len(A.tags1)

    def perms(ta, tb, r):
        for p in itertools.permutations(range(r)):
            if all(ta[i] == tb[p[i]] for i in range(r)):
                yield p

    for p0 in perms(A.tags0, B.tags0, r0):
        for p1 in perms(A.tags1, B.tags1, r1):
            if _signs_consistent(A, B, p0, p1):
                return True
    return False


def _signs_consistent(A, B, p0, p1) -> bool:
    # unknown signs s0[i], s1[j]; each nonzero entry forces s0[i] * s1[j]
    constraints = []
    for j in range(len(p1)):
        for i in range(len(p0)):
            for a, b in ((A.g[j, i], B.g[p1[j], p0[i]]), (A.f[i, j], B.f[p0[i], p1[j]])):
                if a == b and a.is_zero():
                    continue
                if a == b:
                    constraints.append((i, j, 1))
                elif a == -b:
                    constraints.append((i, j, -1))
                else:
                    return False
    s0: dict = {}
    s1: dict = {}
    changed = True
    while changed:
        changed = False
        for i, j, s in constraints:
            if i in s0 and j not in s1:
                s1[j] = s * s0[i]
                changed = True
            elif j in s1 and i not in s0:
                s0[i] = s * s1[j]
                changed = True
            elif i not in s0 and j not in s1:
                s0[i] = 1
                s1[j] = s
                changed = True
            elif s0[i] * s1[j] != s:
                return False
    return True


def k_class(mf: GradedMF) -> LaurentElement:
    """``[A0] - [A1]`` in ``ℚ[Pic]``: a generator tagged ``(q, r)`` counts ``(-1)^r t^q``.

    Multiplicative under :func:`tensor_mf` when ``W`` has degree ``(0, even)``,
    since the ``A1⊗B1`` block sits in the even part shifted by the degree of ``W``.
    """
    k = mf.ring.k
    out = LaurentElement(k, {})
    for tags, sign in ((mf.tags0, 1), (mf.tags1, -1)):
        for q, r in tags:
            out = out + LaurentElement.t(q, sign * (-1) ** r)
    return out


# --- superpotentials ---------------------------------------------------------------


def superpotential(model, sections: Sequence[MultiPoly | str]):
    """Ring, Koszul pairs ``(p_a, G_a)`` and ``W = Σ p_a G_a`` for the given sections."""
    ring = PolyRing.from_model(model)
    if len(sections) != model.ell:
        raise InhomogeneousInput(f"expected {model.ell} sections, got {len(sections)}")
    pairs = []
    W = ring.zero()
    for a, G in enumerate(sections):
        if isinstance(G, str):
            G = ring.parse(G, field=f"sections[{a}]")
        if any(e[i] for e in G.terms for i in model.p_indices):
            raise InhomogeneousInput(f"section {a + 1} involves fibre coordinates")
        want = (tuple(model.degrees[a]), 0)
        if G.is_zero() or G.degree() != want:
            raise InhomogeneousInput(
                f"section {a + 1} = {G} is not homogeneous of degree {want[0]}"
            )
        p = ring.var(model.names[model.n + a])
        pairs.append((p, G))
        W = W + p * G
    return ring, pairs, W


# --- higher homotopies -------------------------------------------------------------


@dataclass(frozen=True)
class FreeChain:
    """A finite complex ``0 <- P_0 <- P_1 <- ... <- P_L`` of graded free modules.

    ``tags[h]`` are the generator degrees of ``P_h``; ``d[h-1]`` is the matrix
    of ``P_h -> P_{h-1}`` with shape ``(rank P_{h-1}, rank P_h)``.
    """

    ring: PolyRing
    tags: tuple[tuple[tuple[int, ...], ...], ...]
    d: tuple[PolyMatrix, ...]

    def __post_init__(self):
        if len(self.d) != len(self.tags) - 1:
            raise ValueError("need one differential per consecutive pair of modules")
        for h, m in enumerate(self.d, start=1):
            if m.shape != (len(self.tags[h - 1]), len(self.tags[h])):
                raise ValueError(f"differential {h} has shape {m.shape}")
            for i in range(m.nrows):
                for j in range(m.ncols):
                    e = m[i, j]
                    want = tuple(a - b for a, b in zip(self.tags[h][j], self.tags[h - 1][i]))
                    if e and (e.degree() is None or e.degree()[0] != want):
                        raise InhomogeneousInput(f"entry ({i}, {j}) of differential {h} is not of degree {want}")
        for h in range(1, len(self.d)):
            if not (self.d[h - 1] @ self.d[h]).is_zero():
                raise ValueError(f"d_{h} d_{h + 1} != 0")

    @property
    def length(self) -> int:
        return len(self.tags) - 1

    def rank(self, h: int) -> int:
        return len(self.tags[h]) if 0 <= h <= self.length else 0

    def d0(self, h: int) -> PolyMatrix | None:
        """``P_h -> P_{h-1}``, or None when either end is zero."""
        if 1 <= h <= self.length:
            return self.d[h - 1]
        return None


def _order(n) -> int:
    return sum(n)


@dataclass(frozen=True)
class HomotopyFamily:
    """Solutions ``d_n`` of the recursive system for ``0 < |n| <= bound``.

    ``maps[n][h]`` is the block ``P_h -> P_{h + 2|n| - 1}``; ``residuals[n]``
    holds the left minus right side of the defining equation on each ``P_h``.
    """

    chain: FreeChain
    G: tuple[MultiPoly, ...]
    degrees: tuple[tuple[int, ...], ...]
    bound: int
    maps: dict
    residuals: dict

    @property
    def ell(self) -> int:
        return len(self.G)

    def block(self, n, h) -> PolyMatrix | None:
        if not any(n):
            return self.chain.d0(h)
        return self.maps.get(tuple(n), {}).get(h)

    def residuals_zero(self) -> bool:
        return all(m.is_zero() for blocks in self.residuals.values() for m in blocks.values())

    def complete(self) -> bool:
        """True when every ``d_n`` beyond the bound is forced to vanish by length."""
        return 2 * self.bound + 1 > self.chain.length

    def nonzero(self) -> dict:
        return {
            n: {h: m for h, m in blocks.items() if not m.is_zero()}
            for n, blocks in self.maps.items()
            if any(not m.is_zero() for m in blocks.values())
        }


def _compose(a: PolyMatrix | None, b: PolyMatrix | None) -> PolyMatrix | None:
    if a is None or b is None:
        return None
    return a @ b


def _known_part(fam_maps, chain, n, h) -> PolyMatrix | None:
    """``Σ_{0 < m < n} d_m d_{n-m}`` on ``P_h``."""
    total = None
    for m in itertools.product(*(range(x + 1) for x in n)):
        rest = tuple(a - b for a, b in zip(n, m))
        if not any(m) or not any(rest):
            continue
        src = fam_maps.get(rest, {}).get(h)
        if src is None:
            continue
        mid = h + 2 * _order(rest) - 1
        dst = fam_maps.get(m, {}).get(mid)
        if dst is None:
            continue
        prod = dst @ src
        total = prod if total is None else total + prod
    return total


def higher_homotopies(chain: FreeChain, G: Sequence[MultiPoly], degrees: Sequence[Sequence[int]] | None = None,
                      degree_bound: int = 1) -> HomotopyFamily:
    """Solve ``d_0 d_{e_a} + d_{e_a} d_0 = G_a`` and ``Σ_{m} d_m d_{n-m} = 0`` order by order.

    Unknown entries of ``d_n: P_h -> P_{h+2|n|-1}`` range over all monomials of
    the degree forced by the tags (``Σ n_a d_a`` plus the tag difference).  The
    linear systems are solved exactly; residuals are recomputed and must vanish.
    """
    ring = chain.ring
    G = tuple(G)
    if degrees is None:
        degrees = []
        for a, g in enumerate(G):
            if g.is_zero():
                raise InhomogeneousInput(f"degree of the zero section {a + 1} must be given")
            degrees.append(g.degree()[0])
    degrees = tuple(tuple(d) for d in degrees)
    for a, (g, d) in enumerate(zip(G, degrees)):
        if g and (g.degree() is None or g.degree()[0] != d):
            raise InhomogeneousInput(f"section {a + 1} is not homogeneous of degree {d}")
    ell, L = len(G), chain.length
    maps: dict = {}
    residuals: dict = {}
    for order in range(1, degree_bound + 1):
        for n in _multi_indices(ell, order):
            D = tuple(sum(c * d[j] for c, d in zip(n, degrees)) for j in range(ring.k))
            maps[n] = _solve_order(chain, G, maps, n, D)
            residuals[n] = {h: _residual(chain, G, maps, n, h) for h in range(L + 1) if h + 2 * order - 2 <= L}
            if not all(m.is_zero() for m in residuals[n].values()):
                raise AssertionError(f"nonzero residual at order {n}")  # pragma: no cover
    return HomotopyFamily(chain, G, degrees, degree_bound, maps, residuals)


def _multi_indices(ell: int, order: int):
    for n in itertools.product(range(order + 1), repeat=ell):
        if sum(n) == order:
            yield n
    # sorted lexicographically by itertools.product


def _rhs(chain, G, n, h) -> PolyMatrix | None:
    if _order(n) != 1:
        return None
    a = n.index(1)
    r = chain.rank(h)
    return PolyMatrix.identity(chain.ring, r, G[a]) if r else None


def _residual(chain, G, maps, n, h) -> PolyMatrix:
    N = _order(n)
    tgt = h + 2 * N - 2
    ring = chain.ring
    total = PolyMatrix.zeros(ring, chain.rank(tgt), chain.rank(h))
    for part in (
        _compose(chain.d0(h + 2 * N - 1), maps[n].get(h)),
        _compose(maps[n].get(h - 1), chain.d0(h)),
        _known_part(maps, chain, n, h),
    ):
        if part is not None:
            total = total + part
    rhs = _rhs(chain, G, n, h)
    if rhs is not None:
        total = total - rhs
    return total


def _solve_order(chain: FreeChain, G, maps, n, D) -> dict:
    ring = chain.ring
    N, L = _order(n), chain.length
    # unknowns: (h, row j in P_{h+2N-1}, col i in P_h, exponent)
    unknowns = []
    for h in range(L + 1):
        t = h + 2 * N - 1
        if t > L:
            continue
        for j, tj in enumerate(chain.tags[t]):
            for i, si in enumerate(chain.tags[h]):
                target = tuple(a - b + c for a, b, c in zip(si, tj, D))
                for e in monomials_of_degree(ring.degrees, target):
                    unknowns.append((h, j, i, e))
    uindex = {u: c for c, u in enumerate(unknowns)}
    # equations: for each P_h -> P_{h+2N-2}, entry (r, c), monomial e
    eqs: dict = {}

    def add(key, var, coef):
        row = eqs.setdefault(key, {})
        row[var] = row.get(var, 0) + coef

    rhs_terms: dict = {}
    for h in range(L + 1):
        tgt = h + 2 * N - 2
        if tgt > L:
            continue
        known = _known_part(maps, chain, n, h)
        rhs = _rhs(chain, G, n, h)
        for r in range(chain.rank(tgt)):
            for c in range(chain.rank(h)):
                val = ring.zero()
                if rhs is not None:
                    val = val + rhs[r, c]
                if known is not None:
                    val = val - known[r, c]
                for e, coef in val.items():
                    rhs_terms[(h, r, c, e)] = coef
                    eqs.setdefault((h, r, c, e), {})
    for (h, j, i, e), var in uindex.items():
        # d0 ∘ X on P_h: P_h -> P_{h+2N-1} -> P_{h+2N-2}
        d_after = chain.d0(h + 2 * N - 1)
        if d_after is not None:
            for r in range(d_after.nrows):
                for e2, c2 in d_after[r, j].items():
                    add((h, r, i, tuple(x + y for x, y in zip(e, e2))), var, c2)
        # X ∘ d0 on P_{h+1}: P_{h+1} -> P_h -> P_{h+2N-1}
        d_before = chain.d0(h + 1)
        if d_before is not None and h + 1 + 2 * N - 2 <= L:
            for c in range(d_before.ncols):
                for e2, c2 in d_before[i, c].items():
                    add((h + 1, j, c, tuple(x + y for x, y in zip(e, e2))), var, c2)
    keys = sorted(eqs)
    A = [[Fraction(0)] * len(unknowns) for _ in keys]
    b = [Fraction(rhs_terms.get(key, 0)) for key in keys]
    for row, key in enumerate(keys):
        for var, coef in eqs[key].items():
            A[row][var] += coef
    if not unknowns:
        if any(b):
            raise NoSolutionAtOrder(n)
        sol = ()
    else:
        sol = lattice.solve_rational(A, b) if keys else (Fraction(0),) * len(unknowns)
    if sol is None:
        raise NoSolutionAtOrder(n)
    blocks = {}
    for h in range(L + 1):
        t = h + 2 * N - 1
        if t > L:
            continue
        entries = [[{} for _ in chain.tags[h]] for _ in chain.tags[t]]
        blocks[h] = entries
    for (h, j, i, e), var in uindex.items():
        if sol[var]:
            blocks[h][j][i][e] = sol[var]
    return {
        h: PolyMatrix(ring, [[MultiPoly(ring, t) for t in row] for row in rows], chain.rank(h))
        for h, rows in blocks.items()
    }


def _total_ring(chain: FreeChain, degrees) -> PolyRing:
    ell = len(degrees)
    names = chain.ring.names + tuple(f"p{a + 1}" if ell > 1 else "p" for a in range(ell))
    degs = chain.ring.degrees + tuple(tuple(-x for x in d) for d in degrees)
    return PolyRing(names, degs, (0,) * chain.ring.nvars + (2,) * ell)


def assemble_mf(family: HomotopyFamily, ring: PolyRing | None = None, *, allow_trivial: bool = False) -> GradedMF:
    """Fold ``d = Σ_n p^n d_n`` on ``⊕_h P_h`` into a factorization of ``W = Σ p_a G_a``.

    Even ``h`` go to ``A0`` with tag ``(q, -h)``, odd ``h`` to ``A1`` with tag
    ``(q, -h-1)``.  ``ring`` defaults to the chain ring with fibre variables
    ``p`` (or ``p1, ..., p_ell``) appended; when given, it must contain the chain
    variables by name, followed by exactly ``ell`` fibre variables.
    """
    chain = family.chain
    if family.ell == 0 and not allow_trivial:
        raise NotFinitelySupported("no superpotential summands; pass allow_trivial=True to fold d_0 alone")
    if not family.complete():
        raise NotFinitelySupported(
            f"homotopies up to order {family.bound} do not exhaust a complex of length {chain.length}"
        )
    total = ring or _total_ring(chain, family.degrees)
    xpos = [total.names.index(nm) for nm in chain.ring.names]
    ppos = [i for i in range(total.nvars) if i not in xpos]
    if len(ppos) != family.ell:
        raise ValueError(f"ring must have exactly {family.ell} variables besides the chain variables")

    def lift(poly: MultiPoly, n) -> MultiPoly:
        terms = {}
        for e, c in poly.items():
            full = [0] * total.nvars
            for x, pos in zip(e, xpos):
                full[pos] = x
            for x, pos in zip(n, ppos):
                full[pos] = x
            terms[tuple(full)] = c
        return MultiPoly(total, terms)

    offsets, pos = [], 0
    for h in range(chain.length + 1):
        offsets.append(pos)
        pos += chain.rank(h)
    size = pos
    z = total.zero()
    rows = [[z] * size for _ in range(size)]
    tags, parities = [], []
    k = chain.ring.k
    for h in range(chain.length + 1):
        for q in chain.tags[h]:
            tags.append((tuple(q) if k else (), -h - (h % 2)))
            parities.append(h % 2)

    def place(block: PolyMatrix, src: int, dst: int, n):
        for j in range(block.nrows):
            for i in range(block.ncols):
                if block[j, i]:
                    rows[offsets[dst] + j][offsets[src] + i] += lift(block[j, i], n)

    zero_n = (0,) * family.ell
    for h in range(1, chain.length + 1):
        place(chain.d[h - 1], h, h - 1, zero_n)
    for n, blocks in family.maps.items():
        for h, m in blocks.items():
            place(m, h, h + 2 * _order(n) - 1, n)
    w_degree = ((0,) * total.k, 2)
    return _split(total, PolyMatrix(total, rows, size), parities, tags, w_degree)


def assembled_potential(family: HomotopyFamily, mf: GradedMF) -> MultiPoly:
    """``Σ p_a G_a`` in the ring of ``mf``."""
    ring = mf.ring
    chain_names = family.chain.ring.names
    ppos = [i for i, nm in enumerate(ring.names) if nm not in chain_names]
    W = ring.zero()
    for a, g in enumerate(family.G):
        terms = {}
        for e, c in g.items():
            full = [0] * ring.nvars
            for x, nm in zip(e, chain_names):
                full[ring.names.index(nm)] = x
            full[ppos[a]] += 1
            terms[tuple(full)] = c
        W = W + MultiPoly(ring, terms)
    return W

"""p-adic and mod-p analysis: Z_p-point enumeration, solubility, sweeps, censuses.

Residue points are affine solutions mod p**k in the chart X_h = 1.  Lifting
follows the standard multivariate Hensel picture: a solution is *certified*
once some 2x2 Jacobian minor has valuation t with k >= 2t+1 (for one-form
schemes: some gradient entry), which guarantees a genuine Z_p-point above it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

import numpy as np

from .arith import Place, is_prime, legendre_symbol, mod_unit
from .fixtures import Fixture, SumClass, SymbolClass
from .geometry import Scheme, chart_poly, eval_form_mod_p, projective_points_mod_p
from .polynomials import PolyForm

ZERO = Fraction(0)
HALF = Fraction(1, 2)

DEFAULT_TUPLE_BUDGET = 10**9
MAX_PRECISION = 8


@dataclass(frozen=True)
class ResiduePoint:
    coords: tuple[int, ...]
    precision: int
    liftable: bool


def _vp(n: int, p: int, cap: int) -> int:
    """Valuation of n known mod p**cap; returns cap for n = 0 (meaning >= cap)."""
    n %= p**cap
    if n == 0:
        return cap
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _jacobian_minor_valuation(s: Scheme, coords: tuple[int, ...], p: int, cap: int) -> int:
    """min over 2x2 Jacobian minors (resp. gradient entries) of v_p at coords."""
    charts = s.chart_forms()
    n = charts[0].nvars
    grads = [[f.partial(j).evaluate_int(list(coords)) for j in range(n)] for f in charts]
    best = cap
    if len(charts) == 1:
        for g in grads[0]:
            best = min(best, _vp(g, p, cap))
        return best
    for a in range(n):
        for b in range(a + 1, n):
            m = grads[0][a] * grads[1][b] - grads[0][b] * grads[1][a]
            best = min(best, _vp(m, p, cap))
    return best


def enumerate_residue_points(
    s: Scheme, p: int, k: int, budget: int = DEFAULT_TUPLE_BUDGET
) -> list[ResiduePoint]:
    """All affine solutions mod p**k with their Hensel liftability certificate.

    liftable means the mod-p Jacobian already has the full-rank minor (t = 0),
    the everywhere-sufficient certificate; deeper certificates are handled by
    the valuation-descent drivers below.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if k < 1:
        raise ValueError("precision must be >= 1")
    n = s.nvars - 1
    if p ** (n * k) > budget:
        raise ValueError("precision budget exceeded")
    sols = _solutions_mod_pk(s, p, k)
    out = []
    for coords in sols:
        t = _jacobian_minor_valuation(s, coords, p, 1)
        out.append(ResiduePoint(coords, k, t == 0))
    return out


def _solutions_mod_p(s: Scheme, p: int) -> list[tuple[int, ...]]:
    charts = s.chart_forms()
    n = charts[0].nvars
    grids = np.indices((p,) * n).reshape(n, -1).T.astype(np.int64)
    mask = np.ones(len(grids), dtype=bool)
    for f in charts:
        acc = np.zeros(len(grids), dtype=np.int64)
        for e, c in f.terms.items():
            term = np.full(len(grids), c % p, dtype=np.int64)
            for i, ei in enumerate(e):
                for _ in range(ei):
                    term = term * grids[:, i] % p
            acc = (acc + term) % p
        mask &= acc == 0
    return [tuple(int(v) for v in row) for row in grids[mask]]


def _lift_solutions(
    s: Scheme, sols: Iterable[tuple[int, ...]], p: int, j: int
) -> list[tuple[int, ...]]:
    """Solutions mod p**(j+1) lying over the given solutions mod p**j (j >= 1)."""
    charts = s.chart_forms()
    n = charts[0].nvars
    pj = p**j
    out = []
    for x in sols:
        xl = list(x)
        vals = [f.evaluate_int(xl) for f in charts]
        rows = []
        rhs = []
        ok = True
        for f, val in zip(charts, vals):
            if val % pj:
                ok = False
                break
            rows.append([f.partial(i).evaluate_int(xl) % p for i in range(n)])
            rhs.append((-val // pj) % p)
        if not ok:
            continue
        for t in _affine_solutions_mod_p(rows, rhs, p):
            out.append(tuple((xi + pj * ti) % (pj * p) for xi, ti in zip(x, t)))
    return sorted(out)


def _affine_solutions_mod_p(rows: list[list[int]], rhs: list[int], p: int) -> list[tuple[int, ...]]:
    """All solutions of rows @ t = rhs over F_p (small systems only)."""
    n = len(rows[0]) if rows else 0
    aug = [r[:] + [b] for r, b in zip(rows, rhs)]
    pivots = []
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(aug)) if aug[i][col] % p), None)
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        inv = pow(aug[rank][col], -1, p)
        aug[rank] = [v * inv % p for v in aug[rank]]
        for i in range(len(aug)):
            if i != rank and aug[i][col] % p:
                f = aug[i][col]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[rank])]
        pivots.append(col)
        rank += 1
    for i in range(rank, len(aug)):
        if aug[i][n] % p:
            return []
    free = [c for c in range(n) if c not in pivots]
    out = []
    for assign in product(range(p), repeat=len(free)):
        t = [0] * n
        for c, v in zip(free, assign):
            t[c] = v
        for r, c in enumerate(pivots):
            t[c] = (aug[r][n] - sum(aug[r][j] * t[j] for j in free)) % p
        out.append(tuple(t))
    return out


def _solutions_mod_pk(s: Scheme, p: int, k: int) -> list[tuple[int, ...]]:
    sols = _solutions_mod_p(s, p)
    for j in range(1, k):
        sols = _lift_solutions(s, sols, p, j)
    return sorted(sols)


# ---------------------------------------------------------------------------
# Z_p-solubility with valuation descent
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Solubility:
    status: str  # 'SOLUBLE' | 'INSOLUBLE' | 'UNKNOWN'
    witness: ResiduePoint | None = None


def zp_solubility(s: Scheme, p: int, cap: int = MAX_PRECISION) -> Solubility:
    """Decide whether the affine chart has a Z_p-point.

    SOLUBLE comes with a certified witness (minor valuation t, precision
    k >= 2t+1); INSOLUBLE means the congruence closed (no solutions at all
    mod p**k for some k <= cap); UNKNOWN if the budget runs out first.
    """
    sols = _solutions_mod_p(s, p)
    for k in range(1, cap + 1):
        if not sols:
            return Solubility("INSOLUBLE")
        for x in sols:
            t = _jacobian_minor_valuation(s, x, p, cap)
            if k >= 2 * t + 1:
                return Solubility("SOLUBLE", ResiduePoint(x, k, True))
        sols = _lift_solutions(s, sols, p, k)
    return Solubility("UNKNOWN")


# ---------------------------------------------------------------------------
# evaluation sweeps
# ---------------------------------------------------------------------------


@dataclass
class SweepReport:
    fixture: str
    class_name: str
    p: int
    k: int
    histogram: dict  # Fraction -> leaf count
    indeterminate: list
    registered_used: int

    @property
    def constant(self) -> bool | None:
        if self.indeterminate:
            return None
        values = [v for v, c in self.histogram.items() if c]
        return len(values) == 1

    @property
    def values(self) -> list[Fraction]:
        return sorted(v for v, c in self.histogram.items() if c)


@dataclass(frozen=True)
class _ValueInfo:
    """What a residue mod p**k pins down about a value: valuation and unit digits."""

    v: int | None  # exact valuation, or None if the residue is 0 mod p**k
    digits: int  # number of unit digits known (k - v)
    unit: int | None  # unit mod p (odd p, digits>=1) or mod 2**min(digits,3)


def _value_info(val: int, p: int, k: int) -> _ValueInfo:
    val %= p**k
    if val == 0:
        return _ValueInfo(None, 0, None)
    v = _vp(val, p, k)
    d = k - v
    u = val // p**v
    if p == 2:
        return _ValueInfo(v, d, u % 2 ** min(d, 3) if d else None)
    return _ValueInfo(v, d, u % p if d else None)


def _partial_symbol(p: int, f: _ValueInfo, g: _ValueInfo) -> int | None:
    """Hilbert symbol from partial residue data, or None if not determined.

    Each closed-form factor is evaluated independently; a factor counts as
    known when the available digits force its value for every completion.
    """
    if p == 2:
        eps_f = None if f.digits < 2 else (f.unit % 4 - 1) // 2 % 2
        eps_g = None if g.digits < 2 else (g.unit % 4 - 1) // 2 % 2
        om_f = None if f.digits < 3 else (f.unit * f.unit - 1) // 8 % 2
        om_g = None if g.digits < 3 else (g.unit * g.unit - 1) // 8 % 2
        t1 = _product2(eps_f, eps_g)
        t2 = _product2(None if f.v is None else f.v % 2, om_g)
        t3 = _product2(None if g.v is None else g.v % 2, om_f)
        if t1 is None or t2 is None or t3 is None:
            return None
        return -1 if (t1 + t2 + t3) % 2 else 1
    leg_f = None if f.digits < 1 else legendre_symbol(f.unit, p)
    leg_g = None if g.digits < 1 else legendre_symbol(g.unit, p)
    pf = None if f.v is None else f.v % 2
    pg = None if g.v is None else g.v % 2
    eps_p = (p - 1) // 2 % 2
    ta = _product2(_product2(pf, pg), eps_p)  # (-1)^{alpha beta eps}
    tb = _sign_power(leg_f, pg)  # leg(u)^beta
    tc = _sign_power(leg_g, pf)  # leg(w)^alpha
    if ta is None or tb is None or tc is None:
        return None
    return (-1 if ta else 1) * tb * tc


def _product2(a: int | None, b: int | None) -> int | None:
    """a*b mod 2 when forced: 0 if either factor is a known 0."""
    if a == 0 or b == 0:
        return 0
    if a is None or b is None:
        return None
    return a * b % 2


def _sign_power(sign: int | None, exp_parity: int | None) -> int | None:
    """sign**exp for sign in {1,-1}: forced if exp is even or sign is 1."""
    if exp_parity == 0 or sign == 1:
        return 1
    if sign is None or exp_parity is None:
        return None
    return sign


class _ClassResolver:
    """Resolves the invariant of one symbol class on one residue class."""

    def __init__(self, cls: SymbolClass, hyper: int, p: int):
        self.p = p
        pairs = [(cls.f_num, cls.g_num)]
        pairs += [(alt, cls.g_num) for alt in cls.alt_f]
        pairs += [(cls.f_num, alt) for alt in cls.alt_g]
        self.pairs = []
        for fn, gn in pairs:
            fd = chart_poly(cls.f_den, hyper)
            gd = chart_poly(cls.g_den, hyper)
            assert fd.degree() == 0 and gd.degree() == 0, "denominators must be powers of X_h"
            df = fd.terms.get((0,) * fd.nvars, 0)
            dg = gd.terms.get((0,) * gd.nvars, 0)
            assert df in (1, -1) and dg in (1, -1)
            self.pairs.append((chart_poly(fn, hyper) * df, chart_poly(gn, hyper) * dg))
        self.support = cls.support_values

    def resolve(self, coords: tuple[int, ...], k: int) -> Fraction | None:
        p = self.p
        xl = list(coords)
        for fpoly, gpoly in self.pairs:
            fin = _value_info(fpoly.evaluate_int(xl, p**k), p, k)
            gin = _value_info(gpoly.evaluate_int(xl, p**k), p, k)
            sym = _partial_symbol(p, fin, gin)
            if sym is not None:
                return ZERO if sym == 1 else HALF
        return None

    def registered(self, coords: tuple[int, ...], k: int, place: Place) -> Fraction | None:
        """Recorded value if a registered support point reduces into this class."""
        from .brauer import _place_applies

        m = self.p**k
        for pt, places, value in self.support:
            if not _place_applies(places, place):
                continue
            try:
                aff = pt.affine(len(pt.coords) - 1)[:-1]
            except ValueError:
                continue
            if any(c.denominator % self.p == 0 for c in aff):
                continue
            if all(mod_unit(c, m) == x for c, x in zip(aff, coords)):
                return value
        return None


def sweep_evaluation(
    fixture: Fixture,
    class_name: str,
    p: int,
    k: int = 2,
    max_extra: int = 6,
    budget: int = DEFAULT_TUPLE_BUDGET,
) -> SweepReport:
    """Histogram of the class invariant over residue classes mod p**k.

    Classes whose invariant is not pinned down at precision k are refined
    (lifted to higher precision) up to ``max_extra`` extra digits; classes
    containing a registered support point resolve to its recorded value once
    the depth budget is exhausted.  Certified leaves (Hensel minor condition)
    enter the histogram; refinement branches with no solutions vanish.
    """
    if fixture.scheme.hyperplane_index != fixture.scheme.nvars - 1:
        raise ValueError("sweeps expect the hyperplane coordinate to come last")
    cls = fixture.brauer_class(class_name)
    if isinstance(cls, SumClass):
        resolvers = [
            _ClassResolver(fixture.brauer_class(part), fixture.scheme.hyperplane_index, p)
            for part in cls.parts
        ]
    else:
        resolvers = [_ClassResolver(cls, fixture.scheme.hyperplane_index, p)]
    place = Place.finite(p)
    s = fixture.scheme
    hist: dict[Fraction, int] = {ZERO: 0, HALF: 0}
    indeterminate: list[tuple[tuple[int, ...], int]] = []
    registered_used = 0
    base = _solutions_mod_pk(s, p, k)
    if len(base) > budget:
        raise ValueError("precision budget exceeded")

    def resolve_parts(coords, depth) -> tuple[Fraction | None, bool]:
        total = ZERO
        used_reg = False
        for r in resolvers:
            val = r.resolve(coords, depth)
            if val is None:
                reg = r.registered(coords, depth, place)
                if reg is None:
                    return None, False
                val = reg
                used_reg = True
            total += val
        return total % 1, used_reg

    def visit(coords, depth):
        nonlocal registered_used
        val, used_reg = resolve_parts(coords, depth)
        cert = _jacobian_minor_valuation(s, coords, p, depth)
        certified = depth >= 2 * cert + 1
        if val is not None and certified:
            hist[val] = hist.get(val, 0) + 1
            if used_reg:
                registered_used += 1
            return
        if depth >= k + max_extra:
            indeterminate.append((coords, depth))
            return
        lifted = _lift_solutions(s, [coords], p, depth)
        for sub in lifted:
            visit(sub, depth + 1)

    for coords in base:
        visit(coords, k)
    return SweepReport(fixture.name, class_name, p, k, hist, indeterminate, registered_used)


# ---------------------------------------------------------------------------
# boundary census
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusResult:
    count: int
    nonvanishing_count: int
    square_ratio_count: int


def boundary_census(s: Scheme, p: int, pair: tuple[int, int] | None = None) -> CensusResult:
    """Count F_p-points of D = X intersect {X_h = 0} by scanning P^(n-2)(F_p).

    For the configured coordinate pair (i, j): how many points have
    xi_i * xi_j != 0, and among those how many have square ratio xi_i/xi_j.
    """
    forms = s.boundary_forms()
    n = forms[0].nvars
    pts = projective_points_mod_p(n, p)
    mask = np.ones(len(pts), dtype=bool)
    for f in forms:
        mask &= eval_form_mod_p(f, pts, p) == 0
    pts = pts[mask]
    count = len(pts)
    if pair is None:
        return CensusResult(count, 0, 0)
    i, j = pair
    nz = (pts[:, i] % p != 0) & (pts[:, j] % p != 0)
    squares = {x * x % p for x in range(1, p)}
    ratios = pts[nz, i] * np.array([pow(int(x), -1, p) for x in pts[nz, j]]) % p
    sq = sum(1 for r in ratios if int(r) in squares)
    return CensusResult(count, int(nz.sum()), sq)

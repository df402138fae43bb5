"""Projective schemes cut out by integer forms, points, maps, pencil analysis.

The central objects are Scheme (a named subscheme of P^n given by integer
forms plus the distinguished hyperplane coordinate whose complement carries
the integral points) and ProjPoint (exact projective points).  A del Pezzo
surface of degree four is a Scheme with two quadrics in five variables; its
pencil of quadrics is analysed exactly through the degree-5 binary form
det(mu*G1 + nu*G2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np

from .intlinalg import rank_fractions
from .polynomials import PolyForm
from .unipoly import (
    Poly,
    count_real_roots,
    isolate_real_roots,
    poly_deg,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_trim,
    rational_roots,
    sign_at_root,
    squarefree_part,
    to_primitive_int,
)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> "ProjPoint":
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        return cls.of(*(part.strip() for part in text.strip().split(":")))

    def __post_init__(self):
        if not any(self.coords):
            raise ValueError("projective point needs a nonzero coordinate")

    def normalized(self) -> tuple[int, ...]:
        """Primitive integer representative with positive first nonzero entry."""
        den = lcm(*(c.denominator for c in self.coords))
        ints = [int(c * den) for c in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        ints = [v // g for v in ints]
        lead = next(v for v in ints if v)
        if lead < 0:
            ints = [-v for v in ints]
        return tuple(ints)

    def scale(self, factor) -> "ProjPoint":
        f = Fraction(factor)
        if f == 0:
            raise ValueError("scaling by zero")
        return ProjPoint(tuple(c * f for c in self.coords))

    def affine(self, hyperplane_index: int) -> tuple[Fraction, ...]:
        c = self.coords[hyperplane_index]
        if c == 0:
            raise ValueError("point lies on the hyperplane")
        return tuple(x / c for x in self.coords)

    def same_as(self, other: "ProjPoint") -> bool:
        return self.normalized() == other.normalized()

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Scheme:
    """V(forms) in P^(nvars-1), with integral points taken off V(X_h)."""

    name: str
    forms: tuple[PolyForm, ...]
    hyperplane_index: int

    @property
    def nvars(self) -> int:
        return self.forms[0].nvars

    @property
    def is_pencil_surface(self) -> bool:
        return len(self.forms) == 2 and self.nvars == 5 and all(f.degree() == 2 for f in self.forms)

    @property
    def q1(self) -> PolyForm:
        return self.forms[0]

    @property
    def q2(self) -> PolyForm:
        return self.forms[1]

    def affine_forms(self) -> list[PolyForm]:
        return [f.dehomogenize(self.hyperplane_index) for f in self.forms]

    def boundary_forms(self) -> list[PolyForm]:
        """The forms of D = X intersect {X_h = 0}, in nvars-1 variables."""
        h = self.hyperplane_index
        out = []
        for f in self.forms:
            t = {}
            for e, c in f.terms.items():
                if e[h] == 0:
                    t[tuple(e[:h] + e[h + 1 :])] = c
            out.append(PolyForm(self.nvars - 1, t))
        return out

    def chart_forms(self) -> list[PolyForm]:
        """Affine equations in the nvars-1 chart variables (X_h = 1)."""
        return [chart_poly(f, self.hyperplane_index) for f in self.forms]


def chart_poly(f: PolyForm, h: int) -> PolyForm:
    """Substitute X_h = 1 and drop that variable."""
    t: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        key = tuple(e[:h] + e[h + 1 :])
        t[key] = t.get(key, 0) + c
    return PolyForm(f.nvars - 1, t)


@dataclass(frozen=True)
class RationalMap:
    """Map given by component forms; an entry may carry a denominator form."""

    name: str
    source: str
    target: str
    components: tuple[tuple[PolyForm, PolyForm | None], ...]

    def apply(self, x: ProjPoint) -> ProjPoint:
        values = []
        for num, den in self.components:
            v = num.evaluate(x.coords)
            if den is not None:
                d = den.evaluate(x.coords)
                if d == 0:
                    raise ValueError("indeterminate: denominator vanishes")
                v /= d
            values.append(v)
        if not any(values):
            raise ValueError("indeterminate: all components vanish")
        return ProjPoint(tuple(values))


def evaluate_form(f: PolyForm, x: ProjPoint | Sequence) -> Fraction:
    coords = x.coords if isinstance(x, ProjPoint) else x
    return f.evaluate(coords)


def on_scheme(s: Scheme, x: ProjPoint) -> bool:
    return all(f.evaluate(x.coords) == 0 for f in s.forms)


on_surface = on_scheme


def is_integral_point(s: Scheme, x: ProjPoint) -> bool:
    """True iff after scaling X_h to 1 all other coordinates are integers."""
    if not on_scheme(s, x):
        return False
    if x.coords[s.hyperplane_index] == 0:
        return False
    return all(c.denominator == 1 for c in x.affine(s.hyperplane_index))


# ---------------------------------------------------------------------------
# pencil of quadrics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegenerateMember:
    """One group of degenerate pencil members sharing a factor of the quintic."""

    kind: str  # 'rational' or 'irrational'
    root: tuple[int, int] | None  # primitive (mu, nu) for a rational member
    factor: tuple[int, ...] | None  # primitive integer factor, ascending degree
    rank: int
    real_count: int
    disc_signs: tuple[int, ...]  # sign of the rank-4 discriminant, one per real root


@dataclass(frozen=True)
class PencilAnalysis:
    quintic: tuple[int, ...]  # det(t*G1 + G2), ascending in t, primitive
    members: tuple[DegenerateMember, ...]

    @property
    def real_count(self) -> int:
        return sum(m.real_count for m in self.members)

    @property
    def disc_signs(self) -> tuple[int, ...]:
        return tuple(sorted(s for m in self.members for s in m.disc_signs))

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(sorted(m.rank for m in self.members))


def _pencil_gram(s: Scheme, mu: int, nu: int) -> list[list[int]]:
    g1 = s.q1.gram2()
    g2 = s.q2.gram2()
    n = len(g1)
    return [[mu * g1[i][j] + nu * g2[i][j] for j in range(n)] for i in range(n)]


def _det_interpolated(s: Scheme, size_sub: tuple[tuple[int, ...], tuple[int, ...]] | None = None) -> Poly:
    """det of (t*G1 + G2) restricted to given rows/cols, as a polynomial in t."""
    from .intlinalg import det_fractions

    g1 = s.q1.gram2()
    rows, cols = size_sub if size_sub else (tuple(range(len(g1))), tuple(range(len(g1))))
    deg = len(rows)
    xs = list(range(deg + 1))
    ys = []
    for t in xs:
        g = _pencil_gram(s, t, 1)
        sub = [[g[i][j] for j in cols] for i in rows]
        ys.append(det_fractions(sub))
    # Lagrange interpolation at 0..deg
    coeffs = [Fraction(0)] * (deg + 1)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] -= c * xj
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    return poly_trim(coeffs)


def _minor_polys(s: Scheme, r: int) -> list[Poly]:
    from itertools import combinations

    n = s.q1.gram2()
    idx = range(len(n))
    out = []
    for rows in combinations(idx, r):
        for cols in combinations(idx, r):
            out.append(_det_interpolated(s, (rows, cols)))
    return [m for m in out if m]


def _rank_groups(s: Scheme, factor: Poly) -> list[tuple[Poly, int]]:
    """Split a squarefree factor by the rank of the Gram matrix at its roots."""
    groups = []
    todo = [(factor, 4)]
    while todo:
        g, r = todo.pop()
        if poly_deg(g) < 1:
            continue
        if r == 0:
            groups.append((g, 0))
            continue
        common = g
        for m in _minor_polys(s, r):
            common = poly_gcd(common, m)
            if poly_deg(common) < 1:
                break
        if poly_deg(common) < 1:
            groups.append((g, r))
        elif poly_deg(common) == poly_deg(g):
            todo.append((g, r - 1))
        else:
            todo.append((common, r - 1))
            todo.append((poly_divmod(g, common)[0], r))
    return groups


def _disc4_poly(s: Scheme) -> Poly:
    """Sum of principal 4x4 minors of t*G1 + G2 (the rank-4 discriminant, up to squares)."""
    n = len(s.q1.gram2())
    total: Poly = []
    for skip in range(n):
        rows = tuple(i for i in range(n) if i != skip)
        m = _det_interpolated(s, (rows, rows))
        if len(m) > len(total):
            total = total + [Fraction(0)] * (len(m) - len(total))
        for k, c in enumerate(m):
            total[k] += c
    return poly_trim(total)


def pencil_degenerates(s: Scheme) -> PencilAnalysis:
    """Degenerate members of the pencil mu*q1 + nu*q2 with exact ranks and signs.

    Reports the degree-5 binary form det(mu*G1 + nu*G2) through its t-chart
    det(t*G1 + G2); the member at (1:0) corresponds to a drop in the leading
    coefficient.  Irrational roots are grouped by squarefree factors; the rank
    at such roots is decided by which minors vanish identically on the factor.
    """
    if not s.is_pencil_surface:
        raise ValueError("pencil analysis needs two quadrics in five variables")
    coeff_rows = []
    monos = sorted(set(s.q1.terms) | set(s.q2.terms))
    for q in (s.q1, s.q2):
        coeff_rows.append([q.terms.get(e, 0) for e in monos])
    if rank_fractions(coeff_rows) < 2:
        raise ValueError("degenerate pencil: the two quadrics are proportional")
    f = _det_interpolated(s)
    if not f:
        raise ValueError("degenerate pencil: det identically zero")
    members: list[DegenerateMember] = []
    e4 = _disc4_poly(s)
    if poly_deg(f) < 5:
        # member at infinity: the quadric q1 itself
        g1 = s.q1.gram2()
        rank = rank_fractions(g1)
        signs: tuple[int, ...] = ()
        if rank == 4:
            val = _e4_value(g1)
            signs = (1 if val > 0 else -1,)
        members.append(
            DegenerateMember("rational", (1, 0), None, rank, 1, signs)
        )
    sf = squarefree_part(f)
    for r in rational_roots(sf):
        mu, nu = r.numerator, r.denominator
        gram = _pencil_gram(s, mu, nu)
        rank = rank_fractions(gram)
        signs = ()
        if rank == 4:
            val = _e4_value(gram)
            signs = (1 if val > 0 else -1,)
        members.append(DegenerateMember("rational", (mu, nu), None, rank, 1, signs))
        sf = poly_divmod(sf, [Fraction(-r), Fraction(1)])[0]
    if poly_deg(sf) >= 1:
        for g, rank in _rank_groups(s, sf):
            intervals = isolate_real_roots(g)
            signs = ()
            if rank == 4:
                signs = tuple(sign_at_root(e4, g, iv) for iv in intervals)
            members.append(
                DegenerateMember(
                    "irrational", None, tuple(to_primitive_int(g)), rank, len(intervals), signs
                )
            )
    return PencilAnalysis(tuple(to_primitive_int(f)), tuple(members))


def _e4_value(gram: list[list[int]]) -> Fraction:
    from .intlinalg import det_fractions

    n = len(gram)
    total = Fraction(0)
    for skip in range(n):
        rows = [i for i in range(n) if i != skip]
        total += det_fractions([[gram[i][j] for j in rows] for i in rows])
    return total


# ---------------------------------------------------------------------------
# smoothness by modular witnesses
# ---------------------------------------------------------------------------


def projective_points_mod_p(nvars: int, p: int) -> np.ndarray:
    """Normalized representatives of P^(nvars-1)(F_p): first nonzero entry 1."""
    chunks = []
    for lead in range(nvars):
        tail = nvars - lead - 1
        grid = np.indices((p,) * tail).reshape(tail, -1).T if tail else np.zeros((1, 0), dtype=int)
        block = np.zeros((grid.shape[0], nvars), dtype=np.int64)
        block[:, lead] = 1
        if tail:
            block[:, lead + 1 :] = grid
        chunks.append(block)
    return np.concatenate(chunks)


def eval_form_mod_p(f: PolyForm, points: np.ndarray, p: int) -> np.ndarray:
    acc = np.zeros(len(points), dtype=np.int64)
    for e, c in f.terms.items():
        term = np.full(len(points), c % p, dtype=np.int64)
        for i, ei in enumerate(e):
            for _ in range(ei):
                term = term * points[:, i] % p
        acc = (acc + term) % p
    return acc


def singular_points_mod_p(s: Scheme, p: int) -> list[tuple[int, ...]]:
    """F_p-points of V(forms) where the Jacobian has rank < codim (here < #forms)."""
    pts = projective_points_mod_p(s.nvars, p)
    mask = np.ones(len(pts), dtype=bool)
    for f in s.forms:
        mask &= eval_form_mod_p(f, pts, p) == 0
    pts = pts[mask]
    if len(pts) == 0:
        return []
    jac = np.stack(
        [[eval_form_mod_p(f.partial(j), pts, p) for j in range(s.nvars)] for f in s.forms]
    )  # shape (#forms, nvars, npts)
    if len(s.forms) == 1:
        singular = np.all(jac[0] % p == 0, axis=0)
    else:
        # rank < 2 iff all 2x2 minors vanish (fixtures carry at most two forms)
        singular = np.ones(len(pts), dtype=bool)
        for a in range(s.nvars):
            for b in range(a + 1, s.nvars):
                minor = (jac[0, a] * jac[1, b] - jac[0, b] * jac[1, a]) % p
                singular &= minor == 0
    return [tuple(int(v) for v in pt) for pt in pts[singular]]


def smoothness_check(
    s: Scheme, witness_primes: Sequence[int] = (5, 7, 11, 13, 17, 19, 23), required: int = 3
) -> tuple[bool, dict[int, bool]]:
    """Probabilistic modular smoothness: True iff >= `required` witness primes
    show no singular F_p-point.  A prime reporting a singular point may simply
    be a prime of bad reduction, so primes are consulted until enough agree.
    """
    verdicts: dict[int, bool] = {}
    clean = 0
    for p in witness_primes:
        ok = not singular_points_mod_p(s, p)
        verdicts[p] = ok
        if ok:
            clean += 1
            if clean >= required:
                return True, verdicts
    return False, verdicts

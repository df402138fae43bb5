"""Integral point search, recursive families, audits, and real-place witnesses.

The search strategy eliminates one variable linearly from one equation,
substitutes into the other (clearing denominators), solves the designated
quadratic variable by an exact integer discriminant test, and enumerates the
remaining two variables over [-H, H]^2.  Cubic fixtures skip the elimination
step.  All returned points are re-verified by exact substitution.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import Place, hilbert_symbol
from .fixtures import Fixture, PredicateSpec, SearchStrategy, WitnessSpec
from .geometry import ProjPoint, Scheme, on_scheme
from .polynomials import PolyForm

_SQ_MODULI = (64, 63, 65, 11)
_SQ_TABLES = {m: np.array([any((x * x) % m == r for x in range(m)) for r in range(m)]) for m in _SQ_MODULI}


def _perfect_square_filter(vals: np.ndarray) -> np.ndarray:
    """Boolean mask of candidates that may be perfect squares (mod tests)."""
    mask = vals >= 0
    for m in _SQ_MODULI:
        mask &= _SQ_TABLES[m][vals % m]
    return mask


def _as_poly_in(poly: PolyForm, var: int) -> list[PolyForm]:
    """Coefficients [c0, c1, ...] of poly as a polynomial in variable var."""
    deg = poly.degree_in(var)
    return [poly.coefficient_of(var, d) for d in range(max(deg, 0) + 1)]


@dataclass
class _QuadraticData:
    """A*xq^2 + B*xq + C = 0 with A, B, C polynomials in the two enumerate vars."""

    coeffs: tuple[PolyForm, PolyForm, PolyForm]
    enum_vars: tuple[int, int]

    def values(self, u: int, v: int, nvars: int) -> tuple[int, int, int]:
        point = [0] * nvars
        point[self.enum_vars[0]] = u
        point[self.enum_vars[1]] = v
        return tuple(int(c.evaluate_int(point)) for c in self.coeffs)


def _build_quadratic(fixture: Fixture) -> tuple[_QuadraticData, PolyForm | None, PolyForm | None]:
    """Reduce the chart system to one quadratic; returns (data, c1, c0).

    With elimination: x_e = -c0/c1 from the designated equation, substituted
    into the other one (multiplied by c1^2).  Without: the single chart form.
    """
    st = fixture.strategy
    if st is None:
        raise ValueError(f"fixture {fixture.name} has no search strategy")
    charts = fixture.scheme.chart_forms()
    xq = st.quadratic_var
    if st.eliminate_var is None:
        assert len(charts) == 1, "strategy without elimination needs a single equation"
        target = charts[0]
        c1 = c0 = None
    else:
        eq_from = charts[st.eliminate_eq]
        eq_other = charts[1 - st.eliminate_eq]
        xe = st.eliminate_var
        if eq_from.degree_in(xe) != 1:
            raise ValueError("designated equation is not linear in the eliminate variable")
        c1 = eq_from.coefficient_of(xe, 1)
        c0 = eq_from.coefficient_of(xe, 0)
        pieces = _as_poly_in(eq_other, xe)
        if len(pieces) > 3:
            raise ValueError("substituted equation exceeds degree 2 in the eliminate variable")
        while len(pieces) < 3:
            pieces.append(PolyForm.zero(eq_other.nvars))
        minus_c0 = -c0
        target = pieces[0] * c1 * c1 + pieces[1] * minus_c0 * c1 + pieces[2] * minus_c0 * minus_c0
    by_q = _as_poly_in(target, xq)
    if len(by_q) > 3:
        raise ValueError("system is not quadratic in the designated variable")
    while len(by_q) < 3:
        by_q.append(PolyForm.zero(target.nvars))
    for c in by_q:
        used = {i for e in c.terms for i, ei in enumerate(e) if ei}
        if not used <= set(st.enumerate_vars):
            raise ValueError("reduced coefficients involve non-enumerated variables")
    return _QuadraticData((by_q[0], by_q[1], by_q[2]), st.enumerate_vars), c1, c0


def _integer_roots(a: int, b: int, c: int) -> list[int] | None:
    """Integer roots of a*x^2+b*x+c; None signals the identically-zero case."""
    if a == 0:
        if b == 0:
            return None if c == 0 else []
        return [-c // b] if c % b == 0 else []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    s = math.isqrt(disc)
    if s * s != disc:
        return []
    roots = []
    for sign in (1, -1) if s else (1,):
        num = -b + sign * s
        if num % (2 * a) == 0:
            roots.append(num // (2 * a))
    return sorted(set(roots))


def integral_point_search(fixture: Fixture, height: int) -> list[ProjPoint]:
    """All integral points with max |coordinate| <= height, exactly verified."""
    quad, c1, c0 = _build_quadratic(fixture)
    st = fixture.strategy
    s = fixture.scheme
    n = s.nvars - 1
    charts = s.chart_forms()
    eu, ev = st.enumerate_vars
    found: set[tuple[int, ...]] = set()

    def try_point(assign: list[int | None]):
        if any(x is None or abs(x) > height for x in assign):
            return
        coords = [int(x) for x in assign]
        if all(f.evaluate_int(coords) == 0 for f in charts):
            found.add(tuple(coords))

    def solve_eliminated(assign: list[int | None]):
        """Fill the eliminated variable from c1*x_e + c0 = 0."""
        if st.eliminate_var is None:
            try_point(assign)
            return
        base = [x if x is not None else 0 for x in assign]
        c1v = c1.evaluate_int(base)
        c0v = c0.evaluate_int(base)
        if c1v == 0:
            if c0v == 0:
                for xe in range(-height, height + 1):
                    sub = list(assign)
                    sub[st.eliminate_var] = xe
                    try_point(sub)
            return
        if c0v % c1v:
            return
        sub = list(assign)
        sub[st.eliminate_var] = -c0v // c1v
        try_point(sub)

    vs = np.arange(-height, height + 1, dtype=np.int64)
    pa, pb, pc = quad.coeffs
    for u in range(-height, height + 1):
        avals = _eval_int64(pa, u, vs, eu, ev, n)
        bvals = _eval_int64(pb, u, vs, eu, ev, n)
        cvals = _eval_int64(pc, u, vs, eu, ev, n)
        disc_f = bvals.astype(np.float64) ** 2 - 4 * avals.astype(np.float64) * cvals.astype(np.float64)
        cand = disc_f > -1e9  # keep near-zero band for exact recheck
        cand &= _disc_square_mask(avals, bvals, cvals)
        special = avals == 0
        for idx in np.nonzero(cand | special)[0]:
            v = int(vs[idx])
            a, b, c = int(avals[idx]), int(bvals[idx]), int(cvals[idx])
            roots = _integer_roots(a, b, c)
            if roots is None:
                for xq in range(-height, height + 1):
                    assign: list[int | None] = [None] * n
                    assign[eu], assign[ev], assign[st.quadratic_var] = u, v, xq
                    solve_eliminated(assign)
                continue
            for xq in roots:
                if abs(xq) > height:
                    continue
                assign = [None] * n
                assign[eu], assign[ev], assign[st.quadratic_var] = u, v, xq
                solve_eliminated(assign)
    return [ProjPoint.of(*coords, 1) for coords in sorted(found)]


def _eval_int64(poly: PolyForm, u: int, vs: np.ndarray, eu: int, ev: int, n: int) -> np.ndarray:
    out = np.zeros(len(vs), dtype=np.int64)
    for e, c in poly.terms.items():
        term = np.full(len(vs), c, dtype=np.int64)
        if e[eu]:
            term = term * u ** e[eu]
        if e[ev]:
            term = term * vs ** e[ev]
        out += term
    return out


def _disc_square_mask(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    mask = np.ones(len(a), dtype=bool)
    for m in _SQ_MODULI:
        disc_m = (b % m) * (b % m) - 4 * (a % m) * (c % m)
        mask &= _SQ_TABLES[m][disc_m % m]
    return mask


def naive_integral_search(scheme: Scheme, height: int) -> list[ProjPoint]:
    """Independent brute-force oracle: scan the whole [-H, H]^(n-1) box."""
    charts = scheme.chart_forms()
    n = scheme.nvars - 1
    rng = np.arange(-height, height + 1, dtype=np.int64)
    grids = np.meshgrid(*([rng] * n), indexing="ij")
    flat = [g.ravel() for g in grids]
    mask = np.ones(flat[0].shape, dtype=bool)
    for f in charts:
        acc = np.zeros(flat[0].shape, dtype=np.int64)
        for e, coeff in f.terms.items():
            term = np.full(flat[0].shape, coeff, dtype=np.int64)
            for i, ei in enumerate(e):
                for _ in range(ei):
                    term = term * flat[i]
            acc += term
        mask &= acc == 0
    coords = sorted(tuple(int(g[i]) for g in flat) for i in np.nonzero(mask)[0])
    return [ProjPoint.of(*c, 1) for c in coords]


# ---------------------------------------------------------------------------
# the elliptic section of the first surface
# ---------------------------------------------------------------------------


def elliptic_section_points(fixture: Fixture, section: PolyForm, height: int) -> list[ProjPoint]:
    """Integral points on the section curve V(section) of dp4_ex1 up to height.

    The registered section is 2X1+X2+X3; solving it for X2 turns the second
    equation into x1 = x0^2 and the first into a quadratic in x3, so a single
    loop over x0 suffices.
    """
    from .polynomials import poly_from_term_lines

    registered = poly_from_term_lines(5, fixture.meta_value("section_form").split(";"))
    if section.terms != registered.terms:
        raise ValueError("section form does not match the fixture's registered section")
    s = fixture.scheme
    images = []
    for i in range(5):
        if i == 2:
            images.append(PolyForm.linear([0, -2, 0, -1, 0]))  # X2 -> -2X1 - X3
        else:
            images.append(PolyForm.variable(5, i))
    q1s = s.q1.compose(images)
    q2s = s.q2.compose(images)
    assert q2s.terms == (PolyForm.variable(5, 0) * PolyForm.variable(5, 0) - PolyForm.variable(5, 1) * PolyForm.variable(5, 4)).terms
    out = []
    for x0 in range(-height, height + 1):
        x1 = x0 * x0
        if x1 > height:
            continue
        coeffs = _as_poly_in(q1s, 3)
        vals = []
        for c in coeffs:
            vals.append(int(c.evaluate(( Fraction(x0), Fraction(x1), Fraction(0), Fraction(0), Fraction(1)))))
        while len(vals) < 3:
            vals.append(0)
        roots = _integer_roots(vals[2], vals[1], vals[0])
        for x3 in roots or []:
            x2 = -2 * x1 - x3
            pt = ProjPoint.of(x0, x1, x2, x3, 1)
            if max(abs(c) for c in (x0, x1, x2, x3)) <= height and on_scheme(s, pt):
                out.append(pt)
    return sorted(out, key=lambda p: p.normalized())


# ---------------------------------------------------------------------------
# recursive point families on the shifted cubic
# ---------------------------------------------------------------------------


def recurrence_family(
    fixture: Fixture,
    seed1: tuple[int, int, int],
    seed2: tuple[int, int, int],
    mult: int,
    prev: int,
    offset: tuple[int, int, int],
    count: int,
) -> list[tuple[int, ...]]:
    """First `count` terms of c_{i+2} = mult*c_{i+1} + prev*c_i + offset.

    Every term is asserted to lie on the fixture's cubic; the index of the
    first failure is reported.
    """
    if count < 2:
        raise ValueError("need at least the two seeds")
    chart = fixture.scheme.chart_forms()[0]
    terms = [tuple(seed1), tuple(seed2)]
    while len(terms) < count:
        nxt = tuple(
            mult * a + prev * b + t for a, b, t in zip(terms[-1], terms[-2], offset)
        )
        terms.append(nxt)
    for i, term in enumerate(terms):
        if chart.evaluate_int(list(term)) != 0:
            raise ValueError(f"recurrence term {i + 1} is not on the surface")
    return terms


# ---------------------------------------------------------------------------
# predicate audits
# ---------------------------------------------------------------------------


@dataclass
class AuditReport:
    holds_for_all: bool
    checked: int
    counterexamples: list
    skipped: list  # (point, reason)


def audit_predicate(fixture: Fixture, points, pred: PredicateSpec | str) -> AuditReport:
    """Evaluate the predicate on every point; undefined points are skipped."""
    if isinstance(pred, str):
        pred = fixture.predicate(pred)
    counterexamples = []
    skipped = []
    checked = 0
    for pt in points:
        status = _eval_predicate(fixture, pred, pt)
        if status is None:
            skipped.append((pt, "predicate undefined at point"))
        else:
            checked += 1
            if not status:
                counterexamples.append(pt)
    return AuditReport(not counterexamples, checked, counterexamples, skipped)


def _eval_predicate(fixture: Fixture, pred: PredicateSpec, pt: ProjPoint) -> bool | None:
    coords = pt.affine(fixture.scheme.hyperplane_index)
    if pred.kind == "disjunction":
        saw_defined = False
        for member in pred.members:
            res = _eval_predicate(fixture, fixture.predicate(member), pt)
            if res is True:
                return True
            if res is not None:
                saw_defined = True
        return False if saw_defined else None
    lhs = pred.lhs.evaluate(coords)
    rhs = pred.rhs.evaluate(coords)
    if pred.kind == "gcd_gt_one":
        if lhs.denominator != 1 or rhs.denominator != 1:
            return None
        a, b = int(lhs), int(rhs)
        if a == 0 and b == 0:
            return None
        return math.gcd(a, b) > 1
    if lhs == 0 or rhs == 0:
        return None
    if pred.kind == "hilbert_eq":
        place = Place.parse(pred.places[0])
        return hilbert_symbol(lhs, rhs, place) == (1 if pred.expected == 1 else -1)
    if pred.kind == "hilbert_sum":
        total = Fraction(0)
        for ptxt in pred.places:
            place = Place.parse(ptxt)
            if hilbert_symbol(lhs, rhs, place) == -1:
                total += Fraction(1, 2)
        return total % 1 == pred.expected
    raise ValueError(f"unknown predicate kind {pred.kind}")


# ---------------------------------------------------------------------------
# sampled real-place witnesses
# ---------------------------------------------------------------------------


@dataclass
class WitnessReport:
    samples: int
    violations: list
    discarded: int


def real_witness_sample(
    fixture: Fixture, witness: WitnessSpec | str, n_samples: int = 10_000, seed: int = 0
) -> WitnessReport:
    """Sample real points from the fixture's recipe and check the witness."""
    if isinstance(witness, str):
        witness = fixture.witness(witness)
    sampler = _SAMPLERS.get(fixture.name)
    if sampler is None:
        raise ValueError(f"no real sampling recipe for {fixture.name}")
    rng = random.Random(seed)
    charts = [f for f in fixture.scheme.chart_forms()]
    got = 0
    discarded = 0
    violations = []
    while got < n_samples:
        coords = sampler(rng)
        if coords is None:
            discarded += 1
            continue
        if any(abs(f.evaluate_float(coords)) > 1e-9 * _scale(coords) for f in charts):
            discarded += 1
            continue
        got += 1
        full = tuple(coords) + (1.0,)
        if not witness.check(full):
            violations.append(coords)
    return WitnessReport(got, violations, discarded)


def _scale(coords) -> float:
    return max(1.0, max(abs(c) for c in coords)) ** 2


def _sample_obst(rng: random.Random):
    x0 = rng.uniform(-3.7, 3.7)
    x1 = rng.uniform(-2.2, 2.2)
    s2 = 26 - 2 * x0 * x0 - x1 * x1
    s3 = 2 * x0 * x0 - 2 * x1 * x1 - 13
    if s2 < 0 or s3 < 0:
        return None
    x2 = math.sqrt(s2) * rng.choice((1, -1))
    x3 = math.sqrt(s3) * rng.choice((1, -1))
    return (x0, x1, x2, x3)


def _sample_harpaz(rng: random.Random):
    x1 = rng.uniform(-4, 4)
    x2 = rng.uniform(-4, 4)
    den = 11 * x1 * x2 - 3
    if abs(den) < 1e-6 or abs(x1) < 1e-9 or abs(x2) < 1e-9:
        return None
    x0 = (1 - 5 * x1 * x2 - 3 * x2) / den
    return (x0, x1, x2)


def _sample_ex2(rng: random.Random):
    x0 = rng.uniform(-8, 8)
    x1 = rng.uniform(-12, 12)
    d = (x1 * x1 + 4 * x1) / 4 - x0 * x0
    if d < 0:
        return None
    x3 = -x1 / 2 + math.sqrt(d) * rng.choice((1, -1))
    s = x3 - x0 * x1
    if s < 0:
        return None
    x2 = math.sqrt(s) * rng.choice((1, -1))
    return (x0, x1, x2, x3)


def _sample_ex3_compact(rng: random.Random):
    x0 = rng.uniform(-4, 0)
    if x0 > -1e-6:
        return None
    x2 = rng.uniform(-x0, -x0 + 6)
    x1 = (x2 * x2 + 2 * x0 + 1) / x0
    s = ((x0 + x2) * (x0 + 2 * x2) - 2 * x1 * x1) / 3
    if s < 0:
        return None
    x3 = math.sqrt(s) * rng.choice((1, -1))
    return (x0, x1, x2, x3)


def _sample_p6(rng: random.Random):
    x = [rng.uniform(-3, 3) for _ in range(3)]
    qa = x[0] ** 2 + x[1] ** 2 - x[2] ** 2
    if abs(qa - 1) < 1e-6:
        return None
    qb = qa / (qa - 1)
    x3 = rng.uniform(-3, 3)
    x4 = rng.uniform(-3, 3)
    s = x3 * x3 + x4 * x4 - qb
    if s < 0:
        return None
    x5 = math.sqrt(s) * rng.choice((1, -1))
    return (x[0], x[1], x[2], x3, x4, x5)


_SAMPLERS = {
    "obst_example": _sample_obst,
    "harpaz_cubic": _sample_harpaz,
    "dp4_ex2": _sample_ex2,
    "dp4_ex3": _sample_ex3_compact,
    "p6_example": _sample_p6,
}


# ---------------------------------------------------------------------------
# real component classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentLabel:
    label: str
    compact: bool


def classify_component(fixture: Fixture, x: ProjPoint) -> ComponentLabel:
    """Label the connected real component of x by the fixture's sign forms."""
    clf = fixture.classifier
    if clf is None:
        raise ValueError(f"{fixture.name} has no component classifier")
    coords = x.affine(fixture.scheme.hyperplane_index)
    signs = []
    parts = []
    for sf in clf.signs:
        val = sf.form.evaluate(coords)
        if val == 0 and sf.tiebreak is not None:
            val = sf.tiebreak.evaluate(coords)
        if val == 0:
            return ComponentLabel("UNCLASSIFIED", False)
        sgn = "+" if val > 0 else "-"
        signs.append(sgn)
        parts.append(f"{sf.name}{sgn}")
    sign_string = "".join(signs)
    return ComponentLabel(",".join(parts), sign_string in clf.compact)

"""Quaternion Brauer classes on U, local evaluation, and constancy criteria.

A SymbolClass (f, g; -1) evaluates at a local point x through the Hilbert
symbol (f(x), g(x))_v: invariant 0 if the symbol is +1, else 1/2.  Points on
the support of div f or div g are handled through the registered alternate
representatives (norm-identity replacements, one slot at a time) and, where
every representative dies, through recorded support values.
"""

from __future__ import annotations

from fractions import Fraction

from .arith import Place, hilbert_symbol, is_prime
from .fixtures import AlgebraicPattern, SumClass, SymbolClass, TranscendentalPattern
from .geometry import ProjPoint, Scheme
from .intlinalg import rank_fractions
from .polynomials import PolyForm

ZERO = Fraction(0)
HALF = Fraction(1, 2)


class SupportPointError(ValueError):
    """Raised when a point lies on the support of every registered representative."""


def representative_pairs(cls: SymbolClass):
    """Valid (f_num, g_num) replacements: alternates never mix across slots."""
    pairs = [(cls.f_num, cls.g_num)]
    for alt in cls.alt_f:
        pairs.append((alt, cls.g_num))
    for alt in cls.alt_g:
        pairs.append((cls.f_num, alt))
    return pairs


def evaluate_class(cls, x: ProjPoint, place: Place) -> Fraction:
    """Local invariant of the class at x: 0 or 1/2 (exact rationals)."""
    if isinstance(cls, SumClass):
        raise TypeError("resolve SumClass parts via evaluate_any/fixture context")
    fd = cls.f_den.evaluate(x.coords)
    gd = cls.g_den.evaluate(x.coords)
    if fd == 0 or gd == 0:
        raise SupportPointError(f"{cls.name}: denominator vanishes at {x}")
    for f_num, g_num in representative_pairs(cls):
        fv = f_num.evaluate(x.coords) / fd
        gv = g_num.evaluate(x.coords) / gd
        if fv != 0 and gv != 0:
            return ZERO if hilbert_symbol(fv, gv, place) == 1 else HALF
    for pt, places, value in cls.support_values:
        if x.normalized() == pt.normalized() and _place_applies(places, place):
            return value
    raise SupportPointError(f"{cls.name}: point {x} lies on the symbol support")


def _place_applies(places_spec: str, place: Place) -> bool:
    if places_spec == "all":
        return True
    return str(place) in places_spec.split(",")


def evaluate_named(fixture, class_name: str, x: ProjPoint, place: Place) -> Fraction:
    """Evaluate a fixture class by name, resolving formal sums of classes."""
    cls = fixture.brauer_class(class_name)
    if isinstance(cls, SumClass):
        total = sum(evaluate_named(fixture, part, x, place) for part in cls.parts)
        return Fraction(total) % 1
    return evaluate_class(cls, x, place)


def adelic_sum(fixture, class_name: str, assignment, places) -> Fraction:
    """Sum of local invariants over the listed places, mod 1.

    ``assignment`` maps each place to a point (a dict, or a callable, or a
    single point used everywhere); omitted places are the caller's claim of
    zero contribution (checkable via the constancy lemmas).
    """
    total = Fraction(0)
    for place in places:
        if callable(assignment):
            x = assignment(place)
        elif isinstance(assignment, dict):
            x = assignment[place]
        else:
            x = assignment
        total += evaluate_named(fixture, class_name, x, place)
    return total % 1


# ---------------------------------------------------------------------------
# model-case patterns (Theorems 5.2 / 5.3) and constancy lemmas (5.4 / 5.5)
# ---------------------------------------------------------------------------


def _is_rational_square(d: int) -> bool:
    if d < 0:
        return False
    from math import isqrt

    return isqrt(d) ** 2 == d


def verify_algebraic_pattern(s: Scheme, pat: AlgebraicPattern) -> tuple[bool, str]:
    """Check mu*q1 + nu*q2 == l1*l2 - l3^2 + d*l4^2 exactly and d a non-square."""
    mu, nu = pat.pencil
    member = s.q1 * mu + s.q2 * nu
    lhs = pat.l1 * pat.l2 - pat.l3 * pat.l3 + pat.l4 * pat.l4 * pat.d
    if lhs.terms != member.terms:
        diff = lhs - member
        return False, f"identity fails; difference {diff}"
    if _is_rational_square(pat.d):
        return False, f"d = {pat.d} is a rational square"
    return True, "ok"


def algebraic_pattern_class(pat: AlgebraicPattern, nvars: int = 5, hyper: int = 4) -> SymbolClass:
    """The class (l1/X_h, d; -1) registered by a verified algebraic pattern."""
    x4 = PolyForm.variable(nvars, hyper)
    return SymbolClass(
        f"{pat.class_name}_derived",
        "algebraic",
        pat.l1,
        x4,
        PolyForm.constant(nvars, pat.d),
        PolyForm.constant(nvars, 1),
        alt_f=(pat.l2,),
    )


def verify_transcendental_pattern(s: Scheme, pat: TranscendentalPattern) -> tuple[bool, str]:
    """Check the two defining identities and independence of l1, l3, u, v."""
    x4 = PolyForm.variable(s.nvars, s.hyperplane_index)
    id1 = pat.l1 * pat.l2 + pat.u * pat.u * pat.a - x4 * pat.l3
    id2 = pat.l3 * pat.l4 + pat.v * pat.v * pat.b - x4 * pat.l1
    if id1.terms != s.q1.terms:
        return False, f"first identity fails; difference {id1 - s.q1}"
    if id2.terms != s.q2.terms:
        return False, f"second identity fails; difference {id2 - s.q2}"
    rows = [f.linear_coefficients() for f in (pat.l1, pat.l3, pat.u, pat.v)]
    if rank_fractions(rows) != 4:
        return False, "l1, l3, u, v are linearly dependent"
    return True, "ok"


def transcendental_pattern_class(pat: TranscendentalPattern, nvars: int = 5, hyper: int = 4) -> SymbolClass:
    """The class (b*l1/X_h, a*l3/X_h; -1) with its norm-identity alternates."""
    x4 = PolyForm.variable(nvars, hyper)
    return SymbolClass(
        f"{pat.class_name}_derived",
        "transcendental",
        pat.l1 * pat.b,
        x4,
        pat.l3 * pat.a,
        x4,
        alt_f=(pat.l2 * (-pat.a * pat.b),),
        alt_g=(pat.l4 * (-pat.a * pat.b),),
    )


def _cusp_point(pat: AlgebraicPattern) -> ProjPoint:
    """Unique common zero of l1..l4 (the forms have rank 4 over Q)."""
    from .intlinalg import kernel_basis

    rows = [f.linear_coefficients() for f in (pat.l1, pat.l2, pat.l3, pat.l4)]
    if rank_fractions(rows) != 4:
        raise ValueError("cusp is not a single point: forms are dependent over Q")
    basis = kernel_basis(rows)
    assert len(basis) == 1
    return ProjPoint.of(*basis[0])


def lemma_algconst_applies(s: Scheme, pat: AlgebraicPattern, p: int) -> bool:
    """Hypotheses of the algebraic constancy lemma at p.

    True iff p does not divide 2d, the reduced forms l1..l4 stay independent
    mod p, and the cusp reduces outside U_p (it fails one of the defining
    quadrics mod p or lands on the hyperplane); then ev is constantly zero
    on the Z_p-points.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    ok, _ = verify_algebraic_pattern(s, pat)
    if not ok:
        raise ValueError("pattern does not verify; lemma not applicable")
    if (2 * pat.d) % p == 0:
        return False
    rows = [f.linear_coefficients() for f in (pat.l1, pat.l2, pat.l3, pat.l4)]
    if rank_mod_p(rows, p) != 4:
        return False
    cusp = _cusp_point(pat).normalized()
    on_x = all(q.evaluate_int(list(cusp), p) == 0 for q in s.forms)
    on_h = cusp[s.hyperplane_index] % p == 0
    return (not on_x) or on_h


def lemma_trconst_applies(s: Scheme, pat: TranscendentalPattern, p: int) -> bool:
    """Transcendental constancy: true iff p does not divide 2ab."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    ok, _ = verify_transcendental_pattern(s, pat)
    if not ok:
        raise ValueError("pattern does not verify; lemma not applicable")
    return (2 * pat.a * pat.b) % p != 0


def rank_mod_p(rows, p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0])
    col = 0
    while col < ncols and rank < len(m):
        piv = next((i for i in range(rank, len(m)) if m[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def constant_primes_guaranteed(fixture, class_name: str, primes) -> list[int]:
    """Primes among `primes` where a registered pattern forces ev == 0 on Z_p."""
    out = []
    pat = fixture.pattern_for(class_name)
    for p in primes:
        if isinstance(pat, AlgebraicPattern):
            if lemma_algconst_applies(fixture.scheme, pat, p):
                out.append(p)
        else:
            if lemma_trconst_applies(fixture.scheme, pat, p):
                out.append(p)
    return out

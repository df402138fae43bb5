"""Univariate exact polynomial helpers for the pencil-of-quadrics analysis.

Polynomials are coefficient lists in ascending degree order over Fraction.
Used for the degree-5 binary form det(mu*G1 + nu*G2): rational roots, number
of real roots (Sturm), and signs of auxiliary polynomials at isolated real
roots via exact interval refinement.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Poly = list[Fraction]


def poly_trim(f: Sequence) -> Poly:
    f = [Fraction(c) for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_deg(f: Poly) -> int:
    return len(f) - 1


def poly_eval(f: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_derivative(f: Poly) -> Poly:
    return poly_trim([i * c for i, c in enumerate(f)][1:])


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    f = poly_trim(f)
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while r and len(r) >= len(g):
        c = r[-1] / g[-1]
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[i + d] -= c * gc
        r = poly_trim(r)
    return poly_trim(q), r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_divmod(f, g)[1]
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def squarefree_part(f: Poly) -> Poly:
    f = poly_trim(f)
    if poly_deg(f) < 1:
        return f
    g = poly_gcd(f, poly_derivative(f))
    if poly_deg(g) < 1:
        return f
    return poly_divmod(f, g)[0]


def to_primitive_int(f: Poly) -> list[int]:
    f = poly_trim(f)
    if not f:
        return []
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def rational_roots(f: Poly) -> list[Fraction]:
    """All rational roots (each once), via the rational root theorem."""
    fi = to_primitive_int(f)
    if not fi:
        raise ValueError("zero polynomial")
    shift = 0
    while fi[shift] == 0:
        shift += 1
    roots = {Fraction(0)} if shift else set()
    fi = fi[shift:]
    a0, an = abs(fi[0]), abs(fi[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for s in (1, -1):
                r = Fraction(s * p, q)
                if poly_eval([Fraction(c) for c in fi], r) == 0:
                    roots.add(r)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(abs(n) ** 0.5) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


def sturm_chain(f: Poly) -> list[Poly]:
    chain = [poly_trim(f), poly_derivative(f)]
    while chain[-1]:
        rem = poly_divmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append([-c for c in rem])
    return [c for c in chain if c]


def _variations(chain: list[Poly], x: Fraction, at_inf: int = 0) -> int:
    signs = []
    for f in chain:
        if at_inf:
            v = f[-1] if at_inf > 0 or poly_deg(f) % 2 == 0 else -f[-1]
        else:
            v = poly_eval(f, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(f: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots of squarefree f in (lo, hi]; None means +-infinity."""
    f = poly_trim(f)
    if poly_deg(f) < 1:
        return 0
    chain = sturm_chain(f)
    va = _variations(chain, Fraction(0), at_inf=-1) if lo is None else _variations(chain, lo)
    vb = _variations(chain, Fraction(0), at_inf=1) if hi is None else _variations(chain, hi)
    return va - vb


def root_bound(f: Poly) -> Fraction:
    """Cauchy bound: all real roots lie in (-B, B)."""
    f = poly_trim(f)
    lead = abs(f[-1])
    return 1 + max((abs(c) / lead for c in f[:-1]), default=Fraction(0))


def isolate_real_roots(f: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals each containing exactly one real root of squarefree f."""
    f = squarefree_part(f)
    if poly_deg(f) < 1:
        return []
    b = root_bound(f)
    work = [(-b, b)]
    out = []
    while work:
        lo, hi = work.pop()
        n = count_real_roots(f, lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if poly_eval(f, mid) == 0:
            # nudge the split so the root stays interior to one half
            mid = (lo + 2 * hi) / 3
            if poly_eval(f, mid) == 0:
                mid = (2 * lo + hi) / 3
        work.append((lo, mid))
        work.append((mid, hi))
    return sorted(out)


def sign_at_root(g: Poly, f: Poly, interval: tuple[Fraction, Fraction]) -> int:
    """Sign of g at the unique root of squarefree f inside the interval."""
    f = squarefree_part(f)
    g = poly_trim(g)
    if not g:
        return 0
    common = poly_gcd(f, g)
    if poly_deg(common) >= 1 and count_real_roots(common, *interval):
        return 0
    lo, hi = interval
    while True:
        if count_real_roots(g, lo, hi) == 0:
            s_lo = poly_eval(g, lo)
            s = s_lo if s_lo else poly_eval(g, hi)
            return 1 if s > 0 else -1
        mid = (lo + hi) / 2
        if poly_eval(f, mid) == 0:
            mid = (lo + 2 * hi) / 3
        if count_real_roots(f, lo, mid):
            hi = mid
        else:
            lo = mid

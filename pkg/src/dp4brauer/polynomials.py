"""Integer multivariate polynomials (forms) with exact evaluation.

A PolyForm stores a polynomial in n variables as a mapping from exponent
tuples to nonzero integer coefficients.  All fixture equations are
homogeneous forms; dehomogenized (affine) polynomials reuse the same type
with the distinguished variable's exponent set to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class PolyForm:
    nvars: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "PolyForm":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "PolyForm":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "PolyForm":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence[int]) -> "PolyForm":
        n = len(coeffs)
        return cls(n, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs) if c})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PolyForm") -> "PolyForm":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, 0) + c
        return PolyForm(self.nvars, t)

    def __neg__(self) -> "PolyForm":
        return PolyForm(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "PolyForm") -> "PolyForm":
        return self + (-other)

    def __mul__(self, other) -> "PolyForm":
        if isinstance(other, int):
            return PolyForm(self.nvars, {e: c * other for e, c in self.terms.items()})
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        t: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return PolyForm(self.nvars, t)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ----------------------------------------------------------

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient_of(self, i: int, power: int) -> "PolyForm":
        """Coefficient of x_i**power, as a polynomial with x_i-exponent zeroed."""
        t = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                t[tuple(e2)] = c
        return PolyForm(self.nvars, t)

    def linear_coefficients(self) -> list[int]:
        """Coefficient vector of a polynomial of degree <= 1 (constant goes last... )"""
        if self.degree() > 1:
            raise ValueError("not linear")
        out = [0] * self.nvars
        for e, c in self.terms.items():
            for i, ei in enumerate(e):
                if ei:
                    out[i] = c
        return out

    def evaluate(self, coords: Sequence) -> Fraction:
        if len(coords) != self.nvars:
            raise ValueError("dimension mismatch")
        total = Fraction(0)
        for e, c in self.terms.items():
            v = Fraction(c)
            for x, ei in zip(coords, e):
                if ei:
                    v *= Fraction(x) ** ei
            total += v
        return total

    def evaluate_float(self, coords: Sequence[float]) -> float:
        total = 0.0
        for e, c in self.terms.items():
            v = float(c)
            for x, ei in zip(coords, e):
                if ei:
                    v *= float(x) ** ei
            total += v
        return total

    def evaluate_int(self, coords: Sequence[int], modulus: int | None = None) -> int:
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, ei in zip(coords, e):
                if ei:
                    v *= x**ei
            total += v
        return total % modulus if modulus else total

    def compose(self, images: Sequence["PolyForm"]) -> "PolyForm":
        """Substitute x_i -> images[i] (all images over a common variable set)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        n = images[0].nvars
        out = PolyForm.zero(n)
        for e, c in self.terms.items():
            term = PolyForm.constant(n, c)
            for img, ei in zip(images, e):
                for _ in range(ei):
                    term = term * img
            out = out + term
        return out

    def partial(self, i: int) -> "PolyForm":
        """Partial derivative with respect to variable i."""
        t: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                key = tuple(e2)
                t[key] = t.get(key, 0) + c * e[i]
        return PolyForm(self.nvars, t)

    def dehomogenize(self, i: int) -> "PolyForm":
        """Set variable i to 1 (exponent zeroed; same variable count)."""
        t: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] = 0
            key = tuple(e2)
            t[key] = t.get(key, 0) + c
        return PolyForm(self.nvars, t)

    def content_sign(self) -> tuple[int, int]:
        """(content, sign of first term in sorted order); (0, 0) for zero."""
        from math import gcd

        if not self.terms:
            return 0, 0
        g = 0
        for c in self.terms.values():
            g = gcd(g, abs(c))
        first = min(self.terms)
        return g, 1 if self.terms[first] > 0 else -1

    def gram2(self) -> list[list[int]]:
        """Twice the Gram matrix of a homogeneous quadric (stays integral)."""
        if self.degree() > 2 or not self.is_homogeneous():
            raise ValueError("gram2 needs a homogeneous quadric")
        n = self.nvars
        g = [[0] * n for _ in range(n)]
        for e, c in self.terms.items():
            idx = [i for i, ei in enumerate(e) for _ in range(ei)]
            if len(idx) != 2:
                raise ValueError("gram2 needs a homogeneous quadric")
            i, j = idx
            if i == j:
                g[i][i] += 2 * c
            else:
                g[i][j] += c
                g[j][i] += c
        return g

    # -- display ------------------------------------------------------------

    def pretty(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"X{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                names[i] if ei == 1 else f"{names[i]}^{ei}" for i, ei in enumerate(e) if ei
            )
            if not mono:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = mono
            else:
                piece = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + piece)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __str__(self) -> str:
        return self.pretty()


def parse_poly(text: str, nvars: int, names: Sequence[str] | None = None) -> PolyForm:
    """Parse expressions like "X0*X1 + X2^2 - 3*X4*X3" into a PolyForm."""
    if names is None:
        names = [f"X{i}" for i in range(nvars)]
    index = {n: i for i, n in enumerate(names)}
    tokens: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+-*^()":
            tokens.append(c)
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif c.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ValueError(f"bad character {c!r} in polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def parse_sum() -> PolyForm:
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        acc = parse_product() * sign
        while peek() in ("+", "-"):
            sign = 1
            while peek() in ("+", "-"):
                if take() == "-":
                    sign = -sign
            acc = acc + parse_product() * sign
        return acc

    def parse_product() -> PolyForm:
        acc = parse_power()
        while peek() == "*":
            take()
            acc = acc * parse_power()
        return acc

    def parse_power() -> PolyForm:
        base = parse_atom()
        if peek() == "^":
            take()
            exp = int(take())
            out = PolyForm.constant(nvars, 1)
            for _ in range(exp):
                out = out * base
            return out
        return base

    def parse_atom() -> PolyForm:
        tok = take()
        if tok == "(":
            inner = parse_sum()
            if take() != ")":
                raise ValueError("unbalanced parenthesis")
            return inner
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        if tok.isdigit():
            return PolyForm.constant(nvars, int(tok))
        if tok in index:
            return PolyForm.variable(nvars, index[tok])
        raise ValueError(f"unknown symbol {tok!r}")

    out = parse_sum()
    if pos != len(tokens):
        raise ValueError("trailing tokens in polynomial")
    return out


def poly_from_term_lines(nvars: int, lines: Iterable[str]) -> PolyForm:
    """Parse "[e0,e1,...,en] c" lines (the fixture-file form grammar)."""
    terms: dict[tuple[int, ...], int] = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        if not line.startswith("["):
            raise ValueError(f"bad term line: {line!r}")
        close = line.index("]")
        exps = tuple(int(t) for t in line[1:close].split(","))
        if len(exps) != nvars:
            raise ValueError(f"bad exponent length in: {line!r}")
        c = int(line[close + 1 :].strip())
        terms[exps] = terms.get(exps, 0) + c
    return PolyForm(nvars, terms)


def poly_to_term_lines(f: PolyForm) -> list[str]:
    return [f"[{','.join(map(str, e))}] {f.terms[e]}" for e in sorted(f.terms)]

"""Sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero Fraction
coefficients.  Reduction to standard form rewrites each variable's
exponent below the factor's arity using the substitution
x_j^{r_j} -> g_j(x_j), where x^{r_j} - g_j is the monic polynomial
vanishing on the factor's level set.  The result is the unique polynomial
supported on the exponent lattice that agrees with the input on every
point of the ambient design.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .designs import FactorSpec, FullFactorial


class Polynomial:
    """Immutable sparse polynomial in n variables with Fraction coefficients."""

    __slots__ = ("n_vars", "_terms")

    def __init__(self, n_vars: int, terms: Mapping[tuple[int, ...], Fraction] | None = None):
        self.n_vars = n_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != n_vars or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps}")
                clean[exps] = coeff
        self._terms = clean

    @classmethod
    def zero(cls, n_vars: int) -> "Polynomial":
        return cls(n_vars)

    @classmethod
    def constant(cls, n_vars: int, value) -> "Polynomial":
        return cls(n_vars, {(0,) * n_vars: Fraction(value)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        exps = tuple(exps)
        return cls(len(exps), {exps: Fraction(coeff)})

    def items(self):
        return self._terms.items()

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.n_vars == other.n_vars
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.n_vars, frozenset(self._terms.items())))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n_vars != other.n_vars:
            raise ValueError("variable count mismatch")
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.n_vars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.n_vars != other.n_vars:
            raise ValueError("variable count mismatch")
        terms: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return Polynomial(self.n_vars, terms)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.n_vars, {e: c * v for e, v in self._terms.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.n_vars:
            raise ValueError("point length mismatch")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for v, e in zip(pt, exps):
                if e:
                    term *= v**e
            total += term
        return total

    def in_lattice(self, ambient: FullFactorial) -> bool:
        """All exponents below the factor arities (standard form support)."""
        radices = ambient.radices
        return all(
            all(e < r for e, r in zip(exps, radices)) for exps in self._terms
        )

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form, terms in lattice order (exponent tuples ascending)."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps in sorted(self._terms):
            coeff = self._terms[exps]
            factors = [
                f"x{j + 1}" + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(exps)
                if e > 0
            ]
            body = str(abs(coeff)) if not factors else " ".join([str(abs(coeff))] + factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts)


_COEFF_RE = re.compile(r"^-?\d+(?:/\d+)?$")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, n_vars: int) -> Polynomial:
    """Parse the indicator text format; terms may appear in any order.

    Grammar: terms joined by ' + ' / ' - ', each an optional rational
    coefficient followed by space-separated factors 'x<j>' or 'x<j>^<e>'.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return Polynomial.zero(n_vars)
    # Normalize a leading sign into the first term.
    chunks = re.split(r"\s+([+-])\s+", s)
    signed: list[tuple[int, str]] = []
    first = chunks[0]
    if first.startswith("-"):
        signed.append((-1, first[1:].strip()))
    else:
        signed.append((1, first))
    for op, term in zip(chunks[1::2], chunks[2::2]):
        signed.append((1 if op == "+" else -1, term))
    terms: dict[tuple[int, ...], Fraction] = {}
    for sign, term in signed:
        tokens = term.split()
        if not tokens:
            raise ValueError(f"empty term in {text!r}")
        coeff = Fraction(1)
        start = 0
        if _COEFF_RE.match(tokens[0]):
            coeff = Fraction(tokens[0])
            start = 1
        elif not tokens[0].startswith("x"):
            raise ValueError(f"bad token {tokens[0]!r}")
        exps = [0] * n_vars
        for tok in tokens[start:]:
            if tok == "1":
                continue
            m = _VAR_RE.match(tok)
            if not m:
                raise ValueError(f"bad monomial token {tok!r}")
            j = int(m.group(1))
            if not 1 <= j <= n_vars:
                raise ValueError(f"variable x{j} out of range 1..{n_vars}")
            exps[j - 1] += int(m.group(2) or 1)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + sign * coeff
    return Polynomial(n_vars, terms)


def vanishing_substitution(factor: FactorSpec) -> tuple[Fraction, ...]:
    """Coefficients (g_0, ..., g_{r-1}) with x^r - g(x) = prod(x - a) over the levels.

    Hence x^r equals g(x) at every level of the factor.
    """
    # Expand prod (x - a) exactly; coeffs[k] is the coefficient of x^k.
    coeffs = [Fraction(1)]
    for a in factor.levels:
        coeffs = [Fraction(0)] + coeffs
        for k in range(len(coeffs) - 1):
            coeffs[k] -= a * coeffs[k + 1]
    r = factor.arity
    return tuple(-coeffs[k] for k in range(r))


@lru_cache(maxsize=None)
def _power_table(factor: FactorSpec, max_exp: int) -> tuple[tuple[Fraction, ...], ...]:
    """table[e] = coefficients over x^0..x^{r-1} of the reduction of x^e."""
    r = factor.arity
    g = vanishing_substitution(factor)
    table: list[tuple[Fraction, ...]] = [
        tuple(Fraction(1) if k == e else Fraction(0) for k in range(r))
        for e in range(r)
    ]
    for e in range(r, max_exp + 1):
        prev = table[e - 1]
        top = prev[r - 1]
        shifted = (Fraction(0),) + prev[: r - 1]
        table.append(tuple(shifted[k] + top * g[k] for k in range(r)))
    return tuple(table)


def reduce_to_standard_form(poly: Polynomial, ambient: FullFactorial) -> Polynomial:
    """Unique lattice-supported polynomial equal to `poly` on every ambient point."""
    if poly.n_vars != ambient.n_factors:
        raise ValueError("variable count does not match the ambient")
    factors = ambient.factors
    out: dict[tuple[int, ...], Fraction] = {}
    for exps, coeff in poly.items():
        # Expand factor by factor; each variable reduces independently.
        partial: dict[tuple[int, ...], Fraction] = {(): coeff}
        for j, e in enumerate(exps):
            table = _power_table(factors[j], max(e, factors[j].arity - 1))
            row = table[e]
            nxt: dict[tuple[int, ...], Fraction] = {}
            for prefix, c in partial.items():
                for k, ck in enumerate(row):
                    if ck:
                        key = prefix + (k,)
                        nxt[key] = nxt.get(key, Fraction(0)) + c * ck
            partial = nxt
        for key, c in partial.items():
            out[key] = out.get(key, Fraction(0)) + c
    return Polynomial(poly.n_vars, out)

"""Characters of tableau families and Schur P/Q polynomials.

Polynomials in x_1..x_n are kept as dictionaries from exponent tuples to
nonzero integer coefficients.
"""

from __future__ import annotations

from typing import Iterable

from .tableaux import Shape, check_shape, enumerate_shtab

Monomials = dict[tuple[int, ...], int]


class MonomialPolynomial:
    """Integer polynomial stored by exponent vector."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Monomials | None = None):
        self.n = n
        self.terms = {exp: c for exp, c in (terms or {}).items() if c}
        if any(len(exp) != n for exp in self.terms):
            raise ValueError("exponent length disagrees with variable count")

    @classmethod
    def from_weights(cls, weights: Iterable[tuple[int, ...]], n: int):
        terms: Monomials = {}
        for wt in weights:
            terms[tuple(wt)] = terms.get(tuple(wt), 0) + 1
        return cls(n, terms)

    def coefficient(self, exp: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exp), 0)

    def scale(self, k: int) -> "MonomialPolynomial":
        return MonomialPolynomial(self.n, {e: k * c for e, c in self.terms.items()})

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MonomialPolynomial(self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        return (isinstance(other, MonomialPolynomial)
                and self.n == other.n and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def is_symmetric(self) -> bool:
        from itertools import permutations
        for exp, c in self.terms.items():
            seen = set()
            for perm in permutations(exp):
                if perm not in seen:
                    seen.add(perm)
                    if self.terms.get(perm, 0) != c:
                        return False
        return True

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> list:
        return [{"exp": list(e), "coeff": c} for e, c in self.sorted_terms()]

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(f"x{i+1}^{p}" for i, p in enumerate(exp) if p)
            parts.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(parts)


def character(weights: Iterable[tuple[int, ...]], n: int) -> MonomialPolynomial:
    """Weight generating function of a finite set of crystal elements."""
    return MonomialPolynomial.from_weights(weights, n)


def schur_p(shape: Shape, n: int) -> MonomialPolynomial:
    """Schur P polynomial: semistandard shifted tableaux, unprimed diagonal."""
    return character((t.weight(n) for t in
                      enumerate_shtab(shape, n, primed_diagonal=False)), n)


def schur_q(shape: Shape, n: int) -> MonomialPolynomial:
    """Schur Q polynomial: semistandard shifted tableaux, primes anywhere."""
    return character((t.weight(n) for t in
                      enumerate_shtab(shape, n, primed_diagonal=True)), n)


def _is_strict_partition(exp: tuple[int, ...]) -> bool:
    parts = [p for p in exp if p]
    return (list(exp[:len(parts)]) == parts
            and all(a > b for a, b in zip(parts, parts[1:])))


def expand_in_schur_q(poly: MonomialPolynomial) -> dict[Shape, int]:
    """Write a symmetric polynomial as an integer combination of Schur Q.

    Works by peeling the lexicographically greatest exponent, which for a
    Schur Q summand is its shape with coefficient ``2^length``.  Raises
    ValueError when the polynomial is not in the span.
    """
    residual = poly
    out: dict[Shape, int] = {}
    cache: dict[Shape, MonomialPolynomial] = {}
    while not residual.is_zero():
        exp, coeff = residual.sorted_terms()[0]
        if not _is_strict_partition(exp):
            raise ValueError(f"leading term x^{exp} is not a strict partition")
        shape = check_shape(p for p in exp if p)
        if len(shape) > poly.n:
            raise ValueError(f"shape {shape} longer than variable count")
        lead = 2 ** len(shape)
        if coeff % lead:
            raise ValueError(
                f"coefficient {coeff} of x^{exp} not divisible by {lead}")
        mult = coeff // lead
        if shape not in cache:
            cache[shape] = schur_q(shape, poly.n)
        residual = residual - cache[shape].scale(mult)
        out[shape] = mult
    return {s: c for s, c in sorted(out.items(), reverse=True) if c}

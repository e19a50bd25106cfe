# -*- coding: utf-8 -*-
"""Exact checks on the zeros and coefficients of genus distribution polynomials.

A polynomial has all its zeros on the imaginary axis exactly when it can be
written x^e Q(x^2) with every root of Q real and negative. The root count of Q
on (-B, 0) comes from a Sturm chain over QQ, with B a Cauchy bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import sympy as sp

from bicell.combinat import RatPoly

logger = logging.getLogger(__name__)

_T = sp.Symbol("t")


@dataclass(frozen=True)
class ParityDecomposition:
    """P(x) = x^e Q(x^2) with Q(0) != 0."""

    e: int
    Q: RatPoly


@dataclass(frozen=True)
class MixedParity:
    """P has occupied degrees of both parities, so some zero lies off the imaginary axis."""

    even_degrees: tuple[int, ...]
    odd_degrees: tuple[int, ...]


def to_sympy(poly: RatPoly) -> sp.Poly:
    """Convert to a sympy polynomial in t over QQ."""
    coeffs = [sp.Rational(c.numerator, c.denominator) for c in reversed(poly.coeffs)]
    return sp.Poly(coeffs or [0], _T, domain=sp.QQ)


def parity_decompose(poly: RatPoly) -> ParityDecomposition | MixedParity:
    """Split P as x^e Q(x^2), or report the mixed parity that prevents it.

    Raises:
        ValueError: If P is the zero polynomial.
    """
    if poly.is_zero():
        raise ValueError("Cannot decompose the zero polynomial")
    degrees = poly.support()
    even = tuple(d for d in degrees if d % 2 == 0)
    odd = tuple(d for d in degrees if d % 2 == 1)
    if even and odd:
        return MixedParity(even_degrees=even, odd_degrees=odd)
    e = degrees[0]
    return ParityDecomposition(
        e=e, Q=RatPoly.from_terms({(d - e) // 2: c for d, c in poly.terms()})
    )


def cauchy_bound(poly: sp.Poly) -> sp.Rational:
    """1 + max |a_i / a_n|: every complex root lies strictly inside this radius."""
    coeffs = poly.all_coeffs()
    lead = abs(coeffs[0])
    return 1 + max((abs(c) / lead for c in coeffs[1:]), default=sp.Integer(0))


def sturm_sequence(poly: sp.Poly) -> list[sp.Poly]:
    """p, p', then negated remainders until the remainder vanishes."""
    sequence = [poly, poly.diff(_T)]
    while not sequence[-1].is_zero:
        remainder = sequence[-2].rem(sequence[-1])
        if remainder.is_zero:
            break
        sequence.append(-remainder)
    return [p for p in sequence if not p.is_zero]


def _sign_changes(sequence: list[sp.Poly], point: sp.Rational) -> int:
    signs = [sp.sign(p.eval(point)) for p in sequence]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:], strict=False) if a != b)


def count_real_roots(poly: sp.Poly, low: sp.Rational, high: sp.Rational) -> int:
    """Distinct real roots in (low, high] of a squarefree polynomial."""
    sequence = sturm_sequence(poly)
    return _sign_changes(sequence, low) - _sign_changes(sequence, high)


def _squarefree_layers(poly: sp.Poly) -> list[sp.Poly]:
    """Q = prod_i layer_i: layer i holds the roots of multiplicity >= i+1, once each."""
    layers: list[sp.Poly] = []
    current = poly
    while current.degree() > 0:
        reduced = current.gcd(current.diff(_T))
        layers.append(current.quo(reduced))
        current = reduced
    return layers


def all_roots_real_nonpositive(q: RatPoly) -> bool:
    """True iff every complex root of Q is real and strictly negative.

    A root at 0 makes the answer False since Q(0) != 0 after decomposition.

    Raises:
        ValueError: If Q is the zero polynomial.
    """
    if q.is_zero():
        raise ValueError("Root test needs a nonzero polynomial")
    if q.coefficient(0) == 0:
        return False
    if q.degree == 0:
        return True
    poly = to_sympy(q)
    layers = _squarefree_layers(poly)
    if sum(layer.degree() for layer in layers) != poly.degree():
        logger.debug("Multiplicity layers of %s do not account for its degree", q)
        return False
    squarefree = layers[0]
    bound = cauchy_bound(squarefree)
    negative_roots = count_real_roots(squarefree, -bound, sp.Integer(0))
    logger.debug(
        "Q=%s: %d distinct negative roots of %d", q, negative_roots, squarefree.degree()
    )
    return negative_roots == squarefree.degree()


def imaginary_axis_check(poly: RatPoly) -> bool:
    """True iff every complex zero of P has real part exactly 0."""
    decomposition = parity_decompose(poly)
    if isinstance(decomposition, MixedParity):
        return False
    return all_roots_real_nonpositive(decomposition.Q)


def log_concavity_check(poly: RatPoly) -> bool:
    """Log-concavity of the nonzero coefficients in increasing degree.

    Raises:
        ValueError: If a coefficient is negative.
    """
    values = [c for _, c in poly.terms()]
    if any(c < 0 for c in values):
        raise ValueError(f"Log-concavity is only checked for nonnegative coefficients: {poly}")
    return all(values[j] ** 2 >= values[j - 1] * values[j + 1] for j in range(1, len(values) - 1))

"""Floating-point complex polynomial utilities.

Two precision tiers are supported and applied uniformly per computation:

* ``standard`` — plain binary64 complex arithmetic (numpy / Python complex);
* ``extended`` — mpmath working precision of 128 bits (> 2x the binary64
  significand), with results rounded back to binary64 at the end.

Trinomials y^n + y^m - 1 are always evaluated by binary powering, never by
dense Horner over mostly-zero coefficients: the cost is O(log n) and the
error a few ulps per squaring step.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import InvalidInputError
from .graphs import IntPolynomial, TrinomialSpec

PRECISIONS = ("standard", "extended")
EXTENDED_PREC_BITS = 128


def binary_pow(z, e: int):
    """z**e by exponentiation by squaring; works on scalars and numpy arrays."""
    if e < 0:
        raise InvalidInputError("negative exponent")
    if e == 0:
        return np.ones_like(z) if isinstance(z, np.ndarray) else type(z)(1)
    result = None
    base = z
    while True:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e == 0:
            return result
        base = base * base


@dataclass(frozen=True)
class DensePolynomial:
    """Dense complex polynomial; coefficients indexed by degree."""

    coefficients: tuple[complex, ...]
    precision: str = "standard"

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)
        if self.precision not in PRECISIONS:
            raise InvalidInputError(f"precision must be one of {PRECISIONS}")
        if not coeffs:
            raise InvalidInputError("empty coefficient list")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return self.coefficients == (0j,)

    def derivative(self) -> "DensePolynomial":
        if self.degree == 0:
            return DensePolynomial((0j,), self.precision)
        return DensePolynomial(
            tuple(i * c for i, c in enumerate(self.coefficients) if i > 0), self.precision
        )

    @staticmethod
    def from_int_polynomial(p: IntPolynomial, precision: str = "standard") -> "DensePolynomial":
        return DensePolynomial(tuple(complex(c) for c in p.coefficients), precision)

    @staticmethod
    def from_trinomial(t: TrinomialSpec, precision: str = "standard") -> "DensePolynomial":
        """Dense expansion of y^n + y^m - 1 (or 2y^m - 1 when balanced)."""
        coeffs = [0j] * (t.n + 1)
        coeffs[0] = -1 + 0j
        coeffs[t.m] += 1
        coeffs[t.n] += 1
        return DensePolynomial(tuple(coeffs), precision)


def evaluate(p: DensePolynomial, z):
    """Horner-scheme value of p at z in the polynomial's working precision.

    Accepts a scalar or a numpy array (standard precision only for arrays).
    Overflow is reported through non-finite components of the result.
    """
    if p.precision == "extended" and not isinstance(z, np.ndarray):
        with mpmath.workprec(EXTENDED_PREC_BITS):
            acc = mpmath.mpc(0)
            zm = mpmath.mpc(z)
            for c in reversed(p.coefficients):
                acc = acc * zm + c
            return complex(acc)
    if isinstance(z, np.ndarray):
        acc = np.full_like(z, p.coefficients[-1], dtype=np.complex128)
        for c in p.coefficients[-2::-1]:
            acc = acc * z + c
        return acc
    acc = complex(0)
    for c in reversed(p.coefficients):
        acc = acc * z + c
    return acc


def evaluate_with_derivative(p: DensePolynomial, z):
    """(p(z), p'(z)) in one Horner pass; vectorized over numpy arrays."""
    if isinstance(z, np.ndarray):
        v = np.full_like(z, p.coefficients[-1], dtype=np.complex128)
        d = np.zeros_like(z, dtype=np.complex128)
        for c in p.coefficients[-2::-1]:
            d = d * z + v
            v = v * z + c
        return v, d
    v = p.coefficients[-1]
    d = complex(0)
    for c in p.coefficients[-2::-1]:
        d = d * z + v
        v = v * z + c
    return v, d


def evaluate_trinomial(t: TrinomialSpec, z, precision: str = "standard"):
    """z^n + z^m - 1 via binary powering (2*z^m - 1 in the balanced case)."""
    if precision == "extended" and not isinstance(z, np.ndarray):
        with mpmath.workprec(EXTENDED_PREC_BITS):
            zm = mpmath.mpc(z)
            if t.is_balanced:
                return complex(2 * zm ** t.m - 1)
            return complex(zm ** t.n + zm ** t.m - 1)
    if t.is_balanced:
        return 2 * binary_pow(z, t.m) - 1
    return binary_pow(z, t.n) + binary_pow(z, t.m) - 1


def evaluate_trinomial_with_derivative(t: TrinomialSpec, z):
    """(value, derivative) of the trinomial at z, both by binary powering."""
    if t.is_balanced:
        zm1 = binary_pow(z, t.m - 1)
        return 2 * zm1 * z - 1, 2 * t.m * zm1
    zn1 = binary_pow(z, t.n - 1)
    zm1 = binary_pow(z, t.m - 1)
    return zn1 * z + zm1 * z - 1, t.n * zn1 + t.m * zm1

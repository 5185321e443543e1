"""Monic real polynomials in double precision.

Construction from explicit roots, Horner evaluation, derivative, the two
variable transforms (x -> -x up to sign, and root inversion), and
tolerance-aware extraction of the coefficient sign word.  All exact-arithmetic
re-verification lives in :mod:`polyrealize.certifier`; this module is the fast
path driven by the search loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .signpatterns import SignPattern

DEFAULT_SIGN_TOLERANCE = 1e-9


class ZeroRootError(ValueError):
    """A real root is exactly zero; sign words need a nonzero constant term."""


class ZeroConstantTermError(ValueError):
    """Root inversion needs a nonzero constant term."""


class _AmbiguousType:
    """Singleton returned by sign_vector when some coefficient is too small to call."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "AMBIGUOUS"

    def __bool__(self) -> bool:
        return False


AMBIGUOUS = _AmbiguousType()


@dataclass(frozen=True)
class RootSpec:
    """Explicit roots of a monic real polynomial.

    ``real_roots`` holds nonzero reals; ``complex_pairs`` holds (re, im)
    tuples with im > 0, each standing for the conjugate pair re +/- i*im.
    Entries may be floats or Fractions; every consumer is arithmetic-agnostic,
    so the same type carries both sampled values and rationalized ones.
    """

    real_roots: tuple = ()
    complex_pairs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "real_roots", tuple(self.real_roots))
        object.__setattr__(
            self, "complex_pairs", tuple((re, im) for re, im in self.complex_pairs)
        )
        for r in self.real_roots:
            if r == 0:
                raise ZeroRootError("real root is exactly zero")
        for _, im in self.complex_pairs:
            if not im > 0:
                raise ValueError(f"complex pair needs im > 0, got im={im!r}")

    @property
    def degree(self) -> int:
        return len(self.real_roots) + 2 * len(self.complex_pairs)

    @property
    def pos_count(self) -> int:
        return sum(1 for r in self.real_roots if r > 0)

    @property
    def neg_count(self) -> int:
        return sum(1 for r in self.real_roots if r < 0)


@dataclass(frozen=True)
class RealPolynomial:
    """Monic polynomial of degree d; stores a_{d-1}..a_0, the leading 1 is implicit."""

    tail: tuple[float, ...]

    @property
    def degree(self) -> int:
        return len(self.tail)

    @property
    def coeffs(self) -> tuple[float, ...]:
        """All d+1 coefficients in descending powers, leading 1.0 first."""
        return (1.0,) + self.tail


def expand_real(roots: Sequence[float]) -> list[float]:
    """Descending coefficients of the monic product of (x - r); no validation.

    Used directly by the gap machinery, where a zero root is legitimate.
    """
    coeffs = [1.0]
    for r in roots:
        nxt = coeffs + [0.0]
        for j in range(len(coeffs)):
            nxt[j + 1] -= r * coeffs[j]
        coeffs = nxt
    return coeffs


def expand_from_roots(spec: RootSpec) -> RealPolynomial:
    """Expand a RootSpec by sequential convolution, real factors first.

    Complex pairs contribute quadratics x^2 - 2*re*x + (re^2 + im^2).
    """
    if spec.degree == 0:
        raise ValueError("empty RootSpec")
    coeffs = expand_real([float(r) for r in spec.real_roots])
    for re, im in spec.complex_pairs:
        re = float(re)
        im = float(im)
        s = 2.0 * re
        q = re * re + im * im
        nxt = coeffs + [0.0, 0.0]
        for j in range(len(coeffs)):
            nxt[j + 1] -= s * coeffs[j]
            nxt[j + 2] += q * coeffs[j]
        coeffs = nxt
    return RealPolynomial(tuple(coeffs[1:]))


def horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def evaluate(p: RealPolynomial, x: float) -> float:
    return horner(p.coeffs, x)


def derivative(p: RealPolynomial) -> tuple[float, ...]:
    """Descending coefficients of p'; non-monic, leading coefficient is exactly d."""
    return derivative_coeffs(p.coeffs)


def derivative_coeffs(coeffs: Sequence[float]) -> tuple[float, ...]:
    d = len(coeffs) - 1
    return tuple(float(d - i) * coeffs[i] for i in range(d))


def negate_variable(p: RealPolynomial) -> RealPolynomial:
    """(-1)^d * p(-x): negates every root, stays monic."""
    full = p.coeffs
    return RealPolynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(full))[1:])


def reciprocal(p: RealPolynomial) -> RealPolynomial:
    """Monic polynomial whose roots are the inverses of p's roots."""
    a0 = p.coeffs[-1]
    if a0 == 0.0:
        raise ZeroConstantTermError("constant term is zero, roots cannot be inverted")
    rev = p.coeffs[::-1]
    return RealPolynomial(tuple(c / a0 for c in rev[1:]))


def sign_tuple(coeffs: Sequence[float], tau: float = DEFAULT_SIGN_TOLERANCE):
    """Signs (+1/-1) of the coefficients, or None when any is too small to call.

    A coefficient is ambiguous when |a_j| <= tau * max(1, max_k |a_k|).
    """
    m = 1.0
    for c in coeffs:
        a = abs(c)
        if a > m:
            m = a
    thr = tau * m
    out = []
    for c in coeffs:
        if c > thr:
            out.append(1)
        elif c < -thr:
            out.append(-1)
        else:
            return None
    return tuple(out)


def sign_vector(p: RealPolynomial, tau: float = DEFAULT_SIGN_TOLERANCE):
    """SignPattern of p's coefficients, or AMBIGUOUS."""
    if not tau > 0:
        raise ValueError("tau must be positive")
    t = sign_tuple(p.coeffs, tau)
    return AMBIGUOUS if t is None else SignPattern(t)

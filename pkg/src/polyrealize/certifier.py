"""Exact-arithmetic back end.

Sampled roots are rationalized (rounded to a fixed number of significant
decimal digits, represented exactly), expanded by exact convolution, and the
resulting coefficient signs / root counts / modulus order are checked against
a claimed couple.  Gap classes are certified by exact-sign bisection on the
derivative with dyadic midpoints, refined until every strict comparison is
decided by interval separation.

A Certificate is a transcript: re-running its checks on the stored data
reproduces the claim.  A rationalized witness differs microscopically from
the floating sample that suggested it; that is irrelevant, since existence of
the rationalized polynomial is what the certificate claims.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .moduliorders import ModuliCouple, ModuliOrder, TiedModuliError
from .polycore import RootSpec
from .signpatterns import PairCouple, SignPattern

DEFAULT_DIGITS = 12
GAP_REFINE_CAP = 1000


class RoundsToZeroError(ValueError):
    """Rationalization produced a zero entry."""


class ZeroCoefficientError(ValueError):
    """The exact expansion has a vanishing coefficient; its sign word is undefined."""


class _UndecidedType:
    __slots__ = ()

    def __repr__(self) -> str:
        return "UNDECIDED"

    def __bool__(self) -> bool:
        return False


UNDECIDED = _UndecidedType()


@dataclass(frozen=True)
class ExactPolynomial:
    """Monic polynomial with arbitrary-precision rational coefficients, descending."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("exact polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc


@dataclass(frozen=True)
class Mismatch:
    """First failing check of a certification attempt, with the adjudicated facts."""

    failed_check: str
    detail: str
    actual_pattern: SignPattern | None = None
    actual_pair: tuple[int, int] | None = None
    actual_order: ModuliOrder | None = None


@dataclass(frozen=True)
class Certificate:
    """Exact verification transcript for a couple or a gap class."""

    spec: RootSpec | None
    coeffs: tuple[Fraction, ...]
    claim: Union[PairCouple, ModuliCouple, str]
    checks: tuple[tuple[str, str], ...]


def rationalize_value(v, digits: int = DEFAULT_DIGITS) -> Fraction:
    """Exact rational equal to v rounded to `digits` significant decimal digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    v = float(v)
    if v == 0.0:
        raise RoundsToZeroError("value is zero")
    mant, exp = format(v, f".{digits - 1}e").split("e")
    q = Fraction(mant) * Fraction(10) ** int(exp)
    if q == 0:
        raise RoundsToZeroError(f"{v!r} rounds to zero at {digits} digits")
    return q


def rationalize(spec: RootSpec, digits: int = DEFAULT_DIGITS) -> RootSpec:
    """RootSpec with every entry rounded to `digits` significant decimal digits."""
    return RootSpec(
        real_roots=tuple(rationalize_value(r, digits) for r in spec.real_roots),
        complex_pairs=tuple(
            (rationalize_value(re, digits) if re != 0 else Fraction(0),
             rationalize_value(im, digits))
            for re, im in spec.complex_pairs
        ),
    )


def exact_expand(spec: RootSpec) -> ExactPolynomial:
    """Exact convolution product over the spec's factors."""
    coeffs = [Fraction(1)]
    for r in spec.real_roots:
        r = Fraction(r)
        nxt = coeffs + [Fraction(0)]
        for j in range(len(coeffs)):
            nxt[j + 1] -= r * coeffs[j]
        coeffs = nxt
    for re, im in spec.complex_pairs:
        re = Fraction(re)
        im = Fraction(im)
        s = 2 * re
        q = re * re + im * im
        nxt = coeffs + [Fraction(0), Fraction(0)]
        for j in range(len(coeffs)):
            nxt[j + 1] -= s * coeffs[j]
            nxt[j + 2] += q * coeffs[j]
        coeffs = nxt
    return ExactPolynomial(tuple(coeffs))


def exact_sign_pattern(poly: ExactPolynomial) -> SignPattern:
    """Sign word of exact coefficients; a zero coefficient is an error, not a guess."""
    signs = []
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            raise ZeroCoefficientError(f"coefficient of x^{poly.degree - i} is exactly zero")
        signs.append(1 if c > 0 else -1)
    return SignPattern(tuple(signs))


def _exact_order(spec: RootSpec) -> ModuliOrder:
    mods = sorted(spec.real_roots, key=abs)
    for a, b in zip(mods, mods[1:]):
        if abs(Fraction(a)) == abs(Fraction(b)):
            raise TiedModuliError(f"tied moduli {a!r}")
    return ModuliOrder("".join("P" if r > 0 else "N" for r in mods))


def certify_couple(spec: RootSpec, claim: Union[PairCouple, ModuliCouple]):
    """Certificate if the exact expansion of spec realizes the claim, else Mismatch.

    Checks run in order: sign vector, then root counts (pair claims) or
    hyperbolicity / distinct moduli / order (moduli claims).  Raises
    ZeroCoefficientError when the expansion has a vanishing coefficient; such
    a sample must be rejected, never patched.
    """
    poly = exact_expand(spec)
    actual = exact_sign_pattern(poly)
    checks: list[tuple[str, str]] = []

    pos = spec.pos_count
    neg = spec.neg_count

    if actual != claim.pattern:
        return Mismatch(
            "sign_vector",
            f"expansion has sign word {actual.word}, claim is {claim.pattern.word}",
            actual_pattern=actual,
            actual_pair=(pos, neg),
        )
    checks.append(("sign_vector", actual.word))

    if isinstance(claim, PairCouple):
        if (pos, neg) != tuple(claim.pair):
            return Mismatch(
                "root_counts",
                f"spec has (pos, neg) = ({pos}, {neg}), claim is {tuple(claim.pair)}",
                actual_pattern=actual,
                actual_pair=(pos, neg),
            )
        checks.append(("root_counts", f"({pos},{neg})"))
    else:
        if spec.complex_pairs:
            return Mismatch(
                "hyperbolic",
                "moduli claims need all roots real",
                actual_pattern=actual,
                actual_pair=(pos, neg),
            )
        checks.append(("hyperbolic", "all roots real"))
        order = _exact_order(spec)  # TiedModuliError propagates: sample is invalid
        if order != claim.order:
            return Mismatch(
                "moduli_order",
                f"roots give order {order.word}, claim is {claim.order.word}",
                actual_pattern=actual,
                actual_pair=(pos, neg),
                actual_order=order,
            )
        checks.append(("moduli_order", order.word))

    # internal identity: subdominant coefficient is minus the exact root sum
    root_sum = sum((Fraction(r) for r in spec.real_roots), Fraction(0))
    root_sum += sum((2 * Fraction(re) for re, _ in spec.complex_pairs), Fraction(0))
    assert poly.coeffs[1] == -root_sum, "expansion broke the root-sum identity"
    checks.append(("subdominant_identity", str(poly.coeffs[1])))

    return Certificate(spec=spec, coeffs=poly.coeffs, claim=claim, checks=tuple(checks))


def _exact_derivative(poly: ExactPolynomial) -> tuple[Fraction, ...]:
    d = poly.degree
    return tuple(Fraction(d - i) * poly.coeffs[i] for i in range(d))


def _eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _halve(dcoeffs, lo, hi, flo):
    """One exact bisection step; collapses to a point when the midpoint is a root."""
    mid = (lo + hi) / 2
    fm = _eval(dcoeffs, mid)
    if fm == 0:
        return mid, mid, flo
    if (fm > 0) == (flo > 0):
        return mid, hi, fm
    return lo, mid, flo


def enclose_critical_points(
    poly: ExactPolynomial, roots: Sequence[Fraction], width_bound: Fraction
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint rational enclosures of the derivative's roots, one per root interval.

    Endpoint signs are exact, so bisection always converges; midpoints are
    dyadic refinements of the rational endpoints, keeping value sizes linear
    in the iteration count.
    """
    roots = [Fraction(r) for r in roots]
    for a, b in zip(roots, roots[1:]):
        if a >= b:
            raise ValueError("roots must be strictly increasing")
    dcoeffs = _exact_derivative(poly)
    out = []
    for k in range(len(roots) - 1):
        lo, hi = roots[k], roots[k + 1]
        flo = _eval(dcoeffs, lo)
        fhi = _eval(dcoeffs, hi)
        if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
            raise ValueError("derivative does not change sign; roots are not simple")
        while hi - lo >= width_bound:
            lo, hi, flo = _halve(dcoeffs, lo, hi, flo)
            if lo == hi:
                break
        out.append((lo, hi))
    return out


def certify_gap_class(roots: Sequence[Fraction], max_rounds: int = GAP_REFINE_CAP):
    """Certified gap class of the monic polynomial with the given exact roots.

    The midpoint-gap extrema are exact rationals; the critical-point gaps are
    bracketed by enclosures that are refined until both strict comparisons are
    decided by separation.  Returns UNDECIDED after `max_rounds` refinement
    rounds, which signals a potential non-strict equality.
    """
    roots = [Fraction(r) for r in roots]
    if len(roots) < 3:
        raise ValueError("need at least three roots")
    for a, b in zip(roots, roots[1:]):
        if a >= b:
            raise ValueError("roots must be strictly increasing")

    z_gaps = [(roots[k + 2] - roots[k]) / 2 for k in range(len(roots) - 2)]
    m_tilde, M_tilde = min(z_gaps), max(z_gaps)

    poly = ExactPolynomial(_expand_allowing_zero(roots))
    dcoeffs = _exact_derivative(poly)

    # initial enclosures with cached endpoint signs
    intervals = []
    for k in range(len(roots) - 1):
        lo, hi = roots[k], roots[k + 1]
        flo = _eval(dcoeffs, lo)
        fhi = _eval(dcoeffs, hi)
        if flo == 0 or fhi == 0 or (flo > 0) == (fhi > 0):
            raise ValueError("derivative does not change sign; roots are not simple")
        intervals.append((lo, hi, flo))

    for _ in range(max_rounds + 1):
        gap_lo = [intervals[k + 1][0] - intervals[k][1] for k in range(len(intervals) - 1)]
        gap_hi = [intervals[k + 1][1] - intervals[k][0] for k in range(len(intervals) - 1)]
        m_lo, m_hi = min(gap_lo), min(gap_hi)
        M_lo, M_hi = max(gap_lo), max(gap_hi)

        left = "L+" if m_lo > m_tilde else ("L-" if m_hi < m_tilde else None)
        right = "R+" if M_hi < M_tilde else ("R-" if M_lo > M_tilde else None)
        if left and right:
            cls = left + right
            checks = (
                ("m_tilde", str(m_tilde)),
                ("M_tilde", str(M_tilde)),
                ("m_prime_bounds", f"[{m_lo}, {m_hi}]"),
                ("M_prime_bounds", f"[{M_lo}, {M_hi}]"),
            )
            return Certificate(spec=None, coeffs=poly.coeffs, claim=cls, checks=checks)

        intervals = [
            _halve(dcoeffs, lo, hi, flo) if lo != hi else (lo, hi, flo)
            for lo, hi, flo in intervals
        ]
    return UNDECIDED


def _expand_allowing_zero(roots: Sequence[Fraction]) -> tuple[Fraction, ...]:
    # gap analysis admits a zero root; RootSpec does not
    coeffs = [Fraction(1)]
    for r in roots:
        nxt = coeffs + [Fraction(0)]
        for j in range(len(coeffs)):
            nxt[j + 1] -= r * coeffs[j]
        coeffs = nxt
    return tuple(coeffs)


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"

"""Randomized realizability search with counter-based, reproducible draws.

Every attempt's randomness is a pure function of (seed, attempt index): the
index is folded into the seed through a 64-bit avalanche mix, and successive
uniforms of that attempt come from re-mixing an incremented counter.  The
result is bitwise reproducibility regardless of execution order, so attempt
blocks can be evaluated by any number of workers and the outcome is always the
lowest-index hit.

Three engines share the machinery: pair search (draw the prescribed numbers
of positive/negative roots plus conjugate complex pairs, expand, compare the
coefficient sign word), moduli search (draw d positives, sort, negate where
the target order says N), and gap-class search (draw d distinct reals and
classify their critical-point gaps).  Found results re-verify through the
exact certifier before they are reported; a floating hit whose rationalized
form fails certification is counted as a failed attempt and the scan goes on.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

from . import certifier, polycore
from .certifier import Certificate, Mismatch
from .criticalgaps import (
    GAP_CLASSES,
    DegenerateMarginError,
    GapReport,
    NoSignChangeError,
    gap_report,
)
from .moduliorders import ModuliCouple, ModuliOrder, is_compatible
from .polycore import RealPolynomial, RootSpec, expand_from_roots, sign_tuple
from .signpatterns import (
    IncompatibleCoupleError,
    PairCouple,
    RootCountPair,
    SignPattern,
    is_compatible_pair,
)

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_SEED_SALT = 0xD1B54A32D192ED03
_BLOCK = 1024


class ParityMismatchError(ValueError):
    """d - pos - neg must be even (complex roots come in conjugate pairs)."""


def _mix64(z: int) -> int:
    z &= _MASK64
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK64
    z ^= z >> 31
    return z


def attempt_unit_draws(seed: int, attempt: int, count: int) -> list[float]:
    """`count` uniforms in [0, 1), a pure function of (seed, attempt)."""
    base = _mix64((seed ^ _SEED_SALT) + attempt * _GAMMA)
    return [
        (_mix64(base + j * _GAMMA) >> 11) * 2.0**-53 for j in range(1, count + 1)
    ]


@dataclass(frozen=True)
class Uniform:
    """Plain uniform draws over the configured interval."""


@dataclass(frozen=True)
class Mixture:
    """Each root is drawn from a much narrower interval with some probability.

    narrow_scale is the absolute half-width of the narrow interval (defaults
    to ell/100 when None).  One narrow/wide decision is made per real root
    and one per conjugate pair (covering both its parameters).
    """

    narrow_scale: Optional[float] = None
    narrow_fraction: float = 0.5


@dataclass(frozen=True)
class MultiplicityBias:
    """A real root repeats the previous same-sign draw with some probability.

    Only meaningful for pair searches; moduli and gap searches need distinct
    values and treat this strategy as Uniform.
    """

    dup_probability: float = 0.5


Strategy = Union[Uniform, Mixture, MultiplicityBias]


@dataclass(frozen=True)
class SearchConfig:
    """Reproducible sampling parameters shared by all engines."""

    n: int
    ell: float = 1.0
    seed: int = 0
    strategy: Strategy = Uniform()
    tau: float = polycore.DEFAULT_SIGN_TOLERANCE
    digits: int = certifier.DEFAULT_DIGITS
    certify: bool = True
    workers: int = 1

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not self.ell > 0:
            raise ValueError("ell must be positive")
        if not self.tau > 0:
            raise ValueError("tau must be positive")
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if isinstance(self.strategy, Mixture):
            s = self.strategy.narrow_scale
            if s is not None and not 0 < s < self.ell:
                raise ValueError("narrow_scale must satisfy 0 < scale < ell")
            if not 0 <= self.strategy.narrow_fraction <= 1:
                raise ValueError("narrow_fraction must lie in [0, 1]")
        if isinstance(self.strategy, MultiplicityBias):
            if not 0 <= self.strategy.dup_probability <= 1:
                raise ValueError("dup_probability must lie in [0, 1]")

    @property
    def narrow_scale(self) -> float:
        if isinstance(self.strategy, Mixture) and self.strategy.narrow_scale is not None:
            return self.strategy.narrow_scale
        return self.ell / 100.0


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search: Found (with witness and certificate) or Exhausted."""

    status: str  # "found" | "exhausted"
    attempts: int
    seconds: float
    attempt_index: Optional[int] = None
    spec: Optional[RootSpec] = None
    poly: Optional[RealPolynomial] = None
    certificate: Optional[Certificate] = None
    gap: Optional[GapReport] = None

    @property
    def found(self) -> bool:
        return self.status == "found"


# --- per-attempt draws ------------------------------------------------------

def _pair_draw_count(pos: int, neg: int, npairs: int, strategy: Strategy) -> int:
    if isinstance(strategy, Uniform):
        return pos + neg + 2 * npairs
    if isinstance(strategy, Mixture):
        return 2 * (pos + neg) + 3 * npairs
    return 2 * (pos + neg) + 2 * npairs  # MultiplicityBias


def _draw_pair_roots(pos, neg, npairs, cfg: SearchConfig, attempt: int):
    """Raw (reals, pairs) lists for one pair-search attempt."""
    strategy = cfg.strategy
    ell = cfg.ell
    u = attempt_unit_draws(cfg.seed, attempt, _pair_draw_count(pos, neg, npairs, strategy))
    reals: list[float] = []
    pairs: list[tuple[float, float]] = []
    t = 0
    if isinstance(strategy, Uniform):
        for _ in range(pos):
            reals.append(ell * (1.0 - u[t]))
            t += 1
        for _ in range(neg):
            reals.append(-ell * (1.0 - u[t]))
            t += 1
        for _ in range(npairs):
            pairs.append((ell * (2.0 * u[t] - 1.0), ell * (1.0 - u[t + 1])))
            t += 2
    elif isinstance(strategy, Mixture):
        ns, frac = cfg.narrow_scale, strategy.narrow_fraction
        for sign, count in ((1.0, pos), (-1.0, neg)):
            for _ in range(count):
                scale = ns if u[t] < frac else ell
                reals.append(sign * scale * (1.0 - u[t + 1]))
                t += 2
        for _ in range(npairs):
            scale = ns if u[t] < frac else ell
            pairs.append((scale * (2.0 * u[t + 1] - 1.0), scale * (1.0 - u[t + 2])))
            t += 3
    else:  # MultiplicityBias
        dup = strategy.dup_probability
        for sign, count in ((1.0, pos), (-1.0, neg)):
            prev = None
            for _ in range(count):
                if prev is not None and u[t] < dup:
                    reals.append(prev)
                else:
                    prev = sign * ell * (1.0 - u[t + 1])
                    reals.append(prev)
                t += 2
        for _ in range(npairs):
            pairs.append((ell * (2.0 * u[t] - 1.0), ell * (1.0 - u[t + 1])))
            t += 2
    return reals, pairs


def draw_rootspec_pair(
    d: int, pair: RootCountPair, cfg: SearchConfig, attempt_index: int
) -> RootSpec:
    """The RootSpec examined at `attempt_index`; bit-for-bit reproducible."""
    pos, neg = pair
    rest = d - pos - neg
    if rest < 0:
        raise ValueError(f"pos + neg exceeds degree {d}")
    if rest % 2 != 0:
        raise ParityMismatchError(f"d - pos - neg = {rest} is odd")
    reals, pairs = _draw_pair_roots(pos, neg, rest // 2, cfg, attempt_index)
    return RootSpec(real_roots=tuple(reals), complex_pairs=tuple(pairs))


def _moduli_count(d: int, strategy: Strategy) -> int:
    return 2 * d if isinstance(strategy, Mixture) else d


def _draw_moduli(d: int, cfg: SearchConfig, attempt: int) -> list[float]:
    """d positive moduli on (0, ell]; Mixture may shrink individual draws."""
    strategy = cfg.strategy
    u = attempt_unit_draws(cfg.seed, attempt, _moduli_count(d, strategy))
    if isinstance(strategy, Mixture):
        ns, frac = cfg.narrow_scale, strategy.narrow_fraction
        return [
            (ns if u[2 * j] < frac else cfg.ell) * (1.0 - u[2 * j + 1])
            for j in range(d)
        ]
    return [cfg.ell * (1.0 - x) for x in u]


def _draw_gap_points(d: int, cfg: SearchConfig, attempt: int) -> list[float]:
    strategy = cfg.strategy
    u = attempt_unit_draws(cfg.seed, attempt, _moduli_count(d, strategy))
    if isinstance(strategy, Mixture):
        ns, frac = cfg.narrow_scale, strategy.narrow_fraction
        return [
            (ns if u[2 * j] < frac else cfg.ell) * (2.0 * u[2 * j + 1] - 1.0)
            for j in range(d)
        ]
    return [cfg.ell * (2.0 * x - 1.0) for x in u]


# --- the scan loop ----------------------------------------------------------

def _scan(attempt_fn, cfg: SearchConfig) -> SearchOutcome:
    """Run attempts 1..n in blocks, returning the lowest-index hit.

    attempt_fn(i) returns a SearchOutcome for a verified hit at attempt i, or
    None.  With several workers a block is split into chunks evaluated
    concurrently; attempt-level determinism makes the result independent of
    the worker count.
    """
    start = time.perf_counter()
    n = cfg.n

    if cfg.workers == 1:
        for i in range(1, n + 1):
            hit = attempt_fn(i)
            if hit is not None:
                return hit
        return SearchOutcome("exhausted", n, time.perf_counter() - start)

    def scan_range(lo: int, hi: int):
        best = None
        for i in range(lo, hi):
            hit = attempt_fn(i)
            if hit is not None:
                best = hit
                break
        return best

    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        block_lo = 1
        while block_lo <= n:
            block_hi = min(block_lo + _BLOCK, n + 1)
            step = max(1, (block_hi - block_lo + cfg.workers - 1) // cfg.workers)
            chunks = [
                (lo, min(lo + step, block_hi))
                for lo in range(block_lo, block_hi, step)
            ]
            hits = [
                h
                for h in pool.map(lambda c: scan_range(*c), chunks)
                if h is not None
            ]
            if hits:
                return min(hits, key=lambda h: h.attempt_index)
            block_lo = block_hi
    return SearchOutcome("exhausted", n, time.perf_counter() - start)


def _finish(outcome: SearchOutcome, start: float) -> SearchOutcome:
    return SearchOutcome(
        status=outcome.status,
        attempts=outcome.attempts,
        seconds=time.perf_counter() - start,
        attempt_index=outcome.attempt_index,
        spec=outcome.spec,
        poly=outcome.poly,
        certificate=outcome.certificate,
        gap=outcome.gap,
    )


# --- engines ----------------------------------------------------------------

def search_pair(sigma: SignPattern, pair: RootCountPair, cfg: SearchConfig) -> SearchOutcome:
    """Hunt a polynomial whose sign word is sigma with the given root counts."""
    pair = RootCountPair(*pair)
    if not is_compatible_pair(sigma, pair):
        raise IncompatibleCoupleError(
            f"pair {tuple(pair)} incompatible with pattern {sigma.word}"
        )
    d = sigma.degree
    pos, neg = pair
    npairs = (d - pos - neg) // 2
    target = sigma.signs
    claim = PairCouple(sigma, pair)
    start = time.perf_counter()

    def attempt(i: int):
        reals, cpairs = _draw_pair_roots(pos, neg, npairs, cfg, i)
        coeffs = [1.0]
        for r in reals:
            nxt = coeffs + [0.0]
            for j in range(len(coeffs)):
                nxt[j + 1] -= r * coeffs[j]
            coeffs = nxt
        for re, im in cpairs:
            s = 2.0 * re
            q = re * re + im * im
            nxt = coeffs + [0.0, 0.0]
            for j in range(len(coeffs)):
                nxt[j + 1] -= s * coeffs[j]
                nxt[j + 2] += q * coeffs[j]
            coeffs = nxt
        if sign_tuple(coeffs, cfg.tau) != target:
            return None
        spec = draw_rootspec_pair(d, pair, cfg, i)
        poly = expand_from_roots(spec)
        cert = None
        if cfg.certify:
            try:
                cert = certifier.certify_couple(
                    certifier.rationalize(spec, cfg.digits), claim
                )
            except certifier.ZeroCoefficientError:
                return None
            if isinstance(cert, Mismatch):  # borderline sample; keep scanning
                return None
        return SearchOutcome("found", i, 0.0, i, spec, poly, cert)

    return _finish(_scan(attempt, cfg), start)


def search_moduli(sigma: SignPattern, order: ModuliOrder, cfg: SearchConfig) -> SearchOutcome:
    """Hunt a hyperbolic polynomial realizing sigma with the given modulus order."""
    if not is_compatible(sigma, order):
        raise IncompatibleCoupleError(
            f"order {order.word} incompatible with pattern {sigma.word}"
        )
    d = order.degree
    target = sigma.signs
    letters = order.word
    claim = ModuliCouple(sigma, order)
    start = time.perf_counter()

    def attempt(i: int):
        mods = _draw_moduli(d, cfg, i)
        mods.sort()
        for j in range(d - 1):
            if mods[j] == mods[j + 1]:  # tied moduli: rejected, index consumed
                return None
        roots = [m if letters[j] == "P" else -m for j, m in enumerate(mods)]
        coeffs = [1.0]
        for r in roots:
            nxt = coeffs + [0.0]
            for j in range(len(coeffs)):
                nxt[j + 1] -= r * coeffs[j]
            coeffs = nxt
        if sign_tuple(coeffs, cfg.tau) != target:
            return None
        spec = RootSpec(real_roots=tuple(roots))
        poly = expand_from_roots(spec)
        cert = None
        if cfg.certify:
            try:
                cert = certifier.certify_couple(
                    certifier.rationalize(spec, cfg.digits), claim
                )
            except certifier.ZeroCoefficientError:
                return None
            if isinstance(cert, Mismatch):
                return None
        return SearchOutcome("found", i, 0.0, i, spec, poly, cert)

    return _finish(_scan(attempt, cfg), start)


def search_gap_class(d: int, target: str, cfg: SearchConfig) -> SearchOutcome:
    """Hunt a degree-d root configuration whose gap chain realizes `target`."""
    if d < 3:
        raise ValueError("need degree >= 3")
    if target not in GAP_CLASSES:
        raise ValueError(f"target class must be one of {GAP_CLASSES}")
    start = time.perf_counter()

    def attempt(i: int):
        xs = _draw_gap_points(d, cfg, i)
        xs.sort()
        if any(x == 0.0 for x in xs):
            return None
        for j in range(d - 1):
            if xs[j] == xs[j + 1]:
                return None
        try:
            report = gap_report(xs)
        except (DegenerateMarginError, NoSignChangeError):
            return None
        if report.gap_class != target:
            return None
        spec = RootSpec(real_roots=tuple(xs))
        cert = None
        if cfg.certify:
            exact_roots = [certifier.rationalize_value(x, cfg.digits) for x in xs]
            got = certifier.certify_gap_class(exact_roots)
            if got is certifier.UNDECIDED or got.claim != target:
                return None
            cert = got
        return SearchOutcome(
            "found", i, 0.0, i, spec, expand_from_roots(spec), cert, gap=report
        )

    return _finish(_scan(attempt, cfg), start)

"""Shared test configuration and deterministic sample generators."""

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def unit_draws(seed: int, case: int, count: int) -> list[float]:
    """Deterministic uniforms for test data, independent of hypothesis."""
    from polyrealize.sampler import attempt_unit_draws

    return attempt_unit_draws(seed, case, count)


def random_rootspec(seed: int, case: int, max_degree: int = 8):
    """A random RootSpec with degree <= max_degree, reproducible per (seed, case)."""
    from polyrealize.polycore import RootSpec

    u = unit_draws(seed, case, 3 + 3 * max_degree)
    pos = int(u[0] * (max_degree + 1) / 2)
    neg = int(u[1] * (max_degree + 1 - pos) / 2)
    npairs = int(u[2] * (max_degree - pos - neg) / 2 / 2)
    t = 3
    reals = []
    for _ in range(pos):
        reals.append(1.0 - u[t])
        t += 1
    for _ in range(neg):
        reals.append(-(1.0 - u[t]))
        t += 1
    pairs = []
    for _ in range(npairs):
        pairs.append((2.0 * u[t] - 1.0, 1.0 - u[t + 1]))
        t += 2
    if not reals and not pairs:
        reals = [1.0 - u[t]]
    return RootSpec(real_roots=tuple(reals), complex_pairs=tuple(pairs))


def random_distinct_sorted(seed: int, case: int, n: int, spread: float = 1.0):
    """n strictly increasing reals in [-spread, spread], reproducible."""
    while True:
        u = unit_draws(seed, case, n)
        xs = sorted(spread * (2.0 * x - 1.0) for x in u)
        if all(a < b for a, b in zip(xs, xs[1:])):
            return xs
        case += 1_000_003

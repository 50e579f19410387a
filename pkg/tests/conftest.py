import random

import pytest

from antiramsey.simplicial import SimplicialComplex


def random_antichain(rng: random.Random, n: int, r_max: int) -> list[tuple[int, ...]]:
    """Random antichain of nonempty subsets of range(n), at most r_max members."""
    chosen: list[frozenset] = []
    for _ in range(rng.randint(0, r_max) * 3):
        if len(chosen) >= r_max:
            break
        k = rng.choice([1, 2, 2, 3, 3, 3, 4]) if n >= 4 else rng.randint(1, n)
        k = min(k, n)
        s = frozenset(rng.sample(range(n), k))
        if any(s <= c or c <= s for c in chosen):
            continue
        chosen.append(s)
    return [tuple(sorted(s)) for s in chosen]


def random_complex(rng: random.Random, n_max: int = 8, r_max: int = 6) -> SimplicialComplex:
    n = rng.randint(1, n_max)
    return SimplicialComplex.from_nonfaces(n, random_antichain(rng, n, r_max))


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

import pytest

from lpm_toric.lpm_core import LatticePath, pair_from_strings
from lpm_toric.verify import hook_pipeline, run_pipeline

HOOKS = [(a, b) for a in range(1, 5) for b in range(1, a + 1)]

_cache = {}


def hook(alpha, beta):
    """Shared, lazily built pipeline for a hook; building (4, 4) takes seconds."""
    key = (alpha, beta)
    if key not in _cache:
        _cache[key] = hook_pipeline(alpha, beta)
    return _cache[key]


@pytest.fixture(scope="session")
def p22():
    return run_pipeline(pair_from_strings("NENE", "EENN"))


def bounded_pair(rng, size, spread=2):
    """Random noncrossing pair: pointwise max/min of ``spread`` random height profiles."""
    t = rng.randint(0, size)
    profiles = []
    for _ in range(spread):
        steps = ["N"] * t + ["E"] * (size - t)
        rng.shuffle(steps)
        profiles.append(LatticePath(tuple(steps)).heights())
    hi = [max(h) for h in zip(*profiles)]
    lo = [min(h) for h in zip(*profiles)]

    def word(h):
        return "".join("N" if h[i + 1] > h[i] else "E" for i in range(size))

    return pair_from_strings(word(hi), word(lo))


ACCEPTANCE: dict[int, str] = {}


def record_verdict(number, title, failures, detail=""):
    status = "PASS" if not failures else "FAIL"
    extra = detail if not failures else "; ".join(map(str, failures[:8]))
    ACCEPTANCE[number] = f"criterion {number} {title}: {status}" + (f" ({extra})" if extra else "")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[number])

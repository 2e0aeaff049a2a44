import numpy as np
import pytest

from edurace.economy import Economy, SkillDistribution, Technology


def make_econ(a=1.0, c=0.5, mu=0.0, sigma=1.0):
    return Economy(Technology.from_level(a, c), SkillDistribution(mu, sigma))


@pytest.fixture
def unit_econ():
    """A = 1, c = 0.5, sigma = 1: the stylized economy of the investment examples."""
    return make_econ()


@pytest.fixture
def econ_1975():
    return Economy(Technology.from_log(7.2, 0.0376), SkillDistribution(100, 15))


@pytest.fixture
def econ_2024():
    return Economy(Technology.from_log(5.5, 0.0579), SkillDistribution(100, 15))


def random_economies(n, seed, c_range=(0.01, 0.95), mu_range=(-2.0, 2.0),
                     sigma_range=(0.2, 2.0), a_range=(0.2, 5.0)):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        out.append(make_econ(
            a=float(np.exp(rng.uniform(*np.log(a_range)))),
            c=float(rng.uniform(*c_range)),
            mu=float(rng.uniform(*mu_range)),
            sigma=float(rng.uniform(*sigma_range)),
        ))
    return out


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)

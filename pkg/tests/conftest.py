from collections import OrderedDict

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

CRITERIA = OrderedDict(
    [
        (1, "hypergeometric(5,2,3) pmf at 1 is 3/5"),
        (2, "discrete_uniform(4) is 1/4 everywhere"),
        (3, "discrete_uniform_z(0,6) mean 5/2, variance 35/12"),
        (4, "conditioning on value <= 2 gives 1, 1, 4"),
        (5, "Bernoulli mixture success probability 13/36"),
        (6, "posterior 61/156 and 95/276"),
        (7, "multinomial(4, uniform 3) point masses"),
        (8, "binomial(3,1/3) P(1)=4/9 and closed form"),
        (9, "negative binomial P(1)=9/256, mass 1"),
        (10, "geometric(1/4) P(4)=27/256, P(<=4)=175/256"),
        (11, "scalar empirical moments and conditional means"),
        (12, "Anscombe I means and cross-covariance"),
        (13, "expectation axioms, randomized"),
        (14, "LOTUS, randomized"),
        (15, "tower, orthogonality, measurability"),
        (16, "probability laws and total expectation"),
        (17, "Markov lemma"),
        (18, "functor, monad, category, convolution, product laws"),
        (19, "oracle equivalences"),
        (20, "CLI values and print/parse round trip"),
    ]
)

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    number = getattr(report, "criterion", None)
    if number is None:
        return
    failed = report.failed or (report.when == "call" and report.outcome != "passed")
    ok = _results.get(number, True) and not failed
    _results[number] = ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in CRITERIA.items():
        if number in _results:
            status = "PASS" if _results[number] else "FAIL"
            terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")

import pytest

from spiralsearch import SpiralSpec

KAPPA_STAR = 0.2124695594
COST_STAR = 13.8111351795

# one representative per family, plus the singular-derivative cases
FAMILIES = {
    "log": SpiralSpec.logarithmic(KAPPA_STAR),
    "arch": SpiralSpec.archimedean(1.0),
    "sexp": SpiralSpec.stretched_exp(2.0),
    "pexp": SpiralSpec.power_exp(1.0),
}
EXTRA = {
    "log_k2_c5": SpiralSpec.logarithmic(2.0, 5.0),
    "arch_k2": SpiralSpec.archimedean(2.0),
    "sexp_half": SpiralSpec.stretched_exp(0.5),
    "pexp_half": SpiralSpec.power_exp(0.5),
    "pexp_two": SpiralSpec.power_exp(2.0),
}
ALL_SPECS = {**FAMILIES, **EXTRA}


@pytest.fixture(params=sorted(ALL_SPECS), ids=sorted(ALL_SPECS))
def any_spec(request):
    return ALL_SPECS[request.param]


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in test_acceptance.RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")

import pytest

from secgrass import ComputeCfg


@pytest.fixture
def cfg():
    return ComputeCfg()


def pytest_addoption(parser):
    parser.addoption("--skip-oracle", action="store_true",
                     help="skip the sympy oracle re-derivations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--skip-oracle"):
        skip = pytest.mark.skip(reason="--skip-oracle")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _ACCEPTANCE[label] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE):
        outcome = _ACCEPTANCE[label]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")

import pytest

from dessins import _pykernels, kernels

try:
    from dessins import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels.sweep}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels.sweep


@pytest.fixture(params=sorted(BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per available sweep implementation."""
    monkeypatch.setattr(kernels, "_sweep", BACKENDS[request.param])
    kernels._sweep_cached.cache_clear()
    yield request.param
    kernels._sweep_cached.cache_clear()


# ----------------------------------------------------- acceptance reporting

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title, tolerance): acceptance criterion number n")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    num, title, tol = crit
    entry = _criteria.setdefault(num, {"title": title, "tol": tol, "ok": True, "seen": False})
    if report.when == "call" or report.failed:
        entry["seen"] = True
        entry["ok"] = entry["ok"] and not report.failed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        entry = _criteria[num]
        status = "PASS" if entry["ok"] and entry["seen"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}: {entry['title']} [tolerance {entry['tol']}]")

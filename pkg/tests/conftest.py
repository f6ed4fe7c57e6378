import pytest

from lamwork import _engine, _pykernel
from lamwork.numerals import builtin

BACKENDS = ["python"]
try:
    from lamwork import _ckernel
except ImportError:  # compiled kernel not built
    _ckernel = None
else:
    BACKENDS.append("cython")


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    """Run the test once per available kernel."""
    kernel = _pykernel if request.param == "python" else _ckernel
    monkeypatch.setattr(_engine, "kernel", kernel)
    return request.param


@pytest.fixture(scope="session")
def nour():
    return builtin("nour")


@pytest.fixture(scope="session")
def church():
    return builtin("church")


@pytest.fixture(scope="session")
def nour_literal():
    return builtin("nour-paper")

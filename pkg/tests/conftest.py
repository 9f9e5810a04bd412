from fractions import Fraction

import pytest
from hypothesis import strategies as st

from wronskian_appell import appell
from wronskian_appell.partition import Partition

PRESET_STRINGS = [
    "monomial",
    "hermite",
    "yablonskii",
    "exp-rt:2,4",
    "laguerre:3",
    "laguerre:1/2",
    "jacobi:1/3,1/5",
]


def all_presets():
    return [appell.parse_spec(s) for s in PRESET_STRINGS]


@pytest.fixture(params=PRESET_STRINGS)
def preset_spec(request):
    return appell.parse_spec(request.param)


@st.composite
def partitions(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    remaining = n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(remaining, parts[-1] if parts else remaining)))
        parts.append(part)
        remaining -= part
    return Partition(parts)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7).map(Fraction)



# acceptance reporting: one PASS/FAIL line per numbered criterion
_markers: dict[str, tuple[int, str]] = {}
_outcomes: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("acceptance")
        if m:
            _markers[item.nodeid] = tuple(m.args)


def pytest_runtest_logreport(report):
    if report.nodeid not in _markers or (report.when != "call" and report.passed):
        return
    number, title = _markers[report.nodeid]
    _outcomes[number] = (title, report.passed and _outcomes.get(number, (title, True))[1])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_outcomes):
        title, ok = _outcomes[number]
        terminalreporter.write_line(f"criterion {number:2}: {'PASS' if ok else 'FAIL'}  {title}")

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from pompeiu.exactfield import ComplexElem, Field, FieldElem

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
nonzero_fractions = fractions.filter(bool)
fields = st.sampled_from([Field(), Field(2), Field(3), Field(5)])


@st.composite
def field_elems(draw, field=None):
    f = field if field is not None else draw(fields)
    a = draw(fractions)
    b = draw(fractions) if f.d is not None else Fraction(0)
    return FieldElem(a, b, f)


@st.composite
def complex_elems(draw, field=None):
    f = field if field is not None else draw(fields)
    return ComplexElem(draw(field_elems(f)), draw(field_elems(f)), f)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results):
            terminalreporter.write_line(results[num])

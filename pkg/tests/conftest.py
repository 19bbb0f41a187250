import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from tribospin import HyperbolicNumber, SequenceParams, SplitQuaternion
from tribospin.families import concrete_families

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
small_ints = st.integers(min_value=-6, max_value=6).map(Fraction)

hyperbolics = st.builds(HyperbolicNumber, rationals, rationals)
quaternions = st.builds(SplitQuaternion, rationals, rationals, rationals, rationals)
params_strategy = st.builds(SequenceParams, small_ints, small_ints, small_ints,
                            small_ints, small_ints, small_ints)

FAMILIES = concrete_families()


@pytest.fixture(params=FAMILIES, ids=lambda f: f.name)
def family(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    # Criterion lines collected by the acceptance module, printed once at the end.
    mod = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    lines = mod.criterion_lines() if mod is not None else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)

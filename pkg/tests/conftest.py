import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@st.composite
def perms(draw, min_size=0, max_size=7, max_value=40):
    values = draw(
        st.lists(
            st.integers(1, max_value), unique=True,
            min_size=min_size, max_size=max_size,
        )
    )
    return tuple(values)


@st.composite
def disjoint_pairs(draw, max_total=7, max_value=40):
    values = draw(
        st.lists(st.integers(1, max_value), unique=True, min_size=0, max_size=max_total)
    )
    cut = draw(st.integers(0, len(values)))
    return tuple(values[:cut]), tuple(values[cut:])

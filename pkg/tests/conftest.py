import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from repkit.linalg import GF, QQ, Matrix

settings.register_profile(
    "repkit", deadline=None, derandomize=True, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repkit")

FIELDS = [QQ, GF(2), GF(3), GF(5)]

fields = st.sampled_from(FIELDS)
seeds = st.integers(0, 2**32 - 1)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, field=None):
    f = field or draw(fields)
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rng = np.random.default_rng(draw(seeds))
    return Matrix.random(f, r, c, rng)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_nil_rep(seed: int, kind: int | None = None):
    """Random representation on the five-vertex quiver over k[x]/(x²), k = F3.

    Kinds follow the audit sampler: 0 projective cokernels, 1 a non-projective
    cokernel, 2 a broken monic, 3 mixed.
    """
    from repkit.audit import _nil_sample

    rng = np.random.default_rng([seed, 99])
    return _nil_sample(rng, int(rng.integers(0, 4)) if kind is None else kind)


ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])

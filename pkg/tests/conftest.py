import time
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from chiygenus.exact_poly import Polynomial
from chiygenus.graded_ring import GradedClass, partitions

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def polynomials(draw, max_degree=8):
    return Polynomial(draw(st.lists(small_fractions, min_size=0, max_size=max_degree + 1)))


@st.composite
def distinct_nodes(draw, min_size=1, max_size=9):
    return draw(st.lists(small_fractions, min_size=min_size, max_size=max_size, unique=True))


@st.composite
def graded_classes(draw, n):
    keys = [p for w in range(n + 1) for p in partitions(w)]
    chosen = draw(st.lists(st.sampled_from(keys), max_size=6, unique=True))
    return GradedClass(n, {k: draw(polynomials(max_degree=2)) for k in chosen})


@pytest.fixture
def descriptor_dir(tmp_path):
    files = {
        "p1.json": '{"kind":"projective_space","dim":1}',
        "p2.json": '{"kind":"projective_space","dim":2}',
        "p3.json": '{"kind":"projective_space","dim":3}',
        "p4.json": '{"kind":"projective_space","dim":4}',
        "pt.json": '{"kind":"projective_space","dim":0}',
        "k3.json": '{"kind":"hodge_diamond","dim":2,"h":[[1,0,1],[0,20,0],[1,0,1]]}',
        "quintic.json": '{"kind":"complete_intersection","ambient_dim":4,"degrees":[5]}',
        "bad_curve.json": '{"kind":"invariants","dim":1,"chi_a":2,"euler":2}',
        "broken.json": '{"kind": "projective_space", ',
        "unknown.json": '{"kind":"grassmannian","dim":4}',
    }
    for name, text in files.items():
        (tmp_path / name).write_text(text)
    return tmp_path


# -- acceptance reporting -------------------------------------------------------

SUITE_BUDGET_SECONDS = 60
ACCEPTANCE_LINES: list = []
SESSION = {}


def pytest_sessionstart(session):
    SESSION["start"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("[")[1].split("]")[0])):
            terminalreporter.write_line(line)
    elapsed = time.perf_counter() - SESSION.get("start", time.perf_counter())
    status = "within" if elapsed < SUITE_BUDGET_SECONDS else "OVER"
    terminalreporter.write_line(f"suite runtime {elapsed:.1f}s ({status} the {SUITE_BUDGET_SECONDS}s budget)")


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - SESSION.get("start", time.perf_counter())
    if elapsed >= SUITE_BUDGET_SECONDS and session.exitstatus == 0:
        session.exitstatus = 1

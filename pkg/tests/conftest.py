import pytest
from hypothesis import strategies as st

from bezout_trees.forest import DEFAULT_SEED, ROOTS
from bezout_trees.pair_core import Branch, f_child, g_child


def fold(root, seed, steps):
    p, q = root, seed
    for b in steps:
        p, q = f_child(p, b), g_child(q, b)
    return p, q


@st.composite
def tree_nodes(draw, max_depth=30):
    root = draw(st.sampled_from(ROOTS))
    steps = draw(st.lists(st.sampled_from(list(Branch)), max_size=max_depth))
    p, q = fold(root, DEFAULT_SEED, steps)
    return root, tuple(steps), p, q


@pytest.fixture
def tmp_out(tmp_path):
    return tmp_path


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test's outcome decides PASS/FAIL."""
    lines = []
    yield lines.append
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    for text in lines or [request.node.name]:
        ACCEPTANCE_LINES.append(f"[{status}] {text}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

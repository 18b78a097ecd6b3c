import itertools

from hypothesis import strategies as st

from spectab.shapes import Partition, SkewShape


def compositions(total, positive=True):
    """Compositions of ``total`` with positive parts."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in compositions(total - first):
            yield (first,) + rest


def partitions_in_box(rows, cols):
    """All partitions with at most ``rows`` parts, each at most ``cols``, padded to ``rows``."""
    for parts in itertools.combinations_with_replacement(range(cols, -1, -1), rows):
        yield tuple(parts)


def skew_shapes_in_box(rows, cols):
    for outer in partitions_in_box(rows, cols):
        for inner in partitions_in_box(rows, cols):
            if all(i <= o for i, o in zip(inner, outer)):
                yield SkewShape(outer, inner)


@st.composite
def partitions(draw, max_size=8, max_length=None):
    size = draw(st.integers(0, max_size))
    parts = []
    left = size
    while left:
        cap = min(left, parts[-1]) if parts else left
        if max_length is not None and len(parts) == max_length:
            break
        p = draw(st.integers(1, cap))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


ACCEPTANCE_LINES = {}


def report(criterion, ok, detail):
    """Record and print one acceptance line, then fail the test if needed."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}"
    ACCEPTANCE_LINES[criterion] = line
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for criterion in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[criterion])

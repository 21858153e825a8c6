import pytest

from critalg.quivers import Quiver
from critalg.presentation import from_poset
from critalg.criteria import critical_template


@pytest.fixture(scope="session")
def diamond6():
    """Six vertices, two routes through the middle, two zero pairs; gl.dim 3."""
    q = Quiver(
        ["1", "2", "3", "4", "5", "6"],
        [("1", "2"), ("2", "3"), ("2", "4"), ("3", "5"), ("4", "5"), ("5", "6")],
    )
    return from_poset(q, [("1", "4"), ("3", "6")], label="diamond6")


@pytest.fixture(scope="session")
def chain6():
    """A 6-chain with two zero pairs; gl.dim 2 but it contains a critical
    subcategory (the converse of the criterion fails here)."""
    q = Quiver([str(k) for k in range(1, 7)], [(str(k), str(k + 1)) for k in range(1, 6)])
    return from_poset(q, [("1", "3"), ("4", "6")], label="chain6")


@pytest.fixture(scope="session")
def arc4():
    """The 4-chain with overlapping zero pairs: the smallest critical algebra."""
    return critical_template("A", 1)


@pytest.fixture(scope="session")
def square():
    """The commutative square: pure incidence, gl.dim 2."""
    q = Quiver(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("2", "4"), ("3", "4")])
    return from_poset(q, [], label="square")


@pytest.fixture(scope="session")
def crown():
    """The cyclic double fan on two arms: pure incidence, gl.dim 3."""
    return critical_template("Q", 2)


@pytest.fixture(scope="session")
def chain3():
    q = Quiver(["1", "2", "3"], [("1", "2"), ("2", "3")])
    return from_poset(q, [], label="chain3")


# -- independent combinatorial oracles (kept deliberately naive) --------------


def brute_paths(arrow_names, src, dst):
    """All directed paths src ~> dst by plain recursion over arrow lists."""
    if src == dst:
        return [(src,)]
    out = []
    for s, t in arrow_names:
        if s == src:
            out.extend((src,) + rest for rest in brute_paths(arrow_names, t, dst))
    return sorted(out)


def brute_reaches(arrow_names, src, dst):
    seen = set()
    stack = [src]
    while stack:
        v = stack.pop()
        if v == dst:
            return True
        if v in seen:
            continue
        seen.add(v)
        stack.extend(t for s, t in arrow_names if s == v)
    return False


@pytest.fixture(scope="session")
def oracles():
    class O:
        paths = staticmethod(brute_paths)
        reaches = staticmethod(brute_reaches)

    return O

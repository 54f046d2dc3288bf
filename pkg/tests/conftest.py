import pytest

from achrom.families import base_matrix


@pytest.fixture(scope="session")
def m4():
    return base_matrix(4)


@pytest.fixture(scope="session")
def m6():
    return base_matrix(6)


@pytest.fixture(scope="session")
def m8():
    return base_matrix(8)


def relabel_dense(grid):
    """Relabel an integer grid so the distinct values become 0..m-1 by first
    appearance; guarantees every palette colour is used."""
    order = {}
    out = []
    for row in grid:
        new_row = []
        for v in row:
            if v not in order:
                order[v] = len(order)
            new_row.append(order[v])
        out.append(tuple(new_row))
    return tuple(out)

from __future__ import annotations

import pytest

from redblue import UncolouredView, build


def complete_view(n: int) -> UncolouredView:
    return UncolouredView.from_edges(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)]
    )


def cycle_view(n: int) -> UncolouredView:
    return UncolouredView.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_red(n: int):
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)], [])


def complete_multipartite_view(*sizes: int) -> UncolouredView:
    bounds = []
    start = 0
    for s in sizes:
        bounds.append(range(start, start + s))
        start += s
    edges = []
    for i, a in enumerate(bounds):
        for b in bounds[i + 1 :]:
            edges += [(u, v) for u in a for v in b]
    return UncolouredView.from_edges(start, edges)


@pytest.fixture(scope="session")
def small_graphs():
    """All unlabelled graphs on 1..6 vertices."""
    from corpus import graphs_up_to

    return graphs_up_to(6)

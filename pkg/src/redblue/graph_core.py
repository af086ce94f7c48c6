"""Immutable red/blue edge-coloured simple graphs with bit-row adjacency.

Every graph keeps one integer bitmask of neighbours per vertex and per
colour.  Python integers are arbitrary-precision, so a single representation
covers the whole supported range; ``MAX_VERTICES`` caps it at 256 to keep
all exact algorithms at desk scale.  Graphs are immutable after
construction and therefore safe to share across worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 256


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidVertex(GraphError):
    def __init__(self, vertex: int, n: int):
        super().__init__(f"vertex {vertex} out of range [0, {n})")
        self.vertex = vertex
        self.n = n


class SameEdgeBothColours(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"edge ({u}, {v}) appears in both colour classes")
        self.u = u
        self.v = v


class ParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class TooLargeForExact(GraphError):
    def __init__(self, size: int, limit: int, what: str = "instance"):
        super().__init__(
            f"exact computation refused: {what} of size {size} exceeds limit {limit}"
        )
        self.size = size
        self.limit = limit


class TooFewVertices(GraphError):
    def __init__(self, n: int, minimum: int):
        super().__init__(f"operation needs at least {minimum} vertices, got {n}")
        self.n = n
        self.minimum = minimum


class BadMaskLength(GraphError):
    pass


class BadParams(GraphError):
    pass


class Colour(Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    def __str__(self) -> str:
        return "Red" if self is Colour.RED else "Blue"


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_rows(n: int, rows: Sequence[int], what: str) -> None:
    if len(rows) != n:
        raise GraphError(f"{what}: expected {n} adjacency rows, got {len(rows)}")
    full = (1 << n) - 1
    for v, row in enumerate(rows):
        if row < 0 or row & ~full:
            raise GraphError(f"{what}: row {v} has bits outside [0, {n})")
        if row >> v & 1:
            raise GraphError(f"{what}: self-loop at vertex {v}")
    for v, row in enumerate(rows):
        for u in iter_bits(row):
            if not rows[u] >> v & 1:
                raise GraphError(f"{what}: adjacency not symmetric at ({v}, {u})")


@dataclass(frozen=True)
class UncolouredView:
    """A plain simple graph: one bitmask of neighbours per vertex.

    A :class:`ColouredGraph` exposes three such views (red, blue, union);
    all single-graph algorithms operate on this type.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        _check_rows(self.n, self.rows, "view")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "UncolouredView":
        rows = [0] * n
        for u, v in edges:
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidVertex(v, self.n)
        return self.rows[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.rows[u] >> (u + 1)):
                yield u, u + 1 + v

    def induced(self, vertices: Iterable[int]) -> "UncolouredView":
        """Induced subgraph, relabelled onto 0..k-1 in sorted vertex order."""
        verts = sorted(set(vertices))
        for v in verts:
            _check_endpoint(v, self.n)
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for i, v in enumerate(verts):
            for u in iter_bits(self.rows[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return UncolouredView(len(verts), tuple(rows))

    def complement(self) -> "UncolouredView":
        full = (1 << self.n) - 1
        rows = tuple((full & ~r & ~(1 << v)) for v, r in enumerate(self.rows))
        return UncolouredView(self.n, rows)


def _check_endpoint(v, n: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < n:
        raise InvalidVertex(v, n)


@dataclass(frozen=True)
class ColouredGraph:
    """A simple graph whose edge set is partitioned into red and blue.

    Invariants (checked on every construction): both colour tables are
    symmetric with zero diagonal, and no edge carries both colours.  An
    edge absent from both tables is a non-edge; "uncoloured" edges are not
    representable.
    """

    n: int
    red: tuple[int, ...]
    blue: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        _check_rows(self.n, self.red, "red")
        _check_rows(self.n, self.blue, "blue")
        for v in range(self.n):
            both = self.red[v] & self.blue[v]
            if both:
                raise SameEdgeBothColours(v, next(iter_bits(both)))

    def rows_of(self, colour: Colour) -> tuple[int, ...]:
        return self.red if colour is Colour.RED else self.blue

    def red_view(self) -> UncolouredView:
        return UncolouredView(self.n, self.red)

    def blue_view(self) -> UncolouredView:
        return UncolouredView(self.n, self.blue)

    def view(self, colour: Colour) -> UncolouredView:
        return UncolouredView(self.n, self.rows_of(colour))

    def union_view(self) -> UncolouredView:
        rows = tuple(r | b for r, b in zip(self.red, self.blue))
        return UncolouredView(self.n, rows)

    def swap_colours(self) -> "ColouredGraph":
        return ColouredGraph(self.n, self.blue, self.red)

    def edges_of(self, colour: Colour) -> Iterator[tuple[int, int]]:
        return self.view(colour).edges()

    def edge_count(self, colour: Colour | None = None) -> int:
        if colour is None:
            return self.union_view().edge_count
        return self.view(colour).edge_count


def build(
    n: int,
    red_edges: Iterable[tuple[int, int]],
    blue_edges: Iterable[tuple[int, int]],
) -> ColouredGraph:
    """Validate and build a coloured graph from two edge lists.

    Duplicate edges within one colour are idempotent.  An edge listed in
    both colours raises :class:`SameEdgeBothColours`; endpoints outside
    [0, n) raise :class:`InvalidVertex`.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    red = [0] * n
    blue = [0] * n
    for rows, edges in ((red, red_edges), (blue, blue_edges)):
        for u, v in edges:
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    for v in range(n):
        both = red[v] & blue[v]
        if both:
            u = next(iter_bits(both))
            raise SameEdgeBothColours(min(u, v), max(u, v))
    return ColouredGraph(n, tuple(red), tuple(blue))


def min_degree(g) -> int:
    """Minimum degree of the union graph (or of a single view)."""
    rows = g.rows if isinstance(g, UncolouredView) else g.union_view().rows
    if len(rows) < 1:
        raise TooFewVertices(len(rows), 1)
    return min(r.bit_count() for r in rows)


def colour_degree(g: ColouredGraph, v: int, colour: Colour) -> int:
    if not 0 <= v < g.n:
        raise InvalidVertex(v, g.n)
    return g.rows_of(colour)[v].bit_count()


def component_masks(rows: Sequence[int], n: int) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest member."""
    out = []
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = rows[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


# Text format: header "cg 1 <n>", then one edge per line as "<u> <v> <R|B>"
# with 0 <= u < v < n.  Blank lines and lines starting with "#" are skipped.

def serialize(g: ColouredGraph) -> str:
    lines = [f"cg 1 {g.n}"]
    items = [(u, v, 0) for u, v in g.edges_of(Colour.RED)]
    items += [(u, v, 1) for u, v in g.edges_of(Colour.BLUE)]
    for u, v, c in sorted(items):
        lines.append(f"{u} {v} {'R' if c == 0 else 'B'}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> ColouredGraph:
    lines = text.split("\n")
    if not lines:
        raise ParseError(1, "empty input")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "cg":
        raise ParseError(1, "expected header 'cg 1 <n>'")
    if header[1] != "1":
        raise ParseError(1, f"unsupported format version {header[1]!r}")
    try:
        n = int(header[2])
    except ValueError:
        raise ParseError(1, f"bad vertex count {header[2]!r}") from None
    red: list[tuple[int, int]] = []
    blue: list[tuple[int, int]] = []
    for line_no, raw in enumerate(lines[1:], start=2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if len(tokens) != 3:
            raise ParseError(line_no, f"expected '<u> <v> <R|B>', got {stripped!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(line_no, f"bad endpoints in {stripped!r}") from None
        if tokens[2] == "R":
            target = red
        elif tokens[2] == "B":
            target = blue
        else:
            raise ParseError(line_no, f"unknown colour {tokens[2]!r}")
        if not 0 <= u < v < n:
            raise ParseError(line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}")
        target.append((u, v))
    return build(n, red, blue)

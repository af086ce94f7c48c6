"""Generators for every explicit coloured-graph family used by the
verification harness, plus a k-colour container for the multi-colour
conjecture instances.

All generators are pure functions of their parameters (and seed, where one
applies), and every output passes full construction-time validation.
Degenerate parameter choices (for example t = 1 in the split-clique
families, where one colour class becomes acyclic) are permitted and
documented rather than rejected: they make useful oracle tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .graph_core import (
    BadMaskLength,
    BadParams,
    ColouredGraph,
    GraphError,
    MAX_VERTICES,
    UncolouredView,
    _check_rows,
    build,
)

_XORSHIFT_MULT = 0x2545F4914F6CDD1D
_WORD = 0xFFFFFFFFFFFFFFFF


def xorshift64star(seed: int) -> Iterator[int]:
    """The fixed pseudo-random word stream used by all seeded choices.

    xorshift64* with shifts 12/25/27 and multiplier 0x2545F4914F6CDD1D.
    A zero seed (invalid for xorshift state) is replaced by the odd
    constant 0x9E3779B97F4A7C15.
    """
    state = (seed & _WORD) or 0x9E3779B97F4A7C15
    while True:
        state ^= state >> 12
        state ^= (state << 25) & _WORD
        state ^= state >> 27
        yield (state * _XORSHIFT_MULT) & _WORD


def _mask_from_seed(bits: int, seed: int) -> int:
    """Deterministic bit mask: bit i comes from word i // 64, bit i % 64."""
    words = xorshift64star(seed)
    mask = 0
    for start in range(0, bits, 64):
        mask |= next(words) << start
    return mask & ((1 << bits) - 1)


@dataclass(frozen=True)
class KColouredGraph:
    """A simple graph with edges partitioned into k colour classes."""

    n: int
    k: int
    colour_rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.colour_rows) != self.k:
            raise GraphError("expected one adjacency table per colour")
        for i, rows in enumerate(self.colour_rows):
            _check_rows(self.n, rows, f"colour {i}")
        for v in range(self.n):
            seen = 0
            for rows in self.colour_rows:
                if seen & rows[v]:
                    raise GraphError(f"vertex {v} has an edge in two colours")
                seen |= rows[v]

    def view(self, i: int) -> UncolouredView:
        return UncolouredView(self.n, self.colour_rows[i])

    def union_view(self) -> UncolouredView:
        rows = [0] * self.n
        for table in self.colour_rows:
            for v in range(self.n):
                rows[v] |= table[v]
        return UncolouredView(self.n, tuple(rows))

    def to_coloured_graph(self) -> ColouredGraph:
        if self.k != 2:
            raise BadParams(f"need exactly 2 colours to convert, have {self.k}")
        return ColouredGraph(self.n, self.colour_rows[0], self.colour_rows[1])

    def edge_list(self) -> list[tuple[int, int, int]]:
        """Edges as (u, v, colour_index) with u < v, lexicographic."""
        out = []
        for i in range(self.k):
            for u, v in self.view(i).edges():
                out.append((u, v, i))
        out.sort()
        return out


def k_coloured_from_edges(
    n: int, k: int, edges: Iterable[tuple[int, int, int]]
) -> KColouredGraph:
    tables = [[0] * n for _ in range(k)]
    for u, v, i in edges:
        if not 0 <= i < k:
            raise BadParams(f"colour index {i} outside [0, {k})")
        tables[i][u] |= 1 << v
        tables[i][v] |= 1 << u
    return KColouredGraph(n, k, tuple(tuple(t) for t in tables))


def two_bipartite_free_pairs(p: int) -> list[tuple[int, int]]:
    """The 2*p^2 free edges of the K_{p,p,p,p} colouring, in lexicographic
    (u, v) order.  Classes are u11=[0,p), u12=[p,2p), u21=[2p,3p),
    u22=[3p,4p); free pairs join u11-u22 and u12-u21."""
    pairs = [(u, v) for u in range(0, p) for v in range(3 * p, 4 * p)]
    pairs += [(u, v) for u in range(p, 2 * p) for v in range(2 * p, 3 * p)]
    pairs.sort()
    return pairs


def gen_two_bipartite_k4p(
    p: int, free_mask: int | None = None, seed: int | None = None
) -> ColouredGraph:
    """Colouring of K_{p,p,p,p} in which both colour classes are bipartite.

    Forced edges: u11-u12 and u21-u22 blue; u11-u21 and u12-u22 red.  Free
    edges (u11-u22 and u12-u21) follow ``free_mask``: bit i set means the
    i-th free pair (lexicographic order) is red.  With ``seed`` instead of
    a mask, the mask bits come from the package PRNG stream.
    """
    if p < 1:
        raise BadParams(f"p must be >= 1, got {p}")
    bits = 2 * p * p
    if free_mask is None:
        free_mask = _mask_from_seed(bits, seed or 0) if seed is not None else 0
    if free_mask < 0 or free_mask >> bits:
        raise BadMaskLength(f"free mask needs exactly {bits} bits, got {free_mask:#x}")
    u11 = range(0, p)
    u12 = range(p, 2 * p)
    u21 = range(2 * p, 3 * p)
    u22 = range(3 * p, 4 * p)
    blue = [(u, v) for u in u11 for v in u12] + [(u, v) for u in u21 for v in u22]
    red = [(u, v) for u in u11 for v in u21] + [(u, v) for u in u12 for v in u22]
    for i, (u, v) in enumerate(two_bipartite_free_pairs(p)):
        (red if free_mask >> i & 1 else blue).append((u, v))
    return build(4 * p, red, blue)


def gen_blowup_c5(b: int) -> ColouredGraph:
    """Five classes of b vertices; red joins consecutive classes, blue
    joins classes two apart.  Neither colour contains a triangle."""
    if b < 1:
        raise BadParams(f"b must be >= 1, got {b}")
    n = 5 * b

    def cls(i: int) -> range:
        return range(i * b, (i + 1) * b)

    red = []
    blue = []
    for i in range(5):
        for u in cls(i):
            for v in cls((i + 1) % 5):
                red.append((u, v))
            for v in cls((i + 2) % 5):
                blue.append((u, v))
    return build(n, red, blue)


def gen_bipartite_complement(n: int) -> ColouredGraph:
    """K_n with red the complete bipartite graph across a balanced split
    and blue its complement (two cliques)."""
    if n < 2:
        raise BadParams(f"n must be >= 2, got {n}")
    half = n // 2
    red = [(u, v) for u in range(half) for v in range(half, n)]
    blue = [(u, v) for u in range(half) for v in range(u + 1, half)]
    blue += [(u, v) for u in range(half, n) for v in range(u + 1, n)]
    return build(n, red, blue)


def gen_f_st(s: int, t: int) -> ColouredGraph:
    """Complete graph on s + t vertices with A = [0, s); blue edges cross
    A and its complement, red edges stay inside either side.

    Red circumference is s (for s >= 3), blue is 2t (for t >= 2), so the
    monochromatic circumference is max(s, 2t).  Smaller parameters leave
    one colour acyclic and are allowed for oracle tests.
    """
    if t < 1 or t > s:
        raise BadParams(f"need 1 <= t <= s, got s={s}, t={t}")
    n = s + t
    red = [(u, v) for u in range(s) for v in range(u + 1, s)]
    red += [(u, v) for u in range(s, n) for v in range(u + 1, n)]
    blue = [(u, v) for u in range(s) for v in range(s, n)]
    return build(n, red, blue)


def gen_g_prime(t: int) -> ColouredGraph:
    """Two red 2t-cliques S1, S2 plus a blue t-clique T joined blue to
    both; S1 and S2 are non-adjacent.  Minimum degree 3t - 1 on 5t
    vertices; every blue cycle alternates through T, so the blue
    circumference is at most 2t."""
    if t < 1:
        raise BadParams(f"t must be >= 1, got {t}")
    s1 = range(0, 2 * t)
    s2 = range(2 * t, 4 * t)
    tt = range(4 * t, 5 * t)
    red = [(u, v) for u in s1 for v in s1 if u < v]
    red += [(u, v) for u in s2 for v in s2 if u < v]
    blue = [(u, v) for u in tt for v in tt if u < v]
    blue += [(u, v) for u in list(s1) + list(s2) for v in tt]
    return build(5 * t, red, blue)


def gen_g_r_t(r: int, t: int) -> ColouredGraph:
    """r x r grid of t-cells: vertices in the same row are joined blue,
    vertices in the same column (different rows) red, and cells in a
    different row and column are non-adjacent.

    Vertices inside one cell share both a row and a column; those pairs
    are adjacent (the family's minimum degree is (2r-1)t - 1, which counts
    them) and are coloured blue, with the row.  Every monochromatic
    component is a full row or column of rt vertices, so no monochromatic
    cycle exceeds n / r.
    """
    if r < 2:
        raise BadParams(f"r must be >= 2, got {r}")
    if t < 1:
        raise BadParams(f"t must be >= 1, got {t}")
    n = r * r * t

    def cell(i: int, j: int) -> range:
        base = (i * r + j) * t
        return range(base, base + t)

    red = []
    blue = []
    for i in range(r):
        for j in range(r):
            mine = list(cell(i, j))
            blue += [(u, v) for u in mine for v in mine if u < v]
            for j2 in range(j + 1, r):
                blue += [(u, v) for u in mine for v in cell(i, j2)]
            for i2 in range(i + 1, r):
                red += [(u, v) for u in mine for v in cell(i2, j)]
    return build(n, red, blue)


def gen_k_bipartite(k: int, p: int, seed: int = 0) -> KColouredGraph:
    """Complete 2^k-partite graph with classes of order p, coloured so
    that every colour class is bipartite.

    Classes are indexed by k-bit words; class a occupies vertices
    [a*p, (a+1)*p).  An edge between classes differing in exactly one bit
    takes that bit's colour; between classes differing in d >= 2 bits each
    edge draws one of the d differing bits uniformly from the seeded PRNG
    stream (class pairs in lexicographic order, then vertex pairs in
    lexicographic order, one draw per edge).
    """
    if k < 1:
        raise BadParams(f"k must be >= 1, got {k}")
    if p < 1:
        raise BadParams(f"p must be >= 1, got {p}")
    classes = 1 << k
    n = classes * p
    if n > MAX_VERTICES:
        raise BadParams(f"2^k * p = {n} exceeds the {MAX_VERTICES}-vertex cap")
    words = xorshift64star(seed)
    edges: list[tuple[int, int, int]] = []
    for a in range(classes):
        for b_cls in range(a + 1, classes):
            differing = [i for i in range(k) if (a ^ b_cls) >> i & 1]
            for u in range(a * p, (a + 1) * p):
                for v in range(b_cls * p, (b_cls + 1) * p):
                    if len(differing) == 1:
                        colour = differing[0]
                    else:
                        colour = differing[next(words) % len(differing)]
                    edges.append((u, v, colour))
    return k_coloured_from_edges(n, k, edges)


_KIND_PARAMS = {
    "k4p": ("p",),
    "blowc5": ("b",),
    "bipcomp": ("n",),
    "f_st": ("s", "t"),
    "gprime": ("t",),
    "g_rt": ("r", "t"),
    "kbip": ("k", "p"),
}


@dataclass(frozen=True)
class ConstructionSpec:
    """Parsed form of a construction descriptor such as ``f_st:s=6,t=3``,
    ``k4p:p=2,mask=0x1f`` or ``kbip:k=3,p=1,seed=42``."""

    kind: str
    params: dict[str, int] = field(default_factory=dict)
    free_mask: int | None = None
    seed: int | None = None

    def canonical(self) -> str:
        parts = [f"{name}={self.params[name]}" for name in _KIND_PARAMS[self.kind]]
        if self.free_mask is not None:
            parts.append(f"mask={self.free_mask:#x}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        return f"{self.kind}:" + ",".join(parts)

    def build(self) -> ColouredGraph | KColouredGraph:
        p = self.params
        if self.kind == "k4p":
            return gen_two_bipartite_k4p(p["p"], free_mask=self.free_mask, seed=self.seed)
        if self.kind == "blowc5":
            return gen_blowup_c5(p["b"])
        if self.kind == "bipcomp":
            return gen_bipartite_complement(p["n"])
        if self.kind == "f_st":
            return gen_f_st(p["s"], p["t"])
        if self.kind == "gprime":
            return gen_g_prime(p["t"])
        if self.kind == "g_rt":
            return gen_g_r_t(p["r"], p["t"])
        if self.kind == "kbip":
            return gen_k_bipartite(p["k"], p["p"], seed=self.seed or 0)
        raise BadParams(f"unknown construction kind {self.kind!r}")


_SPEC_RE = re.compile(r"^([a-z0-9_]+):(.*)$")


def parse_construction(text: str) -> ConstructionSpec:
    m = _SPEC_RE.match(text.strip())
    if not m or m.group(1) not in _KIND_PARAMS:
        known = ", ".join(sorted(_KIND_PARAMS))
        raise BadParams(f"bad construction {text!r}; kinds: {known}")
    kind = m.group(1)
    params: dict[str, int] = {}
    free_mask = None
    seed = None
    body = m.group(2).strip()
    for item in filter(None, (s.strip() for s in body.split(","))):
        if "=" not in item:
            raise BadParams(f"bad parameter {item!r} in {text!r}")
        name, _, value = item.partition("=")
        name = name.strip()
        try:
            number = int(value.strip(), 0)
        except ValueError:
            raise BadParams(f"bad integer {value!r} in {text!r}") from None
        if name == "mask":
            free_mask = number
        elif name == "seed":
            seed = number
        elif name in _KIND_PARAMS[kind]:
            params[name] = number
        else:
            raise BadParams(f"unknown parameter {name!r} for {kind!r}")
    missing = [name for name in _KIND_PARAMS[kind] if name not in params]
    if missing:
        raise BadParams(f"{text!r} is missing parameters: {', '.join(missing)}")
    return ConstructionSpec(kind=kind, params=params, free_mask=free_mask, seed=seed)

"""Exact cycle-length spectra, circumference, girth parity and edge bounds.

Finding a cycle of a prescribed length is NP-hard in general, so the exact
spectrum is computed per connected component by a subset dynamic program:
for each vertex subset the DP tracks the endpoints of simple paths that
start at the subset's minimum vertex and cover the subset exactly; a cycle
of length |S| is recorded whenever such a path closes back to the anchor.
Anchoring at the minimum vertex visits every cycle exactly once and keeps
the state space at O(2^c) masks for a component of order c.  Components
larger than ``exact_limit`` are refused outright; nothing here
approximates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph_core import (
    Colour,
    ColouredGraph,
    TooFewVertices,
    TooLargeForExact,
    UncolouredView,
    component_masks,
    iter_bits,
)

DEFAULT_EXACT_LIMIT = 24


@dataclass(frozen=True)
class CycleSpectrum:
    """The exact set of cycle lengths present in one graph."""

    n: int
    lengths: frozenset[int]
    circumference: int

    def __post_init__(self):
        expected = max(self.lengths, default=0)
        if self.circumference != expected:
            raise ValueError("circumference must equal max(lengths) (0 if acyclic)")
        for ell in self.lengths:
            if not 3 <= ell <= self.n:
                raise ValueError(f"cycle length {ell} outside [3, {self.n}]")

    @classmethod
    def from_lengths(cls, n: int, lengths) -> "CycleSpectrum":
        ls = frozenset(lengths)
        return cls(n=n, lengths=ls, circumference=max(ls, default=0))


@dataclass(frozen=True)
class MonoSpectrum:
    red: CycleSpectrum
    blue: CycleSpectrum
    mono_circumference: int

    def __post_init__(self):
        if self.mono_circumference != max(
            self.red.circumference, self.blue.circumference
        ):
            raise ValueError("mono_circumference must be the larger circumference")

    def spectrum(self, colour: Colour) -> CycleSpectrum:
        return self.red if colour is Colour.RED else self.blue


def lengths_for_rows(rows, n: int, exact_limit: int = DEFAULT_EXACT_LIMIT) -> set[int]:
    """Union of per-component cycle-length sets for a raw adjacency table.

    Components whose relabelled adjacency tables coincide bit-for-bit (as
    happens for the translation-symmetric construction families) share one
    DP run.
    """
    lengths: set[int] = set()
    seen: dict[tuple[int, ...], frozenset[int]] = {}
    for comp in component_masks(rows, n):
        size = comp.bit_count()
        if size > exact_limit:
            raise TooLargeForExact(size, exact_limit, "connected component")
        if size < 3:
            continue
        local = _relabelled_component(rows, comp)
        key = tuple(local)
        if key not in seen:
            seen[key] = frozenset(_component_lengths(local))
        lengths |= seen[key]
    return lengths


def _relabelled_component(rows, comp: int) -> list[int]:
    verts = list(iter_bits(comp))
    pos = {v: i for i, v in enumerate(verts)}
    local = [0] * len(verts)
    for i, v in enumerate(verts):
        acc = 0
        for u in iter_bits(rows[v]):
            acc |= 1 << pos[u]
        local[i] = acc
    return local


def _component_lengths(local: list[int]) -> set[int]:
    c = len(local)
    lengths: set[int] = set()
    dp = [0] * (1 << c)
    for i in range(c):
        dp[1 << i] = 1 << i
    for mask in range(1, 1 << c):
        ends = dp[mask]
        if not ends:
            continue
        anchor_bit = mask & -mask
        anchor = anchor_bit.bit_length() - 1
        if ends & local[anchor]:
            k = mask.bit_count()
            if k >= 3:
                lengths.add(k)
        above = -(anchor_bit << 1)  # bits strictly above the anchor
        rest = ends
        while rest:
            vb = rest & -rest
            rest ^= vb
            cand = local[vb.bit_length() - 1] & ~mask & above
            while cand:
                wb = cand & -cand
                cand ^= wb
                dp[mask | wb] |= wb
    return lengths


def cycle_spectrum(
    g: UncolouredView, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> CycleSpectrum:
    return CycleSpectrum.from_lengths(g.n, lengths_for_rows(g.rows, g.n, exact_limit))


def mono_spectrum(
    cg: ColouredGraph, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> MonoSpectrum:
    red = cycle_spectrum(cg.red_view(), exact_limit)
    blue = cycle_spectrum(cg.blue_view(), exact_limit)
    return MonoSpectrum(
        red=red,
        blue=blue,
        mono_circumference=max(red.circumference, blue.circumference),
    )


def is_pancyclic(g: UncolouredView, exact_limit: int = DEFAULT_EXACT_LIMIT) -> bool:
    """True iff g contains a cycle of every length from 3 to n."""
    if g.n < 3:
        raise TooFewVertices(g.n, 3)
    return cycle_spectrum(g, exact_limit).lengths == frozenset(range(3, g.n + 1))


def odd_girth(g: UncolouredView) -> int | None:
    """Length of a shortest odd cycle, or None for bipartite graphs.

    Runs a BFS from every vertex; an edge joining two vertices at equal BFS
    depth d certifies an odd closed walk of length 2d+1, and the minimum
    over all such certificates is exact.  No size limit applies.
    """
    best: int | None = None
    rows = g.rows
    for source in range(g.n):
        dist = [-1] * g.n
        dist[source] = 0
        frontier = [source]
        d = 0
        while frontier:
            if best is not None and 2 * d + 1 >= best:
                break
            nxt = []
            for v in frontier:
                for u in iter_bits(rows[v]):
                    if dist[u] == -1:
                        dist[u] = d + 1
                        nxt.append(u)
            frontier = nxt
            d += 1
        for u in range(g.n):
            if dist[u] == -1:
                continue
            for v in iter_bits(rows[u] >> (u + 1)):
                v += u + 1
                if dist[v] == dist[u]:
                    cand = 2 * dist[u] + 1
                    if best is None or cand < best:
                        best = cand
        if best == 3:
            return 3
    return best


def erdos_gallai_floor(g: UncolouredView) -> int:
    """ceil(2e / (n-1)): a circumference lower bound whenever g has a cycle.

    Follows from the edge bound e <= (n-1) * L / 2 for graphs of
    circumference at most L.  Vacuous (but still returned) for forests.
    """
    if g.n < 2:
        return 0
    e = g.edge_count
    return (2 * e + g.n - 2) // (g.n - 1)

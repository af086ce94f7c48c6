"""Maximum matchings with explicit Tutte-Berge optimality witnesses.

The matcher is Edmonds' blossom algorithm.  Because blossom code is easy
to get subtly wrong, an exhaustive subset-DP oracle is provided as well
(``exhaustive_matching_size``) and the test suite compares the two on a
full small-graph corpus.

The Berge witness S (a set with q(G - S) = |S| + deficiency, where q
counts odd-order components) is extracted from the Gallai-Edmonds
decomposition: D is the set of vertices missed by some maximum matching,
characterised by nu(G - v) = nu(G), and S is the neighbourhood of D minus
D.  The equality is re-checked on every call; if that ever failed, an
exhaustive search over witness sets (n <= 20) takes over.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .graph_core import (
    GraphError,
    TooLargeForExact,
    UncolouredView,
    component_masks,
    iter_bits,
    mask_of,
)


@dataclass(frozen=True)
class MatchingCertificate:
    """A maximum matching together with a Berge optimality witness.

    Invariants: the edges are pairwise disjoint edges of the graph,
    covered = 2 * len(edges), deficiency = n - covered, and
    q(G - berge_witness) = |berge_witness| + deficiency.
    """

    edges: tuple[tuple[int, int], ...]
    covered: int
    deficiency: int
    berge_witness: frozenset[int]


@dataclass(frozen=True)
class OddComponentCount:
    value: int


def _blossom_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Edmonds' algorithm; returns match[v] (-1 for exposed vertices)."""
    match = [-1] * n
    for v in range(n):  # greedy seeding saves augmentation rounds
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] == -1:
                break
            x = parent[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = parent[match[y]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def augment_from(root: int) -> bool:
        nonlocal parent, base, in_queue
        parent = [-1] * n
        base = list(range(n))
        in_queue = [False] * n
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # even-even edge: contract the blossom
                    cur = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur, to, in_blossom)
                    mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # augmenting path found: flip along parents
                        while to != -1:
                            prev = parent[to]
                            nxt = match[prev]
                            match[to] = prev
                            match[prev] = to
                            to = nxt
                        return True
                    in_queue[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return match


def matching_size(g: UncolouredView) -> int:
    """Size (edge count) of a maximum matching."""
    adj = [list(iter_bits(r)) for r in g.rows]
    match = _blossom_matching(g.n, adj)
    return sum(1 for x in match if x != -1) // 2


def exhaustive_matching_size(g: UncolouredView, limit: int = 20) -> int:
    """Oracle: maximum matching size by memoised subset branch and bound."""
    if g.n > limit:
        raise TooLargeForExact(g.n, limit, "matching oracle input")
    rows = g.rows

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        result = best(rest)  # v stays unmatched
        avail = rows[v] & rest
        while avail:
            ub = avail & -avail
            avail ^= ub
            cand = 1 + best(rest ^ ub)
            if cand > result:
                result = cand
        return result

    out = best((1 << g.n) - 1)
    best.cache_clear()
    return out


def odd_components(g: UncolouredView, removed: Iterable[int]) -> OddComponentCount:
    """Number of odd-order components of G - removed."""
    gone = mask_of(removed)
    if gone & ~((1 << g.n) - 1):
        raise GraphError("removed set contains vertices outside the graph")
    rows = [r & ~gone if not gone >> v & 1 else 0 for v, r in enumerate(g.rows)]
    count = 0
    for comp in component_masks(rows, g.n):
        if comp & gone:
            continue
        if comp.bit_count() % 2 == 1:
            count += 1
    return OddComponentCount(count)


def _odd_count_after_removal(g: UncolouredView, removed: frozenset[int]) -> int:
    return odd_components(g, removed).value


def _berge_witness(g: UncolouredView, nu: int, deficiency: int) -> frozenset[int]:
    n = g.n
    avoidable = []
    for v in range(n):
        others = [u for u in range(n) if u != v]
        if matching_size(g.induced(others)) == nu:
            avoidable.append(v)
    d_mask = mask_of(avoidable)
    witness = set()
    for v in avoidable:
        for u in iter_bits(g.rows[v] & ~d_mask):
            witness.add(u)
    return frozenset(witness)


def _exhaustive_berge_witness(
    g: UncolouredView, deficiency: int, limit: int = 20
) -> frozenset[int]:
    if g.n > limit:
        raise TooLargeForExact(g.n, limit, "witness search input")
    for mask in range(1 << g.n):
        s = frozenset(iter_bits(mask))
        if _odd_count_after_removal(g, s) == len(s) + deficiency:
            return s
    raise GraphError("no Berge witness found; deficiency inconsistent")


def _lex_min_maximum_matching(g: UncolouredView, nu: int) -> list[tuple[int, int]]:
    """Greedy lexicographic selection; ties among maximum matchings are
    broken by taking the smallest (u, v) edge that still extends to some
    maximum matching."""
    chosen: list[tuple[int, int]] = []
    banned = 0
    remaining = nu
    for u, v in g.edges():
        if remaining == 0:
            break
        if banned >> u & 1 or banned >> v & 1:
            continue
        trial = banned | 1 << u | 1 << v
        rest = [w for w in range(g.n) if not trial >> w & 1]
        if matching_size(g.induced(rest)) == remaining - 1:
            chosen.append((u, v))
            banned = trial
            remaining -= 1
    if remaining != 0:
        raise GraphError("internal error: greedy matching fell short")
    return chosen


def max_matching(g: UncolouredView) -> MatchingCertificate:
    """Maximum matching plus a Berge witness certifying its optimality."""
    nu = matching_size(g)
    deficiency = g.n - 2 * nu
    edges = _lex_min_maximum_matching(g, nu)
    witness = _berge_witness(g, nu, deficiency)
    if _odd_count_after_removal(g, witness) != len(witness) + deficiency:
        witness = _exhaustive_berge_witness(g, deficiency)
    cert = MatchingCertificate(
        edges=tuple(edges),
        covered=2 * nu,
        deficiency=deficiency,
        berge_witness=witness,
    )
    if _odd_count_after_removal(g, cert.berge_witness) != len(
        cert.berge_witness
    ) + cert.deficiency:
        raise AssertionError("Berge witness failed its defining equality")
    return cert


def hall_violator(
    g: UncolouredView,
    left: Iterable[int],
    right: Iterable[int],
    defect: int = 0,
) -> frozenset[int] | None:
    """A set S in `left` with |N(S) & right| < |S| - defect, or None.

    Only left-right edges are considered.  None means the defect form of
    Hall's condition holds, i.e. some matching misses at most `defect`
    left vertices.
    """
    left_list = sorted(set(left))
    right_set = set(right)
    if right_set & set(left_list):
        raise GraphError("left and right sets must be disjoint")
    right_mask = mask_of(right_set)

    match_of_right: dict[int, int] = {}
    match_of_left: dict[int, int] = {}

    def try_augment(u: int, visited: set[int]) -> bool:
        for v in iter_bits(g.rows[u] & right_mask):
            if v in visited:
                continue
            visited.add(v)
            if v not in match_of_right or try_augment(match_of_right[v], visited):
                match_of_right[v] = u
                match_of_left[u] = v
                return True
        return False

    for u in left_list:
        try_augment(u, set())

    missed = [u for u in left_list if u not in match_of_left]
    if len(missed) <= defect:
        return None

    # Alternate unmatched/matched edges from every exposed left vertex; the
    # reachable left set violates Hall with the required margin.
    reach_left = set(missed)
    frontier = list(missed)
    seen_right: set[int] = set()
    while frontier:
        u = frontier.pop()
        for v in iter_bits(g.rows[u] & right_mask):
            if v in seen_right:
                continue
            seen_right.add(v)
            partner = match_of_right.get(v)
            if partner is not None and partner not in reach_left:
                reach_left.add(partner)
                frontier.append(partner)
    neighbourhood = set()
    for u in reach_left:
        neighbourhood.update(iter_bits(g.rows[u] & right_mask))
    if not len(neighbourhood) < len(reach_left) - defect:
        raise AssertionError("constructed set does not violate the Hall bound")
    return frozenset(reach_left)

"""Structural analyzers: monochromatic components, the four-way overlap
partition of the two largest colour components, bipartitions, extremal
colouring recognition, hamiltonicity sufficiency predicates and the
large-matching / sparse-set / four-blocks trichotomy.

All verdicts are self-certifying: any returned witness re-checks its
defining inequality before being handed back.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

from .graph_core import (
    Colour,
    ColouredGraph,
    TooFewVertices,
    UncolouredView,
    component_masks,
    iter_bits,
    mask_of,
)
from .matching import matching_size
from .spectrum import DEFAULT_EXACT_LIMIT, cycle_spectrum

TRICHOTOMY_SUBSET_LIMIT = 24


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components of one colour view, largest first.

    Isolated vertices appear as singleton components, so the components
    always partition the whole vertex set.  Ties in size are broken by the
    smallest contained vertex.
    """

    colour: Colour
    components: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class WPartition:
    """Overlap pattern of the largest red component R' and largest blue
    component B': w1 = R' & B', w2 = R' - B', w3 = B' - R', w4 = rest."""

    w1: frozenset[int]
    w2: frozenset[int]
    w3: frozenset[int]
    w4: frozenset[int]


@dataclass(frozen=True)
class TwoBipartiteLabelling:
    """Class labelling forced by a colouring of K_{p,p,p,p} in which both
    colours are bipartite.

    u11 | u12 vs u21 | u22 is the red bipartition; u11 | u21 vs u12 | u22
    the blue one.  Edges u11-u12 and u21-u22 are forced blue, edges
    u11-u21 and u12-u22 forced red; the remaining two pair families are
    free.
    """

    u11: frozenset[int]
    u12: frozenset[int]
    u21: frozenset[int]
    u22: frozenset[int]

    @property
    def p(self) -> int:
        return len(self.u11)

    def classes(self) -> tuple[frozenset[int], ...]:
        return (self.u11, self.u12, self.u21, self.u22)


class BondyClass(Enum):
    PANCYCLIC = "Pancyclic"
    BALANCED_COMPLETE_BIPARTITE = "BalancedCompleteBipartite"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class TrichotomyCaseI:
    colour: Colour
    component_index: int
    matched_vertices: int


@dataclass(frozen=True)
class TrichotomyCaseII:
    colour: Colour
    subset: frozenset[int]
    max_degree: int


@dataclass(frozen=True)
class TrichotomyCaseIII:
    """Four blocks with no red edges between u1|u2 and u3|u4 and no blue
    edges between u1|u3 and u2|u4.  (The colour-swapped orientation is a
    distinct, equally valid reading; this analyzer always reports the
    orientation written here and the caller may swap colours to probe the
    other one.)"""

    u1: frozenset[int]
    u2: frozenset[int]
    u3: frozenset[int]
    u4: frozenset[int]


@dataclass(frozen=True)
class TrichotomyVerdict:
    delta: Fraction
    case_i: TrichotomyCaseI | None
    case_ii: TrichotomyCaseII | None
    case_iii: TrichotomyCaseIII | None
    case_ii_error: str | None = None


def colour_components(cg: ColouredGraph, colour: Colour) -> ComponentDecomposition:
    masks = component_masks(cg.rows_of(colour), cg.n)
    comps = [frozenset(iter_bits(m)) for m in masks]
    comps.sort(key=lambda c: (-len(c), min(c)))
    return ComponentDecomposition(colour=colour, components=tuple(comps))


def w_partition(cg: ColouredGraph) -> WPartition:
    red_big = colour_components(cg, Colour.RED).components[0] if cg.n else frozenset()
    blue_big = colour_components(cg, Colour.BLUE).components[0] if cg.n else frozenset()
    everything = frozenset(range(cg.n))
    w1 = red_big & blue_big
    w2 = red_big - blue_big
    w3 = blue_big - red_big
    w4 = everything - (red_big | blue_big)
    return WPartition(w1=w1, w2=w2, w3=w3, w4=w4)


def bipartition(g: UncolouredView) -> tuple[frozenset[int], frozenset[int]] | None:
    """Proper two-colouring, or None if any odd cycle exists.

    Per component, the class containing the component's minimum vertex
    goes left; the convention makes the output deterministic even for
    disconnected graphs.
    """
    side = [-1] * g.n
    left: set[int] = set()
    right: set[int] = set()
    for comp in component_masks(g.rows, g.n):
        start = (comp & -comp).bit_length() - 1
        side[start] = 0
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for u in iter_bits(g.rows[v]):
                if side[u] == -1:
                    side[u] = side[v] ^ 1
                    frontier.append(u)
                elif side[u] == side[v]:
                    return None
        for v in iter_bits(comp):
            (left if side[v] == 0 else right).add(v)
    return frozenset(left), frozenset(right)


def recognize_k4p(g: UncolouredView) -> int | None:
    """p if g is the complete four-partite graph with equal classes of
    size p (equivalently: the complement is four disjoint p-cliques)."""
    comp = g.complement()
    masks = component_masks(comp.rows, comp.n)
    if len(masks) != 4:
        return None
    sizes = [m.bit_count() for m in masks]
    if len(set(sizes)) != 1:
        return None
    p = sizes[0]
    for m in masks:
        for v in iter_bits(m):
            if comp.rows[v] != m & ~(1 << v):  # each class must be a clique
                return None
    return p


def recognize_two_bipartite(cg: ColouredGraph) -> TwoBipartiteLabelling | None:
    p = recognize_k4p(cg.union_view())
    if p is None:
        return None
    red_parts = bipartition(cg.red_view())
    blue_parts = bipartition(cg.blue_view())
    if red_parts is None or blue_parts is None:
        return None
    v1, v2 = red_parts
    w1, w2 = blue_parts
    labelling = TwoBipartiteLabelling(
        u11=v1 & w1, u12=v1 & w2, u21=v2 & w1, u22=v2 & w2
    )
    if any(len(c) != p for c in labelling.classes()):
        return None
    _check_forced_edges(cg, labelling)
    return labelling


def _check_forced_edges(cg: ColouredGraph, lab: TwoBipartiteLabelling) -> None:
    def crossing_all(colour: Colour, a: frozenset[int], b: frozenset[int]) -> bool:
        rows = cg.rows_of(colour)
        bm = mask_of(b)
        return all(rows[v] & bm == bm for v in a)

    ok = (
        crossing_all(Colour.BLUE, lab.u11, lab.u12)
        and crossing_all(Colour.BLUE, lab.u21, lab.u22)
        and crossing_all(Colour.RED, lab.u11, lab.u21)
        and crossing_all(Colour.RED, lab.u12, lab.u22)
    )
    if not ok:
        raise AssertionError("two-bipartite labelling lost a forced edge colour")


def chvatal_sufficient(g: UncolouredView) -> bool:
    """Degree-sequence hamiltonicity sufficiency; False proves nothing."""
    if g.n < 3:
        raise TooFewVertices(g.n, 3)
    d = sorted(g.degree(v) for v in range(g.n))
    n = g.n
    for k in range(1, n):
        if 2 * k < n and d[k - 1] <= k and d[n - k - 1] < n - k:
            return False
    return True


def dirac_sufficient(g: UncolouredView) -> bool:
    if g.n < 3:
        raise TooFewVertices(g.n, 3)
    return 2 * min(g.degree(v) for v in range(g.n)) >= g.n


def bondy_classify(
    g: UncolouredView, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> BondyClass:
    """For hamiltonian graphs with e >= n^2/4: pancyclic, or the balanced
    complete bipartite graph.  Anything else is NotApplicable."""
    if g.n < 3:
        raise TooFewVertices(g.n, 3)
    spec = cycle_spectrum(g, exact_limit)
    n = g.n
    if n not in spec.lengths or 4 * g.edge_count < n * n:
        return BondyClass.NOT_APPLICABLE
    if spec.lengths == frozenset(range(3, n + 1)):
        return BondyClass.PANCYCLIC
    parts = bipartition(g)
    balanced = (
        n % 2 == 0
        and parts is not None
        and len(parts[0]) == len(parts[1])
        and g.edge_count == n * n // 4
    )
    if not balanced:
        raise AssertionError(
            "hamiltonian graph with e >= n^2/4 is neither pancyclic nor K_{n/2,n/2}"
        )
    return BondyClass.BALANCED_COMPLETE_BIPARTITE


def _frac_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _frac_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _case_i(cg: ColouredGraph, delta: Fraction) -> TrichotomyCaseI | None:
    needed = Fraction(2, 3) + delta
    for colour in (Colour.RED, Colour.BLUE):
        decomp = colour_components(cg, colour)
        view = cg.view(colour)
        for idx, comp in enumerate(decomp.components):
            if Fraction(len(comp)) < needed * cg.n:
                break  # components are sorted by size
            covered = 2 * matching_size(view.induced(comp))
            if Fraction(covered) >= needed * cg.n:
                return TrichotomyCaseI(
                    colour=colour, component_index=idx, matched_vertices=covered
                )
    return None


def _bounded_degree_subset(
    rows, n: int, max_deg: int, min_size: int
) -> frozenset[int] | None:
    """Largest-first exhaustive search for S with |S| >= min_size and all
    degrees inside S at most max_deg.  Branches on removing a maximum
    violator or one of its neighbours, which is complete; failed (mask,
    budget) states are memoised."""
    if min_size <= 0:
        return frozenset()
    failed: dict[int, int] = {}

    def solve(mask: int, budget: int) -> int | None:
        worst_deg = -1
        worst_v = -1
        for v in iter_bits(mask):
            d = (rows[v] & mask).bit_count()
            if d > worst_deg:
                worst_deg = d
                worst_v = v
        if worst_deg <= max_deg:
            return mask
        if budget == 0 or failed.get(mask, -1) >= budget:
            return None
        for u in [worst_v] + list(iter_bits(rows[worst_v] & mask)):
            got = solve(mask & ~(1 << u), budget - 1)
            if got is not None:
                return got
        failed[mask] = budget
        return None

    got = solve((1 << n) - 1, n - min_size)
    return None if got is None else frozenset(iter_bits(got))


def _case_ii(
    cg: ColouredGraph, delta: Fraction, subset_limit: int
) -> tuple[TrichotomyCaseII | None, str | None]:
    if cg.n > subset_limit:
        return None, (
            f"subset search refused: n={cg.n} exceeds limit {subset_limit}"
        )
    min_size = _frac_ceil((Fraction(2, 3) - delta / 2) * cg.n)
    max_deg = _frac_floor(10 * delta * cg.n)
    for colour in (Colour.RED, Colour.BLUE):
        rows = cg.rows_of(colour)
        subset = _bounded_degree_subset(rows, cg.n, max_deg, min_size)
        if subset is not None and len(subset) >= min_size:
            found = max(
                ((rows[v] & mask_of(subset)).bit_count() for v in subset), default=0
            )
            return TrichotomyCaseII(colour=colour, subset=subset, max_degree=found), None
    return None, None


def _case_iii(cg: ColouredGraph, delta: Fraction) -> TrichotomyCaseIII | None:
    threshold = (Fraction(1, 4) - 3 * delta) * cg.n
    min_block = max(_frac_ceil(threshold), 1)
    red_masks = component_masks(cg.red, cg.n)
    blue_masks = component_masks(cg.blue, cg.n)
    if len(red_masks) < 2 or len(blue_masks) < 2:
        return None

    def groupings(masks: list[int]) -> Iterable[tuple[int, int]]:
        # first component pinned to side A; both sides must be non-empty
        rest = masks[1:]
        for pick in range(1 << len(rest)):
            if pick == (1 << len(rest)) - 1:
                continue  # side B would be empty
            a = masks[0]
            b = 0
            for i, m in enumerate(rest):
                if pick >> i & 1:
                    a |= m
                else:
                    b |= m
            if a.bit_count() >= 2 * min_block and b.bit_count() >= 2 * min_block:
                yield a, b

    for a, b in groupings(red_masks):
        for c, d in groupings(blue_masks):
            blocks = (a & c, a & d, b & c, b & d)
            if all(m.bit_count() >= min_block for m in blocks):
                case = TrichotomyCaseIII(
                    u1=frozenset(iter_bits(blocks[0])),
                    u2=frozenset(iter_bits(blocks[1])),
                    u3=frozenset(iter_bits(blocks[2])),
                    u4=frozenset(iter_bits(blocks[3])),
                )
                _check_case_iii(cg, case)
                return case
    return None


def _check_case_iii(cg: ColouredGraph, case: TrichotomyCaseIII) -> None:
    red_a = mask_of(case.u1 | case.u2)
    red_b = mask_of(case.u3 | case.u4)
    blue_a = mask_of(case.u1 | case.u3)
    blue_b = mask_of(case.u2 | case.u4)
    if any(cg.red[v] & red_b for v in iter_bits(red_a)):
        raise AssertionError("four-block witness has a red edge across the red split")
    if any(cg.blue[v] & blue_b for v in iter_bits(blue_a)):
        raise AssertionError("four-block witness has a blue edge across the blue split")


def trichotomy(
    cg: ColouredGraph,
    delta: Fraction | int | str,
    subset_limit: int = TRICHOTOMY_SUBSET_LIMIT,
) -> TrichotomyVerdict:
    """Evaluate, independently and exactly, the three structural cases:

    (i)   some monochromatic component holds a matching covering at least
          (2/3 + delta) * n vertices;
    (ii)  some set S with |S| >= (2/3 - delta/2) * n has one colour of
          maximum degree at most 10 * delta * n inside S;
    (iii) a four-block partition with all blocks of size at least
          (1/4 - 3*delta) * n, no red edges between u1|u2 and u3|u4 and no
          blue edges between u1|u3 and u2|u4.

    All cases that hold are reported; at small n none may hold.  Case (ii)
    is an exhaustive subset search and is refused (recorded in
    ``case_ii_error``, the other cases still evaluated) above
    ``subset_limit`` vertices.
    """
    delta = Fraction(delta)
    if not 0 < delta < Fraction(1, 36):
        warnings.warn(
            f"delta={delta} outside (0, 1/36); verdict still computed",
            stacklevel=2,
        )
    case_i = _case_i(cg, delta)
    case_ii, case_ii_error = _case_ii(cg, delta, subset_limit)
    case_iii = _case_iii(cg, delta)
    verdict = TrichotomyVerdict(
        delta=delta,
        case_i=case_i,
        case_ii=case_ii,
        case_iii=case_iii,
        case_ii_error=case_ii_error,
    )
    _check_verdict(cg, verdict)
    return verdict


def _check_verdict(cg: ColouredGraph, verdict: TrichotomyVerdict) -> None:
    n = cg.n
    delta = verdict.delta
    if verdict.case_i is not None:
        ci = verdict.case_i
        comp = colour_components(cg, ci.colour).components[ci.component_index]
        covered = 2 * matching_size(cg.view(ci.colour).induced(comp))
        if covered != ci.matched_vertices or Fraction(covered) < (
            Fraction(2, 3) + delta
        ) * n:
            raise AssertionError("case (i) witness fails its inequality")
    if verdict.case_ii is not None:
        cii = verdict.case_ii
        rows = cg.rows_of(cii.colour)
        sm = mask_of(cii.subset)
        observed = max(((rows[v] & sm).bit_count() for v in cii.subset), default=0)
        size_ok = Fraction(len(cii.subset)) >= (Fraction(2, 3) - delta / 2) * n
        if observed != cii.max_degree or not size_ok or Fraction(observed) > 10 * delta * n:
            raise AssertionError("case (ii) witness fails its inequality")
    if verdict.case_iii is not None:
        ciii = verdict.case_iii
        blocks = (ciii.u1, ciii.u2, ciii.u3, ciii.u4)
        if any(Fraction(len(b)) < (Fraction(1, 4) - 3 * delta) * n for b in blocks):
            raise AssertionError("case (iii) witness has an undersized block")
        _check_case_iii(cg, ciii)


@dataclass(frozen=True)
class StructureReport:
    n: int
    min_degree: int
    red_components: ComponentDecomposition
    blue_components: ComponentDecomposition
    w: WPartition
    red_bipartition: tuple[frozenset[int], frozenset[int]] | None
    blue_bipartition: tuple[frozenset[int], frozenset[int]] | None
    k4p: int | None
    two_bipartite: TwoBipartiteLabelling | None
    dirac: bool | None
    chvatal: bool | None
    bondy: str | None
    trichotomy: TrichotomyVerdict | None
    notes: tuple[str, ...]


def structure_report(
    cg: ColouredGraph,
    delta: Fraction | int | str | None = None,
    exact_limit: int = DEFAULT_EXACT_LIMIT,
) -> StructureReport:
    """One-stop structural analysis used by the command-line front end."""
    from .graph_core import TooLargeForExact, min_degree as _min_degree

    notes: list[str] = []
    union = cg.union_view()
    dirac = chvatal = None
    bondy = None
    if cg.n >= 3:
        dirac = dirac_sufficient(union)
        chvatal = chvatal_sufficient(union)
        try:
            bondy = bondy_classify(union, exact_limit).value
        except TooLargeForExact as exc:
            notes.append(f"bondy_classify skipped: {exc}")
    else:
        notes.append("degree predicates need n >= 3")
    verdict = None
    if delta is not None:
        verdict = trichotomy(cg, delta)
        if verdict.case_ii_error:
            notes.append(f"trichotomy case (ii): {verdict.case_ii_error}")
    return StructureReport(
        n=cg.n,
        min_degree=_min_degree(cg) if cg.n else 0,
        red_components=colour_components(cg, Colour.RED),
        blue_components=colour_components(cg, Colour.BLUE),
        w=w_partition(cg),
        red_bipartition=bipartition(cg.red_view()),
        blue_bipartition=bipartition(cg.blue_view()),
        k4p=recognize_k4p(union),
        two_bipartite=recognize_two_bipartite(cg),
        dirac=dirac,
        chvatal=chvatal,
        bondy=bondy,
        trichotomy=verdict,
        notes=tuple(notes),
    )

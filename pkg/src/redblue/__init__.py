"""redblue: exact analysis of red/blue edge-coloured graphs.

Construction, cycle spectra, matchings with optimality witnesses,
structural analyzers, extremal-family generators and an exhaustive /
randomised verification harness.
"""

from .graph_core import (
    BadMaskLength,
    BadParams,
    Colour,
    ColouredGraph,
    GraphError,
    InvalidVertex,
    MAX_VERTICES,
    ParseError,
    SameEdgeBothColours,
    TooFewVertices,
    TooLargeForExact,
    UncolouredView,
    build,
    colour_degree,
    min_degree,
    parse,
    serialize,
)
from .spectrum import (
    CycleSpectrum,
    DEFAULT_EXACT_LIMIT,
    MonoSpectrum,
    cycle_spectrum,
    erdos_gallai_floor,
    is_pancyclic,
    mono_spectrum,
    odd_girth,
)
from .matching import (
    MatchingCertificate,
    OddComponentCount,
    exhaustive_matching_size,
    hall_violator,
    matching_size,
    max_matching,
    odd_components,
)
from .structure import (
    BondyClass,
    ComponentDecomposition,
    StructureReport,
    TrichotomyVerdict,
    TwoBipartiteLabelling,
    WPartition,
    bipartition,
    bondy_classify,
    chvatal_sufficient,
    colour_components,
    dirac_sufficient,
    recognize_k4p,
    recognize_two_bipartite,
    structure_report,
    trichotomy,
    w_partition,
)
from .constructions import (
    ConstructionSpec,
    KColouredGraph,
    gen_bipartite_complement,
    gen_blowup_c5,
    gen_f_st,
    gen_g_prime,
    gen_g_r_t,
    gen_k_bipartite,
    gen_two_bipartite_k4p,
    parse_construction,
    xorshift64star,
)
from .harness import (
    PhiCertificate,
    SearchBudget,
    SearchMode,
    VerificationReport,
    Verdict,
    count_two_bipartite,
    minimize_mono_circumference,
    phi_certificates,
    search_colourings,
    verify_circumference,
    verify_k_colour_conjecture,
    verify_main,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

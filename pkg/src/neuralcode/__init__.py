"""Reconstructing stimulus-space topology from binary neural codes."""

from .codes import (
    Code,
    Codeword,
    is_simplicial,
    parse_code,
    render_code,
    simplicial_completion,
)
from .complex import (
    SimplicialComplex,
    delta_complex,
    euler_characteristic,
    f_vector,
    facets,
    nerve,
)
from .cover import (
    Cover,
    NerveReport,
    atoms,
    circle_arc_cover,
    code_of_cover,
    grid_box_cover,
    nerve_equals_delta,
    parse_cover,
    render_cover,
)
from .errors import (
    BadArc,
    BadCharacter,
    BadHeader,
    BadPoint,
    BoxOutOfExtent,
    CapacityExceeded,
    ContractError,
    Disconnected,
    EmptyCode,
    EmptyExtent,
    InvariantFailure,
    LengthMismatch,
    MissingBasepoint,
    MissingVertex,
    MixedLength,
    NeuralCodeError,
    NoPath,
    ParseError,
    ZeroSets,
)
from .ideal import (
    PseudoMonomial,
    ReducedPolynomial,
    RelationKind,
    RfRelation,
    canonical_form,
    code_to_polynomial,
    evaluate,
    polynomial_to_code,
    rf_relations,
    vanishes_on,
)
from .topology import (
    Gf2Matrix,
    Pi1Presentation,
    betti_numbers,
    boundary_matrix,
    boundary_rank,
    connected_components,
    helly_lower_bound,
    minimal_nonfaces,
    pi1_presentation,
    shortest_edge_path,
)

__version__ = "0.1.0"

"""Face-number lower bounds for simplicial complexes with bounded missing faces."""

__version__ = "0.1.0"

from mfbounds.complex import (  # noqa: E402
    EMPTY,
    FVector,
    SimplicialComplex,
    antistar,
    contract_edge,
    f_vector,
    from_facets,
    join,
    link,
    missing_faces,
    parse_facets,
    read_facets,
    subdivide_edge,
    suspension,
    write_facets,
)
from mfbounds.constructions import construct_S, construct_S_idn, crosspolytope, stacked_sphere  # noqa: E402
from mfbounds.homology import classify, is_homology_sphere, reduced_cohomology, reduced_homology  # noqa: E402
from mfbounds.isomorphism import canonical_form, is_isomorphic  # noqa: E402
from mfbounds.kernels import BACKEND  # noqa: E402
from mfbounds.polyvec import P, basis_B, f_to_h, g_expand, h_to_f  # noqa: E402

__all__ = [
    "BACKEND", "EMPTY", "FVector", "P", "SimplicialComplex", "antistar", "basis_B",
    "canonical_form", "classify", "construct_S", "construct_S_idn", "contract_edge",
    "crosspolytope", "f_to_h", "f_vector", "from_facets", "g_expand", "h_to_f",
    "is_homology_sphere", "is_isomorphic", "join", "link", "missing_faces", "parse_facets",
    "read_facets", "reduced_cohomology", "reduced_homology", "stacked_sphere",
    "subdivide_edge", "suspension", "write_facets",
]

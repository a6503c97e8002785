"""idealworks: exact computations with edge ideals and monomial ideals.

Core objects: Graph, MonomialIdeal, SimplicialComplex, FieldSpec.  The heavy
entry points are integral closures of powers, symbolic powers, degree
complexes, and regularity sweeps; see the cli module or the FastAPI service
for the user-facing surface.
"""

from .fields import FieldSpec
from .graphs import Graph
from .monomials import MonomialIdeal, edge_ideal
from .simplicial import SimplicialComplex, sr_complex, sr_ideal
from .closure import (integral_closure_edge_power, newton_closure_power,
                      newton_membership, is_normal_edge, symbolic_power,
                      enumerate_intermediate_ideals)
from .regularity import (RegCertificate, degree_complex, gamma_box,
                         takayama_regularity, extremal_exponents,
                         criterion_in_power_check, mixed_sum_regularity)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec", "Graph", "MonomialIdeal", "edge_ideal", "SimplicialComplex",
    "sr_complex", "sr_ideal", "integral_closure_edge_power",
    "newton_closure_power", "newton_membership", "is_normal_edge",
    "symbolic_power", "enumerate_intermediate_ideals", "RegCertificate",
    "degree_complex", "gamma_box", "takayama_regularity", "extremal_exponents",
    "criterion_in_power_check", "mixed_sum_regularity", "__version__",
]

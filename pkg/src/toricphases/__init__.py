"""Phases of toric gauged linear sigma models and relations among their twist autoequivalences.

Submodules:

- ``lattice``, ``lp``: exact integer/rational linear algebra and linear programming
- ``toric``: charge matrices, fans, enhanced fans, monomial ideals
- ``secondary``: phases, minimal exceptional sets, wall data
- ``relations``: relations among twists in each phase
- ``ktheory``: K-theory images and ideal membership in ``ℚ[Pic]``
- ``mf``: graded matrix factorizations and higher homotopies
- ``catalog``, ``io``, ``cli``: built-in models, serialization, command line
"""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .toric import GLSMModel, build_from_charges, build_from_fan, enhanced_fan, primitive_collections
from .secondary import (
    Phase,
    WallData,
    enumerate_phases,
    identify_geometric_phase,
    landau_ginzburg_phases,
    minimal_exceptional_sets,
    wall_data,
)
from .relations import RelationDescriptor, RelationKind, phase_relations, refined_geometric_relations, render_relation
from .laurent import LaurentElement
from .ktheory import (
    RelationIdeal,
    groebner_basis,
    ideal_member,
    normal_form,
    quotient_rank,
    relation_ideal,
    relation_to_ktheory,
    unipotence_check,
)
from .poly import MultiPoly, PolyMatrix, PolyRing
from .mf import (
    FreeChain,
    GradedMF,
    HomotopyFamily,
    assemble_mf,
    higher_homotopies,
    k_class,
    koszul_mf,
    tensor_mf,
    verify_mf,
)
from . import catalog
from .io import load_model

"""steerscope: CHSH-type EPR-steering analysis for two-qubit states."""

from ._backend import backend_name
from .errors import SteerscopeError
from .hull import (
    HullMembership,
    PlanarConicSet,
    hull_inequality,
    lp_membership,
    steering_hull_membership,
)
from .nonlocality import EquivalenceCertificate, certify_equivalence, max_chsh
from .povm import (
    EllipseGeometry,
    PovmElement,
    boundary_sets,
    ellipse_point,
    povm_ellipse,
    povm_hull_membership,
)
from .quantum import (
    BlochObservable,
    CorrelationVector,
    DensityMatrix,
    bell_state,
    correlation,
    correlation_vector,
    from_e_basis,
    load_state,
    make_state,
    pure_schmidt,
    random_state,
    singlet,
    state_from_dict,
    to_e_basis,
    werner_state,
)
from .steering import (
    MeasurementPair,
    SteeringReport,
    decompose_alice,
    e_steer,
    max_steering,
    mub_partner,
    steering_lhs_general,
    steering_lhs_mub,
)

__version__ = "0.1.0"

__all__ = [
    "BlochObservable",
    "CorrelationVector",
    "DensityMatrix",
    "EllipseGeometry",
    "EquivalenceCertificate",
    "HullMembership",
    "MeasurementPair",
    "PlanarConicSet",
    "PovmElement",
    "SteeringReport",
    "SteerscopeError",
    "backend_name",
    "bell_state",
    "boundary_sets",
    "certify_equivalence",
    "correlation",
    "correlation_vector",
    "decompose_alice",
    "e_steer",
    "ellipse_point",
    "from_e_basis",
    "hull_inequality",
    "load_state",
    "lp_membership",
    "make_state",
    "max_chsh",
    "max_steering",
    "mub_partner",
    "povm_ellipse",
    "povm_hull_membership",
    "pure_schmidt",
    "random_state",
    "singlet",
    "state_from_dict",
    "steering_hull_membership",
    "steering_lhs_general",
    "steering_lhs_mub",
    "to_e_basis",
    "werner_state",
]

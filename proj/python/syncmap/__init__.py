"""Three-clock synchronisation map on the 2-torus.

Python bindings for the C++ core: the phase-difference map, its symmetries
and region decomposition, the discrete Lyapunov function with its certified
sign analysis, and the phase-portrait tooling (fixed points, heteroclinic
arcs, basin estimates, contraction rates).
"""

from ._syncmap import (
    BasinEstimate,
    Cell,
    CertReport,
    CertRequest,
    CertVerdict,
    DomainError,
    FixedPointKind,
    FixedPointRecord,
    HeteroclinicLabel,
    ManifoldArc,
    MapParams,
    Mat2,
    NonConvergenceError,
    OrbitDirection,
    OrbitTrace,
    PhasePoint,
    RegionId,
    SymmetryId,
    SymmetryMap,
    XiValues,
    apply_symmetry,
    certify_negative,
    check_positivity,
    contraction_rate,
    converges_to_sink,
    equivariance_residual,
    estimate_basin,
    fixed_points,
    gamma_minimum,
    gamma_x,
    iterate,
    lyapunov_value,
    map_forward,
    map_inverse,
    map_jacobian,
    orbital_derivative,
    orbital_derivative_closed_form,
    region_boundary,
    region_contains,
    region_lipschitz,
    symmetry,
    torus_distance,
    trace_heteroclinic,
    transport_lyapunov,
    wrap,
    xi_values,
)

__all__ = [
    "BasinEstimate",
    "Cell",
    "CertReport",
    "CertRequest",
    "CertVerdict",
    "DomainError",
    "FixedPointKind",
    "FixedPointRecord",
    "HeteroclinicLabel",
    "ManifoldArc",
    "MapParams",
    "Mat2",
    "NonConvergenceError",
    "OrbitDirection",
    "OrbitTrace",
    "PhasePoint",
    "RegionId",
    "SymmetryId",
    "SymmetryMap",
    "XiValues",
    "apply_symmetry",
    "certify_negative",
    "check_positivity",
    "contraction_rate",
    "converges_to_sink",
    "equivariance_residual",
    "estimate_basin",
    "fixed_points",
    "gamma_minimum",
    "gamma_x",
    "iterate",
    "lyapunov_value",
    "map_forward",
    "map_inverse",
    "map_jacobian",
    "orbital_derivative",
    "orbital_derivative_closed_form",
    "region_boundary",
    "region_contains",
    "region_lipschitz",
    "symmetry",
    "torus_distance",
    "trace_heteroclinic",
    "transport_lyapunov",
    "wrap",
    "xi_values",
]

"""Non-unitary discrete-time quantum walks with balanced gain and loss.

Simulation and analysis toolkit for a one-dimensional two-step walk
whose coin is amplified/suppressed each period: quasienergy bands and
spectral phase classification, topological invariants from biorthogonal
geometric phases, real-space dynamics with two-region and disordered
angle profiles, and analytic plus numeric interface states.
"""

from .bloch import (
    BZ_PERIOD,
    BandPoint,
    BlochVector,
    ModelParams,
    PTClass,
    PTReport,
    bands,
    bloch_vector,
    classify_pt,
    classify_pt_detail,
    floquet_momentum_matrix,
    k_grid,
    make_params,
)
from .edge import (
    BulkBoundaryReport,
    EdgeStateSolution,
    bulk_boundary_check,
    closed_form_rt,
    coin_selector,
    compare_to_dynamics,
    decay_rate,
    edge_state,
    find_edge_states_numeric,
    ipr,
)
from .errors import (
    NoLocalizedSolutionError,
    NumericalError,
    PhaseBoundaryError,
    PTWalkError,
    RefinementError,
    ValidationError,
)
from .numerics import Spectrum, eig_general, integrate_periodic, unwrap_winding
from .realspace import (
    LatticeConfig,
    ProbabilitySeries,
    TimeFrame,
    WalkState,
    apply_disorder,
    build_floquet,
    evolve,
    initial_state,
    is_pt_symmetric,
    make_homogeneous,
    make_inhomogeneous,
    pseudo_anti_unitarity_defect,
    rng_algorithm,
    site_probabilities,
    step,
)
from .topology import (
    BerryConnectionSample,
    ConnectionCase,
    PhaseDiagramCell,
    TopoNumbers,
    berry_connection,
    generalized_zak_phase,
    global_berry_phase,
    phase_diagram,
    theta_angle,
    topo_numbers,
    winding_number_projected,
)

__version__ = "0.1.0"

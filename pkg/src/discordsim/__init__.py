"""Exact open-system dynamics and quantum correlations for two qubits in
independent zero-temperature Lorentzian reservoirs."""

from .correlations import (
    CorrelationRecord,
    MeasurementBasis,
    brute_force_classical_correlation,
    classical_correlation,
    concurrence,
    conditional_entropy,
    mutual_information,
    quantum_discord,
    von_neumann_entropy,
)
from .reservoir import (
    NoZerosError,
    Regime,
    ReservoirParams,
    chi_zeros,
    evaluate_chi,
    regime,
    solve_memory_kernel,
    spectral_density,
)
from .scenarios import (
    Family,
    StateFamily,
    build_state,
    figure_preset,
)
from .states import (
    DensityMatrix,
    KrausPair,
    Qubit,
    amplitude_damping_kraus,
    apply_kraus,
    excited_state,
    ground_state,
    partial_trace,
    pure_state,
    single_qubit_evolve,
    tensor,
    two_qubit_evolve,
)
from .sweep import (
    CSV_COLUMNS,
    Axis,
    EsdReport,
    NoRevivalError,
    SweepConfig,
    detect_discord_zeros,
    detect_esd,
    evolve_trajectory,
    read_sweep_csv,
    revival_amplitude,
    run_sweep,
    trajectory_from_state,
)
from .verification import (
    CheckResult,
    format_report,
    run_verification,
)

__all__ = [
    "CorrelationRecord",
    "MeasurementBasis",
    "brute_force_classical_correlation",
    "classical_correlation",
    "concurrence",
    "conditional_entropy",
    "mutual_information",
    "quantum_discord",
    "von_neumann_entropy",
    "NoZerosError",
    "Regime",
    "ReservoirParams",
    "chi_zeros",
    "evaluate_chi",
    "regime",
    "solve_memory_kernel",
    "spectral_density",
    "Family",
    "StateFamily",
    "build_state",
    "figure_preset",
    "DensityMatrix",
    "KrausPair",
    "Qubit",
    "amplitude_damping_kraus",
    "apply_kraus",
    "excited_state",
    "ground_state",
    "partial_trace",
    "pure_state",
    "single_qubit_evolve",
    "tensor",
    "two_qubit_evolve",
    "CSV_COLUMNS",
    "Axis",
    "EsdReport",
    "NoRevivalError",
    "SweepConfig",
    "detect_discord_zeros",
    "detect_esd",
    "evolve_trajectory",
    "read_sweep_csv",
    "revival_amplitude",
    "run_sweep",
    "trajectory_from_state",
    "CheckResult",
    "format_report",
    "run_verification",
]

__version__ = "0.1.0"

"""Trajectory evolution, death/zero detection, and deterministic CSV sweeps.

A trajectory is the list of correlation records along a time grid for one
initial state and one reservoir.  On top of trajectories this module detects
sudden death of entanglement (concurrence reaching zero and dwelling there),
the isolated zeros of the discord, and the size of the discord revival after
its first zero.  ``run_sweep`` materializes a 2-D (parameter x time) sweep
as a CSV file with deterministic bytes.
"""

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.signal import find_peaks

from .correlations import (
    CorrelationRecord,
    classical_correlation,
    concurrence,
    discord_from_parts,
    mutual_information,
)
from .reservoir import ReservoirParams, evaluate_chi
from .scenarios import Family, StateFamily, build_state
from .states import Qubit, two_qubit_evolve

__all__ = [
    "Axis",
    "SweepConfig",
    "EsdReport",
    "NoRevivalError",
    "evolve_trajectory",
    "detect_esd",
    "detect_discord_zeros",
    "revival_amplitude",
    "run_sweep",
    "read_sweep_csv",
    "CSV_COLUMNS",
    "DEFAULT_ESD_THRESHOLD",
    "DEFAULT_ESD_DWELL",
    "DEFAULT_ZERO_THRESHOLD",
]

DEFAULT_ESD_THRESHOLD = 1e-9
DEFAULT_ESD_DWELL = 0.5
DEFAULT_ZERO_THRESHOLD = 1e-3

# Discord values below this are exact zeros up to arithmetic noise; runs of
# them are reported as intervals rather than as individual minima.
_EXACT_ZERO = 1e-12

# Minimum rise out of a dip for it to count as a zero touch rather than
# optimizer noise (noise stays below ~1e-11 bits) or a decaying tail.
_MIN_PROMINENCE = 1e-7

_AXIS_NAMES = ("alpha_sq", "r", "lambda_ratio")

CSV_COLUMNS = (
    "t_gamma0",
    "alpha_sq",
    "r",
    "lambda_ratio",
    "chi",
    "concurrence",
    "mutual_info_bits",
    "classical_corr_bits",
    "discord_bits",
    "argmax_theta",
    "argmax_phi",
)


class NoRevivalError(RuntimeError):
    """The series contains no discord zero, so no revival can follow one."""


@dataclass(frozen=True)
class Axis:
    """One swept parameter: uniformly spaced values over [min, max]."""

    name: str
    min: float
    max: float
    count: int

    def __post_init__(self):
        if self.name not in _AXIS_NAMES:
            raise ValueError(f"axis name must be one of {_AXIS_NAMES}, got {self.name!r}")
        if self.count < 2:
            raise ValueError(f"axis count must be >= 2, got {self.count}")
        if not self.max > self.min:
            raise ValueError(f"axis range is empty: [{self.min}, {self.max}]")
        lo_ok = self.min > 0.0 if self.name == "lambda_ratio" else self.min >= 0.0
        hi_ok = True if self.name == "lambda_ratio" else self.max <= 1.0
        if not (lo_ok and hi_ok):
            raise ValueError(f"axis {self.name} range [{self.min}, {self.max}] out of bounds")

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)


@dataclass(frozen=True)
class SweepConfig:
    """Everything needed to produce one sweep dataset.

    Exactly one of the three physical parameters is swept (the axis); the
    other two must be fixed.  Multiple families produce stacked blocks in
    the output, ordered as given.
    """

    families: tuple[Family, ...]
    axis: Axis
    t_max: float
    steps: int
    alpha_sq: float | None = None
    r: float | None = None
    lambda_ratio: float | None = None
    measured: Qubit = Qubit.B
    output: str | Path | None = None

    def __post_init__(self):
        if not self.families or any(not isinstance(f, Family) for f in self.families):
            raise ValueError("families must be a nonempty tuple of Family members")
        if len(set(self.families)) != len(self.families):
            raise ValueError("families must not repeat")
        if not isinstance(self.axis, Axis):
            raise TypeError("axis must be an Axis")
        if not self.t_max > 0.0:
            raise ValueError(f"t_max must be positive, got {self.t_max}")
        if self.steps < 2:
            raise ValueError(f"steps must be >= 2, got {self.steps}")
        if not isinstance(self.measured, Qubit):
            raise TypeError("measured must be a Qubit")
        fixed = {"alpha_sq": self.alpha_sq, "r": self.r, "lambda_ratio": self.lambda_ratio}
        if fixed[self.axis.name] is not None:
            raise ValueError(f"{self.axis.name} is the swept axis and must not be fixed")
        for name, value in fixed.items():
            if name == self.axis.name:
                continue
            if value is None:
                raise ValueError(f"{name} must be fixed when it is not the swept axis")
            if name == "lambda_ratio":
                if not value > 0.0:
                    raise ValueError(f"lambda_ratio must be positive, got {value}")
            elif not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {value}")

    def point_params(self, axis_value: float) -> tuple[float, float, float]:
        """(alpha_sq, r, lambda_ratio) with the axis value substituted in."""
        merged = {"alpha_sq": self.alpha_sq, "r": self.r, "lambda_ratio": self.lambda_ratio}
        merged[self.axis.name] = float(axis_value)
        return merged["alpha_sq"], merged["r"], merged["lambda_ratio"]

    def time_grid(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.steps)


@dataclass(frozen=True)
class EsdReport:
    """Where entanglement died for good, and where it came back above threshold."""

    esd_time: float | None
    revival_times: tuple[tuple[float, float], ...]

    def __post_init__(self):
        prev_end = -math.inf
        for start, end in self.revival_times:
            if not (start <= end and start > prev_end):
                raise ValueError("revival intervals must be ordered and disjoint")
            prev_end = end


def trajectory_from_state(
    rho0,
    params: ReservoirParams,
    t_grid,
    measured: Qubit = Qubit.B,
) -> list[CorrelationRecord]:
    """Correlation measures along a time grid for an arbitrary initial state.

    Each point is independent: the initial state is pushed through the
    decay channel with the amplitude factor at that time, then concurrence,
    mutual information, classical correlation (with its maximizing basis),
    and discord are evaluated on the resulting state.
    """
    t_arr = np.asarray(t_grid, dtype=float)
    if t_arr.ndim != 1 or t_arr.size == 0:
        raise ValueError("t_grid must be a nonempty 1-D array of times")
    records = []
    for t in t_arr:
        chi = evaluate_chi(params, float(t))
        rho_t = two_qubit_evolve(rho0, chi, chi)
        conc = concurrence(rho_t)
        total = mutual_information(rho_t)
        classical, basis = classical_correlation(rho_t, measured)
        disc = discord_from_parts(total, classical)
        records.append(
            CorrelationRecord(float(t), conc, total, classical, disc, basis)
        )
    return records


def evolve_trajectory(
    scenario: StateFamily,
    params: ReservoirParams,
    t_grid,
    measured: Qubit = Qubit.B,
) -> list[CorrelationRecord]:
    """Correlation measures along a time grid for a Werner-like initial state."""
    return trajectory_from_state(build_state(scenario), params, t_grid, measured)


def _bool_runs(mask: np.ndarray):
    """Yield (start, end) inclusive index pairs of maximal True runs."""
    idx = np.flatnonzero(mask)
    if idx.size == 0:
        return
    breaks = np.flatnonzero(np.diff(idx) > 1)
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks, [idx.size - 1]))
    for s, e in zip(starts, ends):
        yield int(idx[s]), int(idx[e])


def detect_esd(
    series: list[CorrelationRecord],
    threshold: float = DEFAULT_ESD_THRESHOLD,
    dwell_window: float = DEFAULT_ESD_DWELL,
) -> EsdReport:
    """Find sudden death of entanglement and any revivals after it.

    Death is a below-threshold stretch of concurrence that lasts at least
    ``dwell_window`` and contains an exactly zero value — the spin-flip
    formula clamps genuinely dead states to 0.0, while an asymptotically
    decaying tail stays strictly positive no matter how small it gets, so
    the exactness test separates true death from slow decay.  The death
    time is the start of the first such stretch; revival intervals are the
    above-threshold stretches after it.
    """
    if not series:
        raise ValueError("series is empty")
    t = np.array([rec.t for rec in series])
    c = np.array([rec.concurrence for rec in series])
    below = c < threshold

    esd_time = None
    dead_end = None
    for i0, i1 in _bool_runs(below):
        if t[i1] - t[i0] < dwell_window:
            continue
        if not np.any(c[i0 : i1 + 1] == 0.0):
            continue
        esd_time = float(t[i0])
        dead_end = i1
        break

    revivals = []
    if esd_time is not None and dead_end is not None and dead_end + 1 < t.size:
        above = ~below[dead_end + 1 :]
        for j0, j1 in _bool_runs(above):
            revivals.append(
                (float(t[dead_end + 1 + j0]), float(t[dead_end + 1 + j1]))
            )
    return EsdReport(esd_time=esd_time, revival_times=tuple(revivals))


def _parabola_vertex(t0, t1, t2, d0, d1, d2) -> float:
    """Abscissa of the parabola vertex through three points, clamped near t1."""
    denom = (t1 - t0) * (d1 - d2) - (t1 - t2) * (d1 - d0)
    if abs(denom) < 1e-300:
        return t1
    num = (t1 - t0) ** 2 * (d1 - d2) - (t1 - t2) ** 2 * (d1 - d0)
    tv = t1 - 0.5 * num / denom
    return min(max(tv, 0.5 * (t0 + t1)), 0.5 * (t1 + t2))


def detect_discord_zeros(
    series: list[CorrelationRecord], threshold: float = DEFAULT_ZERO_THRESHOLD
) -> list[float]:
    """Times where the discord touches zero and climbs out again.

    Candidates are below-threshold local minima with prominence above the
    arithmetic-noise scale — the rise on both sides separates a genuine
    touch both from wiggle at the noise floor and from asymptotic decay
    into the end of the window, which has no rise at all.  Isolated minima
    are refined by a three-point parabola fit; flat runs of equal minimal
    values report their two edge times.  A series that never exceeds the
    noise floor collapses to its endpoint times.
    """
    if not series:
        raise ValueError("series is empty")
    t = np.array([rec.t for rec in series])
    d = np.array([rec.discord for rec in series])
    if bool(np.all(d < _EXACT_ZERO)):
        return [float(t[0]), float(t[-1])]

    peaks, props = find_peaks(-d, prominence=_MIN_PROMINENCE, plateau_size=(1, None))
    zeros: list[float] = []
    for k, i in enumerate(peaks):
        if d[i] >= threshold:
            continue
        left = int(props["left_edges"][k])
        right = int(props["right_edges"][k])
        if right > left:
            zeros.append(float(t[left]))
            zeros.append(float(t[right]))
        else:
            zeros.append(
                _parabola_vertex(t[i - 1], t[i], t[i + 1], d[i - 1], d[i], d[i + 1])
            )
    return sorted(zeros)


def revival_amplitude(
    series: list[CorrelationRecord], threshold: float = DEFAULT_ZERO_THRESHOLD
) -> float:
    """Largest discord strictly after its first zero, in bits."""
    zeros = detect_discord_zeros(series, threshold)
    if not zeros:
        raise NoRevivalError("no discord zero in the series")
    t_first = zeros[0]
    after = [rec.discord for rec in series if rec.t > t_first]
    if not after:
        raise NoRevivalError("series ends at its first discord zero")
    return max(after)


def _format_float(x: float) -> str:
    return format(float(x), ".17g")


def format_csv_rows(
    records: list[CorrelationRecord],
    alpha_sq: float,
    r: float,
    params: ReservoirParams,
) -> list[str]:
    """Render one trajectory as CSV data lines (no header).

    ``alpha_sq`` and ``r`` may be NaN when the initial state was supplied
    directly rather than built from a family; the other columns are still
    well defined.
    """
    lines = []
    for rec in records:
        row = (
            rec.t,
            alpha_sq,
            r,
            params.lambda_ratio,
            evaluate_chi(params, rec.t),
            rec.concurrence,
            rec.mutual_info,
            rec.classical_corr,
            rec.discord,
            rec.argmax_basis.theta,
            rec.argmax_basis.phi,
        )
        lines.append(",".join(_format_float(v) for v in row))
    return lines


def run_sweep(config: SweepConfig, output: str | Path | None = None) -> Path:
    """Evaluate the sweep and write it as CSV; returns the path written.

    One row per (family, axis point, time), ordered family-major, then
    axis-major, then by time.  Floats carry 17 significant digits and rows
    end with a bare newline, so identical configs give identical bytes.
    Points are mutually independent; they are evaluated and written in a
    fixed order regardless of how they might be scheduled.
    """
    path = output if output is not None else config.output
    if path is None:
        raise ValueError("config has no output path and none was given")
    path = Path(path)

    t_grid = config.time_grid()
    lines = [",".join(CSV_COLUMNS)]
    for family in config.families:
        for axis_value in config.axis.values():
            alpha_sq, r, lambda_ratio = config.point_params(axis_value)
            scenario = StateFamily(family, alpha_sq, r)
            params = ReservoirParams(lambda_ratio=lambda_ratio)
            records = evolve_trajectory(scenario, params, t_grid, config.measured)
            lines.extend(format_csv_rows(records, alpha_sq, r, params))
    path.write_text("\n".join(lines) + "\n")
    return path


def read_sweep_csv(path: str | Path) -> tuple[tuple[str, ...], np.ndarray]:
    """Read a sweep CSV back as (column names, (rows, columns) array)."""
    with open(path, newline="") as fh:
        header = tuple(fh.readline().strip().split(","))
        data = np.loadtxt(fh, delimiter=",", ndmin=2)
    if header != CSV_COLUMNS:
        raise ValueError(f"unexpected columns {header}")
    return header, data

"""Perfect and finite-volume samplers for lattice exclusion parking."""

from ._jamlim import (  # noqa: F401
    DEFAULT_BUDGET,
    Armour,
    BoundaryCondition,
    BudgetExceededError,
    Configuration,
    CorrelationReport,
    DiscrepancyRow,
    Estimate,
    ParkingScheme,
    UniformField,
    __version__,
    armour,
    box_sites,
    correlation,
    density_box,
    density_ergodic,
    density_perfect,
    discrepancy_bound,
    exact1d,
    local_discrepancy,
    park,
    park_box,
    perfect_site,
    perfect_window,
    tail_bound,
)

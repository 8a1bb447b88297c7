"""Exact spectral analysis of fullerene isomers via their dual facet graphs."""

from .errors import (
    DegenerateInput,
    FullerspecError,
    IncompleteEnergies,
    IndexOutOfRange,
    InfeasibleN,
    InvalidSpiral,
    NegativeEnergy,
    NoCompleteClusterization,
    NoConvergence,
    NotSpiralable,
    OddDegreeRejected,
    OrderMismatch,
    ParseError,
    ResourceLimit,
    TransformDomainError,
)
from .spiral import (
    FullereneDual,
    SpiralSequence,
    canonical_spiral,
    enumerate_ipr_spirals,
    enumerate_isomers,
    face_count,
    hexagon_count,
    is_feasible,
    read_spiral_file,
    wind,
    write_spiral_file,
)

__version__ = "0.1.0"

"""Diverse committee selection: exact, matroid-based and approximate solvers."""
from .model import (
    CapExceededError,
    Committee,
    InapplicableError,
    Independent,
    Instance,
    InstanceError,
    Interval,
    Labeling,
    LayerPartition,
    SolveReport,
    is_diverse,
    make_committee,
    validate_instance,
)
from .objectives import ChamberlinCourant, KBorda, PreferenceProfile, Separable
from . import labels, solvers, matroid, analysis
from .solvers import solve, check_feasible, brute_force
from .analysis import price_of_diversity

__all__ = [
    "CapExceededError",
    "ChamberlinCourant",
    "Committee",
    "InapplicableError",
    "Independent",
    "Instance",
    "InstanceError",
    "Interval",
    "KBorda",
    "Labeling",
    "LayerPartition",
    "PreferenceProfile",
    "Separable",
    "SolveReport",
    "analysis",
    "brute_force",
    "check_feasible",
    "is_diverse",
    "labels",
    "make_committee",
    "matroid",
    "price_of_diversity",
    "solve",
    "solvers",
    "validate_instance",
]

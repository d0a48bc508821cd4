"""Exact invariants of moduli schemes of affine spherical varieties with a given weight monoid."""

from .errors import InternalError, SaturationError, ValidationError
from .moduli import AnalyzeOptions, ModuliReport, analyze
from .rootsys import GroupSpec, GroupSpecError, RootSystem, build
from .spherical import GammaContext, enumerate_sigma_G, sigma_gamma

__all__ = [
    "AnalyzeOptions",
    "GammaContext",
    "GroupSpec",
    "GroupSpecError",
    "InternalError",
    "ModuliReport",
    "RootSystem",
    "SaturationError",
    "ValidationError",
    "analyze",
    "build",
    "enumerate_sigma_G",
    "sigma_gamma",
]

__version__ = "0.1.0"

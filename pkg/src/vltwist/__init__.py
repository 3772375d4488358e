"""Exact verifier for Drinfel'd-twist quantizations of generalized Virasoro-like algebras."""

from .algebra import AlgElement, L, d1, d2, render
from .kernel import IMPLEMENTATION as KERNEL
from .parser import parse_element
from .report import Report
from .series import SeriesTensor
from .suites import SUITES, Extras, run_suite
from .twist import TwistContext, make_context

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "Extras",
    "KERNEL",
    "L",
    "Report",
    "SUITES",
    "SeriesTensor",
    "TwistContext",
    "d1",
    "d2",
    "make_context",
    "parse_element",
    "render",
    "run_suite",
]

"""Untyped lambda-calculus workbench: head reduction, numeral systems, and
refutation of predecessor candidates for a non-adequate numeral system."""

from ._engine import BACKEND
from .adequacy import (
    CandidateSurvives, NotClosed, PredecessorReport, ProbeClassification, RefutationCertificate,
    SearchResult, WrongSystem, build_probe, check_predecessor, church_pred, classify_probe, refute,
    search_predecessor,
)
from .enumeration import count_closed, enumerate_closed
from .numerals import (
    FuelExhausted, LawReport, NumeralSystem, UnknownSystem, builtin, nour_numeral, numeral,
    p_term, verify_laws,
)
from .reduction import (
    AT_HNF, NOT_HNF, HnfShape, ReductionOutcome, Solvable, Status, Strategy, Verdict, beta_eq,
    head_reduce, head_step, hnf_shape, is_solvable, normalize,
)
from .syntax import ParseError, SourceText, UnknownName, canonical, parse, parse_definitions, print_term
from .terms import (
    FALSE, OMEGA, TRUE, App, Bound, Free, Lam, Term, alpha_eq, app, free_vars, lam, pair,
    size, substitute, var,
)

__version__ = "0.1.0"

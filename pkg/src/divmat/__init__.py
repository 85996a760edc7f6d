"""Diversity-aware choice rules with exact solvers, verifiers and oracles."""
from .core import (Contract, Grid, Instance, MeritRanking, distribution_of,
                   make_instance, merit_dominates, norm)
from .errors import (BudgetExceededError, DivmatError, HypothesisViolation,
                     InvalidInputError, UnsupportedDomainError, VerificationMismatch)
from .kernels import BACKEND

__version__ = "0.1.0"

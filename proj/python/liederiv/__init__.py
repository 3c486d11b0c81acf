"""Exact derivation algebras of standard parabolic subalgebras of gl_n and sl_n."""

from ._liederiv import (
    Parabolic,
    PreconditionError,
    UsageError,
    dimension_formula,
    verify_sweep,
)

__all__ = [
    "Parabolic",
    "PreconditionError",
    "UsageError",
    "dimension_formula",
    "verify_sweep",
]

"""Isotropic subspaces of multilinear maps over finite fields."""

import json

from ._isokit import (
    CapExceeded,
    Field,
    InvariantViolation,
    PreconditionError,
    alpha_alt,
    alpha_alt_closed,
    analytic_rank,
    certificate,
    count_DT,
    fp_number,
    gauss_binom,
    gq_number,
    grassmannian,
    k0,
    random_tensor,
    run_cli,
    sigma_counts,
    turan_number,
    zero_count,
)

__all__ = [
    "CapExceeded",
    "Field",
    "InvariantViolation",
    "PreconditionError",
    "alpha_alt",
    "alpha_alt_closed",
    "analytic_rank",
    "certificate",
    "cli",
    "count_DT",
    "fp_number",
    "gauss_binom",
    "gq_number",
    "grassmannian",
    "k0",
    "random_tensor",
    "run_cli",
    "sigma_counts",
    "turan_number",
    "zero_count",
]


def cli(*args):
    """Run a CLI command and return (exit code, parsed JSON or None, stderr)."""
    code, out, err = run_cli([str(a) for a in args])
    return code, (json.loads(out) if out.strip() else None), err

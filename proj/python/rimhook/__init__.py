"""Rim-hook insertion, factorisation and the classical bijections on reverse
plane partitions.

Fillings are lists of rows (row i has lambda_i entries), cells are 1-indexed
(row, col) tuples.
"""

from ._rimhook import (
    DomainError,
    build,
    candidates,
    factorize,
    gansner_product,
    hg,
    hg_inv,
    hook_length,
    hook_product,
    insert,
    insertion_path,
    rim_hook,
    rpp_series,
    rsk,
    rsk_inv,
    suite_names,
    trace,
    trace_series,
    verify,
    xi,
    zeta,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

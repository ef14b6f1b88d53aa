"""Counting Diophantine m-tuples over prime fields.

Every count is available by independent routes (brute-force clique
search, closed formulas, fiber-by-fiber decomposition) so results can be
cross-checked exactly; `verify` runs the full identity suites.
"""

from ._core import (
    __version__,
    coeff,
    construct_tuple,
    count_tuples,
    fiber,
    is_prime,
    n2,
    n3,
    n4,
    n4_via_fibers,
    q_of_p,
    t_sets,
    tuples,
    verify,
    w1,
)

__all__ = [
    "__version__",
    "coeff",
    "construct_tuple",
    "count_tuples",
    "fiber",
    "is_prime",
    "n2",
    "n3",
    "n4",
    "n4_via_fibers",
    "q_of_p",
    "t_sets",
    "tuples",
    "verify",
    "w1",
]

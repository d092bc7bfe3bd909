"""Matching sequences: periodic cycles and mismatched parallel sequences.

A matching sequence is a list of edges (i_t, j_t) -> (i'_t, j'_t) where each
next cell sits in the column just reached, j_{t+1} = j'_t, in a different row
than the one just reached, i_{t+1} != i'_t.  Along it, column generators are
carried by h_{j'_t} = u_t h_{j_t} with u_t = g_{i'_t}^-1 g_{i_t}.

Cells are 0-based (row, col) pairs here; rules convert to 1-based.  The
searches themselves live in the kernel backends.
"""

from __future__ import annotations

from typing import Optional

from .. import kernels


def find_periodic_cycle(match, n: int, m: int, max_len: Optional[int] = None, through=None):
    """A closed matching sequence through distinct columns with a proper period.

    Returns (steps, p) where steps is the list of ((i,j),(i',j')) and the row
    pattern repeats with period p, p | k, p < k; or None.  Closing the cycle
    makes (u_p ... u_1)^(k/p) trivial, hence u_p ... u_1 trivial in a
    torsion-free group, which identifies the columns j_1 and j_{p+1}.

    A cycle can be rotated to start at any of its steps, so with ``through``
    (an edge as a pair of cells) only cycles starting there are searched.
    """
    limit = m if max_len is None else max_len
    if through is None:
        starts = [x for x, y in enumerate(match) if y >= 0]
    else:
        starts = list(through)
    return kernels.periodic_cycle(match, n, m, limit, starts)


def find_mismatched_parallel(match, n: int, m: int, max_len: Optional[int] = None):
    """Two matching sequences with one row pattern, one closed and one open.

    The closed one forces u_k ... u_1 = 1, so the open one identifies its
    first and last columns.  Returns (closed_steps, open_steps) or None.
    """
    return kernels.mismatched_parallel(match, n, m, m if max_len is None else max_len)

"""Reference implementation of the capped dense expansion (no compiled code).

Coefficients live in a numpy array of Python ints (``dtype=object``), so
the arithmetic is exact at any size.
"""

from __future__ import annotations

import numpy as np


def expand_dense(dims, factors):
    """Product of sparse factors in the ring truncated to ``dims``.

    ``dims[d]`` is one more than the largest kept exponent on axis d.
    Each factor is a list of ``(shift, coeff)`` with ``shift`` one exponent
    per axis.  Returns an object array of shape ``dims``.
    """
    dims = tuple(int(d) for d in dims)
    acc = np.zeros(dims, dtype=object)
    acc[(0,) * len(dims)] = 1
    for factor in factors:
        out = np.zeros(dims, dtype=object)
        for shift, coeff in factor:
            if any(s >= d for s, d in zip(shift, dims)):
                continue
            src = tuple(slice(0, d - s) for s, d in zip(shift, dims))
            dst = tuple(slice(s, d) for s, d in zip(shift, dims))
            out[dst] += acc[src] * coeff
        acc = out
    return acc

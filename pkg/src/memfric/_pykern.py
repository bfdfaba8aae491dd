"""Pure NumPy fallback for the hot numeric kernels.

Same contracts as the compiled twin in _ckern.pyx: compensated (Kahan)
summation in a fixed order, so results are bit-reproducible and identical
between backends. The accumulation loops run in Python here; the compiled
module exists because of them.
"""

import numpy as np

COMPILED = False


def kahan_ordered(terms):
    """Kahan sum of a 1d array in index order. Returns a float."""
    s = 0.0
    c = 0.0
    for t in np.asarray(terms, dtype=float).tolist():
        y = t - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s


def kahan_ordered_2d(terms):
    """Kahan sum of a (K, Q) array along axis 0, row order fixed.

    Per output column this performs the same scalar operation sequence as
    kahan_ordered on that column, so the result is bitwise identical to
    calling kahan_ordered per column.
    """
    terms = np.asarray(terms, dtype=float)
    s = np.zeros(terms.shape[1])
    c = np.zeros(terms.shape[1])
    for k in range(terms.shape[0]):
        y = terms[k] - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s


def conv_tail(L0_2, df, q):
    """Memory tail sum_{j=1}^{q-1} L0_2[j] * df[q-j], Kahan, descending j.

    df[i] holds f[i] - f[i-1]; df[0] is never read. Descending j adds the
    oldest (smallest, for damped kernels) contributions first.
    """
    if q < 2:
        return 0.0
    # elementwise products are order-free; only the accumulation order is
    # pinned (j = q-1 down to 1)
    prods = (L0_2[q - 1:0:-1] * df[1:q]).tolist()
    s = 0.0
    c = 0.0
    for t in prods:
        y = t - c
        tmp = s + y
        c = (tmp - s) - y
        s = tmp
    return s

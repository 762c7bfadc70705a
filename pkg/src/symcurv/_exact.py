"""Exact rational dense linear algebra on small matrices.

Everything here operates on numpy object arrays filled with
fractions.Fraction. Sizes are tiny (dims <= ~40), so plain Gaussian
elimination is fine and keeps every rank/kernel computation exact.
"""

from fractions import Fraction

import numpy as np

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build exact rational from {type(x).__name__}")


def farray(data):
    """Object ndarray of Fractions from nested ints/strings/Fractions."""
    a = np.array(data, dtype=object)
    flat = a.reshape(-1)
    for i, v in enumerate(flat):
        flat[i] = frac(v)
    return flat.reshape(a.shape)


def fzeros(shape):
    a = np.empty(shape, dtype=object)
    a[...] = ZERO
    return a


def feye(n):
    a = fzeros((n, n))
    for i in range(n):
        a[i, i] = ONE
    return a


def to_float(a):
    return np.asarray(a, dtype=float)


def is_zero(a):
    return all(v == 0 for v in np.asarray(a, dtype=object).reshape(-1))


def _rref(m):
    """Reduced row echelon form (in place on a copy). Returns (rref, pivot cols)."""
    m = np.array(m, dtype=object)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i, c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[[pr, r]] = m[[r, pr]]
        m[r] = m[r] / m[r, c]
        for i in range(rows):
            if i != r and m[i, c] != 0:
                m[i] = m[i] - m[i, c] * m[r]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(m):
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return 0
    return len(_rref(m)[1])


def nullspace(m):
    """Columns spanning the exact kernel of m (shape (ncols, nullity))."""
    m = np.asarray(m, dtype=object)
    rows, cols = m.shape
    red, pivots = _rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = fzeros((cols, len(free)))
    for k, fc in enumerate(free):
        basis[fc, k] = ONE
        for r, pc in enumerate(pivots):
            basis[pc, k] = -red[r, fc]
    return basis


def column_space(m):
    """Indices of a maximal independent subset of columns of m."""
    m = np.asarray(m, dtype=object)
    if m.size == 0:
        return []
    _, pivots = _rref(m)
    return pivots


def solve(a, b):
    """Exact solution of a x = b (b may be 1-d or 2-d). Raises on inconsistency.

    For non-square consistent systems returns the solution with free
    variables set to zero.
    """
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    vec = b.ndim == 1
    if vec:
        b = b.reshape(-1, 1)
    aug = np.concatenate([a, b], axis=1)
    red, pivots = _rref(aug)
    n = a.shape[1]
    if any(p >= n for p in pivots):
        raise ValueError("inconsistent linear system")
    x = fzeros((n, b.shape[1]))
    for r, pc in enumerate(pivots):
        x[pc] = red[r, n:]
    return x[:, 0] if vec else x


def inverse(a):
    a = np.asarray(a, dtype=object)
    n = a.shape[0]
    return solve(a, feye(n))


def fsqrt(q):
    """Exact square root of a nonnegative Fraction, or raise ValueError."""
    q = frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    if q == 0:
        return ZERO
    rn = _isqrt_exact(q.numerator)
    rd = _isqrt_exact(q.denominator)
    if rn is None or rd is None:
        raise ValueError(f"{q} is not a square of a rational")
    return Fraction(rn, rd)


def _isqrt_exact(n):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


def dot(a, b):
    """Exact matrix/vector product for object arrays."""
    return np.dot(np.asarray(a, dtype=object), np.asarray(b, dtype=object))


def commutator(a, b):
    return dot(a, b) - dot(b, a)


def trace_form(a, b):
    """Inner product <a, b> = tr(a^T b) / 2 on square matrices."""
    return Fraction(np.sum(np.asarray(a, dtype=object) * np.asarray(b, dtype=object)), 2)

"""Dense integer kernels for Demazure characters and group traces.

A homogeneous polynomial of x-degree ``d`` in ``N`` variables with coefficients in Z[q]
is an ``int64`` array of shape ``(K, Q)``: row ``r`` is the monomial of colex rank ``r``
and column ``s`` the coefficient of ``q**s``.  The rank of an exponent vector ``alpha`` is
``sum_j binom(p_j, j)`` over the stars-and-bars positions
``p_j = alpha_1 + ... + alpha_j + j - 1`` (``j = 1..N-1``).

Every kernel exists twice: an explicit loop (compiled by numba when enabled) and a
vectorized numpy fallback.  ``demazure``, ``raise_op`` and ``trace_counts`` dispatch on
the active backend.
"""

from functools import lru_cache

import numpy as np

from ._jit import HAVE_NUMBA, njit


@lru_cache(maxsize=None)
def binomial_table(size):
    table = np.zeros((size + 1, size + 1), dtype=np.int64)
    for n in range(size + 1):
        table[n, 0] = 1
        for k in range(1, n + 1):
            table[n, k] = table[n - 1, k - 1] + table[n - 1, k]
    return table


def _table_for(n_vars, degree):
    return binomial_table(degree + n_vars + 1)


def space_size(n_vars, degree):
    return int(_table_for(n_vars, degree)[degree + n_vars - 1, n_vars - 1])


def ranks_numpy(exps, binom):
    """Colex ranks of the rows of ``exps``."""
    exps = np.asarray(exps, dtype=np.int64)
    if exps.ndim == 1:
        exps = exps[None, :]
    n_vars = exps.shape[1]
    pos = np.cumsum(exps[:, :n_vars - 1], axis=1) + np.arange(n_vars - 1)
    out = np.zeros(exps.shape[0], dtype=np.int64)
    for j in range(n_vars - 1):
        out += binom[pos[:, j], j + 1]
    return out


@lru_cache(maxsize=None)
def monomial_basis(n_vars, degree):
    """Exponent vectors of x-degree ``degree`` as a ``(K, N)`` array, in rank order."""
    rows = []

    def rec(prefix, left, slots):
        if slots == 1:
            rows.append(prefix + [left])
            return
        for first in range(left, -1, -1):
            rec(prefix + [first], left - first, slots - 1)

    rec([], degree, n_vars)
    exps = np.array(rows, dtype=np.int64).reshape(len(rows), n_vars)
    order = np.empty(len(rows), dtype=np.int64)
    order[ranks_numpy(exps, _table_for(n_vars, degree))] = np.arange(len(rows))
    out = exps[order]
    out.setflags(write=False)
    return out


# --------------------------------------------------------------------------------------
# loop kernels (numba targets)
# --------------------------------------------------------------------------------------

def _rank_loop(vec, binom):
    r = 0
    s = 0
    for j in range(vec.shape[0] - 1):
        s += vec[j]
        r += binom[s + j, j + 1]
    return r


_rank_jit = njit(_rank_loop)


def _demazure_loop(coeffs, exps, i, binom):
    out = np.zeros_like(coeffs)
    tmp = np.empty(exps.shape[1], dtype=np.int64)
    for r in range(coeffs.shape[0]):
        nonzero = False
        for s in range(coeffs.shape[1]):
            if coeffs[r, s] != 0:
                nonzero = True
                break
        if not nonzero:
            continue
        a = exps[r, i]
        b = exps[r, i + 1]
        for j in range(exps.shape[1]):
            tmp[j] = exps[r, j]
        if a >= b:
            lo, hi, sign = b, a, 1
        else:
            lo, hi, sign = a + 1, b - 1, -1
        for k in range(lo, hi + 1):
            tmp[i] = k
            tmp[i + 1] = a + b - k
            t = _rank_jit(tmp, binom)
            for s in range(coeffs.shape[1]):
                out[t, s] += sign * coeffs[r, s]
    return out


def _raise_loop(coeffs, exps, mu_last, binom_out, q_out):
    n_vars = exps.shape[1]
    rows_out = binom_out[exps[0].sum() + 1 + n_vars - 1, n_vars - 1] if exps.shape[0] else 0
    out = np.zeros((rows_out, q_out), dtype=np.int64)
    tmp = np.empty(n_vars, dtype=np.int64)
    for r in range(coeffs.shape[0]):
        last = exps[r, n_vars - 1]
        shift = mu_last - last
        tmp[0] = last + 1
        for j in range(1, n_vars):
            tmp[j] = exps[r, j - 1]
        t = _rank_jit(tmp, binom_out)
        for s in range(coeffs.shape[1]):
            c = coeffs[r, s]
            if c != 0:
                if shift < 0:
                    return out, False
                out[t, s + shift] += c
    return out, True


def _trace_loop(perms, colors, monos, ell):
    n_el = perms.shape[0]
    m = perms.shape[1]
    counts = np.zeros((n_el, ell), dtype=np.int64)
    for g in range(n_el):
        for r in range(monos.shape[0]):
            fixed = True
            for j in range(m):
                if monos[r, perms[g, j]] != monos[r, j]:
                    fixed = False
                    break
            if fixed:
                phase = 0
                for j in range(m):
                    phase += colors[g, j] * monos[r, j]
                counts[g, phase % ell] += 1
    return counts


demazure_numba = njit(_demazure_loop)
raise_numba = njit(_raise_loop)
trace_numba = njit(_trace_loop)


# --------------------------------------------------------------------------------------
# numpy fallbacks
# --------------------------------------------------------------------------------------

def demazure_numpy(coeffs, exps, i, binom):
    out = np.zeros_like(coeffs)
    live = np.flatnonzero(coeffs.any(axis=1))
    if live.size == 0:
        return out
    a = exps[live, i]
    b = exps[live, i + 1]
    up = a >= b
    lo = np.where(up, b, a + 1)
    count = np.where(up, a - b + 1, b - a - 1)
    sign = np.where(up, 1, -1)
    for t in range(int(count.max(initial=0))):
        sel = count > t
        rows = live[sel]
        k = lo[sel] + t
        target = exps[rows].copy()
        target[:, i] = k
        target[:, i + 1] = a[sel] + b[sel] - k
        np.add.at(out, ranks_numpy(target, binom), sign[sel, None] * coeffs[rows])
    return out


def raise_numpy(coeffs, exps, mu_last, binom_out, q_out):
    n_vars = exps.shape[1]
    degree = int(exps[0].sum()) if exps.shape[0] else 0
    out = np.zeros((int(binom_out[degree + n_vars, n_vars - 1]), q_out), dtype=np.int64)
    live = np.flatnonzero(coeffs.any(axis=1))
    if live.size == 0:
        return out, True
    src = exps[live]
    shift = mu_last - src[:, -1]
    if (shift < 0).any():
        return out, False
    target = np.concatenate([src[:, -1:] + 1, src[:, :-1]], axis=1)
    ranks = ranks_numpy(target, binom_out)
    width = coeffs.shape[1]
    for sh in np.unique(shift):
        sel = shift == sh
        np.add.at(out[:, sh:sh + width], ranks[sel], coeffs[live[sel]])
    return out, True


def trace_numpy(perms, colors, monos, ell):
    counts = np.zeros((perms.shape[0], ell), dtype=np.int64)
    for g in range(perms.shape[0]):
        fixed = np.all(monos[:, perms[g]] == monos, axis=1)
        phase = (monos[fixed] @ colors[g]) % ell
        counts[g] = np.bincount(phase, minlength=ell)
    return counts


if HAVE_NUMBA:
    demazure, raise_op, trace_counts = demazure_numba, raise_numba, trace_numba
else:
    demazure, raise_op, trace_counts = demazure_numpy, raise_numpy, trace_numpy

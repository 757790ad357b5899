"""Pure-Python kernel for the factor-search hot loops.

Dense univariate polynomials are ascending coefficient lists.  This module
mirrors the compiled extension exactly, but on Python integers, so values of
any size are handled; the dispatcher in ``kernel`` picks whichever backend
fits the inputs.
"""

from __future__ import annotations


def mul_dense(a, b):
    """Product of two dense ascending coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return out


def eval_dense(coeffs, t):
    """Horner evaluation of a dense ascending coefficient list."""
    val = 0
    for c in reversed(coeffs):
        val = val * t + c
    return val


def div_exact_dense(p, q):
    """Quotient r with q * r == p and every coefficient of r nonnegative.

    Returns the ascending coefficient list of r, or None when no such r
    exists.  q must have a nonzero leading coefficient.
    """
    dp = len(p) - 1
    dq = len(q) - 1
    if dp < dq:
        return None
    qlead = q[dq]
    r = list(p)
    out = [0] * (dp - dq + 1)
    for i in range(dp - dq, -1, -1):
        c = r[i + dq]
        if c == 0:
            continue
        if c % qlead or c < 0:
            return None
        f = c // qlead
        out[i] = f
        for k in range(dq + 1):
            r[i + k] -= f * q[k]
    if any(r[:dq]):
        return None
    return out


def kron_degree_search(core, d, divisor_lists, lag, scale, budget):
    """Try every divisor tuple for one candidate factor degree.

    core: dense ascending coefficients of the polynomial to split.
    d: degree of the factor candidates.
    divisor_lists: for k = 0..d, the positive divisors of core evaluated at k.
    lag: (d+1) x (d+1) integer rows; lag[j] holds the coefficients of
        scale times the j-th Lagrange basis polynomial on nodes 0..d.
    scale: the common denominator making those rows integral.
    budget: remaining tuple allowance.

    Returns (found, used, completed) where found is a list of
    (factor_coeffs, cofactor_coeffs) pairs, used counts enumerated tuples,
    and completed is False when the budget ran out first.
    """
    sizes = [len(lst) for lst in divisor_lists]
    if any(s == 0 for s in sizes):
        return [], 0, True
    idx = [0] * (d + 1)
    found = []
    used = 0
    while True:
        if used >= budget:
            return found, used, False
        used += 1
        cand = _interpolate(divisor_lists, idx, lag, scale, d)
        if cand is not None:
            rem = div_exact_dense(core, cand)
            if rem is not None:
                found.append((cand, rem))
        # odometer step
        pos = d
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < sizes[pos]:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return found, used, True


def _interpolate(divisor_lists, idx, lag, scale, d):
    coeffs = []
    for i in range(d + 1):
        u = 0
        for j in range(d + 1):
            u += divisor_lists[j][idx[j]] * lag[j][i]
        if u % scale:
            return None
        c = u // scale
        if c < 0:
            return None
        coeffs.append(c)
    if coeffs[d] == 0:
        return None  # degree dropped below d; its own pass covers it
    return coeffs

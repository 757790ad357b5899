"""Complete two-factor searches over the nonnegative-coefficient semirings.

``factor_pairs`` lists every way to write a one-variable polynomial as a
product of two nonconstant polynomials.  A candidate factor of degree d is
pinned down by its values at 0..d, each of which must divide the input's
value there, so enumerating positive divisor tuples and interpolating is a
complete search.

``bit_disjoint_factor`` restricts to factor pairs whose exponent bit
supports do not meet.  With no carries between the parts, a bipartition of
the support splits every exponent uniquely, and the coefficient grid must be
an outer product; scaling a reference row recovers the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, isqrt

from . import kernel
from .bits import from_bits, tau_poly
from .errors import BudgetExceededError
from .poly import Poly1, Poly2, content, evaluate, poly_key


@dataclass(frozen=True)
class Budget:
    """Work allowances for the exhaustive searches.

    max_divisor_tuples bounds the total work of factor_pairs: interpolation
    tuples tried plus the trial-division steps spent building each divisor
    list, so huge evaluation values hit the allowance instead of stalling.
    max_bipartitions bounds the support bipartitions scanned by
    bit_disjoint_factor and caps the divisor scan of any one coefficient on
    the way.  Exceeding either raises BudgetExceededError, so an empty
    result is always a completed-search certificate.
    """

    max_divisor_tuples: int = 10_000_000
    max_bipartitions: int = 1 << 20


def _scan_cost(n):
    """Trial-division steps _divisors(n) will take."""
    return isqrt(n) + 1


def _divisors(n, cap=None):
    """Positive divisors of a positive integer, ascending.

    cap bounds the trial-division steps; a scan that would exceed it raises
    BudgetExceededError up front instead of running away on a huge value.
    """
    if cap is not None and _scan_cost(n) > cap:
        raise BudgetExceededError(
            f"divisor scan of {n} needs about {_scan_cost(n)} steps, "
            f"allowance is {cap}"
        )
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    large.reverse()
    return small + large


def _lagrange_rows(d):
    """Integer rows for interpolation on nodes 0..d.

    Row j holds the coefficients of d! times the j-th Lagrange basis
    polynomial, which is (-1)**(d-j) * C(d,j) * prod_{k != j} (x - k), an
    integer polynomial.  Returns (rows, d!).
    """
    rows = []
    for j in range(d + 1):
        poly = [1]
        for k in range(d + 1):
            if k == j:
                continue
            nxt = [0] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i] -= k * c
                nxt[i + 1] += c
            poly = nxt
        m = comb(d, j) if (d - j) % 2 == 0 else -comb(d, j)
        rows.append([m * c for c in poly])
    return rows, factorial(d)


def _dense(p: Poly1):
    out = [0] * (p.degree + 1)
    for e, c in p.terms.items():
        out[e] = c
    return out


def _sparse(coeffs) -> Poly1:
    return Poly1({e: c for e, c in enumerate(coeffs) if c})


def _ordered(q, r):
    return (q, r) if poly_key(q) <= poly_key(r) else (r, q)


def _kron_splits(core: Poly1, budget: Budget, remaining: int):
    """Unordered nonconstant splits of a primitive polynomial with a nonzero
    constant term, via the divisor-tuple search."""
    dense = _dense(core)
    n = core.degree
    found = {}
    for d in range(1, n // 2 + 1):
        vals = [evaluate(core, k) for k in range(d + 1)]
        divisor_lists = []
        for v in vals:
            cost = _scan_cost(v)
            if cost > remaining:
                raise BudgetExceededError(
                    f"divisor scan at degree {d} needs {cost} steps, "
                    f"{remaining} left of the allowance "
                    f"{budget.max_divisor_tuples}"
                )
            remaining -= cost
            divisor_lists.append(_divisors(v))
        rows, scale = _lagrange_rows(d)
        got, used, completed = kernel.kron_degree_search(
            dense, d, divisor_lists, rows, scale, remaining
        )
        remaining -= used
        if not completed:
            raise BudgetExceededError(
                f"divisor-tuple allowance {budget.max_divisor_tuples} exhausted "
                f"searching degree {d} of {core}"
            )
        for qc, rc in got:
            q, r = _sparse(qc), _sparse(rc)
            found.setdefault(tuple(sorted((poly_key(q), poly_key(r)))), _ordered(q, r))
    return list(found.values())


def factor_pairs(p: Poly1, budget: Budget = Budget()) -> list:
    """All unordered pairs of nonconstant q, r over the naturals with q*r == p.

    The shared integer content and the largest power of x move freely
    between the two sides, so every admissible distribution of both appears;
    pairs where either side degenerates to a constant are dropped.  The
    result is sorted canonically.  An empty list certifies that no such pair
    exists; running out of budget raises BudgetExceededError instead.
    """
    if not isinstance(p, Poly1):
        raise TypeError("factor_pairs takes a one-variable polynomial")
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    m = min(p.terms)
    c = content(p)
    core = Poly1({e - m: v // c for e, v in p.terms.items()})
    remaining = budget.max_divisor_tuples
    if c > 1:
        cdivs = _divisors(c, remaining)
        remaining -= _scan_cost(c)
    else:
        cdivs = (1,)
    splits = [(Poly1({0: 1}), core)]
    if core.degree >= 2:
        splits.extend(_kron_splits(core, budget, remaining))
    out = {}
    for split in splits:
        for small, big in (split, split[::-1]):
            for a in range(m + 1):
                for c1 in cdivs:
                    q = Poly1({e + a: v * c1 for e, v in small.terms.items()})
                    r = Poly1({e + m - a: v * (c // c1) for e, v in big.terms.items()})
                    if q.is_constant() or r.is_constant():
                        continue
                    pair = _ordered(q, r)
                    out[tuple(sorted((poly_key(q), poly_key(r))))] = pair
    return [out[k] for k in sorted(out)]


def _project(exp, mask, bivariate):
    if bivariate:
        return (exp[0] & mask, exp[1] & mask)
    return exp & mask


def _is_one(p):
    return p.is_constant() and p.constant_coeff() == 1


def _outer_splits(p, mask1, mask2, bivariate, cap):
    rows = {}
    for exp, cv in p.terms.items():
        a = _project(exp, mask1, bivariate)
        b = _project(exp, mask2, bivariate)
        rows.setdefault(a, {})[b] = cv
    col_keys = None
    for row in rows.values():
        keys = frozenset(row)
        if col_keys is None:
            col_keys = keys
        elif keys != col_keys:
            return []  # not a full grid, no outer product possible
    a0 = min(rows)
    b0 = min(col_keys)
    make = Poly2 if bivariate else Poly1
    results = []
    for g in _divisors(rows[a0][b0], cap):
        dvec = {}
        for b in col_keys:
            v = rows[a0][b]
            if v % g:
                dvec = None
                break
            dvec[b] = v // g
        if dvec is None:
            continue
        d0 = dvec[b0]
        cvec = {}
        for a in rows:
            v = rows[a][b0]
            if v % d0:
                cvec = None
                break
            cvec[a] = v // d0
        if cvec is None:
            continue
        if all(
            cvec[a] * dvec[b] == rows[a][b] for a in rows for b in col_keys
        ):
            p1, p2 = make(cvec), make(dvec)
            if not _is_one(p1) and not _is_one(p2):
                results.append((p1, p2))
    return results


def bit_disjoint_factor(p, budget: Budget = Budget()) -> list:
    """Unordered pairs (p1, p2), neither the constant 1, with p1*p2 == p and
    disjoint exponent bit supports.

    Works for either arity; a two-variable support pools the bits of both
    exponent components.  Scans every bipartition of the support, so the
    count 2**|support| must fit the budget.  An empty result certifies that
    no bit-disjoint pair exists.
    """
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    support = sorted(tau_poly(p))
    nparts = 1 << len(support)
    if nparts > budget.max_bipartitions:
        raise BudgetExceededError(
            f"{nparts} support bipartitions exceed the allowance "
            f"{budget.max_bipartitions}"
        )
    bivariate = isinstance(p, Poly2)
    full = from_bits(support)
    out = {}
    for pick in range(nparts):
        mask1 = from_bits(b for t, b in enumerate(support) if pick >> t & 1)
        mask2 = full ^ mask1
        for p1, p2 in _outer_splits(
            p, mask1, mask2, bivariate, budget.max_bipartitions
        ):
            out[tuple(sorted((poly_key(p1), poly_key(p2))))] = _ordered(p1, p2)
    return [out[k] for k in sorted(out)]

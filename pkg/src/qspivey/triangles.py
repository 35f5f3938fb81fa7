"""Triangle and polynomial families built by recurrence.

Classical Stirling numbers of the second kind satisfy
S(n,k) = S(n-1,k-1) + k·S(n-1,k).  The q-deformed triangle used here is

    S[n,k] = q^(k-1) · S[n-1,k-1] + [k] · S[n-1,k],

and the (q,r)-Whitney triangle with weight m >= 1 and shift r >= 0 is

    W[n,k] = q^(k-1) · W[n-1,k-1] + (m[k] + r) · W[n-1,k],

both seeded with a single 1 at n = k = 0.  The k = 0 column then comes out
as 0 for n >= 1 in the Stirling case and r^n in the Whitney case, which
matches the operator picture: S[n,k] is the coefficient of ad^k a^k in the
normal ordering of N^n, and m^k·W[n,k] is the same coefficient for
(m·N + r)^n.  That correspondence is not taken on faith; it is certified
row by row against the normal-ordering engine by
identities.verify_triangle_vs_oracle.

Row sums at x = 1 give the q-Bell numbers and (q,r)-Dowling numbers; with
x kept symbolic they give the q-Bell and (q,r)-Dowling polynomials.

All builders return nested tuples and are memoized per parameter set.
"""

from __future__ import annotations

from functools import lru_cache

from .polys import QPoly, XQPoly
from .qcalc import q_int
from .report import VerificationReport


@lru_cache(maxsize=None)
def stirling2(n_max: int) -> tuple[tuple[int, ...], ...]:
    """Rows 0..n_max of the classical Stirling-set triangle."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max == 0:
        return ((1,),)
    rows = stirling2(n_max - 1)
    last = rows[-1]
    row = []
    for k in range(n_max + 1):
        v = 0
        if k >= 1:
            v += last[k - 1]
        if k <= n_max - 1:
            v += k * last[k]
        row.append(v)
    return rows + (tuple(row),)


def bell(n_max: int) -> tuple[int, ...]:
    """Bell numbers B_0..B_n_max as Stirling row sums."""
    return tuple(sum(row) for row in stirling2(n_max))


@lru_cache(maxsize=None)
def q_stirling2(n_max: int) -> tuple[tuple[QPoly, ...], ...]:
    """Rows 0..n_max of the q-Stirling triangle."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max == 0:
        return ((QPoly.one(),),)
    rows = q_stirling2(n_max - 1)
    last = rows[-1]
    row = []
    for k in range(n_max + 1):
        v = QPoly.zero()
        if k >= 1:
            v = v + last[k - 1] * QPoly.monomial(k - 1)
        if k <= n_max - 1:
            v = v + last[k] * q_int(k)
        row.append(v)
    return rows + (tuple(row),)


def q_bell_poly(n: int) -> XQPoly:
    """The q-Bell polynomial: row n of the q-Stirling triangle read in x."""
    return XQPoly(q_stirling2(n)[n])


@lru_cache(maxsize=None)
def qr_whitney(n_max: int, m: int, r: int) -> tuple[tuple[QPoly, ...], ...]:
    """Rows 0..n_max of the (q,r)-Whitney triangle for weight m, shift r."""
    if m < 1:
        raise ValueError("weight m must be >= 1")
    if r < 0:
        raise ValueError("shift r must be nonnegative")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max == 0:
        return ((QPoly.one(),),)
    rows = qr_whitney(n_max - 1, m, r)
    last = rows[-1]
    row = []
    for k in range(n_max + 1):
        v = QPoly.zero()
        if k >= 1:
            v = v + last[k - 1] * QPoly.monomial(k - 1)
        if k <= n_max - 1:
            v = v + last[k] * (q_int(k) * m + r)
        row.append(v)
    return rows + (tuple(row),)


def qr_dowling_poly(n: int, m: int, r: int) -> XQPoly:
    """The (q,r)-Dowling polynomial: Whitney row n read in x."""
    return XQPoly(qr_whitney(n, m, r)[n])


def r_whitney(n_max: int, m: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Classical r-Whitney rows, obtained by evaluating the q-rows at q = 1."""
    return tuple(
        tuple(c.eval_int(1) for c in row) for row in qr_whitney(n_max, m, r)
    )


def r_dowling(n_max: int, m: int, r: int) -> tuple[int, ...]:
    """Classical r-Dowling numbers as r-Whitney row sums."""
    return tuple(sum(row) for row in r_whitney(n_max, m, r))


@lru_cache(maxsize=None)
def r_whitney_classic(n_max: int, m: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Independent classical recurrence W(n,k) = W(n-1,k-1) + (mk+r)·W(n-1,k).

    Built directly over the integers, never touching the q-triangle; used
    to cross-check the q = 1 specialization.
    """
    if m < 1:
        raise ValueError("weight m must be >= 1")
    if r < 0 or n_max < 0:
        raise ValueError("arguments must be nonnegative")
    if n_max == 0:
        return ((1,),)
    rows = r_whitney_classic(n_max - 1, m, r)
    last = rows[-1]
    row = []
    for k in range(n_max + 1):
        v = 0
        if k >= 1:
            v += last[k - 1]
        if k <= n_max - 1:
            v += (m * k + r) * last[k]
        row.append(v)
    return rows + (tuple(row),)


def whitney_special_check(k_max: int, m: int) -> VerificationReport:
    """Certify W_{m,0}[k,i] == m^(k-i) · S[k,i] for all i <= k <= k_max."""
    tri = qr_whitney(k_max, m, 0)
    qs = q_stirling2(k_max)
    lhs = [[c.to_json() for c in row] for row in tri]
    rhs = [
        [(qs[k][i] * (m ** (k - i))).to_json() for i in range(k + 1)]
        for k in range(k_max + 1)
    ]
    return VerificationReport(
        identity="whitney-special",
        variant="n/a",
        params={"k": k_max, "m": m},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )

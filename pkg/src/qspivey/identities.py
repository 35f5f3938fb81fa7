"""Verifiers for the Spivey-type expansion identities and their q-analogues.

Each verifier recomputes both sides of one identity instance from scratch
and returns a VerificationReport carrying both sides verbatim.  Three of
the identities exist in two printed shapes, selected by ``variant``:

  result1 (q-Bell polynomials)
      literal:   the summand carries the q-falling factor [x][x-1]..[x-j+1]
      corrected: the summand carries x^j instead

  result2 ((q,r)-Dowling polynomials)
      literal:   the summand carries an extra m^j and the q-falling factor
      corrected: no m^j, and x^j instead of the q-falling factor

  result3 (classical r-Dowling numbers, the q = 1, x = 1 shadow)
      literal:   the summand carries an extra m^j
      corrected: no m^j

The corrected shapes are the ones the operator algebra produces; the
verifiers treat both shapes as data and let the arithmetic decide.

Identities in x are checked at integer substitutions.  Both sides are
polynomials in x of degree at most n plus the shift, so agreement at
degree + 1 distinct points is agreement as polynomials; for the corrected
shapes verify_result1_xpoly and verify_result2_xpoly also compare the two
sides directly as XQPoly values.
"""

from __future__ import annotations

from . import triangles
from .boson import NormalForm, coherent_truncated
from .polys import QPoly, XQPoly
from .qcalc import binom, falling_classic, q_falling, q_int
from .report import VerificationReport

_VARIANTS = ("literal", "corrected")


def _enc_ints(vs) -> list[str]:
    return [str(v) for v in vs]


def _check_variant(variant: str) -> None:
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}, got {variant!r}")


def verify_stirling_def(n: int) -> VerificationReport:
    """t^n == sum_k S(n,k) · t(t-1)..(t-k+1), checked at t = 0..n.

    n + 1 points pin down a degree-n polynomial, so passing here certifies
    the defining expansion of the classical triangle as polynomials in t.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = triangles.stirling2(n)[n]
    lhs = [t**n for t in range(n + 1)]
    rhs = [
        sum(row[k] * falling_classic(t, k) for k in range(n + 1))
        for t in range(n + 1)
    ]
    return VerificationReport(
        "stirling-def", "n/a", {"n": n}, _enc_ints(lhs), _enc_ints(rhs), lhs == rhs
    )


def verify_bell_recurrence(n: int) -> VerificationReport:
    """Row sums B_i against the binomial recurrence, for all i <= n.

    The recurrence sequence is seeded with 1 and built only from its own
    earlier values, so the two routes are independent.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    sums = list(triangles.bell(n))
    rec = [1]
    for i in range(n):
        rec.append(sum(binom(i, k) * rec[k] for k in range(i + 1)))
    return VerificationReport(
        "bell-rec", "n/a", {"n": n}, _enc_ints(sums), _enc_ints(rec), sums == rec
    )


def verify_spivey(n: int, mshift: int) -> VerificationReport:
    """B_{n+mshift} == sum_j sum_k j^(n-k) · S(mshift,j) · C(n,k) · B_k.

    0^0 counts as 1, which is what makes the j = 0 column collapse
    correctly at k = n.
    """
    if n < 0 or mshift < 0:
        raise ValueError("arguments must be nonnegative")
    bells = triangles.bell(n + mshift)
    srow = triangles.stirling2(mshift)[mshift]
    lhs = bells[n + mshift]
    rhs = 0
    for j in range(mshift + 1):
        if not srow[j]:
            continue
        for k in range(n + 1):
            rhs += j ** (n - k) * srow[j] * binom(n, k) * bells[k]
    return VerificationReport(
        "spivey",
        "n/a",
        {"n": n, "mshift": mshift},
        str(lhs),
        str(rhs),
        lhs == rhs,
    )


def verify_katriel(n: int, l: int) -> VerificationReport:
    """q-Bell numbers: B_{n+l} == sum_{j,k} S[l,j] C(n,k) [j]^(n-k) q^(jk) B_k."""
    if n < 0 or l < 0:
        raise ValueError("arguments must be nonnegative")
    srow = triangles.q_stirling2(l)[l]
    qbell = [triangles.q_bell_poly(k).eval_x(1) for k in range(n + 1)]
    lhs = triangles.q_bell_poly(n + l).eval_x(1)
    rhs = QPoly.zero()
    for j in range(l + 1):
        if not srow[j]:
            continue
        for k in range(n + 1):
            rhs = rhs + (
                srow[j]
                * binom(n, k)
                * (q_int(j) ** (n - k))
                * QPoly.monomial(j * k)
                * qbell[k]
            )
    return VerificationReport(
        "katriel",
        "n/a",
        {"n": n, "l": l},
        lhs.to_json(),
        rhs.to_json(),
        lhs == rhs,
    )


def verify_result1(n: int, mshift: int, x: int, variant: str) -> VerificationReport:
    """q-Bell polynomials at integer x, in the literal or corrected shape.

    Both shapes share the summand S[mshift,j] · C(n,k) · [j]^(n-k) · q^(jk)
    · B_k(x); they differ in the final x-dependent factor (see the module
    docstring).
    """
    _check_variant(variant)
    if n < 0 or mshift < 0 or x < 0:
        raise ValueError("arguments must be nonnegative")
    srow = triangles.q_stirling2(mshift)[mshift]
    bx = [triangles.q_bell_poly(k).eval_x(x) for k in range(n + 1)]
    lhs = triangles.q_bell_poly(n + mshift).eval_x(x)
    rhs = QPoly.zero()
    for j in range(mshift + 1):
        if not srow[j]:
            continue
        xfactor = q_falling(x, j) if variant == "literal" else QPoly.const(x**j)
        if not xfactor:
            continue
        for k in range(n + 1):
            rhs = rhs + (
                srow[j]
                * binom(n, k)
                * (q_int(j) ** (n - k))
                * QPoly.monomial(j * k)
                * bx[k]
                * xfactor
            )
    return VerificationReport(
        "result1",
        variant,
        {"n": n, "mshift": mshift, "x": x},
        lhs.to_json(),
        rhs.to_json(),
        lhs == rhs,
    )


def verify_result1_xpoly(n: int, mshift: int) -> VerificationReport:
    """The corrected q-Bell expansion compared symbolically in x."""
    if n < 0 or mshift < 0:
        raise ValueError("arguments must be nonnegative")
    srow = triangles.q_stirling2(mshift)[mshift]
    lhs = triangles.q_bell_poly(n + mshift)
    rhs = XQPoly.zero()
    for j in range(mshift + 1):
        if not srow[j]:
            continue
        xj = XQPoly.monomial(j)
        for k in range(n + 1):
            c = srow[j] * binom(n, k) * (q_int(j) ** (n - k)) * QPoly.monomial(j * k)
            rhs = rhs + triangles.q_bell_poly(k) * c * xj
    return VerificationReport(
        "result1-poly",
        "corrected",
        {"n": n, "mshift": mshift},
        lhs.to_json(),
        rhs.to_json(),
        lhs == rhs,
    )


def verify_result2(
    n: int, l: int, m: int, r: int, x: int, variant: str
) -> VerificationReport:
    """(q,r)-Dowling polynomials at integer x, literal or corrected shape.

    The shared summand is W[l,j] · C(n,k) · (m[j]+r)^(n-k) · q^(jk) ·
    D_{m,0}(k; x); the literal shape additionally multiplies by m^j and the
    q-falling factor, the corrected shape by x^j only.
    """
    _check_variant(variant)
    if m < 1:
        raise ValueError("weight m must be >= 1")
    if n < 0 or l < 0 or r < 0 or x < 0:
        raise ValueError("arguments must be nonnegative")
    wrow = triangles.qr_whitney(l, m, r)[l]
    d0 = [triangles.qr_dowling_poly(k, m, 0).eval_x(x) for k in range(n + 1)]
    lhs = triangles.qr_dowling_poly(n + l, m, r).eval_x(x)
    rhs = QPoly.zero()
    for j in range(l + 1):
        if not wrow[j]:
            continue
        if variant == "literal":
            xfactor = q_falling(x, j) * (m**j)
        else:
            xfactor = QPoly.const(x**j)
        if not xfactor:
            continue
        base = q_int(j) * m + r
        for k in range(n + 1):
            rhs = rhs + (
                wrow[j]
                * binom(n, k)
                * (base ** (n - k))
                * QPoly.monomial(j * k)
                * d0[k]
                * xfactor
            )
    return VerificationReport(
        "result2",
        variant,
        {"n": n, "l": l, "m": m, "r": r, "x": x},
        lhs.to_json(),
        rhs.to_json(),
        lhs == rhs,
    )


def verify_result2_xpoly(n: int, l: int, m: int, r: int) -> VerificationReport:
    """The corrected (q,r)-Dowling expansion compared symbolically in x."""
    if m < 1:
        raise ValueError("weight m must be >= 1")
    if n < 0 or l < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    wrow = triangles.qr_whitney(l, m, r)[l]
    lhs = triangles.qr_dowling_poly(n + l, m, r)
    rhs = XQPoly.zero()
    for j in range(l + 1):
        if not wrow[j]:
            continue
        xj = XQPoly.monomial(j)
        base = q_int(j) * m + r
        for k in range(n + 1):
            c = wrow[j] * binom(n, k) * (base ** (n - k)) * QPoly.monomial(j * k)
            rhs = rhs + triangles.qr_dowling_poly(k, m, 0) * c * xj
    return VerificationReport(
        "result2-poly",
        "corrected",
        {"n": n, "l": l, "m": m, "r": r},
        lhs.to_json(),
        rhs.to_json(),
        lhs == rhs,
    )


def verify_result3(n: int, l: int, m: int, r: int, variant: str) -> VerificationReport:
    """Classical r-Dowling numbers, the q = 1, x = 1 shadow of result2."""
    _check_variant(variant)
    if m < 1:
        raise ValueError("weight m must be >= 1")
    if n < 0 or l < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    wrow = triangles.r_whitney(l, m, r)[l]
    d0 = triangles.r_dowling(n, m, 0)
    lhs = triangles.r_dowling(n + l, m, r)[n + l]
    rhs = 0
    for j in range(l + 1):
        if not wrow[j]:
            continue
        scale = m**j if variant == "literal" else 1
        for k in range(n + 1):
            rhs += scale * wrow[j] * binom(n, k) * (m * j + r) ** (n - k) * d0[k]
    return VerificationReport(
        "result3",
        variant,
        {"n": n, "l": l, "m": m, "r": r},
        str(lhs),
        str(rhs),
        lhs == rhs,
    )


def verify_lemma(
    which: str, k: int, m: int = 0, r: int = 0, cap: int = 0
) -> VerificationReport:
    """Operator-level ground truths used by everything above.

    lem1: the q^k-twisted commutator of a with ad^k is [k]·ad^(k-1).
    lem2: a^k acts on the truncated coherent vector as multiplication by
          x^k, compared on the cap - k window where the truncation is
          faithful.
    lem3: N·ad^k == ad^k·([k] + q^k·N).
    lem4: (m·N + r)·ad^k == ad^k·(m[k] + r + m·q^k·N).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    ad = NormalForm.raising()
    if which == "lem1":
        if k < 1:
            raise ValueError("lem1 needs k >= 1")
        lhs_nf = NormalForm.lowering().q_commutator(ad**k, k)
        rhs_nf = (ad ** (k - 1)) * q_int(k)
        return VerificationReport(
            "lem1", "n/a", {"k": k}, lhs_nf.to_json(), rhs_nf.to_json(), lhs_nf == rhs_nf
        )
    if which == "lem2":
        if cap < k:
            raise ValueError("lem2 needs cap >= k")
        lowered = (NormalForm.lowering() ** k).apply(coherent_truncated(cap))
        lhs_vec = lowered.truncated(cap - k)
        rhs_vec = coherent_truncated(cap - k).scale(XQPoly.monomial(k))
        return VerificationReport(
            "lem2",
            "n/a",
            {"k": k, "cap": cap},
            [a.to_json() for a in lhs_vec.amps],
            [a.to_json() for a in rhs_vec.amps],
            lhs_vec == rhs_vec,
        )
    if which == "lem3":
        lhs_nf = NormalForm.number() * (ad**k)
        rhs_nf = (ad**k) * (
            NormalForm.identity() * q_int(k)
            + NormalForm.number() * QPoly.monomial(k)
        )
        return VerificationReport(
            "lem3", "n/a", {"k": k}, lhs_nf.to_json(), rhs_nf.to_json(), lhs_nf == rhs_nf
        )
    if which == "lem4":
        if m < 0 or r < 0:
            raise ValueError("m and r must be nonnegative")
        op = NormalForm.number() * m + NormalForm.identity() * r
        lhs_nf = op * (ad**k)
        rhs_nf = (ad**k) * (
            NormalForm.identity() * (q_int(k) * m + r)
            + NormalForm.number() * (QPoly.monomial(k) * m)
        )
        return VerificationReport(
            "lem4",
            "n/a",
            {"k": k, "m": m, "r": r},
            lhs_nf.to_json(),
            rhs_nf.to_json(),
            lhs_nf == rhs_nf,
        )
    raise ValueError(f"unknown lemma {which!r}")


def verify_triangle_vs_oracle(
    kind: str, n: int, m: int = 0, r: int = 0
) -> VerificationReport:
    """Row n of a recurrence-built triangle against normal-ordering coefficients.

    For the q-Stirling triangle, S[n,k] must be the (k,k) coefficient of
    N^n.  For the (q,r)-Whitney triangle, m^k·W[n,k] must be the (k,k)
    coefficient of (m·N + r)^n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if kind == "q-stirling":
        row = triangles.q_stirling2(n)[n]
        op = NormalForm.number() ** n
        lhs = [c.to_json() for c in row]
        rhs = [op.coefficient(k, k).to_json() for k in range(n + 1)]
        params = {"kind": kind, "n": n}
    elif kind == "qr-whitney":
        if m < 1:
            raise ValueError("weight m must be >= 1")
        if r < 0:
            raise ValueError("shift r must be nonnegative")
        row = triangles.qr_whitney(n, m, r)[n]
        op = (NormalForm.number() * m + NormalForm.identity() * r) ** n
        lhs = [(c * (m**k)).to_json() for k, c in enumerate(row)]
        rhs = [op.coefficient(k, k).to_json() for k in range(n + 1)]
        params = {"kind": kind, "n": n, "m": m, "r": r}
    else:
        raise ValueError(f"unknown triangle kind {kind!r}")
    return VerificationReport(
        "triangle-oracle", "n/a", params, lhs, rhs, lhs == rhs
    )


def run_case(identity: str, variant: str | None, params: dict) -> VerificationReport:
    """Dispatch one verification by identity tag; used by the CLI sweeps."""
    p = params
    if identity == "spivey":
        return verify_spivey(p["n"], p["mshift"])
    if identity == "bell-rec":
        return verify_bell_recurrence(p["n"])
    if identity == "stirling-def":
        return verify_stirling_def(p["n"])
    if identity == "result1":
        return verify_result1(p["n"], p["mshift"], p["x"], variant or "corrected")
    if identity == "katriel":
        return verify_katriel(p["n"], p["l"])
    if identity == "result2":
        return verify_result2(
            p["n"], p["l"], p["m"], p["r"], p["x"], variant or "corrected"
        )
    if identity == "result3":
        return verify_result3(p["n"], p["l"], p["m"], p["r"], variant or "corrected")
    if identity in ("lem1", "lem2", "lem3", "lem4"):
        return verify_lemma(
            identity,
            p["k"],
            m=p.get("m", 0),
            r=p.get("r", 0),
            cap=p.get("cap", 0),
        )
    if identity == "triangle-oracle":
        return verify_triangle_vs_oracle(
            p["kind"], p["n"], m=p.get("m", 0), r=p.get("r", 0)
        )
    if identity == "whitney-special":
        return triangles.whitney_special_check(p["k"], p["m"])
    raise ValueError(f"unknown identity {identity!r}")

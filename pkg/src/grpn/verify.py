"""Identity verifiers: each checks one theorem or lemma as an exact, truncated
computation and returns a structured pass/fail report.

Every verifier compares two independently computed sides (enumeration and
statistics on one side, algebra on the other) and reports the first
discrepancy coefficient pair when the comparison fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Optional

from . import chars, coinv, core, tabx
from .core import ColoredPerm, GroupParams
from .exactnum import Cyclotomic
from .partitions import dominance_leq, partitions_in_box
from .poly import (
    RATIONAL,
    SparsePoly,
    TruncationContext,
    cyclotomic_ring,
    geometric_inverse,
    q_integer,
)

DEFAULT_T_CAP = 8
DEFAULT_DEGREE_CAP = 6


@dataclass
class VerificationReport:
    identity_name: str
    params: dict
    caps: dict
    passed: bool
    first_discrepancy: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "identity": self.identity_name,
            "params": self.params,
            "caps": self.caps,
            "pass": self.passed,
            "first_discrepancy": self.first_discrepancy,
            "details": self.details,
        }


def _params_dict(params: GroupParams) -> dict:
    return {"r": params.r, "p": params.p, "n": params.n}


def _coeff_str(c) -> str:
    return str(c)


def _compare(name: str, params: dict, caps: dict, lhs: SparsePoly, rhs: SparsePoly,
             details: Optional[dict] = None) -> VerificationReport:
    """Exact coefficient-by-coefficient comparison with first-discrepancy reporting."""
    diff_keys = sorted(set(lhs.terms) | set(rhs.terms))
    for key in diff_keys:
        a, b = lhs.coeff(key), rhs.coeff(key)
        if a != b:
            return VerificationReport(
                name, params, caps, False,
                first_discrepancy={
                    "exponent": list(key),
                    "lhs": _coeff_str(a),
                    "rhs": _coeff_str(b),
                },
                details=details or {},
            )
    return VerificationReport(name, params, caps, True, details=details or {})


# -- the Hilbert-series product formula -------------------------------------------------


def verify_fmaj_product(params: GroupParams) -> VerificationReport:
    """sum over Gamma of q^fmaj == [nd]_q * prod_(i<n) [ri]_q, exactly."""
    terms: dict[tuple[int, ...], int] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        k = (core.stats(gamma).fmaj,)
        terms[k] = terms.get(k, 0) + 1
    lhs = SparsePoly(1, terms)
    rhs = q_integer(params.n * params.d)
    for i in range(1, params.n):
        rhs = rhs * q_integer(params.r * i)
    report = _compare(
        "fmaj-product", _params_dict(params), {}, lhs, rhs,
        details={"gamma_size": params.gamma_size(), "value_at_1": str(lhs.evaluate([1]))},
    )
    report.details["size_formula_ok"] = lhs.evaluate([1]) == params.gamma_size()
    report.passed = report.passed and report.details["size_formula_ok"]
    return report


# -- the multigraded Hilbert-series identity ----------------------------------------------


def _multinomial_by_multiplicity(n: int, lam: tuple[int, ...]) -> int:
    """Number of monomials in n variables with exponent partition lam."""
    padded = list(lam) + [0] * (n - len(lam))
    count = factorial(n)
    for j in set(padded):
        count //= factorial(padded.count(j))
    return count


def verify_pri(params: GroupParams, cap: int = DEFAULT_DEGREE_CAP,
               strict_paper: bool = False) -> VerificationReport:
    """Multigraded monomial count vs descent-basis decomposition, up to part size cap.

    LHS: sum over partitions with at most n parts, each part <= cap, of the
    multinomial coefficient times q^lambda.  RHS: the Gamma numerator times the
    truncated inverses of (1 - q_1^d..q_n^d) and prod (1 - q_1^r..q_i^r).
    With strict_paper the numerator stops at i = n-1, as displayed in the
    source identity; that variant fails whenever d > 1.
    """
    n = params.n
    ctx = TruncationContext(var=0, var_cap=cap)
    lhs_terms: dict[tuple[int, ...], int] = {}
    for lam in partitions_in_box(n, cap):
        key = tuple(list(lam) + [0] * (n - len(lam)))
        lhs_terms[key] = _multinomial_by_multiplicity(n, lam)
    lhs = SparsePoly(n, lhs_terms)

    upper = n - 1 if strict_paper else n
    num_terms: dict[tuple[int, ...], int] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        f = core.stats(gamma).f_vector
        key = [0] * n
        for i in range(upper):
            key[i] = f[i]
        key = tuple(key)
        num_terms[key] = num_terms.get(key, 0) + 1
    rhs = SparsePoly(n, num_terms).truncate(ctx)
    rhs = rhs.mul(geometric_inverse(_one_minus(n, [params.d] * n), ctx), ctx)
    for i in range(1, n):
        factor = _one_minus(n, [params.r] * i + [0] * (n - i))
        rhs = rhs.mul(geometric_inverse(factor, ctx), ctx)
    return _compare(
        "pri", _params_dict(params), {"cap": cap, "strict_paper": strict_paper}, lhs, rhs
    )


def _one_minus(nvars: int, exps: list[int]) -> SparsePoly:
    return SparsePoly(nvars, {(0,) * nvars: 1, tuple(exps): -1})


# -- Carlitz identities --------------------------------------------------------------------


def verify_carlitz(params: GroupParams, tcap: int = DEFAULT_T_CAP,
                   variant: str = "H") -> VerificationReport:
    """sum_k [k+1]_q^n t^k against the (fdes, fmaj) generating function.

    variant "H" sums over Gamma (the statistics carrier for G(r,p,n)) with
    denominator degrees r, 2r, ..., (n-1)r, nd; variant "G" sums over all of
    G(r,n) with denominator degrees r, 2r, ..., nr.
    """
    if variant not in ("H", "G"):
        raise ValueError(f"unknown variant {variant!r}")
    n, r, d = params.n, params.r, params.d
    ctx = TruncationContext(var=0, var_cap=tcap)

    lhs = SparsePoly.zero(2)
    for k in range(tcap + 1):
        qpoly = q_integer(k + 1) ** n
        lhs = lhs + SparsePoly(2, {(k, e[0]): c for e, c in qpoly.terms.items()})

    which = "Gamma" if variant == "H" else "G"
    num_terms: dict[tuple[int, int], int] = {}
    for g in core.enumerate_elements(params, which):
        s = core.stats(g)
        key = (s.fdes, s.fmaj)
        num_terms[key] = num_terms.get(key, 0) + 1
    rhs = SparsePoly(2, num_terms).truncate(ctx)

    factors = [(1, 0)]
    if variant == "H":
        factors += [(r, r * i) for i in range(1, n)] + [(d, n * d)]
    else:
        factors += [(r, r * i) for i in range(1, n + 1)]
    for a, b in factors:
        rhs = rhs.mul(geometric_inverse(_one_minus(2, [a, b]), ctx), ctx)
    return _compare(
        f"carlitz-{variant.lower()}", _params_dict(params), {"tcap": tcap}, lhs, rhs,
        details={"set": which},
    )


# -- Stanley's generalized formula ------------------------------------------------------------


def verify_stanley(shape: tabx.RPartition, bound: int) -> VerificationReport:
    """Entry-partition generating function of bounded reverse tableaux vs the
    standard-tableau side of the bijection, both finite and exact."""
    r = len(shape)
    n = tabx.shape_total(shape)
    lhs_terms: dict[tuple[int, ...], int] = {}
    for t in tabx.enumerate_rssyt(shape, bound):
        theta = tabx.entries_partition(t)
        key = tuple(v - 1 for v in theta)
        lhs_terms[key] = lhs_terms.get(key, 0) + 1
    lhs = SparsePoly(n, lhs_terms)

    rhs_terms: dict[tuple[int, ...], int] = {}
    for t in tabx.enumerate_syt(shape):
        f = tabx.tableau_stats(t).f_vector
        budget = (bound - 1 - f[0]) // r if bound - 1 >= f[0] else -1
        for total in range(budget + 1):
            for delta in _compositions(total, n):
                suffix = list(itertools.accumulate(reversed(delta)))[::-1]
                key = tuple(f[i] + r * suffix[i] for i in range(n))
                rhs_terms[key] = rhs_terms.get(key, 0) + 1
    rhs = SparsePoly(n, rhs_terms)
    return _compare(
        "stanley",
        {"shape": [list(c) for c in shape], "r": r},
        {"bound": bound},
        lhs,
        rhs,
    )


def _compositions(total: int, slots: int):
    """All weak compositions of total into slots parts."""
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


# -- the two graded traces ---------------------------------------------------------------------


def verify_lemma_ser(params: GroupParams, element: Optional[ColoredPerm] = None,
                     cap: int = DEFAULT_DEGREE_CAP) -> VerificationReport:
    """Brute-force monomial trace on C[x] vs coinvariant trace times the
    invariant-ring series, through total degree cap, for one h or all of H."""
    n = params.n
    ctx = TruncationContext(total_cap=cap)
    elements = [element] if element is not None else core.enumerate_elements(params, "H")
    checked = 0
    for h in elements:
        lhs = coinv.trace_polynomial_ring(h, cap)
        rhs = coinv.trace_coinvariant_algebra(h).truncate(ctx)
        rhs = rhs.mul(geometric_inverse(
            _one_minus(n, [params.d] * n).to_ring(rhs.ring), ctx), ctx)
        for i in range(1, n):
            factor = _one_minus(n, [params.r] * i + [0] * (n - i)).to_ring(rhs.ring)
            rhs = rhs.mul(geometric_inverse(factor, ctx), ctx)
        report = _compare("ser", _params_dict(params), {"cap": cap}, lhs, rhs)
        if not report.passed:
            report.details["element"] = core.format_window(h)
            return report
        checked += 1
    return VerificationReport(
        "ser", _params_dict(params), {"cap": cap}, True,
        details={"elements_checked": checked},
    )


# -- shift lemmas --------------------------------------------------------------------------------


def verify_shift_lemmas(max_r: int = 4, max_tableau_total: int = 5,
                        max_element_n: int = 4) -> VerificationReport:
    """f_i(T shifted) = f_i(T) + 1 when n avoids the last component, and
    fdes(g^i) = fdes(g) + i, fmaj(g^i) = fmaj(g) + n*i on G_0."""
    tableaux_checked = 0
    for r in range(1, max_r + 1):
        for total in range(1, max_tableau_total + 1):
            for shape in tabx.enumerate_r_partitions(r, total):
                for t in tabx.enumerate_syt(shape):
                    if t.position(total)[0] == r - 1:
                        continue  # the lemma requires n outside the last component
                    f0 = tabx.tableau_stats(t).f_vector
                    f1 = tabx.tableau_stats(tabx.shift_tableau(t)).f_vector
                    tableaux_checked += 1
                    if any(b != a + 1 for a, b in zip(f0, f1)):
                        return VerificationReport(
                            "shift-lemmas", {}, {"max_r": max_r}, False,
                            first_discrepancy={
                                "tableau": t.to_json(), "f": list(f0), "f_shifted": list(f1),
                            },
                        )
    elements_checked = 0
    for r in range(1, max_r + 1):
        for n in range(1, max_element_n + 1):
            params = GroupParams(r, 1, n)
            for g in core.enumerate_elements(params, "G"):
                if g.colors[-1] != 0:
                    continue
                s = core.stats(g)
                for i in range(r):
                    si = core.stats(g.shift(i))
                    elements_checked += 1
                    if si.fdes != s.fdes + i or si.fmaj != s.fmaj + n * i:
                        return VerificationReport(
                            "shift-lemmas", {}, {"max_r": max_r}, False,
                            first_discrepancy={
                                "element": core.format_window(g), "i": i,
                                "fdes": si.fdes, "fmaj": si.fmaj,
                            },
                        )
    return VerificationReport(
        "shift-lemmas", {}, {
            "max_r": max_r, "max_tableau_total": max_tableau_total,
            "max_element_n": max_element_n,
        },
        True,
        details={"tableaux_checked": tableaux_checked, "elements_checked": elements_checked},
    )


# -- regular representation and the level decomposition -------------------------------------------


def verify_regular_and_decom(params: GroupParams) -> VerificationReport:
    """(a) descent classes at level k partition the fmaj = k stratum of Gamma;
    (b) the descent characters sum to the regular character of H;
    (c) straightening is triangular in dominance order."""
    from .partitions import dominance_leq

    classes = coinv.descent_classes(params)
    by_level: dict[int, int] = {}
    for dc, members in classes.items():
        lam = coinv.lambda_DC(dc, params)
        if lam != core.stats(members[0]).f_vector:
            return VerificationReport(
                "regular", _params_dict(params), {}, False,
                first_discrepancy={"class": str(dc), "lambda": list(lam)},
            )
        level = dc.level(params.r)
        by_level[level] = by_level.get(level, 0) + len(members)
    fmaj_counts: dict[int, int] = {}
    for gamma in core.enumerate_elements(params, "Gamma"):
        k = core.stats(gamma).fmaj
        fmaj_counts[k] = fmaj_counts.get(k, 0) + 1
    if by_level != fmaj_counts:
        return VerificationReport(
            "regular", _params_dict(params), {}, False,
            first_discrepancy={"levels": by_level, "fmaj_counts": fmaj_counts},
        )

    table = coinv.rdc_character_table(params)
    e = core.identity(params)
    order = params.subgroup_order()
    for h in core.enumerate_elements(params, "H"):
        total = Cyclotomic.zero(params.r)
        for char in table.values():
            total = total + char[h]
        expected = order if h == e else 0
        if total != expected:
            return VerificationReport(
                "regular", _params_dict(params), {}, False,
                first_discrepancy={
                    "element": core.format_window(h),
                    "lhs": str(total), "rhs": str(expected),
                },
            )

    for h in core.enumerate_elements(params, "H"):
        for gamma in core.enumerate_elements(params, "Gamma"):
            _, image = coinv.act_monomial(h, coinv.descent_basis_monomial(gamma))
            lam = coinv.exponent_partition(image)
            for u in coinv.straighten(image, params):
                lam_u = coinv.exponent_partition(coinv.descent_basis_monomial(u))
                if not dominance_leq(lam_u, lam):
                    return VerificationReport(
                        "regular", _params_dict(params), {}, False,
                        first_discrepancy={
                            "h": core.format_window(h), "gamma": core.format_window(gamma),
                            "u": core.format_window(u),
                        },
                    )
    return VerificationReport(
        "regular", _params_dict(params), {}, True,
        details={"classes": len(classes), "order": order},
    )


# -- Theorem main and the Stembridge corollary ----------------------------------------------------


def verify_theorem_main(params: GroupParams) -> VerificationReport:
    report = chars.theorem_main_report(params)
    first = None
    for row in report.rows:
        if not row.equal:
            first = {
                "orbit": [list(c) for c in row.shape],
                "descents": list(row.descent_class.des),
                "colors": list(row.descent_class.colors),
                "lhs": str(row.lhs),
                "rhs": row.rhs,
                "integral": row.integral,
            }
            break
    return VerificationReport(
        "main", _params_dict(params), {}, report.all_equal,
        first_discrepancy=first,
        details={"rows": len(report.rows), "orbits": len(chars.shape_orbits(params))},
    )


def verify_stembridge(params: GroupParams) -> VerificationReport:
    """Graded multiplicity series == u * sum over n-orbital tableaux of q^fmaj,
    checked exactly per q-degree for every orbit."""
    for o in chars.shape_orbits(params):
        lhs = chars.stembridge_graded(params, o.members[0])
        terms: dict[tuple[int, ...], int] = {}
        for t in tabx.enumerate_osyt_n(o, params):
            k = (tabx.tableau_stats(t).fmaj,)
            terms[k] = terms.get(k, 0) + o.u
        rhs = SparsePoly(1, terms)
        if lhs != rhs:
            keys = sorted(set(lhs.terms) | set(rhs.terms))
            key = next(k for k in keys if lhs.coeff(k) != rhs.coeff(k))
            return VerificationReport(
                "stembridge", _params_dict(params), {}, False,
                first_discrepancy={
                    "orbit": [list(c) for c in o.members[0]],
                    "q_power": key[0],
                    "lhs": str(lhs.coeff(key)),
                    "rhs": str(rhs.coeff(key)),
                },
            )
    return VerificationReport(
        "stembridge", _params_dict(params), {}, True,
        details={"orbits": len(chars.shape_orbits(params))},
    )

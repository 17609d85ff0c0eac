"""Harer-Zagier closed form, recurrence and multi-trace sum relation.

The even single-trace moments satisfy

    I^N_{2k} = (2k)!/(2^k k!) sum_{m=0}^{k} 2^m C(k,m) C(N,m+1)

and, as polynomials in nu,

    (k+1) p_{2k} = (4k-2) nu p_{2k-2} + (k-1)(2k-1)(2k-3) p_{2k-4},

with p_0 = nu and p_2 = nu^2.  The multi-trace relation
sum_{i=1}^{2k-1} p_{i,2k-i} = p_{2k+2} - 2 nu p_{2k} comes from
splitting the cobracket of (x^{2k+1} xi) by arc length.
"""

from math import comb, factorial

from .nupoly import NuPolynomial
from .reduction import GueReducer, default_reducer
from .report import CheckReport
from .scalar import Scalar


def double_factorial(n: int) -> int:
    """(n)!! for odd n >= -1."""
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def harer_zagier_closed(k: int, size) -> Scalar:
    """The moment I^N_{2k} from the closed formula; exact in N."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    size = Scalar(size)
    prefactor = Scalar(factorial(2 * k), 2**k * factorial(k))
    total = Scalar(0)
    for m in range(k + 1):
        binom_n = Scalar(1)
        for t in range(m + 1):  # C(N, m+1) as a polynomial in N
            binom_n *= (size - t) / (t + 1)
        total += 2**m * comb(k, m) * binom_n
    return prefactor * total


def single_trace_polynomials(k_max: int, reducer: GueReducer | None = None):
    """[p_0, p_2, ..., p_{2 k_max}] with p_0 = nu."""
    reducer = reducer or default_reducer()
    return [reducer.reduce((2 * k,)) if k else NuPolynomial.nu() for k in range(k_max + 1)]


def hz_recurrence_check(k_max: int, reducer: GueReducer | None = None) -> CheckReport:
    """Assert the three-term recurrence exactly for 2 <= k <= k_max."""
    if k_max < 2:
        raise ValueError("the recurrence starts at k = 2")
    polys = single_trace_polynomials(k_max, reducer)
    for k in range(2, k_max + 1):
        lhs = polys[k].scale(k + 1)
        rhs = polys[k - 1].shift(1).scale(4 * k - 2) + polys[k - 2].scale(
            (k - 1) * (2 * k - 1) * (2 * k - 3)
        )
        if lhs != rhs:
            return CheckReport(
                "harer-zagier-recurrence",
                False,
                f"k <= {k_max}",
                f"k={k}: (k+1)p_2k = {lhs} but rhs = {rhs}",
            )
    return CheckReport("harer-zagier-recurrence", True, f"k <= {k_max}")


def hz_closed_form_check(k_max: int, n_max: int, reducer: GueReducer | None = None) -> CheckReport:
    polys = single_trace_polynomials(k_max, reducer)
    for k in range(k_max + 1):
        for size in range(1, n_max + 1):
            if polys[k](size) != harer_zagier_closed(k, size):
                return CheckReport(
                    "harer-zagier-closed-form",
                    False,
                    f"k <= {k_max}, N <= {n_max}",
                    f"k={k}, N={size}: p={polys[k](size)} formula={harer_zagier_closed(k, size)}",
                )
    return CheckReport("harer-zagier-closed-form", True, f"k <= {k_max}, N <= {n_max}")


def catalan_leading_check(k_max: int, reducer: GueReducer | None = None) -> CheckReport:
    """Leading coefficient of p_2k is the k-th Catalan number; the next
    nonzero coefficient sits in degree k-1 (the torus stratum) and is
    positive."""
    polys = single_trace_polynomials(k_max, reducer)
    for k in range(1, k_max + 1):
        poly = polys[k]
        if poly.degree != k + 1 or poly.leading_coefficient() != catalan(k):
            return CheckReport(
                "catalan-leading-coefficient",
                False,
                f"k <= {k_max}",
                f"k={k}: degree {poly.degree}, leading {poly.leading_coefficient()}",
            )
        if k >= 2:
            torus = poly.coeffs.get(k - 1, Scalar(0))
            if torus <= 0:
                return CheckReport(
                    "catalan-leading-coefficient",
                    False,
                    f"k <= {k_max}",
                    f"k={k}: torus-stratum coefficient {torus} is not positive",
                )
    return CheckReport("catalan-leading-coefficient", True, f"k <= {k_max}")


def multitrace_sum_check(k_max: int, reducer: GueReducer | None = None) -> CheckReport:
    """sum_{i=1}^{2k-1} p_{i,2k-i} = p_{2k+2} - 2 nu p_{2k}, exactly."""
    if k_max < 2:
        raise ValueError("the relation is checked from k = 2")
    reducer = reducer or default_reducer()
    for k in range(2, k_max + 1):
        lhs = NuPolynomial.zero()
        for i in range(1, 2 * k):
            lhs = lhs + reducer.reduce((i, 2 * k - i))
        rhs = reducer.reduce((2 * k + 2,)) - reducer.reduce((2 * k,)).shift(1).scale(2)
        if lhs != rhs:
            return CheckReport(
                "multitrace-sum-relation",
                False,
                f"k <= {k_max}",
                f"k={k}: lhs = {lhs}, rhs = {rhs}",
            )
    return CheckReport("multitrace-sum-relation", True, f"k <= {k_max}")


def all_ones_check(n_max: int, reducer: GueReducer | None = None) -> CheckReport:
    """p over 2n ones equals (2n-1)!! nu^n."""
    reducer = reducer or default_reducer()
    for n in range(1, n_max + 1):
        expected = NuPolynomial({n: Scalar(double_factorial(2 * n - 1))})
        got = reducer.reduce((1,) * (2 * n))
        if got != expected:
            return CheckReport(
                "all-ones-double-factorial",
                False,
                f"n <= {n_max}",
                f"n={n}: got {got}, want {expected}",
            )
    return CheckReport("all-ones-double-factorial", True, f"n <= {n_max}")

"""Closed-form values for special families, computed exactly.

Everything here is independent of the recurrence engine, so these formulas
double as oracles for it: complete and complete bipartite distributions,
the bipartite boundary solution Q, expectation formulas for fixed families
and for the uniform random graph G(n,m), the path recurrence and its
tangent generating function, and the single-cycle value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .distribution import ForestDistribution
from .errors import InvalidParameter, InvalidSize, ParameterOutOfRange


def _comb0(a: int, b: int) -> int:
    """Binomial coefficient that is 0 for any out-of-range argument."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def complete_distribution(n: int) -> ForestDistribution:
    """Distribution for K_n: P(k) = C(n-1; n-2k, k, k-1) * 2^(n-2k) / C(2n-2, n)."""
    if n < 2:
        raise InvalidSize("complete distribution needs n >= 2")
    denom = comb(2 * n - 2, n)
    probs: dict[int, Fraction] = {}
    k = 1
    while n - 2 * k >= 0:
        multinomial = factorial(n - 1) // (
            factorial(n - 2 * k) * factorial(k) * factorial(k - 1)
        )
        probs[k] = Fraction(multinomial * 2 ** (n - 2 * k), denom)
        k += 1
    return ForestDistribution(n, comb(n, 2), probs)


def bipartite_distribution(s: int, t: int) -> ForestDistribution:
    """Distribution for K_{s,t}: P(k) = k(s+t)C(s,k)C(t,k) / (st C(s+t,s))."""
    if s < 1 or t < 1:
        raise InvalidSize("bipartite distribution needs s, t >= 1")
    denom = s * t * comb(s + t, s)
    probs: dict[int, Fraction] = {}
    for k in range(1, min(s, t) + 1):
        probs[k] = Fraction(k * (s + t) * comb(s, k) * comb(t, k), denom)
    return ForestDistribution(s + t, s * t, probs)


def bipartite_q(s: int, t: int, a: int, b: int, l: int) -> Fraction:
    """Recurrence solution Q_{s,t}(a,b,l) = C(b,l)C(s+t-b-1,a-l)/C(s+t-1,a).

    Boundary values: Q(a,0,l) = Q(0,b,l) = [l = 0], and l = -1 gives 0 by
    convention.  The full-size value Q(s,t,s,t,k) equals P(K_{s,t}, k).
    """
    if s < 1 or t < 1 or not 0 <= a <= s or not 0 <= b <= t:
        raise ParameterOutOfRange("need s,t >= 1, 0 <= a <= s, 0 <= b <= t")
    if l < -1:
        raise ParameterOutOfRange("l >= -1 required")
    if l == -1:
        return Fraction(0)
    return Fraction(_comb0(b, l) * _comb0(s + t - b - 1, a - l), comb(s + t - 1, a))


def bipartite_q_alt(s: int, t: int, a: int, b: int, l: int) -> Fraction:
    """The symmetric form C(a,l)C(s+t-a-1,b-l)/C(s+t-1,b) of bipartite_q."""
    if s < 1 or t < 1 or not 0 <= a <= s or not 0 <= b <= t:
        raise ParameterOutOfRange("need s,t >= 1, 0 <= a <= s, 0 <= b <= t")
    if l < -1:
        raise ParameterOutOfRange("l >= -1 required")
    if l == -1:
        return Fraction(0)
    return Fraction(_comb0(a, l) * _comb0(s + t - a - 1, b - l), comb(s + t - 1, b))


def complete_expected_components(n: int) -> Fraction:
    """E(kappa) for K_n: n(n-1)/(4n-6)."""
    if n < 2:
        raise InvalidSize("needs n >= 2")
    return Fraction(n * (n - 1), 4 * n - 6)


def bipartite_expected_components(s: int, t: int) -> Fraction:
    """E(kappa) for K_{s,t}: st/(s+t-1)."""
    if s < 1 or t < 1:
        raise InvalidSize("needs s, t >= 1")
    return Fraction(s * t, s + t - 1)


def expected_components_closed(family: str, *sizes: int) -> Fraction:
    """Dispatch on family name: "complete" (n) or "complete_bipartite" (s, t)."""
    if family == "complete":
        return complete_expected_components(*sizes)
    if family == "complete_bipartite":
        return bipartite_expected_components(*sizes)
    raise InvalidSize(f"no closed expectation for family {family!r}")


def gnm_expected_components(n: int, m: int) -> Fraction:
    """E(kappa) over uniform G(n,m) and a uniform ordering.

    C(n,2)/(2n-3) * (1 - C(C(n,2)-m, 2n-3)/C(C(n,2), 2n-3)); the expectation
    telescopes over potential edges, each contributing a hypergeometric
    tail term.
    """
    if n < 2:
        raise ParameterOutOfRange("needs n >= 2")
    total = comb(n, 2)
    if not 1 <= m <= total:
        raise ParameterOutOfRange(f"needs 1 <= m <= {total}")
    miss = Fraction(_comb0(total - m, 2 * n - 3), comb(total, 2 * n - 3))
    return Fraction(total, 2 * n - 3) * (1 - miss)


def gnm_expectation_lower_bound(n: int, m: int) -> Fraction:
    """Jensen lower bound (mn + m)/(4m + n - 3) for the G(n,m) expectation."""
    if n < 2 or m < 1:
        raise ParameterOutOfRange("needs n >= 2 and m >= 1")
    return Fraction(m * n + m, 4 * m + n - 3)


def path_distribution(n: int) -> ForestDistribution:
    """f_n for the path with n edges, via n*f_n = sum_i f_i * f_{n-1-i}."""
    if n < 1:
        raise InvalidSize("path distribution needs n >= 1 edges")
    # coefficient maps indexed by component count; f_0 = 1, f_1 = x
    f: list[dict[int, Fraction]] = [{0: Fraction(1)}, {1: Fraction(1)}]
    for j in range(2, n + 1):
        acc: dict[int, Fraction] = {}
        for i in range(j):
            for ka, pa in f[i].items():
                for kb, pb in f[j - 1 - i].items():
                    k = ka + kb
                    acc[k] = acc.get(k, Fraction(0)) + pa * pb
        f.append({k: p / j for k, p in sorted(acc.items())})
    return ForestDistribution(n + 1, n, dict(sorted(f[n].items())))


@dataclass(frozen=True)
class SeriesCoefficients:
    """Taylor coefficients of the path generating function Q at t = 0."""

    x: float
    coeffs: list[float]


def path_series_coefficients(x: float, count: int) -> SeriesCoefficients:
    """First `count` Taylor coefficients of Q(t) for a fixed x > 1.

    Computed by stepping the series form of the defining initial value
    problem Q' = Q^2 + (x - 1), Q(0) = 1: the degree-n+1 coefficient is
    determined by a Cauchy product of lower ones.  This is the package's
    only floating-point computation.
    """
    if not x > 1:
        raise InvalidParameter("series parameter must satisfy x > 1")
    if count < 1:
        raise InvalidParameter("need count >= 1")
    q = [1.0]
    for n in range(count - 1):
        total = sum(q[i] * q[n - i] for i in range(n + 1))
        if n == 0:
            total += x - 1.0
        q.append(total / (n + 1))
    return SeriesCoefficients(float(x), q)


def path_generating_value(x: float, t: float) -> float:
    """Closed form Q(t) = sqrt(x-1) tan(t sqrt(x-1) + arctan(1/sqrt(x-1)))."""
    if not x > 1:
        raise InvalidParameter("needs x > 1")
    r = math.sqrt(x - 1.0)
    return r * math.tan(t * r + math.atan(1.0 / r))


def matching_identity_lhs(big_n: int) -> int:
    """sum_K 2^(N-2K) C(N,K) C(N-K, N-2K); equals the central binomial C(2N,N)."""
    if big_n < 0:
        raise ParameterOutOfRange("needs N >= 0")
    return sum(
        2 ** (big_n - 2 * k) * comb(big_n, k) * _comb0(big_n - k, big_n - 2 * k)
        for k in range(big_n // 2 + 1)
    )


def cycle_single_component(n: int) -> Fraction:
    """P(C_n, 1) = n * 2^(n-2) / n!."""
    if n < 3:
        raise InvalidSize("cycle needs n >= 3")
    return Fraction(n * 2 ** (n - 2), factorial(n))

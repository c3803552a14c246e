"""Arithmetic-geometric mean and complete elliptic integrals.

Conventions: the modulus z enters quadratically,

    K(z) = integral over [0, pi/2] of dphi / sqrt(1 - z^2 sin^2 phi),
    E(z) = integral over [0, pi/2] of sqrt(1 - z^2 sin^2 phi) dphi,

and Gauss's identity AGM(1-z, 1+z) = pi / (2 K(z)) ties the iteration to
K.  Three independent routes to K are kept on purpose (AGM, power series,
adaptive quadrature) so the test suite can cross-validate them.

The Seiffert function of the AGM mean is f(z) = (2/pi) z K(z); its
derivative has the power series 1 + sum c_m z^(2m) with

    c_m = (2m + 1) [(2m-1)!! / (2m)!!]^2,

computed here through the exact ratio c_{m+1}/c_m = (2m+1)(2m+3)/(2m+2)^2
(direct double factorials overflow beyond m of about 150).  Since c_1 = 3/4
and the ratio is below 1, every c_m < 1, which gives the derivative bounds
1 < f'(z) < 1/(1-z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._pairs import check_pair, half_spread
from .calculus import DEFAULT_QUADRATURE, QuadratureConfig, integrate
from .errors import DomainError, NonConvergenceError

__all__ = [
    "SeriesBudget",
    "agm",
    "ellip_k",
    "ellip_e",
    "ellip_k_prime",
    "agm_seiffert",
    "agm_seiffert_prime",
    "agm_coefficient",
    "agm_coefficient_exact",
    "agm_coefficient_ratio",
    "v_mean",
    "v_seiffert_prime",
]

#: Relative gap at which the AGM iteration is considered converged.
AGM_RTOL = 1e-15

#: K is rejected above this modulus; it diverges at z = 1 and relative
#: error contracts are meaningless nearby.
MODULUS_CAP = 1.0 - 1e-12

K_METHODS = ("agm", "series", "quadrature")


@dataclass(frozen=True)
class SeriesBudget:
    """Truncation control for the power series evaluators."""

    term_tolerance: float = 1e-16
    max_terms: int = 10000

    def __post_init__(self) -> None:
        if not self.term_tolerance > 0.0:
            raise DomainError("term_tolerance must be positive")
        if self.max_terms < 1:
            raise DomainError("max_terms must be at least 1")


DEFAULT_BUDGET = SeriesBudget()


def agm(x: float, y: float) -> float:
    """Common limit of the coupled arithmetic/geometric iteration."""
    a, b = check_pair(x, y)  # a <= b, both positive
    while b - a > AGM_RTOL * b:
        a, b = math.sqrt(a * b), 0.5 * (a + b)
        if a > b:
            a, b = b, a
    return 0.5 * (a + b)


def _check_modulus(z: float) -> float:
    fz = float(z)
    if not 0.0 <= fz < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {z!r}")
    if fz > MODULUS_CAP:
        raise DomainError(f"modulus {z!r} too close to the z=1 divergence")
    return fz


def _k_series(z: float, budget: SeriesBudget) -> float:
    z2 = z * z
    total = 1.0
    term = 1.0
    m = 0
    while True:
        m += 1
        ratio = (2.0 * m - 1.0) / (2.0 * m)
        term *= ratio * ratio * z2
        total += term
        if term < budget.term_tolerance:
            return 0.5 * math.pi * total
        if m >= budget.max_terms:
            raise NonConvergenceError(
                f"K series not converged after {m} terms at z={z!r}",
                best=0.5 * math.pi * total,
                error_bound=term / (1.0 - z2),
            )


def ellip_k(z: float, method: str = "agm",
            budget: SeriesBudget = DEFAULT_BUDGET,
            cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Complete elliptic integral of the first kind.

    method "agm" inverts Gauss's identity (default: quadratically
    convergent and uniformly accurate); "series" and "quadrature" are the
    slower routes kept as cross-checks.
    """
    fz = _check_modulus(z)
    if method == "agm":
        return math.pi / (2.0 * agm(1.0 - fz, 1.0 + fz))
    if method == "series":
        return _k_series(fz, budget)
    if method == "quadrature":
        z2 = fz * fz

        def integrand(phi: float) -> float:
            s = math.sin(phi)
            return 1.0 / math.sqrt(1.0 - z2 * s * s)

        return integrate(integrand, 0.0, 0.5 * math.pi, cfg)
    raise ValueError(f"unknown method {method!r}, expected one of {K_METHODS}")


def ellip_e(z: float, method: str = "agm",
            cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Complete elliptic integral of the second kind, for z in [0, 1].

    The default route runs the AGM iteration while accumulating the
    correction sum 2^(n-1) c_n^2; quadrature is the independent oracle.
    E(0) = pi/2 and E(1) = 1 are exact.
    """
    fz = float(z)
    if not 0.0 <= fz <= 1.0:
        raise DomainError(f"E needs a modulus in [0, 1], got {z!r}")
    if fz == 0.0:
        return 0.5 * math.pi
    if fz == 1.0:
        return 1.0
    if method == "agm":
        a = 1.0
        b = math.sqrt((1.0 - fz) * (1.0 + fz))
        s = 0.5 * fz * fz
        pow2 = 0.5
        while a - b > AGM_RTOL * a:
            c = 0.5 * (a - b)
            pow2 *= 2.0
            s += pow2 * c * c
            a, b = 0.5 * (a + b), math.sqrt(a * b)
        k = math.pi / (a + b)  # pi / (2 * agm)
        return k * (1.0 - s)
    if method == "quadrature":
        z2 = fz * fz

        def integrand(phi: float) -> float:
            s = math.sin(phi)
            return math.sqrt(1.0 - z2 * s * s)

        return integrate(integrand, 0.0, 0.5 * math.pi, cfg)
    raise ValueError(f"unknown method {method!r}, expected 'agm' or 'quadrature'")


def ellip_k_prime(z: float) -> float:
    """dK/dz via E(z)/(z (1-z^2)) - K(z)/z.

    The formula is singular at z = 0 although K is even there; the true
    limit is exposed as a special case returning 0.
    """
    fz = float(z)
    if fz == 0.0:
        return 0.0
    if not 0.0 < fz < 1.0:
        raise DomainError(f"K' needs a modulus in (0, 1), got {z!r}")
    one_minus = (1.0 - fz) * (1.0 + fz)
    return ellip_e(fz) / (fz * one_minus) - ellip_k(fz) / fz


def agm_seiffert(z: float) -> float:
    """Seiffert function of the AGM mean: (2/pi) z K(z)."""
    fz = float(z)
    if not 0.0 < fz < 1.0:
        raise DomainError(f"z must lie in (0, 1), got {z!r}")
    return 2.0 / math.pi * fz * ellip_k(fz)


def agm_coefficient(m: int) -> float:
    """c_m = (2m+1) [(2m-1)!!/(2m)!!]^2 as a float, via the ratio recurrence."""
    if m < 1:
        raise DomainError("coefficient index starts at 1")
    c = 0.75
    for j in range(1, m):
        c *= (2.0 * j + 1.0) * (2.0 * j + 3.0) / ((2.0 * j + 2.0) ** 2)
    return c


def agm_coefficient_exact(m: int) -> Fraction:
    """c_m as an exact rational, for the strict c_m < 1 checks."""
    if m < 1:
        raise DomainError("coefficient index starts at 1")
    c = Fraction(3, 4)
    for j in range(1, m):
        c *= agm_coefficient_ratio(j)
    return c


def agm_coefficient_ratio(m: int) -> Fraction:
    """Exact ratio c_{m+1} / c_m = (2m+1)(2m+3) / (2m+2)^2."""
    if m < 1:
        raise DomainError("coefficient index starts at 1")
    return Fraction((2 * m + 1) * (2 * m + 3), (2 * m + 2) ** 2)


def agm_seiffert_prime(z: float, budget: SeriesBudget = DEFAULT_BUDGET) -> float:
    """Derivative of the AGM Seiffert function by its power series.

    Equals (2/pi) E(z) / (1 - z^2) in closed form; the series route is
    kept independent so the two can check each other.
    """
    fz = float(z)
    if not 0.0 < fz < 1.0:
        raise DomainError(f"z must lie in (0, 1), got {z!r}")
    z2 = fz * fz
    total = 1.0
    term = 0.75 * z2  # c_1 z^2
    m = 1
    while True:
        total += term
        if term < budget.term_tolerance:
            return total
        if m >= budget.max_terms:
            raise NonConvergenceError(
                f"derivative series not converged after {m} terms at z={z!r}",
                best=total,
                error_bound=term / (1.0 - z2),
            )
        term *= (2.0 * m + 1.0) * (2.0 * m + 3.0) / ((2.0 * m + 2.0) ** 2) * z2
        m += 1


def v_mean(x: float, y: float) -> float:
    """The mean pi H(x,y) / (2 E(z)), z the relative half-spread.

    Geometrically (for the ellipse with semi-axes A and G) this is the
    ratio of the inscribed disc's area to the semi-perimeter; here it
    matters as the mean whose Seiffert function is z times the derivative
    of the AGM Seiffert function.
    """
    lo, hi = check_pair(x, y)
    if lo == hi:
        return lo
    z = half_spread(lo, hi)
    harmonic = 2.0 * lo * hi / (lo + hi)
    return 0.5 * math.pi * harmonic / ellip_e(z)


def v_seiffert_prime(z: float) -> float:
    """Derivative of the Seiffert function of v_mean, in closed form.

    v(z) = (2/pi) z E(z) / (1 - z^2), and with dE/dz = (E - K)/z,

        v'(z) = (2/pi) [ (2E - K)/(1 - z^2) + 2 z^2 E/(1 - z^2)^2 ].
    """
    fz = float(z)
    if not 0.0 < fz < 1.0:
        raise DomainError(f"z must lie in (0, 1), got {z!r}")
    e = ellip_e(fz)
    k = ellip_k(fz)
    one_minus = (1.0 - fz) * (1.0 + fz)
    return 2.0 / math.pi * ((2.0 * e - k) / one_minus
                            + 2.0 * fz * fz * e / (one_minus * one_minus))

"""Catalog of symmetric homogeneous means and the Seiffert correspondence.

Every symmetric, homogeneous mean M on positive pairs corresponds
one-to-one with a function f on (0, 1) inside the band

    z/(1+z) <= f(z) <= z/(1-z)        (a "Seiffert function")

via

    f_M(z) = z / M(1-z, 1+z)   and   M(x, y) = |x-y| / (2 f(z)),

where z = |x-y|/(x+y) is the relative half-spread (the band endpoints
correspond to the max and min "means").  Larger means have smaller
Seiffert functions and vice versa.

The t-deformation pulls a pair toward its midpoint:

    M^{t}(x, y) = M(m + t d, m - t d),  m = (x+y)/2, d = (x-y)/2,

for 0 < t <= 1, and on the Seiffert side f^{t}(z) = f(t z)/t.  The two
constructions are consistent: the Seiffert function of M^{t} is f^{t}.
Deformation of a mean is done directly on the arguments (fewer roundings),
which turns that consistency into a cross-check instead of a definition.

All values here are immutable and every operation is a pure function.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

from . import elliptic
from ._pairs import check_pair, half_spread
from .errors import DomainError, SeiffertBoundError, UnknownMeanError

__all__ = [
    "MeanDescriptor",
    "SeiffertFunction",
    "CATALOG",
    "MEAN_IDS",
    "SEIFFERT_SHAPE",
    "get_mean",
    "eval_mean",
    "relative_half_spread",
    "seiffert_bounds",
    "seiffert_of_mean",
    "mean_of_seiffert",
    "deform",
    "deform_mean",
]


@dataclass(frozen=True)
class MeanDescriptor:
    """A named, evaluable symmetric homogeneous mean on positive pairs.

    The evaluator receives an ordered pair (lo, hi) with 0 < lo < hi;
    symmetry is guaranteed by canonical argument ordering and the equal
    case returns the common value exactly.
    """

    id: str
    display: str
    evaluator: Callable[[float, float], float] = field(repr=False)
    note: str = ""

    def __call__(self, x: float, y: float) -> float:
        lo, hi = check_pair(x, y)
        if lo == hi:
            return lo
        return self.evaluator(lo, hi)


@dataclass(frozen=True)
class SeiffertFunction:
    """An evaluable function on (0, 1), with optional closed-form derivative."""

    func: Callable[[float], float] = field(repr=False)
    derivative: Callable[[float], float] | None = field(default=None, repr=False)
    name: str = ""

    def __call__(self, z: float) -> float:
        fz = float(z)
        if not 0.0 < fz < 1.0:
            raise DomainError(f"Seiffert functions live on (0, 1), got {z!r}")
        return self.func(fz)


def relative_half_spread(x: float, y: float) -> float:
    """z = |x - y| / (x + y), always in [0, 1)."""
    lo, hi = check_pair(x, y)
    return half_spread(lo, hi)


def seiffert_bounds(z: float) -> tuple[float, float]:
    """The admissible band (z/(1+z), z/(1-z)) at a given z in (0, 1)."""
    fz = float(z)
    if not 0.0 < fz < 1.0:
        raise DomainError(f"z must lie in (0, 1), got {z!r}")
    return fz / (1.0 + fz), fz / (1.0 - fz)


# --------------------------------------------------------------------------
# Catalog closed forms.  Each evaluator sees 0 < lo < hi.
# --------------------------------------------------------------------------

def _arithmetic(lo: float, hi: float) -> float:
    return 0.5 * (lo + hi)


def _geometric(lo: float, hi: float) -> float:
    return math.sqrt(lo) * math.sqrt(hi)


def _harmonic(lo: float, hi: float) -> float:
    return 2.0 * lo * hi / (lo + hi)


def _contraharmonic(lo: float, hi: float) -> float:
    return (lo * lo + hi * hi) / (lo + hi)


def _root_mean_square(lo: float, hi: float) -> float:
    return math.hypot(lo, hi) / math.sqrt(2.0)


# Below z = 1e-8 the log difference cancels catastrophically; two terms of
# the z/artanh(z) series already reach full double precision there.  Above
# it, log1p(d/lo) stays uniformly accurate at both ends (plain log(hi/lo)
# cancels near equal arguments, artanh(z) amplifies near z = 1).
_LOG_MEAN_SERIES_CUTOFF = 1e-8


def _logarithmic(lo: float, hi: float) -> float:
    z = half_spread(lo, hi)
    if z < _LOG_MEAN_SERIES_CUTOFF:
        return 0.5 * (lo + hi) * (1.0 - z * z / 3.0)
    d = hi - lo
    return d / math.log1p(d / lo)


def _first_seiffert(lo: float, hi: float) -> float:
    z = half_spread(lo, hi)
    if z > 0.7:
        # arcsin is infinitely steep at 1, so evaluate the complement angle
        # from sqrt(1-z^2) = 2 sqrt(lo hi)/(lo+hi), which never cancels
        w = 2.0 * math.sqrt(lo) * math.sqrt(hi) / (lo + hi)
        angle = 0.5 * math.pi - math.asin(w)
    else:
        angle = math.asin(z)
    return (hi - lo) / (2.0 * angle)


def _from_spread(inv: Callable[[float], float]) -> Callable[[float, float], float]:
    # |x-y| / (2 g(z)) for the means defined through a function of z alone
    def evaluator(lo: float, hi: float) -> float:
        return (hi - lo) / (2.0 * inv(half_spread(lo, hi)))

    return evaluator


def _scaled_arithmetic(shape: Callable[[float], float]) -> Callable[[float, float], float]:
    # A(x,y) * shape(z) for the trig/hyperbolic example means
    def evaluator(lo: float, hi: float) -> float:
        return 0.5 * (lo + hi) * shape(half_spread(lo, hi))

    return evaluator


CATALOG: dict[str, MeanDescriptor] = {}


def _register(mean_id: str, display: str,
              evaluator: Callable[[float, float], float], note: str = "") -> None:
    CATALOG[mean_id] = MeanDescriptor(mean_id, display, evaluator, note)


_register("A", "arithmetic mean", _arithmetic, "(x+y)/2")
_register("G", "geometric mean", _geometric, "sqrt(xy)")
_register("H", "harmonic mean", _harmonic, "2xy/(x+y)")
_register("C", "contraharmonic mean", _contraharmonic, "(x^2+y^2)/(x+y)")
_register("R", "root-mean-square", _root_mean_square, "sqrt((x^2+y^2)/2)")
_register("L", "logarithmic mean", _logarithmic, "(x-y)/(log x - log y)")
_register("P", "first Seiffert mean", _first_seiffert, "|x-y|/(2 arcsin z)")
_register("T", "second Seiffert mean", _from_spread(math.atan), "|x-y|/(2 arctan z)")
_register("NS", "Neuman-Sandor mean", _from_spread(math.asinh), "|x-y|/(2 arsinh z)")
_register("AGM", "arithmetic-geometric mean", elliptic.agm,
          "Gauss iteration limit; equals pi/(2 K(z)) on (1-z, 1+z)")
_register("V", "elliptic harmonic companion of AGM", elliptic.v_mean,
          "pi H(x,y)/(2 E(z))")
_register("SIN", "sine mean", _from_spread(math.sin), "|x-y|/(2 sin z)")
_register("TAN", "tangent mean", _from_spread(math.tan), "|x-y|/(2 tan z)")
_register("SINH", "hyperbolic sine mean", _from_spread(math.sinh), "|x-y|/(2 sinh z)")
_register("TANH", "hyperbolic tangent mean", _from_spread(math.tanh),
          "|x-y|/(2 tanh z); a valid mean, but it has no harmonic representation")
_register("COSMEAN", "arithmetic over cosine", _scaled_arithmetic(lambda z: 1.0 / math.cos(z)),
          "A(x,y)/cos z")
_register("COS2MEAN", "arithmetic times squared cosine",
          _scaled_arithmetic(lambda z: math.cos(z) ** 2), "A(x,y) cos^2 z")
_register("COSHMEAN", "arithmetic over hyperbolic cosine",
          _scaled_arithmetic(lambda z: 1.0 / math.cosh(z)), "A(x,y)/cosh z")

MEAN_IDS: tuple[str, ...] = tuple(CATALOG)


def get_mean(mean: str | MeanDescriptor) -> MeanDescriptor:
    """Resolve a catalog id (or pass a descriptor through)."""
    if isinstance(mean, MeanDescriptor):
        return mean
    try:
        return CATALOG[mean]
    except KeyError:
        raise UnknownMeanError(mean) from None


def eval_mean(mean: str | MeanDescriptor, x: float, y: float) -> float:
    """Evaluate a mean at a positive pair; M(x, x) = x exactly."""
    return get_mean(mean)(x, y)


# --------------------------------------------------------------------------
# Mean <-> Seiffert function correspondence.
# --------------------------------------------------------------------------

def _sec2(z: float) -> float:
    c = math.cos(z)
    return 1.0 / (c * c)


def _sech2(z: float) -> float:
    c = math.cosh(z)
    return 1.0 / (c * c)


# Closed-form derivatives of the catalog Seiffert functions; used by the
# representability check to avoid finite-difference noise at points where
# a derivative touches its bound.
_SEIFFERT_DERIVATIVES: dict[str, Callable[[float], float]] = {
    "A": lambda z: 1.0,
    "G": lambda z: (1.0 - z * z) ** -1.5,
    "H": lambda z: (1.0 + z * z) / (1.0 - z * z) ** 2,
    "C": lambda z: (1.0 - z * z) / (1.0 + z * z) ** 2,
    "R": lambda z: (1.0 + z * z) ** -1.5,
    "L": lambda z: 1.0 / (1.0 - z * z),
    "P": lambda z: (1.0 - z * z) ** -0.5,
    "T": lambda z: 1.0 / (1.0 + z * z),
    "NS": lambda z: (1.0 + z * z) ** -0.5,
    "AGM": lambda z: 2.0 / math.pi * elliptic.ellip_e(z) / ((1.0 - z) * (1.0 + z)),
    "V": elliptic.v_seiffert_prime,
    "SIN": math.cos,
    "TAN": _sec2,
    "SINH": math.cosh,
    "TANH": _sech2,
    "COSMEAN": lambda z: math.cos(z) - z * math.sin(z),
    "COS2MEAN": lambda z: (math.cos(z) + 2.0 * z * math.sin(z)) / math.cos(z) ** 3,
    "COSHMEAN": lambda z: math.cosh(z) + z * math.sinh(z),
}

# Shape of each catalog Seiffert function on (0, 1); "affine" only for A.
# Drives the convexity/concavity-preservation checks of the operator I.
SEIFFERT_SHAPE: dict[str, str] = {
    "A": "affine",
    "G": "convex",
    "H": "convex",
    "C": "concave",
    "R": "concave",
    "L": "convex",
    "P": "convex",
    "T": "concave",
    "NS": "concave",
    "AGM": "convex",
    "V": "convex",
    "SIN": "concave",
    "TAN": "convex",
    "SINH": "convex",
    "TANH": "concave",
    "COSMEAN": "concave",
    "COS2MEAN": "convex",
    "COSHMEAN": "convex",
}


def seiffert_of_mean(mean: str | MeanDescriptor) -> SeiffertFunction:
    """The Seiffert function f(z) = z / M(1-z, 1+z) of a mean.

    Always evaluates through the mean itself (so e.g. the AGM entry
    genuinely exercises the iteration); a closed-form derivative is
    attached when the catalog knows one.
    """
    desc = get_mean(mean)

    def func(z: float) -> float:
        return z / desc(1.0 - z, 1.0 + z)

    return SeiffertFunction(func, _SEIFFERT_DERIVATIVES.get(desc.id),
                            name=f"f[{desc.id}]")


#: Slack (absolute, plus relative to the bound) allowed before a bound
#: violation is reported by a constructed mean; absorbs quadrature noise
#: when f itself is computed numerically.
BOUND_CHECK_TOL = 1e-9


def mean_of_seiffert(f: SeiffertFunction | Callable[[float], float],
                     mean_id: str | None = None,
                     display: str | None = None) -> MeanDescriptor:
    """The mean M(x, y) = |x - y| / (2 f(z)) encoded by a Seiffert function.

    The returned evaluator checks the admissible band at every call and
    raises SeiffertBoundError with the witness z if f leaves it.
    """
    name = getattr(f, "name", "") or "f"
    mean_id = mean_id or f"M({name})"
    display = display or f"mean of {name}"

    def evaluator(lo: float, hi: float) -> float:
        z = half_spread(lo, hi)
        value = f(z)
        lower, upper = seiffert_bounds(z)
        if (value < lower - BOUND_CHECK_TOL * max(1.0, lower)
                or value > upper + BOUND_CHECK_TOL * max(1.0, upper)):
            raise SeiffertBoundError(z, value, lower, upper)
        return (hi - lo) / (2.0 * value)

    return MeanDescriptor(mean_id, display, evaluator,
                          note="constructed from a Seiffert function")


def _check_deform(t: float) -> float:
    ft = float(t)
    if not 0.0 < ft <= 1.0:
        raise DomainError(f"deformation parameter must lie in (0, 1], got {t!r}")
    return ft


def deform(f: SeiffertFunction, t: float) -> SeiffertFunction:
    """f^{t}(z) = f(t z) / t; the identity deformation for t = 1."""
    ft = _check_deform(t)
    if ft == 1.0:
        return f

    def func(z: float) -> float:
        return f(ft * z) / ft

    if f.derivative is None:
        derivative = None
    else:
        base = f.derivative

        def derivative(z: float) -> float:
            # chain rule: d/dz f(tz)/t = f'(tz)
            return base(ft * z)

    return SeiffertFunction(func, derivative, name=f"{f.name or 'f'}^{{{ft:g}}}")


def deform_mean(mean: str | MeanDescriptor, t: float) -> MeanDescriptor:
    """M^{t}: the mean evaluated on the pair pulled toward its midpoint."""
    desc = get_mean(mean)
    ft = _check_deform(t)
    if ft == 1.0:
        return desc

    def evaluator(lo: float, hi: float) -> float:
        mid = 0.5 * (lo + hi)
        shift = 0.5 * ft * (hi - lo)
        return desc(mid - shift, mid + shift)

    return MeanDescriptor(f"{desc.id}^{{{ft:g}}}", f"{desc.display} deformed by t={ft:g}",
                          evaluator, note=f"t-deformation of {desc.id}")

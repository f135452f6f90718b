"""Majorana machinery for spin-1 states.

A spin-1 ray is labeled by an unordered pair of unit directions (its
M-vectors).  This module converts both ways between that labeling and
explicit spin-z components, and evaluates the closed-form squared overlap
of two rays directly from their M-vectors.

Conventions (fixed here, validated by the round-trip and catalog-recovery
tests rather than assumed):

* spinor of a direction with polar angles (theta, phi) is
  (cos(theta/2), e^{i phi} sin(theta/2)); the -z direction, where phi is
  undefined, uses phi = 0.
* a state (c+, c0, c-) has Majorana polynomial
  c+ * t^2 - sqrt(2) * c0 * t + c-, and a root t is the stereographic
  coordinate (projected from the -z pole) of the corresponding direction;
  c+ = 0 puts one root at infinity, i.e. at -z itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from random import Random
from typing import Union

from .rays import Ray, overlap2
from .scalar import QRoot2, RealScalar

_SQRT2 = math.sqrt(2.0)

RealLike = Union[int, Fraction, float]


class DegenerateStateError(ValueError):
    """Raised when a symmetrized spinor product collapses to the zero vector."""


@dataclass(frozen=True)
class MVector:
    """A nonzero direction in R^3, stored unnormalized.

    int/Fraction components keep the vector on the exact path; any float
    component puts it on the floating path.
    """

    x: RealLike
    y: RealLike
    z: RealLike

    def __post_init__(self) -> None:
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))
        if not (self.x or self.y or self.z):
            raise ValueError("an M-vector must be nonzero")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.x, self.y, self.z))

    @cached_property
    def norm2(self) -> RealLike:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def dot(self, other: MVector) -> RealLike:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def unit(self) -> tuple[float, float, float]:
        r = math.sqrt(float(self.norm2))
        return (float(self.x) / r, float(self.y) / r, float(self.z) / r)


def unit_dot(a: MVector, b: MVector) -> RealScalar:
    """Dot product of the normalized directions; exact when both vectors are.

    The exact path requires norm2(a) * norm2(b) to be of the form s^2 or
    2*s^2 with s rational, which holds for all catalog vectors.
    """
    if a.is_exact and b.is_exact:
        scale = QRoot2(a.norm2 * b.norm2).sqrt()
        return QRoot2(a.dot(b)) / scale
    ua, ub = a.unit(), b.unit()
    return ua[0] * ub[0] + ua[1] * ub[1] + ua[2] * ub[2]


@dataclass(frozen=True, eq=False)
class MPair:
    """Unordered pair of M-vectors labeling one spin-1 ray."""

    first: MVector
    second: MVector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MPair):
            return NotImplemented
        return (self.first == other.first and self.second == other.second) or (
            self.first == other.second and self.second == other.first
        )

    def __hash__(self) -> int:
        return hash(frozenset((self.first, self.second)))

    @property
    def is_exact(self) -> bool:
        return self.first.is_exact and self.second.is_exact


@dataclass(frozen=True)
class SpinState:
    """Spin-1 components (c+, c0, c-) in the spin-z basis, up to phase and scale."""

    c_plus: complex
    c_zero: complex
    c_minus: complex

    def __post_init__(self) -> None:
        if self.c_plus == 0 and self.c_zero == 0 and self.c_minus == 0:
            raise ValueError("a spin state must be nonzero")

    @property
    def components(self) -> tuple[complex, complex, complex]:
        return (self.c_plus, self.c_zero, self.c_minus)

    def ray(self) -> Ray:
        return Ray(self.components)


def spinor_from_direction(v: MVector) -> tuple[complex, complex]:
    """Spin-1/2 spinor (cos t/2, e^{i phi} sin t/2) for the direction of v."""
    x, y, z = v.unit()
    u = min(1.0, max(-1.0, z))
    ca = math.sqrt((1.0 + u) / 2.0)
    sa = math.sqrt((1.0 - u) / 2.0)
    rho = math.hypot(x, y)
    phase = complex(x / rho, y / rho) if rho > 0.0 else complex(1.0)
    return (complex(ca), phase * sa)


def state_from_mpair(p: MPair) -> SpinState:
    """Symmetrized product of the two spinors, normalized.

    Components are (a1*a2, (a1*b2 + a2*b1)/sqrt2, b1*b2); the result does
    not depend on the pair ordering up to a global phase.
    """
    a1, b1 = spinor_from_direction(p.first)
    a2, b2 = spinor_from_direction(p.second)
    cp = a1 * a2
    c0 = (a1 * b2 + a2 * b1) / _SQRT2
    cm = b1 * b2
    norm = math.sqrt(abs(cp) ** 2 + abs(c0) ** 2 + abs(cm) ** 2)
    if norm < 1e-15:
        raise DegenerateStateError("symmetrized spinor product is zero")
    return SpinState(cp / norm, c0 / norm, cm / norm)


def _roots(s: SpinState) -> tuple[complex | None, complex | None]:
    """Roots of c+ t^2 - sqrt2 c0 t + c-; None encodes a root at infinity."""
    a, b, c = s.c_plus, -_SQRT2 * s.c_zero, s.c_minus
    if a == 0:
        if b == 0:
            return (None, None)
        return (-c / b, None)
    sq = cmath.sqrt(b * b - 4 * a * c)
    # pick the larger of b +- sq to avoid cancellation; recover the other
    # root from the product c/a
    if abs(b + sq) >= abs(b - sq):
        big = -(b + sq) / 2
    else:
        big = -(b - sq) / 2
    if big == 0:
        return (complex(0), complex(0))
    return (big / a, c / big)


def _direction(root: complex | None) -> MVector:
    """Inverse stereographic projection from the -z pole."""
    if root is None:
        return MVector(0.0, 0.0, -1.0)
    m2 = root.real * root.real + root.imag * root.imag
    d = 1.0 + m2
    return MVector(2.0 * root.real / d, 2.0 * root.imag / d, (1.0 - m2) / d)


def mpair_from_state(s: SpinState) -> MPair:
    """M-vectors of a state: quadratic roots pulled back to the sphere."""
    r1, r2 = _roots(s)
    return MPair(_direction(r1), _direction(r2))


def overlap2_closed_form(pa: MPair, pb: MPair) -> RealScalar:
    """Squared overlap of two spin-1 rays directly from their M-vectors.

    With unit vectors a1, a2 labeling one ray and b1, b2 the other:

        2*[(1 + a1.b1)(1 + a2.b2) + (1 + a1.b2)(1 + a2.b1)]
          - (1 - a1.a2)(1 - b1.b2)
        ----------------------------------------------------
                  (3 + a1.a2)(3 + b1.b2)

    The denominator is at least 4 since every dot product is >= -1.  The
    result is exact when all four vectors are exact catalog vectors.
    """
    a1, a2 = pa.first, pa.second
    b1, b2 = pb.first, pb.second
    t11 = unit_dot(a1, b1)
    t12 = unit_dot(a1, b2)
    t21 = unit_dot(a2, b1)
    t22 = unit_dot(a2, b2)
    ta = unit_dot(a1, a2)
    tb = unit_dot(b1, b2)
    num = 2 * ((1 + t11) * (1 + t22) + (1 + t12) * (1 + t21)) - (1 - ta) * (1 - tb)
    den = (3 + ta) * (3 + tb)
    return num / den


def state_overlap2(sa: SpinState, sb: SpinState) -> float:
    """Normalized squared overlap of two explicit states."""
    return overlap2(sa.ray(), sb.ray())


def mpairs_match(p: MPair, q: MPair, tol: float = 1e-7) -> bool:
    """Unordered match of two pairs, comparing unit vectors componentwise."""

    def close(u: MVector, v: MVector) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(u.unit(), v.unit()))

    return (close(p.first, q.first) and close(p.second, q.second)) or (
        close(p.first, q.second) and close(p.second, q.first)
    )


def random_mvector(rng: Random) -> MVector:
    """Uniform random direction (floating), for property and audit runs."""
    while True:
        v = (rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
        r = math.hypot(*v)
        if r > 1e-3:
            return MVector(v[0] / r, v[1] / r, v[2] / r)

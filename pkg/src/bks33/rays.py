"""Projective rays in complex 3-space, generic over exact and float scalars."""

from __future__ import annotations

from dataclasses import dataclass, field

from .scalar import DEFAULT_TOL, ExactComplex, RealScalar, Scalar, abs2, to_approx


@dataclass(frozen=True)
class Ray:
    """A nonzero vector in C^3, meaningful only up to complex rescaling.

    Components are stored verbatim (unnormalized); ``index`` is an optional
    1-based catalog label.
    """

    components: tuple[Scalar, Scalar, Scalar]
    index: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.components) != 3:
            raise ValueError("a ray needs exactly 3 components")
        if not any(bool(c) for c in self.components):
            raise ValueError("a ray must have a nonzero component")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, ExactComplex) for c in self.components)

    def to_approx(self) -> Ray:
        return Ray(tuple(to_approx(c) for c in self.components), self.index)


def inner(a: Ray, b: Ray) -> Scalar:
    """Hermitian inner product, conjugate-linear in the FIRST argument.

    All quantities derived here depend only on magnitudes, so the side of
    conjugation is a pure convention; it is fixed once and documented.
    """
    x, y = a.components, b.components
    return (
        x[0].conjugate() * y[0]
        + x[1].conjugate() * y[1]
        + x[2].conjugate() * y[2]
    )


def norm2(a: Ray) -> RealScalar:
    return abs2(a.components[0]) + abs2(a.components[1]) + abs2(a.components[2])


def overlap2(a: Ray, b: Ray) -> RealScalar:
    """Normalized squared overlap |<a|b>|^2 / (<a|a><b|b>) in [0, 1].

    Invariant under independent nonzero rescaling of either ray; exact when
    both rays are exact.
    """
    return abs2(inner(a, b)) / (norm2(a) * norm2(b))


def is_orthogonal(a: Ray, b: Ray, tol: float = DEFAULT_TOL) -> bool:
    """Exact zero test for exact rays; overlap2 < tol^2 for float rays."""
    if a.is_exact and b.is_exact:
        return not inner(a, b)
    return overlap2(a, b) < tol * tol


def proportional(a: Ray, b: Ray, tol: float = DEFAULT_TOL) -> bool:
    """Projective equality: true iff one ray is a nonzero multiple of the other.

    Equivalent to overlap2(a, b) == 1; the exact path tests the vanishing of
    the three 2x2 minors instead, which avoids divisions.
    """
    x, y = a.components, b.components
    if a.is_exact and b.is_exact:
        return (
            not (x[0] * y[1] - x[1] * y[0])
            and not (x[0] * y[2] - x[2] * y[0])
            and not (x[1] * y[2] - x[2] * y[1])
        )
    return abs(overlap2(a, b) - 1) < tol

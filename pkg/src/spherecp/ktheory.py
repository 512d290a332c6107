"""Coefficient objects for the K-theory of even spheres.

Three small exact types live here:

* :class:`TruncPoly` -- the rank-2 ring of truncated polynomials
  ``z + z1*λ`` with ``λ² = 0``, which is the K-ring of an even sphere;
* :class:`DadicScalar` -- rationals whose denominator is a power of a
  fixed base ``d``, kept in a canonical form so equality is decidable by
  comparing fields;
* :class:`Delta1Class` -- the grade-one invariant of the algebra of a
  bundle, packaged as an explicit integer matrix.  The invariant really
  acts on (sphere K-group) ⊗ (base-d scalars), but the action on the
  scalar tensor factor is the identity, so only the integer matrix and
  the base are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .fgab import IntMatrix

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, annotation only
    from .bundles import SphereBundleSpec

__all__ = [
    "TruncPoly",
    "DadicScalar",
    "Delta1Class",
    "tensor_endo_matrix",
    "dadic_normalize",
    "dadic_eq",
    "delta1_class",
]


@dataclass(frozen=True)
class TruncPoly:
    """Element ``z + z1*λ`` of Z[λ]/(λ²), the K-ring of an even sphere.

    ``z`` is the rank part (the image in K-theory of a point) and ``z1``
    the reduced part supported on the top cell.

    >>> TruncPoly(2, 1) * TruncPoly(3, 1)
    TruncPoly(z=6, z1=5)
    """

    z: int = 0
    z1: int = 0

    def __post_init__(self):
        for name in ("z", "z1"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be int, got {type(v).__name__}")

    def __add__(self, other: "TruncPoly") -> "TruncPoly":
        return TruncPoly(self.z + other.z, self.z1 + other.z1)

    def __sub__(self, other: "TruncPoly") -> "TruncPoly":
        return TruncPoly(self.z - other.z, self.z1 - other.z1)

    def __neg__(self) -> "TruncPoly":
        return TruncPoly(-self.z, -self.z1)

    def __mul__(self, other: "TruncPoly") -> "TruncPoly":
        # (a + bλ)(c + eλ) = ac + (ae + bc)λ since λ² = 0
        return TruncPoly(self.z * other.z, self.z * other.z1 + self.z1 * other.z)

    def __str__(self) -> str:
        if self.z == 0 and self.z1 == 0:
            return "0"
        parts: list[str] = []
        if self.z:
            parts.append(str(self.z))
        if self.z1:
            mag = abs(self.z1)
            term = "λ" if mag == 1 else f"{mag}·λ"
            if not parts:
                parts.append(term if self.z1 > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if self.z1 > 0 else f"- {term}")
        return " ".join(parts)


def tensor_endo_matrix(kclass: TruncPoly) -> IntMatrix:
    """Matrix, in the ordered basis (1, λ), of multiplication by ``kclass``.

    Multiplication by ``d + cλ`` sends ``z + z1λ`` to ``dz + (cz + dz1)λ``,
    i.e. the matrix [[d, 0], [c, d]].  Constant term below 2 is rejected:
    line bundles and rank-0 classes are outside the supported calculus.
    """
    d, c = kclass.z, kclass.z1
    if d < 2:
        raise ValueError(f"class rank must be at least 2, got {d}")
    return IntMatrix.from_rows([[d, 0], [c, d]])


@dataclass(frozen=True)
class DadicScalar:
    """Rational ``numerator / base**exponent`` with a fixed base >= 2.

    Canonical form: exponent 0, or a numerator the base does not divide.
    Note the base may be composite, so canonical does NOT mean the
    fraction is fully reduced -- 4/6 stays 4/6 in base 6.

    >>> DadicScalar(3, 9, 1).normalized()
    DadicScalar(base=3, numerator=3, exponent=0)
    """

    base: int
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        if self.exponent < 0:
            raise ValueError(f"exponent must be nonnegative, got {self.exponent}")

    def normalized(self) -> "DadicScalar":
        """Cancel factors of the base until the representation is canonical."""
        num, k = self.numerator, self.exponent
        while k > 0 and num % self.base == 0:
            num //= self.base
            k -= 1
        return DadicScalar(self.base, num, k)

    @property
    def is_canonical(self) -> bool:
        return self.exponent == 0 or self.numerator % self.base != 0

    def value(self) -> Fraction:
        return Fraction(self.numerator, self.base**self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{self.base}^{self.exponent}"


def dadic_normalize(x: DadicScalar) -> DadicScalar:
    return x.normalized()


def dadic_eq(x: DadicScalar, y: DadicScalar) -> bool:
    """Equality of base-d scalars; mixing bases is a caller error."""
    if x.base != y.base:
        raise ValueError(f"mismatched scalar bases: {x.base} vs {y.base}")
    return x.normalized() == y.normalized()


@dataclass(frozen=True)
class Delta1Class:
    """Grade-one invariant of a bundle algebra over a sphere.

    Over an even sphere this is the 2x2 matrix of multiplication by the
    K-class on the sphere K-ring; over an odd sphere the K-ring is Z and
    the matrix collapses to the 1x1 matrix [rank].  The base-d scalar
    tensor factor is implicit (the invariant acts on it as the identity),
    which keeps every comparison inside integer matrices.
    """

    sphere_dim: int
    base: int
    matrix: IntMatrix

    def __post_init__(self):
        if self.sphere_dim < 1:
            raise ValueError(f"sphere dimension must be >= 1, got {self.sphere_dim}")
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        m = self.matrix
        if self.sphere_dim % 2 == 0:
            ok = (
                (m.rows, m.cols) == (2, 2)
                and m[0, 0] == self.base
                and m[1, 1] == self.base
                and m[0, 1] == 0
            )
            if not ok:
                raise ValueError("even-sphere invariant must be [[d, 0], [c, d]] with d = base")
        else:
            if (m.rows, m.cols) != (1, 1) or m[0, 0] != self.base:
                raise ValueError("odd-sphere invariant must be the 1x1 matrix [base]")

    def __str__(self) -> str:
        return f"{self.matrix.to_text()} base={self.base}"


def delta1_class(spec: "SphereBundleSpec") -> Delta1Class:
    """Grade-one invariant of the algebra attached to a validated bundle spec.

    Even sphere: multiplication by ``rank + euler·λ``; the trivial class
    gives ``rank`` times the identity.  Odd sphere: the 1x1 matrix [rank].
    """
    from .bundles import k_class, validate  # local import: bundles depends on this module

    validate(spec)
    if spec.sphere_dim % 2 == 0:
        matrix = tensor_endo_matrix(k_class(spec))
    else:
        matrix = IntMatrix.from_rows([[spec.rank]])
    return Delta1Class(sphere_dim=spec.sphere_dim, base=spec.rank, matrix=matrix)

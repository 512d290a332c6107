"""K-groups of the bundle algebra, computed two independent ways.

The main route presents both K-groups of the algebra of sections from a
single integer matrix: the identity minus the endomorphism "tensor with
the bundle" acting on the K-group of the base sphere.  K0 is the
cokernel of that matrix and K1 its kernel -- the kernel is *computed*,
never assumed trivial, even though injectivity makes it vanish for every
admissible rank.

For the trivial bundle over an even sphere there is a second, closed-form
route (a Künneth-style product formula) exposed as
:func:`k_groups_trivial`; the test-suite insists the two routes agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import (
    BundleSpecError,
    NonpositiveDimension,
    RankTooSmall,
    SphereBundleSpec,
    k_class,
    validate,
)
from .fgab import FgAbGroup, IntMatrix, cokernel, kernel
from .ktheory import tensor_endo_matrix

__all__ = [
    "KGroupPair",
    "EvenSphereRequired",
    "pimsner_matrix",
    "k_groups",
    "k_groups_trivial",
]


class EvenSphereRequired(BundleSpecError):
    """The closed-form trivial-bundle formula only covers even spheres."""


@dataclass(frozen=True)
class KGroupPair:
    """K0 and K1 of a bundle algebra plus a note naming the computation path."""

    k0: FgAbGroup
    k1: FgAbGroup
    note: str = ""


def pimsner_matrix(spec: SphereBundleSpec) -> IntMatrix:
    """Presentation matrix of the K-groups: identity minus tensor-by-the-bundle.

    Even sphere S^2n: the sphere K-group is Z², multiplication by the class
    d + c·λ is [[d, 0], [c, d]], so the presentation is
    [[1-d, 0], [-c, 1-d]].  Odd sphere: the K-group is Z, the class acts as
    the rank, presentation [1-d].
    """
    validate(spec)
    d = spec.rank
    if spec.sphere_dim % 2 == 0:
        return IntMatrix.identity(2) - tensor_endo_matrix(k_class(spec))
    return IntMatrix.from_rows([[1 - d]])


def k_groups(spec: SphereBundleSpec) -> KGroupPair:
    """Both K-groups of the bundle algebra, from the presentation matrix.

    K0 = cokernel, K1 = kernel.  Since the rank is at least 2 the matrix
    is injective and K1 comes out trivial, but that is an output of the
    computation, not an input.
    """
    mat = pimsner_matrix(spec)
    parity = "even" if spec.sphere_dim % 2 == 0 else "odd"
    note = (
        f"{parity} sphere S^{spec.sphere_dim}: K0 = coker, K1 = ker of the "
        f"presentation matrix [{mat.to_text()}] (identity minus tensor endomorphism)"
    )
    return KGroupPair(k0=cokernel(mat), k1=kernel(mat), note=note)


def k_groups_trivial(sphere_dim: int, rank: int) -> KGroupPair:
    """Closed form for the trivial rank-d bundle over an even sphere.

    The algebra is then a product of the sphere with a fixed fiber
    algebra, and a Künneth-style formula gives
    K0 = Z/(d-1) + Z/(d-1), K1 = 0 directly -- no normal form involved.
    This is the cross-check route for ``k_groups`` at euler 0.
    """
    if not isinstance(sphere_dim, int) or isinstance(sphere_dim, bool):
        raise BundleSpecError("sphere_dim must be an integer")
    if sphere_dim < 1:
        raise NonpositiveDimension(f"sphere dimension must be >= 1, got {sphere_dim}")
    if sphere_dim % 2 == 1:
        raise EvenSphereRequired(
            f"closed-form trivial-bundle K-groups need an even sphere, got S^{sphere_dim}"
        )
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 2:
        raise RankTooSmall(f"fiber rank must be >= 2, got {rank}")
    t = rank - 1
    return KGroupPair(
        k0=FgAbGroup.from_factors([t, t]),
        k1=FgAbGroup(),
        note=(
            f"trivial rank-{rank} bundle over S^{sphere_dim}: product formula "
            f"K0 = Z/{t} + Z/{t}, K1 = 0"
        ),
    )

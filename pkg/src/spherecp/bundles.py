"""Input model: a vector bundle over a sphere, given by K-class data.

A bundle enters the calculus through three integers: the sphere
dimension ``n``, the fiber rank ``d`` (at least 2 -- line bundles are
out of scope), and an ``euler_param`` c giving the coefficient of the
reduced generator in the bundle's K-class ``d + c·λ``.  Over odd
spheres the reduced K-group vanishes, so c must be 0 there.

The name ``euler_param`` is deliberate: c parametrizes the K-class, and
nothing here decides whether an honest geometric bundle realizes that
class over the given sphere.  Reports downstream repeat this caveat.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .ktheory import TruncPoly

__all__ = [
    "SphereBundleSpec",
    "BundleSpecError",
    "NonpositiveDimension",
    "RankTooSmall",
    "OddSphereNonzeroClass",
    "SpecFormatError",
    "validate",
    "k_class",
    "parse_spec",
    "load_spec",
    "spec_to_dict",
]


class BundleSpecError(ValueError):
    """A bundle spec violates the domain restrictions."""


class NonpositiveDimension(BundleSpecError):
    pass


class RankTooSmall(BundleSpecError):
    pass


class OddSphereNonzeroClass(BundleSpecError):
    pass


class SpecFormatError(ValueError):
    """Bundle spec text is not well-formed (distinct from domain errors)."""


@dataclass(frozen=True)
class SphereBundleSpec:
    sphere_dim: int
    rank: int
    euler_param: int = 0


def validate(spec: SphereBundleSpec) -> SphereBundleSpec:
    """Check the domain restrictions; returns its argument unchanged on success."""
    if not isinstance(spec.sphere_dim, int) or isinstance(spec.sphere_dim, bool):
        raise SpecFormatError("sphere_dim must be an integer")
    if not isinstance(spec.rank, int) or isinstance(spec.rank, bool):
        raise SpecFormatError("rank must be an integer")
    if not isinstance(spec.euler_param, int) or isinstance(spec.euler_param, bool):
        raise SpecFormatError("euler parameter must be an integer")
    if spec.sphere_dim < 1:
        raise NonpositiveDimension(f"sphere dimension must be >= 1, got {spec.sphere_dim}")
    if spec.rank < 2:
        raise RankTooSmall(f"fiber rank must be >= 2, got {spec.rank}")
    if spec.sphere_dim % 2 == 1 and spec.euler_param != 0:
        raise OddSphereNonzeroClass(
            f"S^{spec.sphere_dim} has trivial reduced K-theory, so the class of a "
            f"bundle is its rank; euler parameter must be 0, got {spec.euler_param}"
        )
    return spec


def k_class(spec: SphereBundleSpec) -> TruncPoly:
    """K-class ``rank + euler_param·λ`` of the bundle (validates first).

    For odd spheres the λ coefficient is forced to 0 by validation, so the
    class degenerates to the bare rank.
    """
    validate(spec)
    return TruncPoly(spec.rank, spec.euler_param)


def parse_spec(text: str) -> SphereBundleSpec:
    """Parse a JSON bundle spec: {"sphere_dim": n, "rank": d, "euler": c}.

    ``euler`` is optional and defaults to 0.  Unknown fields are rejected
    to catch typos early.  The result is *parsed*, not validated -- run
    :func:`validate` (or any operation, they all validate) afterwards.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"bundle spec is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise SpecFormatError("bundle spec must be a JSON object")
    unknown = sorted(set(raw) - {"sphere_dim", "rank", "euler"})
    if unknown:
        raise SpecFormatError(f"unknown bundle spec fields: {', '.join(unknown)}")
    for field in ("sphere_dim", "rank"):
        if field not in raw:
            raise SpecFormatError(f"bundle spec is missing required field '{field}'")
    for field in ("sphere_dim", "rank", "euler"):
        if field in raw and (not isinstance(raw[field], int) or isinstance(raw[field], bool)):
            raise SpecFormatError(f"bundle spec field '{field}' must be an integer")
    return SphereBundleSpec(raw["sphere_dim"], raw["rank"], raw.get("euler", 0))


def load_spec(path: str | Path) -> SphereBundleSpec:
    """Read a JSON bundle spec from a file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFormatError(f"cannot read bundle spec file: {exc}") from None
    return parse_spec(text)


def spec_to_dict(spec: SphereBundleSpec) -> dict:
    """Echo a spec in the same shape the JSON file format uses."""
    return {"sphere_dim": spec.sphere_dim, "rank": spec.rank, "euler": spec.euler_param}

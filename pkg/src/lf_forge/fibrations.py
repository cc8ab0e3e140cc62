"""Lefschetz fibrations over the sphere and the surface bundles glued from them.

Two families are modelled:

* ``X(h, k)``: genus ``h + k`` fibrations from a positive factorization of
  ``theta**2 = 1``; only their counts and characteristic numbers are used.
* ``E(n)_K``: knot-surgered elliptic surfaces with the genus ``2g + n - 1``
  fibration, where ``g`` is the genus of the fibered knot ``K``.

Gluing two equivalent fibrations along the complements of their singular
fibers yields a surface bundle over a surface of genus ``s - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyViolation, NOrderTooSmall, NotEquivalent, ParamOutOfRange
from .invariants import CharNumbers, from_chi_c1, from_e_sigma

__all__ = [
    "FibrationDescriptor",
    "SurfaceBundle",
    "x_family",
    "elliptic_surface",
    "knot_surgered_fibration",
    "equivalent",
    "glue_difference",
]


def euler_char_surface(genus: int) -> int:
    return 2 - 2 * genus


@dataclass(frozen=True)
class FibrationDescriptor:
    fiber_genus: int
    singular_fibers: int
    all_nonseparating: bool
    total: CharNumbers
    label: str = ""
    base: str = field(default="sphere")

    def __post_init__(self):
        if self.fiber_genus < 1:
            raise ParamOutOfRange(f"fiber genus must be >= 1, got {self.fiber_genus}")
        if self.singular_fibers < 0:
            raise ParamOutOfRange(f"negative singular fiber count {self.singular_fibers}")
        if self.base != "sphere":
            raise ParamOutOfRange(f"only fibrations over the sphere are modelled, got {self.base!r}")
        # e(X) = e(S^2) e(F) + s
        expected = 2 * euler_char_surface(self.fiber_genus) + self.singular_fibers
        if self.total.e != expected:
            raise ConsistencyViolation(
                f"{self.label or 'fibration'}: e={self.total.e} but "
                f"2(2-2g)+s={expected}"
            )

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "base": self.base,
            "fiber_genus": self.fiber_genus,
            "singular_fibers": self.singular_fibers,
            "all_nonseparating": self.all_nonseparating,
            "total": self.total.as_dict(),
        }


@dataclass(frozen=True)
class SurfaceBundle:
    fiber_genus: int
    base_genus: int
    e: int
    sigma: int
    label: str = ""

    def __post_init__(self):
        product = euler_char_surface(self.base_genus) * euler_char_surface(self.fiber_genus)
        if self.e != product:
            raise ConsistencyViolation(
                f"{self.label or 'bundle'}: e={self.e} is not e(base)*e(fiber)={product}"
            )

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "fiber_genus": self.fiber_genus,
            "base_genus": self.base_genus,
            "e": self.e,
            "sigma": self.sigma,
        }


def x_family(h: int, k: int) -> FibrationDescriptor:
    """The Gurtas-type fibration ``X(h, k)`` of genus ``h + k``.

    Requires ``h >= 2`` and ``k >= 2`` even. The signature ``-4(h+1)`` is
    taken as given; every other number follows from ``e`` and ``sigma``.
    """
    if h < 2:
        raise ParamOutOfRange(f"X(h,k) needs h >= 2, got h={h}")
    if k < 2 or k % 2:
        raise ParamOutOfRange(f"X(h,k) needs k >= 2 even, got k={k}")
    total = from_e_sigma(8 + 4 * h - 2 * k, -4 * (h + 1))
    if total.chi_h != 1 - k // 2 or total.c1_sq != -4 * (h + k - 1):
        raise ConsistencyViolation(f"X({h},{k}): closed forms for chi_h, c1^2 disagree with {total}")
    return FibrationDescriptor(
        fiber_genus=h + k,
        singular_fibers=8 * h + 2 * k + 4,
        all_nonseparating=True,
        total=total,
        label=f"X({h},{k})",
    )


def elliptic_surface(n: int) -> CharNumbers:
    """Characteristic numbers of ``E(n)``, which knot surgery leaves unchanged."""
    if n < 1:
        raise ParamOutOfRange(f"E(n) needs n >= 1, got n={n}")
    return from_chi_c1(n, 0)


def knot_surgered_fibration(n: int, g: int) -> FibrationDescriptor:
    """Genus ``2g + n - 1`` Lefschetz fibration on ``E(n)_K`` for a fibered knot of genus ``g``.

    Only ``n >= 2`` is accepted, since only then are the singular fibers
    known to be irreducible (hence nonseparating).
    """
    if n < 2:
        raise NOrderTooSmall(f"E(n)_K fibration needs n >= 2 for nonseparating fibers, got n={n}")
    if g < 0:
        raise ParamOutOfRange(f"knot genus must be >= 0, got g={g}")
    fiber_genus = 2 * g + n - 1
    if fiber_genus < 1:
        raise ParamOutOfRange(f"fiber genus 2g+n-1={fiber_genus} < 1")
    return FibrationDescriptor(
        fiber_genus=fiber_genus,
        singular_fibers=16 * n + 8 * g - 8,
        all_nonseparating=True,
        total=elliptic_surface(n),
        label=f"E({n})_K[g={g}]",
    )


def equivalent(f1: FibrationDescriptor, f2: FibrationDescriptor) -> bool:
    """Same fiber genus, same number of singular fibers, all nonseparating."""
    return (
        f1.fiber_genus == f2.fiber_genus
        and f1.singular_fibers == f2.singular_fibers
        and f1.all_nonseparating
        and f2.all_nonseparating
    )


def glue_difference(f1: FibrationDescriptor, f2: FibrationDescriptor) -> SurfaceBundle:
    """The surface bundle ``Y = X1 - X2`` over ``Sigma_{s-1}``.

    Signature is ``sigma(X1) - sigma(X2)``. The Euler characteristic is
    computed by cutting out the ``s`` singular-fiber neighbourhoods (each
    with ``e = 3 - 2g'``) from both sides and must agree with the bundle
    product formula.
    """
    if not equivalent(f1, f2):
        raise NotEquivalent(
            f"{f1.label or 'f1'} (genus {f1.fiber_genus}, s={f1.singular_fibers}) and "
            f"{f2.label or 'f2'} (genus {f2.fiber_genus}, s={f2.singular_fibers}) are not equivalent"
        )
    s = f1.singular_fibers
    if s < 1:
        raise ParamOutOfRange("gluing needs at least one singular fiber")
    fg = f1.fiber_genus
    e_cut = f1.total.e + f2.total.e - 2 * s * (3 - 2 * fg)
    e_product = euler_char_surface(s - 1) * euler_char_surface(fg)
    if e_cut != e_product:
        raise ConsistencyViolation(
            f"gluing {f1.label} and {f2.label}: e by cut-and-paste {e_cut} != product {e_product}"
        )
    return SurfaceBundle(
        fiber_genus=fg,
        base_genus=s - 1,
        e=e_product,
        sigma=f1.total.sigma - f2.total.sigma,
        label=f"{f1.label or 'X1'} - {f2.label or 'X2'}",
    )

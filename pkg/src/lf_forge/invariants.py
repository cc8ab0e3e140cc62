"""Characteristic numbers of closed oriented 4-manifolds.

The quadruple ``(e, sigma, chi_h, c1_sq)`` is redundant: any two of
``e, sigma`` or ``chi_h, c1_sq`` determine the rest via

    chi_h = (e + sigma) / 4,    c1_sq = 3 * sigma + 2 * e.

``chi_h`` is kept as a :class:`fractions.Fraction` so non-lattice points
can be represented; :attr:`CharNumbers.integral_chi` flags them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ConsistencyViolation, GenusOutOfRange, NonIntegralInvariant

__all__ = ["CharNumbers", "from_e_sigma", "from_chi_c1", "fiber_sum"]


@dataclass(frozen=True)
class CharNumbers:
    e: int
    sigma: int
    chi_h: Fraction
    c1_sq: int

    def __post_init__(self):
        chi = self.chi_h
        if type(chi) is not Fraction:
            chi = Fraction(chi)
            object.__setattr__(self, "chi_h", chi)
        if 4 * chi.numerator != (self.e + self.sigma) * chi.denominator:
            raise ConsistencyViolation(f"chi_h != (e + sigma)/4 in {self!r}")
        if self.c1_sq != 3 * self.sigma + 2 * self.e:
            raise ConsistencyViolation(f"c1_sq != 3 sigma + 2 e in {self!r}")

    @property
    def integral_chi(self) -> bool:
        return self.chi_h.denominator == 1

    def as_dict(self) -> dict:
        return {
            "e": self.e,
            "sigma": self.sigma,
            "chi_h": {"num": self.chi_h.numerator, "den": self.chi_h.denominator},
            "c1_sq": self.c1_sq,
        }


def from_e_sigma(e: int, sigma: int) -> CharNumbers:
    """Build the quadruple from Euler characteristic and signature.

    Never fails: a non-integral ``chi_h`` is flagged via ``integral_chi``.

    >>> from_e_sigma(12, -8)
    CharNumbers(e=12, sigma=-8, chi_h=Fraction(1, 1), c1_sq=0)
    """
    e, sigma = int(e), int(sigma)
    return CharNumbers(e, sigma, Fraction(e + sigma, 4), 3 * sigma + 2 * e)


def from_chi_c1(chi_h: Rational | int | str, c1_sq: int) -> CharNumbers:
    """Inverse of :func:`from_e_sigma`: ``e = 12 chi - c1^2``, ``sigma = c1^2 - 8 chi``."""
    chi = Fraction(chi_h)
    c1_sq = int(c1_sq)
    # e and sigma are integral iff 4 chi is
    if chi.denominator not in (1, 2, 4):
        raise NonIntegralInvariant(
            f"(chi_h={chi}, c1_sq={c1_sq}) gives e={12 * chi - c1_sq}, sigma={c1_sq - 8 * chi}"
        )
    scaled = chi.numerator * (4 // chi.denominator)
    return CharNumbers(3 * scaled - c1_sq, c1_sq - 2 * scaled, chi, c1_sq)


def fiber_sum(x: CharNumbers, y: CharNumbers, g: int) -> CharNumbers:
    """Characteristic numbers of the fiber sum of ``x`` and ``y`` along a genus-``g`` surface.

    Computed from the Chern-number formulas and cross-checked against
    additivity of ``e`` (minus ``2 e(Sigma_g)``) and ``sigma``.
    """
    if g < 1:
        raise GenusOutOfRange(f"fiber sum needs a surface of genus >= 1, got {g}")
    out = from_chi_c1(x.chi_h + y.chi_h + (g - 1), x.c1_sq + y.c1_sq + 8 * (g - 1))
    e = x.e + y.e - 2 * (2 - 2 * g)
    sigma = x.sigma + y.sigma
    if (out.e, out.sigma) != (e, sigma):
        raise ConsistencyViolation(f"fiber sum routes disagree: {out} vs e={e}, sigma={sigma}")
    return out

"""Parameter search for surface bundles with non-zero signature.

A solution is a quadruple ``(h, k, n, g)`` with ``h >= 2``, ``k >= 2`` even,
``n >= 2``, ``g >= 1`` and

    h + k = n + 2g - 1,        8 + 4h - 2k = 12n,

so that ``X(h, k)`` and ``E(n)_K`` (``K`` fibered of genus ``g``) carry
equivalent Lefschetz fibrations. Gluing them gives a bundle with fiber
genus ``h + k``, base genus ``8h + 2k + 3`` and signature ``8n - 4(h+1)``.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import BadRange, ConsistencyViolation, ParamOutOfRange, RangeTooSmall
from .fibrations import SurfaceBundle, glue_difference, knot_surgered_fibration, x_family

__all__ = [
    "ParamSolution",
    "GeographyPoint",
    "solve_params",
    "construct_bundle",
    "nonzero_signature_filter",
    "geography_emit",
    "SOLUTION_COLUMNS",
    "GEOGRAPHY_COLUMNS",
    "solution_row",
    "geography_row",
    "ClaimCheck",
    "COROLLARIES",
    "verify_corollary",
]

SOLUTION_COLUMNS = (
    "h", "k", "n", "g", "fiber_genus", "base_genus", "sigma", "sigma_mirror", "s_singular_fibers",
)
GEOGRAPHY_COLUMNS = ("tag", "chi_num", "chi_den", "c1sq_num", "c1sq_den", "chi_dec", "c1sq_dec")

LATTICE = "lattice_manifold"
LINE_8CHI = "line_8chi"
LINE_12CHI = "line_12chi_minus_e"
GEOGRAPHY_TAGS = (LATTICE, LINE_8CHI, LINE_12CHI)


def _violations(h: int, k: int, n: int, g: int) -> list[str]:
    out = []
    if h < 2:
        out.append("h >= 2")
    if k < 2 or k % 2:
        out.append("k >= 2 even")
    if h + k != n + 2 * g - 1:
        out.append("h + k = n + 2g - 1")
    if 8 + 4 * h - 2 * k != 12 * n:
        out.append("8 + 4h - 2k = 12n")
    if n < 2:
        out.append("n >= 2")
    if g < 1:
        out.append("g >= 1")
    return out


@dataclass(frozen=True, order=True)
class ParamSolution:
    h: int
    k: int
    n: int
    g: int

    def __post_init__(self):
        bad = _violations(self.h, self.k, self.n, self.g)
        if bad:
            raise ParamOutOfRange(f"{tuple(self)} violates: {', '.join(bad)}")

    def __iter__(self):
        return iter((self.h, self.k, self.n, self.g))

    @property
    def sigma(self) -> int:
        return 8 * self.n - 4 * (self.h + 1)

    @property
    def sigma_mirror(self) -> int:
        """Signature with the two building blocks interchanged."""
        return -self.sigma

    @property
    def fiber_genus(self) -> int:
        return self.h + self.k

    @property
    def base_genus(self) -> int:
        return 8 * self.h + 2 * self.k + 3

    @property
    def singular_fibers(self) -> int:
        return 8 * self.h + 2 * self.k + 4


def _solve_cell(h: int, k: int) -> ParamSolution | None:
    if k % 2:
        return None
    q, r = divmod(h - k // 2 + 2, 3)
    if r or q < 2:
        return None
    n = q
    m = h + k - n + 1
    if m <= 0 or m % 2:
        return None
    return ParamSolution(h, k, n, m // 2)


def _solve_rows(h_values: Iterable[int], k_max: int) -> list[ParamSolution]:
    out = []
    for h in h_values:
        for k in range(2, k_max + 1):
            sol = _solve_cell(h, k)
            if sol is not None:
                out.append(sol)
    return out


def solve_params(h_max: int, k_max: int, workers: int = 1) -> list[ParamSolution]:
    """All solutions with ``2 <= h <= h_max`` and ``2 <= k <= k_max``, ordered by ``(h, k)``.

    Exhaustive over the grid. With ``workers > 1`` rows of the grid are
    farmed out to processes; the merged result is identical to the serial one.
    """
    if h_max < 2 or k_max < 2:
        raise RangeTooSmall(f"need h_max >= 2 and k_max >= 2, got ({h_max}, {k_max})")
    hs = list(range(2, h_max + 1))
    if workers <= 1 or len(hs) < 2 * workers:
        return _solve_rows(hs, k_max)
    chunks = [hs[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_solve_rows, chunks, [k_max] * workers)
        merged = [sol for part in parts for sol in part]
    return sorted(merged, key=lambda s: (s.h, s.k))


def construct_bundle(sol: ParamSolution) -> SurfaceBundle:
    """Glue ``X(h, k)`` to ``E(n)_K`` and check the result against the closed forms."""
    x1 = x_family(sol.h, sol.k)
    x2 = knot_surgered_fibration(sol.n, sol.g)
    bundle = glue_difference(x1, x2)
    expected = (sol.fiber_genus, sol.base_genus, sol.sigma)
    got = (bundle.fiber_genus, bundle.base_genus, bundle.sigma)
    if got != expected:
        raise ConsistencyViolation(
            f"Y({sol.h},{sol.k}): glued (fiber, base, sigma)={got}, closed form {expected}"
        )
    return SurfaceBundle(
        bundle.fiber_genus, bundle.base_genus, bundle.e, bundle.sigma, label=f"Y({sol.h},{sol.k})"
    )


def nonzero_signature_filter(sols: Iterable[ParamSolution]) -> list[ParamSolution]:
    """Keep solutions with ``8n - 4(h+1) != 0``, i.e. ``2n != h + 1``.

    Each kept solution also carries its mirrored signature via
    :attr:`ParamSolution.sigma_mirror`.
    """
    return [s for s in sols if s.sigma != 0]


def solution_row(sol: ParamSolution) -> dict:
    bundle = construct_bundle(sol)
    return {
        "h": sol.h,
        "k": sol.k,
        "n": sol.n,
        "g": sol.g,
        "fiber_genus": bundle.fiber_genus,
        "base_genus": bundle.base_genus,
        "sigma": bundle.sigma,
        "sigma_mirror": -bundle.sigma,
        "s_singular_fibers": bundle.base_genus + 1,
    }


# -- geography ---------------------------------------------------------------


@dataclass(frozen=True)
class GeographyPoint:
    chi_h: Fraction
    c1_sq: Fraction
    tag: str

    def __post_init__(self):
        if self.tag not in GEOGRAPHY_TAGS:
            raise ValueError(f"unknown geography tag {self.tag!r}")
        object.__setattr__(self, "chi_h", Fraction(self.chi_h))
        object.__setattr__(self, "c1_sq", Fraction(self.c1_sq))


def _samples(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    if out[-1] != hi:
        out.append(hi)
    return out


def geography_emit(h: int, k: int, chi_min, chi_max, step) -> list[GeographyPoint]:
    """Sample the two lines through ``X(h, k)`` plus the relevant lattice points.

    Lines: ``c1^2 = 8 chi - 4(h+1)`` and ``c1^2 = 12 chi - e(X(h,k))``,
    sampled from ``chi_min`` by ``step`` with ``chi_max`` always included.
    Lattice points: ``(n, 0)`` for integers ``n >= 1`` in range, then
    ``(b, a) = (1 - k/2, -4(h+k-1))``.
    """
    lo, hi, step = Fraction(chi_min), Fraction(chi_max), Fraction(step)
    if lo > hi:
        raise BadRange(f"chi_min {lo} > chi_max {hi}")
    if step <= 0:
        raise BadRange(f"step must be positive, got {step}")
    x1 = x_family(h, k)
    e = x1.total.e
    xs = _samples(lo, hi, step)
    points = [GeographyPoint(x, 8 * x - 4 * (h + 1), LINE_8CHI) for x in xs]
    points += [GeographyPoint(x, 12 * x - e, LINE_12CHI) for x in xs]
    first = max(1, -(-lo.numerator // lo.denominator))
    last = hi.numerator // hi.denominator
    points += [GeographyPoint(n, 0, LATTICE) for n in range(first, last + 1)]
    points.append(GeographyPoint(x1.total.chi_h, x1.total.c1_sq, LATTICE))
    return points


def geography_row(p: GeographyPoint) -> dict:
    return {
        "tag": p.tag,
        "chi_num": p.chi_h.numerator,
        "chi_den": p.chi_h.denominator,
        "c1sq_num": p.c1_sq.numerator,
        "c1sq_den": p.c1_sq.denominator,
        "chi_dec": f"{float(p.chi_h):.6f}",
        "c1sq_dec": f"{float(p.c1_sq):.6f}",
    }


def write_csv(rows: Iterable[dict], columns: tuple[str, ...], stream=None) -> str:
    buf = stream if stream is not None else io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue() if stream is None else ""


# -- corollary audit ---------------------------------------------------------


@dataclass(frozen=True)
class ClaimCheck:
    claim: str
    stated: object
    computed: object

    @property
    def match(self) -> bool:
        return self.stated == self.computed

    @property
    def status(self) -> str:
        return "MATCH" if self.match else "MISMATCH"


# Numbers as printed in the two corollaries: (h, k), claimed values.
COROLLARIES = {
    "4.2": {
        "h": 5, "k": 2, "n": 2, "knot_genus": 3,
        "fiber_genus": 7, "base_genus": 47, "sigma": -8,
        "singular_fibers": 48, "b_a": (0, -24), "chi_lattice": (2, 0),
    },
    "4.3": {
        "h": 8, "k": 2, "n": 3, "knot_genus": 4,
        "fiber_genus": 10, "base_genus": 75, "sigma": -12,
        "singular_fibers": 76, "b_a": (0, -36), "chi_lattice": (3, 0),
    },
}


def verify_corollary(cid: str) -> list[ClaimCheck]:
    """Recompute every numerical claim of a corollary from the general formulas."""
    try:
        stated = COROLLARIES[cid]
    except KeyError:
        raise KeyError(f"unknown corollary {cid!r}; known: {', '.join(sorted(COROLLARIES))}") from None
    h, k = stated["h"], stated["k"]
    sols = [s for s in solve_params(h, k) if (s.h, s.k) == (h, k)]
    if not sols:
        raise ConsistencyViolation(f"({h},{k}) is not a parameter solution")
    sol = sols[0]
    x1 = x_family(h, k)
    x2 = knot_surgered_fibration(sol.n, sol.g)
    bundle = construct_bundle(sol)
    s_both = (x1.singular_fibers, x2.singular_fibers)
    return [
        ClaimCheck("n (elliptic surface E(n))", stated["n"], sol.n),
        ClaimCheck("knot genus g", stated["knot_genus"], sol.g),
        ClaimCheck("fiber genus", stated["fiber_genus"], bundle.fiber_genus),
        ClaimCheck("base genus", stated["base_genus"], bundle.base_genus),
        ClaimCheck("signature sigma(Y)", stated["sigma"], bundle.sigma),
        ClaimCheck(
            "singular fibers (X(h,k), E(n)_K)",
            (stated["singular_fibers"],) * 2,
            s_both,
        ),
        ClaimCheck("(b, a) = (chi_h, c1^2) of X(h,k)", stated["b_a"], (int(x1.total.chi_h), x1.total.c1_sq)),
        ClaimCheck("(chi_h, c1^2) of E(n)_K", stated["chi_lattice"], (int(x2.total.chi_h), x2.total.c1_sq)),
    ]

"""Symplectic monodromy of Dehn-twist words and Meyer's signature cocycle.

Conventions (fixed, bit-exact):

* ``J = [[0, I_g], [-I_g, 0]]`` and ``<x, y> = x^T J y``.
* A right-handed twist along a curve of class ``c`` acts on ``H_1`` by the
  transvection ``x -> x + <x, c> c``.
* In a word, ``twists[0]`` acts first, so the total monodromy is
  ``A_s ... A_2 A_1`` (later twists multiply on the left).

The signature of a Lefschetz fibration over the sphere with only
nonseparating vanishing cycles is ``SIGNATURE_SIGN * sum_j tau(P_j, A_{j+1})``
with ``P_j = A_j ... A_1``. ``SIGNATURE_SIGN`` was calibrated once on
``(t_a t_b)^6`` (the elliptic surface ``E(1)``, signature ``-8``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from pathlib import Path
from typing import Sequence

from . import linalg
from .errors import (
    EmptyWord,
    GenusMismatch,
    NonTrivialMonodromy,
    NotPrimitive,
    NotSymplectic,
    WordParseError,
    ZeroVector,
)

__all__ = [
    "SIGNATURE_SIGN",
    "SympMatrix",
    "TwistWord",
    "standard_form",
    "pairing",
    "transvection",
    "word_product",
    "meyer_form",
    "meyer_tau",
    "signature_from_word",
    "parse_word",
    "load_word",
    "format_word",
    "parse_matrix",
]

# Frozen after calibration against sigma(E(1)) = -8; see tests/test_meyer.py.
SIGNATURE_SIGN = 1


def standard_form(g: int) -> tuple[tuple[int, ...], ...]:
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[i][g + i] = 1
        rows[g + i][i] = -1
    return tuple(tuple(r) for r in rows)


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """``<x, y> = x^T J y`` for vectors of even length ``2g``."""
    g = len(x) // 2
    return sum(x[i] * y[g + i] - x[g + i] * y[i] for i in range(g))


def _square(entries) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(v) for v in row) for row in entries)
    n = len(rows)
    if n == 0 or n % 2 or any(len(r) != n for r in rows):
        raise NotSymplectic(f"expected a square matrix of even size, got {n} rows")
    return rows


@dataclass(frozen=True)
class SympMatrix:
    """Integer ``2g x 2g`` matrix with ``M^T J M = J``; checked on construction."""

    g: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = _square(self.entries)
        object.__setattr__(self, "entries", entries)
        if len(entries) != 2 * self.g:
            raise GenusMismatch(f"{len(entries)}x{len(entries)} matrix is not of genus {self.g}")
        J = standard_form(self.g)
        if linalg.matmul(linalg.matmul(linalg.transpose(entries), J), entries) != [list(r) for r in J]:
            raise NotSymplectic(f"M^T J M != J for {entries}")

    @classmethod
    def from_rows(cls, rows) -> "SympMatrix":
        rows = _square(rows)
        return cls(len(rows) // 2, rows)

    @classmethod
    def identity(cls, g: int) -> "SympMatrix":
        n = 2 * g
        return cls(g, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def __matmul__(self, other: "SympMatrix") -> "SympMatrix":
        if not isinstance(other, SympMatrix):
            return NotImplemented
        if other.g != self.g:
            raise GenusMismatch(f"genus {self.g} @ genus {other.g}")
        return SympMatrix(self.g, tuple(tuple(r) for r in linalg.matmul(self.entries, other.entries)))

    def inverse(self) -> "SympMatrix":
        # M^{-1} = -J M^T J for symplectic M; stays integral.
        J = standard_form(self.g)
        inv = linalg.matmul(linalg.matmul(J, linalg.transpose(self.entries)), J)
        return SympMatrix(self.g, tuple(tuple(-v for v in row) for row in inv))

    def is_identity(self) -> bool:
        return self == SympMatrix.identity(self.g)

    def apply(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(row, x)) for row in self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        width = max(len(str(v)) for row in self.entries for v in row)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in self.entries)


def _check_vector(g: int, c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(int(v) for v in c)
    if len(c) != 2 * g:
        raise GenusMismatch(f"vector {c} has length {len(c)}, expected {2 * g}")
    if not any(c):
        raise ZeroVector("twist curve class must be nonzero")
    if reduce(gcd, c) != 1:
        raise NotPrimitive(f"{c} is not primitive (gcd {reduce(gcd, c)})")
    return c


@dataclass(frozen=True)
class TwistWord:
    """Right-handed Dehn twists given by homology classes, in application order."""

    g: int
    twists: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.g < 1:
            raise GenusMismatch(f"genus must be >= 1, got {self.g}")
        object.__setattr__(self, "twists", tuple(_check_vector(self.g, c) for c in self.twists))

    def __len__(self):
        return len(self.twists)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        if other.g != self.g:
            raise GenusMismatch(f"cannot concatenate words of genus {self.g} and {other.g}")
        return TwistWord(self.g, self.twists + other.twists)

    def __mul__(self, times: int) -> "TwistWord":
        return TwistWord(self.g, self.twists * times)


def transvection(g: int, c: Sequence[int]) -> SympMatrix:
    """Action of the right-handed twist along ``c``: ``x -> x + <x, c> c``."""
    c = _check_vector(g, c)
    # <x, c> = sum_j x_j (J c)_j
    Jc = [c[g + i] for i in range(g)] + [-c[i] for i in range(g)]
    n = 2 * g
    return SympMatrix(g, tuple(tuple(int(i == j) + c[i] * Jc[j] for j in range(n)) for i in range(n)))


def word_product(w: TwistWord) -> SympMatrix:
    """Total monodromy ``A_s ... A_1`` (``twists[0]`` acts first)."""
    if not w.twists:
        raise EmptyWord("word has no twists")
    total = SympMatrix.identity(w.g)
    for c in w.twists:
        total = transvection(w.g, c) @ total
    return total


def meyer_form(A: SympMatrix, B: SympMatrix):
    """Gram matrix of Meyer's form on ``V_{A,B}``, plus the basis of ``V_{A,B}``.

    ``V_{A,B} = {(x, y) : (A^{-1} - I) x + (B - I) y = 0}`` and the form is
    ``b((x1, y1), (x2, y2)) = (x1 + y1)^T J (I - B) y2``, symmetrized.
    """
    if A.g != B.g:
        raise GenusMismatch(f"tau of genus {A.g} and genus {B.g} matrices")
    n = 2 * A.g
    Ainv = A.inverse().entries
    Bm = B.entries
    constraint = [
        [Ainv[i][j] - (i == j) for j in range(n)] + [Bm[i][j] - (i == j) for j in range(n)]
        for i in range(n)
    ]
    basis = linalg.nullspace(constraint, 2 * n)
    J = standard_form(A.g)
    I_minus_B = [[(i == j) - Bm[i][j] for j in range(n)] for i in range(n)]
    JIB = linalg.matmul(J, I_minus_B)

    # b(u, v) = (x_u + y_u)^T (J (I - B)) y_v
    left = [[u[i] + u[n + i] for i in range(n)] for u in basis]
    right = [[sum(JIB[i][j] * v[n + j] for j in range(n)) for i in range(n)] for v in basis]
    raw = [[sum(a * b for a, b in zip(lu, rv)) for rv in right] for lu in left]
    half = Fraction(1, 2)
    gram = [[(raw[i][j] + raw[j][i]) * half for j in range(len(basis))] for i in range(len(basis))]
    return gram, basis


def meyer_tau(A: SympMatrix, B: SympMatrix) -> int:
    """Meyer's signature cocycle ``tau_g(A, B)``."""
    gram, _ = meyer_form(A, B)
    return linalg.signature(gram)


def signature_from_word(w: TwistWord) -> int:
    """Signature of the Lefschetz fibration over ``S^2`` with monodromy word ``w``.

    The word must multiply to the identity. All vanishing cycles are
    treated as nonseparating, so no local correction terms appear.
    """
    if not w.twists:
        raise EmptyWord("word has no twists")
    mats = [transvection(w.g, c) for c in w.twists]
    partial = mats[0]
    total = 0
    for m in mats[1:]:
        total += meyer_tau(partial, m)
        partial = m @ partial
    if not partial.is_identity():
        raise NonTrivialMonodromy("monodromy word does not multiply to the identity", product=partial)
    return SIGNATURE_SIGN * total


def parse_word(text: str) -> TwistWord:
    """Parse the line-based word format.

    Line 1 holds the genus ``g``; each further line holds ``2g`` integers
    (one twist class). Blank lines and ``#`` comments are skipped.
    """
    g = None
    twists = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise WordParseError(f"non-integer token in {line!r}", line=lineno) from None
        if g is None:
            if len(values) != 1 or values[0] < 1:
                raise WordParseError("first line must be a single positive genus", line=lineno)
            g = values[0]
            continue
        if len(values) != 2 * g:
            raise WordParseError(f"expected {2 * g} integers, got {len(values)}", line=lineno)
        try:
            twists.append(_check_vector(g, values))
        except (ZeroVector, NotPrimitive) as exc:
            raise WordParseError(str(exc), line=lineno) from None
    if g is None:
        raise WordParseError("missing genus line")
    return TwistWord(g, tuple(twists))


def load_word(path: str | Path) -> TwistWord:
    return parse_word(Path(path).read_text())


def format_word(w: TwistWord, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(str(w.g))
    lines.extend(" ".join(str(v) for v in c) for c in w.twists)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> SympMatrix:
    """Inline matrix: rows separated by ``;``, entries by spaces or commas."""
    rows = [
        [int(tok) for tok in row.replace(",", " ").split()]
        for row in text.split(";")
        if row.strip()
    ]
    return SympMatrix.from_rows(rows)


import random
from pathlib import Path

import pytest
import sympy

from lf_forge.meyer import SympMatrix, transvection

WORDS = Path(__file__).resolve().parents[1] / "src" / "lf_forge" / "words"

# name -> (criterion text, passed)
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, (text, ok, elapsed) in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({elapsed:.2f}s)  {text}")


@pytest.fixture
def words():
    return WORDS


def random_primitive(rng, g, bound=2):
    while True:
        v = [rng.randint(-bound, bound) for _ in range(2 * g)]
        if any(v) and sympy.igcd(*v) == 1:
            return v


def random_symplectic(rng, g, length=3):
    m = SympMatrix.identity(g)
    for _ in range(length):
        t = transvection(g, random_primitive(rng, g))
        if rng.random() < 0.3:
            t = t.inverse()
        m = t @ m
    return m


def sympy_tau(A, B):
    """Meyer's cocycle via sympy's nullspace and eigenvalues; independent of lf_forge.linalg."""
    g = A.g
    n = 2 * g
    Am = sympy.Matrix(A.tolist())
    Bm = sympy.Matrix(B.tolist())
    I = sympy.eye(n)
    J = sympy.zeros(n)
    for i in range(g):
        J[i, g + i] = 1
        J[g + i, i] = -1
    V = sympy.Matrix.hstack(Am.inv() - I, Bm - I).nullspace()
    if not V:
        return 0
    form = lambda u, v: ((u[:n, :] + u[n:, :]).T * J * (I - Bm) * v[n:, :])[0, 0]
    G = sympy.Matrix(len(V), len(V), lambda i, j: sympy.Rational(form(V[i], V[j]) + form(V[j], V[i]), 2))
    return descartes_signature(G)


def _sign_changes(coeffs):
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def descartes_signature(G):
    """Signature of a rational symmetric matrix from its characteristic polynomial.

    All roots are real, so Descartes' rule counts them exactly.
    """
    x = sympy.Symbol("x")
    p = sympy.Poly(G.charpoly(x).as_expr(), x)
    pos = _sign_changes(p.all_coeffs())
    neg = _sign_changes(sympy.Poly(p.as_expr().subs(x, -x), x).all_coeffs())
    return pos - neg


@pytest.fixture
def rng():
    return random.Random(20261018)

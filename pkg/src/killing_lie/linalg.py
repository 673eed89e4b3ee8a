"""Exact linear algebra over the rationals.

Thin wrappers around sympy's ``DomainMatrix`` over ``QQ`` so the rest of the
package can speak plain :class:`fractions.Fraction` sequences.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = tuple[Fraction, ...]


def _qq(x) -> object:
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def as_vector(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def to_domain(rows: Sequence[Sequence], ncols: int | None = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    if not rows:
        return DomainMatrix.zeros((0, ncols or 0), QQ)
    n = len(rows[0])
    return DomainMatrix([[_qq(x) for x in r] for r in rows], (len(rows), n), QQ)


def from_domain(m: DomainMatrix) -> list[Vector]:
    return [tuple(_frac(x) for x in row) for row in m.to_list()]


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def rank(vectors: Sequence[Sequence]) -> int:
    vectors = [v for v in vectors]
    if not vectors:
        return 0
    return to_domain(vectors).rank()


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of ``{x : rows @ x = 0}`` as a list of vectors of length ``ncols``."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m = to_domain(rows)
    ns = m.nullspace()
    if ns.shape[0] == 0:
        return []
    # Normalize each basis vector so that its pivot (last nonzero) entry is 1.
    out = []
    for v in from_domain(ns):
        lead = next(x for x in reversed(v) if x != 0)
        out.append(tuple(x / lead for x in v))
    return out


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> Vector | None:
    """One exact solution of ``matrix @ x = rhs`` (free variables set to 0), or None."""
    rows = [list(r) + [b] for r, b in zip(matrix, rhs)]
    ncols = len(rows[0]) - 1
    reduced, pivots = to_domain(rows).rref()
    if ncols in pivots:
        return None
    red = from_domain(reduced)
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return tuple(x)


def inverse(matrix: Sequence[Sequence]) -> list[Vector]:
    return from_domain(to_domain(matrix).inv())


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(x != 0 for x in v):
        return True
    if not vectors:
        return False
    return rank(list(vectors) + [list(v)]) == rank(vectors)


def span_basis(vectors: Sequence[Sequence]) -> list[Vector]:
    """A basis (rows of the reduced echelon form) for the span of ``vectors``."""
    vectors = [v for v in vectors]
    if not vectors:
        return []
    reduced, pivots = to_domain(vectors).rref()
    return from_domain(reduced)[: len(pivots)]


def exact_sqrt(x: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational if it is rational, else None."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def format_rational(x: Fraction) -> int | str:
    """Integers stay integers; other rationals become ``"p/q"`` strings."""
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_pair(x: Fraction) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def vector_to_json(v: Sequence) -> list[list[int]]:
    return [rational_pair(x) for x in v]


def vector_from_json(data) -> Vector:
    out = []
    for item in data:
        if isinstance(item, (list, tuple)):
            num, den = item
            out.append(Fraction(int(num), int(den)))
        elif isinstance(item, int):
            out.append(Fraction(item))
        elif isinstance(item, str):
            out.append(Fraction(item))
        else:
            raise TypeError(f"cannot read {item!r} as an exact rational")
    return tuple(out)

"""Root systems of A_l, B_l, C_l, D_l, e6 and e7 in ambient coordinates.

Roots are tuples of :class:`~fractions.Fraction` in the Euclidean space
spanned by the orthonormal vectors ``e_1, ..., e_n``; the inner product on the
Cartan subalgebra is the ambient dot product. e6 and e7 live in R^8 and carry
their defining linear constraints as metadata.

Simple roots are indexed from 1 in the public API (``pi_1, ..., pi_l``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import DomainError, ParameterError

Root = tuple[Fraction, ...]

KINDS = ("A", "B", "C", "D", "E6", "E7")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}

HALF = Fraction(1, 2)


def _unit(n: int, i: int, scale=1) -> Root:
    return tuple(Fraction(scale) if j == i else Fraction(0) for j in range(n))


def _add(*vectors: Root) -> Root:
    return tuple(sum(xs, Fraction(0)) for xs in zip(*vectors))


def _scale(c, v: Root) -> Root:
    return tuple(Fraction(c) * x for x in v)


def _neg(v: Root) -> Root:
    return tuple(-x for x in v)


@dataclass(frozen=True, eq=False)
class RootSystem:
    kind: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    # each constraint c means  c . x == 0  on the Cartan subalgebra
    cartan_constraints: tuple[Root, ...] = field(default=())

    @property
    def label(self) -> str:
        return self.kind if self.kind in ("E6", "E7") else f"{self.kind}{self.rank}"

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(_neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)

    @cached_property
    def positive_set(self) -> frozenset[Root]:
        return frozenset(self.positive_roots)

    @cached_property
    def _coweights(self) -> list[Root]:
        # Dual basis to the simple roots inside their span; pairing a root with
        # the i-th vector gives its i-th simple-root coefficient.
        gram = [[linalg.dot(p, q) for q in self.simple_roots] for p in self.simple_roots]
        inv = linalg.inverse(gram)
        return [
            _add(*(_scale(inv[i][k], self.simple_roots[k]) for k in range(self.rank)))
            for i in range(self.rank)
        ]

    def coefficients(self, v: Root) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the simple roots, assuming ``v`` lies in their span."""
        return tuple(linalg.dot(w, v) for w in self._coweights)

    def in_cartan(self, h) -> bool:
        return len(h) == self.ambient_dim and all(linalg.dot(c, h) == 0 for c in self.cartan_constraints)

    def constraint_residual(self, h) -> tuple[Fraction, ...]:
        return tuple(linalg.dot(c, h) for c in self.cartan_constraints)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "simple_roots": [linalg.vector_to_json(r) for r in self.simple_roots],
            "positive_roots": [linalg.vector_to_json(r) for r in self.positive_roots],
            "cartan_constraints": [linalg.vector_to_json(c) for c in self.cartan_constraints],
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.label}, |positive|={len(self.positive_roots)})"


def parse_label(label: str) -> tuple[str, int]:
    """``"D5"`` -> ``("D", 5)``; ``"E7"`` -> ``("E7", 7)``."""
    text = label.strip().upper()
    if text in ("E6", "E7"):
        return text, int(text[1])
    if len(text) >= 2 and text[0] in "ABCD" and text[1:].isdigit():
        return text[0], int(text[1:])
    raise ParameterError(f"unrecognized algebra label {label!r}; expected e.g. A2, B3, C2, D5, E6, E7")


def _case_a(l: int):
    n = l + 1
    e = [_unit(n, i) for i in range(n)]
    delta = [_add(e[i], _neg(e[j])) for i in range(n) for j in range(n) if i != j]
    simple = [_add(e[i], _neg(e[i + 1])) for i in range(l)]
    constraints = [tuple(Fraction(1) for _ in range(n))]
    return n, delta, simple, constraints


def _pm_pairs(e, idx):
    out = []
    for i, j in itertools.combinations(idx, 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            out.append(_add(_scale(si, e[i]), _scale(sj, e[j])))
    return out


def _case_bcd(kind: str, l: int):
    e = [_unit(l, i) for i in range(l)]
    delta = _pm_pairs(e, range(l))
    simple = [_add(e[i], _neg(e[i + 1])) for i in range(l - 1)]
    if kind == "B":
        delta += [s for i in range(l) for s in (e[i], _neg(e[i]))]
        simple.append(e[l - 1])
    elif kind == "C":
        delta += [s for i in range(l) for s in (_scale(2, e[i]), _scale(-2, e[i]))]
        simple.append(_scale(2, e[l - 1]))
    else:
        simple.append(_add(e[l - 2], e[l - 1]))
    return l, delta, simple, []


def _half_spinors(base: Root, idx, parity: int) -> list[Root]:
    # 1/2 (base + sum_i (-1)^{v_i} e_i) with sum v_i of the given parity
    out = []
    for signs in itertools.product((0, 1), repeat=len(idx)):
        if sum(signs) % 2 != parity:
            continue
        v = list(base)
        for i, s in zip(idx, signs):
            v[i] += -1 if s else 1
        out.append(tuple(HALF * x for x in v))
    return out


def _e_simple(count: int) -> list[Root]:
    e = [_unit(8, i) for i in range(8)]
    pi1 = tuple(HALF * x for x in _add(e[0], e[7], *(_neg(e[i]) for i in range(1, 7))))
    simple = [pi1, _add(e[0], e[1])]
    simple += [_add(e[i - 2], _neg(e[i - 3])) for i in range(3, count + 1)]
    return simple


def _case_e6():
    e = [_unit(8, i) for i in range(8)]
    delta = _pm_pairs(e, range(5))
    base = _add(e[7], _neg(e[6]), _neg(e[5]))
    halves = _half_spinors(base, range(5), 0)
    delta += halves + [_neg(h) for h in halves]
    # x6 = x7 = -x8
    constraints = [_add(e[5], _neg(e[6])), _add(e[6], e[7])]
    return 8, delta, _e_simple(6), constraints


def _case_e7():
    e = [_unit(8, i) for i in range(8)]
    delta = _pm_pairs(e, range(6))
    delta += [_add(e[6], _neg(e[7])), _add(e[7], _neg(e[6]))]
    base = _add(e[6], _neg(e[7]))
    halves = _half_spinors(base, range(6), 1)
    delta += halves + [_neg(h) for h in halves]
    constraints = [_add(e[6], e[7])]
    return 8, delta, _e_simple(7), constraints


def build(kind: str, rank: int | None = None, *, strict: bool = True) -> RootSystem:
    """Root system of the given type.

    ``strict=False`` additionally admits the degenerate ranks B_1, C_1 and D_2
    used internally for so(3), sp(1) and so(4).
    """
    kind = kind.upper()
    if kind not in KINDS:
        raise ParameterError(f"unsupported kind {kind!r}; expected one of {', '.join(KINDS)}")
    if kind in ("E6", "E7"):
        fixed = int(kind[1])
        if rank is not None and rank != fixed:
            raise ParameterError(f"{kind} has fixed rank {fixed}, got rank {rank}")
        rank = fixed
    else:
        if rank is None:
            raise ParameterError(f"kind {kind} needs a rank")
        lowest = _MIN_RANK[kind] if strict else {"A": 1, "B": 1, "C": 1, "D": 2}[kind]
        if rank < lowest:
            raise ParameterError(f"{kind}_l requires l >= {lowest}, got l = {rank}")
    return _build_cached(kind, rank)


_CACHE: dict[tuple[str, int], RootSystem] = {}


def _build_cached(kind: str, rank: int) -> RootSystem:
    key = (kind, rank)
    if key in _CACHE:
        return _CACHE[key]
    if kind == "A":
        n, delta, simple, cons = _case_a(rank)
    elif kind in "BCD":
        n, delta, simple, cons = _case_bcd(kind, rank)
    elif kind == "E6":
        n, delta, simple, cons = _case_e6()
    else:
        n, delta, simple, cons = _case_e7()

    shell = RootSystem(kind, rank, n, tuple(simple), (), tuple(cons))
    positive = []
    for a in set(delta):
        coeffs = shell.coefficients(a)
        if all(c >= 0 for c in coeffs):
            positive.append(a)
    rs = RootSystem(kind, rank, n, tuple(simple), tuple(sorted(positive)), tuple(cons))
    _CACHE[key] = rs
    return rs


def simple_root_coefficients(rs: RootSystem, alpha) -> tuple[int, ...]:
    alpha = linalg.as_vector(alpha)
    if alpha not in rs.positive_set:
        raise DomainError(f"{_fmt(alpha)} is not a positive root of {rs.label}")
    coeffs = rs.coefficients(alpha)
    return tuple(int(c) for c in coeffs)


def highest_root(rs: RootSystem) -> Root:
    heights = {a: sum(rs.coefficients(a)) for a in rs.positive_roots}
    top = max(rs.positive_roots, key=lambda a: (heights[a], a))
    return top


def noncompact_simple_roots(rs: RootSystem) -> list[int]:
    """1-based indices j of simple roots with coefficient 1 in the highest root."""
    top = simple_root_coefficients(rs, highest_root(rs))
    return [j + 1 for j, a in enumerate(top) if a == 1]


def noncompact_by_enumeration(rs: RootSystem) -> list[int]:
    """Indices j such that every root has pi_j-coefficient in {-1, 0, 1}."""
    out = []
    for j in range(rs.rank):
        if all(abs(rs.coefficients(a)[j]) <= 1 for a in rs.positive_roots):
            out.append(j + 1)
    return out


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"

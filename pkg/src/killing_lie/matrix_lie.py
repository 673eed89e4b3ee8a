"""Matrix realizations of su(n), so(n) and sp(n) with root-adapted bases.

Elements are exact matrices with Gaussian rational entries, stored as a pair
``(re, im)`` of rational ``DomainMatrix`` objects. Conventions:

* su(n): n x n anti-Hermitian traceless; ``iota(h) = diag(i h_1, ..., i h_n)``
  for h in the sum-zero hyperplane (type A_{n-1}).
* so(n): n x n real skew; ``F_{i,j}`` has entry -1 at (i, j) and +1 at (j, i);
  ``iota(e_k) = F_{2k-1,2k}`` (type B_l for n = 2l+1, D_l for n = 2l).
* sp(n): 2n x 2n complex ``[[A, -conj(B)], [B, conj(A)]]`` with A anti-Hermitian
  and B symmetric; ``iota(h) = diag(i h, -i h)`` (type C_n).

The invariant form is ``<X, Y> = -Re tr(XY)``. On the Cartan subalgebra it is
``form_scale`` times the ambient dot product (1 for su, 2 for so and sp).

For each positive root alpha the basis carries a pair (U, V) with
``[H, U] = alpha(H) V`` and ``[H, V] = -alpha(H) U`` for all Cartan H, where
``V = [iota(alpha), U] / <alpha, alpha>``. Then ``[U, V] = k * iota(alpha)``
with ``k = <U, U> / form_scale``; k is 1 or 2 and is recorded per root in
``RootBasis.root_scale``. Making k = 1 would need irrational rescaling.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import centralizer, linalg, root_systems
from .errors import ConsistencyError, DomainError, ParameterError
from .root_systems import Root, RootSystem

KINDS = ("su", "so", "sp")


def _zeros(size: int) -> DomainMatrix:
    return DomainMatrix.zeros((size, size), QQ)


def _matrix_size(kind: str, n: int) -> int:
    return 2 * n if kind == "sp" else n


def _check_kind(kind: str, n: int) -> None:
    if kind not in KINDS:
        raise ParameterError(f"unsupported algebra kind {kind!r}; expected one of {', '.join(KINDS)}")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError(f"size parameter must be an integer, got {n!r}")
    lowest = {"su": 2, "so": 3, "sp": 1}[kind]
    if n < lowest:
        raise ParameterError(f"{kind}(n) requires n >= {lowest}, got n = {n}")


class AlgebraElement:
    """An exact matrix in su(n), so(n) or sp(n)."""

    __slots__ = ("kind", "n", "re", "im")

    def __init__(self, kind: str, n: int, re: DomainMatrix, im: DomainMatrix | None = None):
        size = _matrix_size(kind, n)
        if re.shape != (size, size):
            raise ParameterError(f"{kind}({n}) needs {size}x{size} matrices, got {re.shape}")
        self.kind = kind
        self.n = n
        # dense and sparse DomainMatrix never compare equal, so keep one format
        self.re = re.to_dense()
        self.im = (im if im is not None else _zeros(size)).to_dense()

    @property
    def size(self) -> int:
        return self.re.shape[0]

    @classmethod
    def zero(cls, kind: str, n: int) -> "AlgebraElement":
        size = _matrix_size(kind, n)
        return cls(kind, n, _zeros(size), _zeros(size))

    @classmethod
    def from_entries(cls, kind: str, n: int, entries: dict) -> "AlgebraElement":
        """Build from ``{(row, col): value}`` with 0-based indices.

        A value is a rational, or a ``(re, im)`` pair for complex entries.
        """
        size = _matrix_size(kind, n)
        re = [[QQ(0)] * size for _ in range(size)]
        im = [[QQ(0)] * size for _ in range(size)]
        for (r, c), value in entries.items():
            a, b = value if isinstance(value, tuple) else (value, 0)
            a, b = Fraction(a), Fraction(b)
            re[r][c] += QQ(a.numerator, a.denominator)
            im[r][c] += QQ(b.numerator, b.denominator)
        return cls(kind, n, DomainMatrix(re, (size, size), QQ), DomainMatrix(im, (size, size), QQ))

    @classmethod
    def from_flat(cls, kind: str, n: int, flat) -> "AlgebraElement":
        size = _matrix_size(kind, n)
        half = size * size
        if len(flat) != 2 * half:
            raise ParameterError(f"flat vector of length {len(flat)} does not fit {kind}({n})")
        re = linalg.to_domain([flat[r * size:(r + 1) * size] for r in range(size)])
        im = linalg.to_domain([flat[half + r * size:half + (r + 1) * size] for r in range(size)])
        return cls(kind, n, re, im)

    def flat(self) -> tuple[Fraction, ...]:
        """Real coordinates: all real parts row by row, then all imaginary parts."""
        out = [Fraction(int(x.numerator), int(x.denominator)) for x in self.re.to_list_flat()]
        out += [Fraction(int(x.numerator), int(x.denominator)) for x in self.im.to_list_flat()]
        return tuple(out)

    def _same(self, other: "AlgebraElement") -> None:
        if not isinstance(other, AlgebraElement):
            raise ParameterError(f"expected an AlgebraElement, got {type(other).__name__}")
        if (self.kind, self.n) != (other.kind, other.n):
            raise ParameterError(f"cannot combine {self.kind}({self.n}) with {other.kind}({other.n})")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        return AlgebraElement(self.kind, self.n, self.re + other.re, self.im + other.im)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same(other)
        return AlgebraElement(self.kind, self.n, self.re - other.re, self.im - other.im)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.kind, self.n, -self.re, -self.im)

    def __mul__(self, c) -> "AlgebraElement":
        c = Fraction(c)
        q = QQ(c.numerator, c.denominator)
        return AlgebraElement(self.kind, self.n, self.re * q, self.im * q)

    __rmul__ = __mul__

    def __truediv__(self, c) -> "AlgebraElement":
        return self * (1 / Fraction(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.kind, self.n) == (other.kind, other.n) and self.re == other.re and self.im == other.im

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.re.to_list_flat()) and not any(self.im.to_list_flat())

    @property
    def matrix(self) -> list[list[tuple[Fraction, Fraction]]]:
        re, im = self.re.to_list(), self.im.to_list()
        return [
            [(Fraction(int(a.numerator), int(a.denominator)), Fraction(int(b.numerator), int(b.denominator)))
             for a, b in zip(ra, rb)]
            for ra, rb in zip(re, im)
        ]

    def to_numpy(self):
        import numpy as np

        out = np.zeros((self.size, self.size), dtype=complex)
        for r, row in enumerate(self.matrix):
            for c, (a, b) in enumerate(row):
                out[r, c] = complex(float(a), float(b))
        return out

    def real_form(self):
        """Real skew matrix of the same linear map.

        so(n) elements are already real. Complex N x N matrices act on R^{2N}
        through z_k = x_{2k} + i x_{2k+1}, so each entry a + bi becomes the
        block [[a, -b], [b, a]].
        """
        import numpy as np

        if self.kind == "so":
            return self.to_numpy().real
        m = self.to_numpy()
        size = self.size
        out = np.zeros((2 * size, 2 * size))
        out[0::2, 0::2] = m.real
        out[0::2, 1::2] = -m.imag
        out[1::2, 0::2] = m.imag
        out[1::2, 1::2] = m.real
        return out

    def to_json(self) -> dict:
        if self.kind == "so":
            rows = [[linalg.rational_pair(a) for a, _ in row] for row in self.matrix]
        else:
            rows = [[[linalg.rational_pair(a), linalg.rational_pair(b)] for a, b in row] for row in self.matrix]
        return {"kind": self.kind, "n": self.n, "matrix": rows}

    def validate(self) -> None:
        """Raise ParameterError unless the matrix lies in the algebra."""
        re, im = self.re, self.im
        if re.transpose() != -re or im.transpose() != im:
            raise ParameterError("matrix is not anti-Hermitian")
        if self.kind == "so" and any(im.to_list_flat()):
            raise ParameterError("so(n) elements must be real")
        if self.kind == "su" and sum(im[i, i].element for i in range(self.size)) != 0:
            raise ParameterError("su(n) elements must be traceless")
        if self.kind == "sp":
            j = _symplectic_unit(self.n)
            # X^T J + J X = 0
            if any((re.transpose() * j + j * re).to_list_flat()) or any((im.transpose() * j + j * im).to_list_flat()):
                raise ParameterError("matrix does not preserve the symplectic form")

    def __repr__(self) -> str:
        return f"AlgebraElement({self.kind}({self.n}), {self.to_json()['matrix']})"


def _symplectic_unit(n: int) -> DomainMatrix:
    size = 2 * n
    rows = [[QQ(0)] * size for _ in range(size)]
    for i in range(n):
        rows[i][n + i] = QQ(1)
        rows[n + i][i] = QQ(-1)
    return DomainMatrix(rows, (size, size), QQ)


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """[X, Y] = XY - YX."""
    x._same(y)
    a, b, c, d = x.re, x.im, y.re, y.im
    re = a * c - c * a
    if x.kind == "so":
        return AlgebraElement(x.kind, x.n, re)
    re = re - (b * d - d * b)
    im = a * d - d * a + b * c - c * b
    return AlgebraElement(x.kind, x.n, re, im)


def invariant_form(x: AlgebraElement, y: AlgebraElement) -> Fraction:
    """<X, Y> = -Re tr(XY)."""
    x._same(y)
    total = QQ(0)
    for a, c in ((x.re, y.re), (x.im, -y.im)):
        for row_a, col_c in zip(a.to_list(), c.transpose().to_list()):
            total += sum((s * t for s, t in zip(row_a, col_c)), QQ(0))
    total = Fraction(int(total.numerator), int(total.denominator))
    return -total


def so_generator(n: int, i: int, j: int) -> AlgebraElement:
    """F_{i,j} in so(n), 1-based: -1 at (i, j) and +1 at (j, i)."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ParameterError(f"F_{{{i},{j}}} needs distinct indices in 1..{n}")
    return AlgebraElement.from_entries("so", n, {(i - 1, j - 1): -1, (j - 1, i - 1): 1})


def iota(kind: str, n: int, h) -> AlgebraElement:
    """The Cartan element realizing the ambient vector ``h``."""
    h = linalg.as_vector(h)
    if kind == "su":
        if len(h) != n or sum(h) != 0:
            raise ParameterError(f"su({n}) Cartan vectors have {n} coordinates summing to 0")
        return AlgebraElement.from_entries(kind, n, {(k, k): (0, x) for k, x in enumerate(h)})
    if kind == "so":
        if len(h) != n // 2:
            raise ParameterError(f"so({n}) Cartan vectors have {n // 2} coordinates")
        return AlgebraElement.from_entries(
            kind, n, {e: s * x for k, x in enumerate(h) for e, s in (((2 * k, 2 * k + 1), -1), ((2 * k + 1, 2 * k), 1))}
        )
    if len(h) != n:
        raise ParameterError(f"sp({n}) Cartan vectors have {n} coordinates")
    entries = {}
    for k, x in enumerate(h):
        entries[(k, k)] = (0, x)
        entries[(n + k, n + k)] = (0, -x)
    return AlgebraElement.from_entries(kind, n, entries)


# -- exact subspaces ---------------------------------------------------------


def _rows(elements: list[AlgebraElement]) -> DomainMatrix:
    rows = [e.re.to_list_flat() + e.im.to_list_flat() for e in elements]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ)


class Span:
    """Span of algebra elements with exact membership tests."""

    def __init__(self, elements: list[AlgebraElement]):
        elements = list(elements)
        self.dim = 0
        if elements:
            self.kind, self.n = elements[0].kind, elements[0].n
            reduced, pivots = _rows(elements).rref()
            self.dim = len(pivots)
            self._pivots = list(pivots)
            self._reduced = reduced.extract(list(range(self.dim)), list(range(reduced.shape[1])))

    @property
    def basis(self) -> list[AlgebraElement]:
        if not self.dim:
            return []
        return [AlgebraElement.from_flat(self.kind, self.n, row) for row in linalg.from_domain(self._reduced)]

    def contains_all(self, elements: list[AlgebraElement]) -> bool:
        elements = list(elements)
        if not elements:
            return True
        if not self.dim:
            return all(e.is_zero() for e in elements)
        v = _rows(elements)
        coords = v.extract(list(range(len(elements))), self._pivots)
        return coords * self._reduced == v


class _Frame:
    """Coordinates relative to a fixed ordered basis of elements."""

    def __init__(self, elements: list[AlgebraElement]):
        self.elements = list(elements)
        mat = _rows(self.elements)
        _, pivots = mat.rref()
        if len(pivots) != len(self.elements):
            raise ConsistencyError("frame elements are linearly dependent")
        self._pivots = list(pivots)
        self._mat = mat
        self._inv = mat.extract(list(range(len(self.elements))), self._pivots).inv()

    def coordinates_many(self, elements: list[AlgebraElement], check: bool = True):
        if not elements:
            return []
        v = _rows(elements)
        coords = v.extract(list(range(len(elements))), self._pivots) * self._inv
        if check and coords * self._mat != v:
            raise DomainError("element is not in the span of the basis")
        return linalg.from_domain(coords)

    def combine(self, coords) -> AlgebraElement:
        out = AlgebraElement.zero(self.elements[0].kind, self.elements[0].n)
        for c, e in zip(coords, self.elements):
            if c:
                out = out + e * c
        return out


# -- root-adapted bases -------------------------------------------------------


@dataclass(eq=False)
class RootBasis:
    kind: str
    n: int
    root_system: RootSystem
    form_scale: Fraction
    cartan: tuple[AlgebraElement, ...]
    cartan_vectors: tuple[Root, ...]
    pairs: dict[Root, tuple[AlgebraElement, AlgebraElement]]
    root_scale: dict[Root, Fraction] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return f"{self.kind}({self.n})"

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @cached_property
    def elements(self) -> tuple[AlgebraElement, ...]:
        out = list(self.cartan)
        for a in self.root_system.positive_roots:
            out.extend(self.pairs[a])
        return tuple(out)

    @property
    def dim(self) -> int:
        return len(self.elements)

    @cached_property
    def _frame(self) -> _Frame:
        return _Frame(list(self.elements))

    @cached_property
    def _cartan_frame(self) -> _Frame:
        return _Frame(list(self.cartan))

    def iota(self, h) -> AlgebraElement:
        h = linalg.as_vector(h)
        if not self.root_system.in_cartan(h):
            raise ParameterError(f"{tuple(str(x) for x in h)} is not a Cartan vector of {self.label}")
        return iota(self.kind, self.n, h)

    def coordinates(self, x: AlgebraElement) -> tuple[Fraction, ...]:
        return self._frame.coordinates_many([x])[0]

    def coordinates_many(self, xs: list[AlgebraElement]) -> list[tuple[Fraction, ...]]:
        return self._frame.coordinates_many(xs)

    def combine(self, coords) -> AlgebraElement:
        return self._frame.combine(coords)

    def cartan_vector(self, z: AlgebraElement) -> Root:
        """Ambient vector h with iota(h) = z; DomainError if z is not in the Cartan subalgebra."""
        try:
            c = self._cartan_frame.coordinates_many([z])[0]
        except DomainError:
            raise DomainError(f"element is not in the Cartan subalgebra of {self.label}") from None
        dim = self.root_system.ambient_dim
        return tuple(
            sum((c[k] * self.cartan_vectors[k][i] for k in range(self.rank)), Fraction(0)) for i in range(dim)
        )

    def element(self, z) -> AlgebraElement:
        """Accept an AlgebraElement or an ambient Cartan vector."""
        if isinstance(z, AlgebraElement):
            z._same(self.cartan[0])
            return z
        return self.iota(z)

    def cartan_split(self, z) -> tuple[list[AlgebraElement], list[AlgebraElement]]:
        """(k, m): the centralizer of Z and its orthogonal complement, as element lists."""
        h = self.cartan_vector(self.element(z))
        split = centralizer.split_roots(self.root_system, h)
        k = list(self.cartan) + [x for a in split.i2 for x in self.pairs[a]]
        m = [x for a in split.i1 for x in self.pairs[a]]
        return k, m

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "type": self.root_system.label,
            "form_scale": linalg.format_rational(self.form_scale),
            "cartan": [x.to_json() for x in self.cartan],
            "pairs": [
                {
                    "root": linalg.vector_to_json(a),
                    "U": u.to_json(),
                    "V": v.to_json(),
                    "root_scale": linalg.format_rational(self.root_scale[a]),
                }
                for a, (u, v) in ((a, self.pairs[a]) for a in self.root_system.positive_roots)
            ],
        }


def _root_system_for(kind: str, n: int) -> RootSystem:
    if kind == "su":
        return root_systems.build("A", n - 1)
    if kind == "so":
        if n % 2:
            return root_systems.build("B", (n - 1) // 2, strict=False)
        return root_systems.build("D", n // 2, strict=False)
    return root_systems.build("C", n, strict=False)


def _e(kind: str, n: int, entries: dict) -> AlgebraElement:
    return AlgebraElement.from_entries(kind, n, entries)


def _candidates(kind: str, n: int, alpha: Root) -> list[AlgebraElement]:
    """A few matrices, one of which spans a root pair for alpha together with its partner."""
    support = [i for i, x in enumerate(alpha) if x != 0]
    if kind == "su":
        j, k = support
        return [_e(kind, n, {(j, k): 1, (k, j): -1}), _e(kind, n, {(j, k): (0, 1), (k, j): (0, 1)})]
    if kind == "so":
        f = lambda p, q: so_generator(n, p + 1, q + 1)
        if len(support) == 1:
            i = support[0]
            return [f(2 * i, n - 1), f(2 * i + 1, n - 1)]
        i, j = support
        a, b, c, d = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        return [f(a, c) + f(b, d), f(a, c) - f(b, d), f(a, d) + f(b, c), f(a, d) - f(b, c)]
    # sp(n)
    if len(support) == 1:
        j = k = support[0]
    else:
        j, k = support
    if len(support) == 2 and alpha[j] != alpha[k]:
        return [
            _e(kind, n, {(j, k): 1, (k, j): -1, (n + j, n + k): 1, (n + k, n + j): -1}),
            _e(kind, n, {(j, k): (0, 1), (k, j): (0, 1), (n + j, n + k): (0, -1), (n + k, n + j): (0, -1)}),
        ]
    sym = {(j, k): 1, (k, j): 1} if j != k else {(j, j): 1}
    real = {}
    cplx = {}
    for (r, c), v in sym.items():
        real[(n + r, c)] = v
        real[(r, n + c)] = -v
        cplx[(n + r, c)] = (0, v)
        cplx[(r, n + c)] = (0, v)
    return [_e(kind, n, real), _e(kind, n, cplx)]


def _satisfies_n(cartan, cartan_vectors, alpha, u, v) -> bool:
    for hmat, hvec in zip(cartan, cartan_vectors):
        a = linalg.dot(alpha, hvec)
        if bracket(hmat, u) != v * a or bracket(hmat, v) != u * (-a):
            return False
    return True


_BASES: dict[tuple[str, int], RootBasis] = {}


def build_algebra_basis(kind: str, n: int) -> RootBasis:
    """Root-adapted basis of su(n), so(n) or sp(n), verified against (N) exactly."""
    _check_kind(kind, n)
    key = (kind, n)
    if key in _BASES:
        return _BASES[key]
    rs = _root_system_for(kind, n)
    if kind == "su":
        vectors = tuple(rs.simple_roots)
        scale = Fraction(1)
    else:
        vectors = tuple(tuple(Fraction(int(i == k)) for i in range(rs.ambient_dim)) for k in range(rs.ambient_dim))
        scale = Fraction(2)
    cartan = tuple(iota(kind, n, h) for h in vectors)
    for h, hm in zip(vectors, cartan):
        if invariant_form(hm, hm) != scale * linalg.dot(h, h):
            raise ConsistencyError(f"form scale on the Cartan subalgebra of {kind}({n}) is not {scale}")

    pairs = {}
    kappa = {}
    for alpha in rs.positive_roots:
        ialpha = iota(kind, n, alpha)
        norm = linalg.dot(alpha, alpha)
        for u in _candidates(kind, n, alpha):
            v = bracket(ialpha, u) / norm
            if not v.is_zero() and _satisfies_n(cartan, vectors, alpha, u, v):
                break
        else:
            raise ConsistencyError(f"no root pair found for {alpha} in {kind}({n})")
        uu = invariant_form(u, u)
        k = uu / scale
        if bracket(u, v) != ialpha * k:
            raise ConsistencyError(f"[U, V] is not {k} * alpha for {alpha} in {kind}({n})")
        if invariant_form(v, v) != uu or invariant_form(u, v) != 0:
            raise ConsistencyError(f"U, V for {alpha} are not orthogonal of equal length")
        u.validate()
        v.validate()
        pairs[alpha] = (u, v)
        kappa[alpha] = k

    basis = RootBasis(kind, n, rs, scale, cartan, vectors, pairs, kappa)
    expected = {"su": n * n - 1, "so": n * (n - 1) // 2, "sp": n * (2 * n + 1)}[kind]
    if linalg.rank([e.flat() for e in basis.elements]) != expected:
        raise ConsistencyError(f"basis of {kind}({n}) does not span a space of dimension {expected}")
    _BASES[key] = basis
    return basis


# -- spectrum of (ad Z)^2 -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class MatrixSpectrum:
    m0: tuple[AlgebraElement, ...]
    levels: tuple[tuple[Fraction, tuple[AlgebraElement, ...]], ...]

    @property
    def dims(self) -> dict[Fraction, int]:
        out = {Fraction(0): len(self.m0)}
        out.update({lam: len(space) for lam, space in self.levels})
        return out

    def to_json(self) -> dict:
        return {
            "dim_m0": len(self.m0),
            "levels": [{"lambda": linalg.format_rational(lam), "dim": len(s)} for lam, s in self.levels],
        }


def ad_matrix(basis: RootBasis, z) -> DomainMatrix:
    """Matrix of ad Z in the basis; column k holds the coordinates of [Z, b_k]."""
    z = basis.element(z)
    cols = basis.coordinates_many([bracket(z, b) for b in basis.elements])
    return linalg.to_domain(cols).transpose()


def ad_squared_eigenspaces(basis: RootBasis, z) -> MatrixSpectrum:
    """Kernel and (-lambda^2)-eigenspaces of (ad Z)^2, by exact nullspaces."""
    zel = basis.element(z)
    h = basis.cartan_vector(zel)
    rs = basis.root_system
    split = centralizer.split_roots(rs, h)
    counts: dict[Fraction, int] = {}
    for a in split.i1:
        lam = abs(linalg.dot(h, a))
        counts[lam] = counts.get(lam, 0) + 1

    ad = ad_matrix(basis, zel)
    sq = ad * ad
    dim = basis.dim

    def space(shift: Fraction) -> tuple[AlgebraElement, ...]:
        q = QQ(shift.numerator, shift.denominator)
        m = sq + DomainMatrix.eye(dim, QQ) * q
        return tuple(basis.combine(v) for v in linalg.nullspace(linalg.from_domain(m), dim))

    m0 = space(Fraction(0))
    levels = tuple((lam, space(lam * lam)) for lam in sorted(counts))
    total = len(m0) + sum(len(s) for _, s in levels)
    if total != dim:
        raise ConsistencyError(f"eigenspaces of (ad Z)^2 cover {total} of {dim} dimensions")
    if len(m0) != rs.rank + 2 * len(split.i2):
        raise ConsistencyError("dim m_0 differs from rank + 2|I_2|")
    for lam, s in levels:
        if len(s) != 2 * counts[lam]:
            raise ConsistencyError(f"dim m_{lam} differs from twice the root count")
    return MatrixSpectrum(m0, levels)


def matrix_summands(basis: RootBasis, z) -> tuple[tuple[Root, ...], ...]:
    """Roots of I_1 grouped into minimal ad(m_0)-invariant subspaces of m.

    Every ad(m_0)-invariant subspace is ad(t)-invariant, hence a sum of root
    planes v_alpha. The plane of beta is reachable from that of alpha when
    some [K, U_alpha] or [K, V_alpha], K in m_0, has a nonzero component on
    v_beta; the summands are the connected classes of this relation.
    """
    zel = basis.element(z)
    h = basis.cartan_vector(zel)
    split = centralizer.split_roots(basis.root_system, h)
    m0 = list(basis.cartan) + [x for a in split.i2 for x in basis.pairs[a]]
    i1 = list(split.i1)
    position = {a: k for k, a in enumerate(basis.root_system.positive_roots)}
    offset = basis.rank
    parent = list(range(len(i1)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, a in enumerate(i1):
        images = [bracket(k, x) for k in m0 for x in basis.pairs[a]]
        coords = basis.coordinates_many(images)
        for j, b in enumerate(i1):
            p = offset + 2 * position[b]
            if any(c[p] != 0 or c[p + 1] != 0 for c in coords):
                parent[find(i)] = find(j)
    groups: dict[int, list[Root]] = {}
    for i, a in enumerate(i1):
        groups.setdefault(find(i), []).append(a)
    return tuple(sorted(tuple(sorted(g)) for g in groups.values()))


# -- the sigma calculus -------------------------------------------------------


def eigenvalue(basis: RootBasis, z, y: AlgebraElement) -> Fraction:
    """lambda >= 0 with [Z, [Z, Y]] = -lambda^2 Y; DomainError if there is none."""
    zel = basis.element(z)
    if y.is_zero():
        raise DomainError("the zero element lies in every eigenspace")
    w2 = bracket(zel, bracket(zel, y)).flat()
    yf = y.flat()
    i = next(k for k, x in enumerate(yf) if x != 0)
    mu = w2[i] / yf[i]
    if any(a != mu * b for a, b in zip(w2, yf)):
        raise DomainError("element is not in a single eigenspace of (ad Z)^2")
    lam = linalg.exact_sqrt(-mu)
    if lam is None:
        raise DomainError(f"(ad Z)^2 acts by {mu}, which is not minus a rational square")
    return lam


def sigma(basis: RootBasis, z, y: AlgebraElement) -> AlgebraElement:
    """sigma(Y) = [Z, Y] / lambda for Y in m_lambda, lambda > 0."""
    zel = basis.element(z)
    if y.is_zero():
        return y
    lam = eigenvalue(basis, zel, y)
    if lam == 0:
        raise DomainError("sigma is undefined on m_0")
    out = bracket(zel, y) / lam
    if bracket(zel, out) / lam != -y:
        raise ConsistencyError("sigma(sigma(Y)) != -Y")
    return out


def _in_level(basis: RootBasis, zel: AlgebraElement, x: AlgebraElement, lam: Fraction) -> bool:
    return bracket(zel, bracket(zel, x)) == x * (-lam * lam)


def graded_brackets(basis: RootBasis, z, u: AlgebraElement, v: AlgebraElement):
    """([U, V]^+, [U, V]^-) with [U, V]^+- = 1/2 ([U, V] -+ [sigma U, sigma V])."""
    zel = basis.element(z)
    if u.is_zero() or v.is_zero():
        zero = AlgebraElement.zero(u.kind, u.n)
        return zero, zero
    a, b = eigenvalue(basis, zel, u), eigenvalue(basis, zel, v)
    if a == 0 or b == 0:
        raise DomainError("graded brackets need U and V outside m_0")
    plain = bracket(u, v)
    twisted = bracket(sigma(basis, zel, u), sigma(basis, zel, v))
    plus = (plain - twisted) / 2
    minus = (plain + twisted) / 2
    if not _in_level(basis, zel, plus, a + b):
        raise ConsistencyError("[U, V]^+ is not in m_{a+b}")
    if not _in_level(basis, zel, minus, abs(a - b)):
        raise ConsistencyError("[U, V]^- is not in m_{|a-b|}")
    return plus, minus


def h_vector(basis: RootBasis, z, x: AlgebraElement) -> AlgebraElement:
    """h(X) = [X, sigma(X)], an element of m_0."""
    zel = basis.element(z)
    if x.is_zero():
        return x
    out = bracket(x, sigma(basis, zel, x))
    if not bracket(zel, out).is_zero():
        raise ConsistencyError("h(X) does not commute with Z")
    return out


# -- ideals -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class IdealSplit:
    u: tuple[AlgebraElement, ...]
    complement: tuple[AlgebraElement, ...]
    dim_g: int


def _basis_elements(elements: list[AlgebraElement]) -> list[AlgebraElement]:
    if not elements:
        return []
    for e in elements:
        e._same(elements[0])
    return Span(elements).basis


def _pairwise(xs, ys=None) -> list[AlgebraElement]:
    if ys is None:
        return [bracket(x, y) for i, x in enumerate(xs) for y in xs[i + 1:]]
    return [bracket(x, y) for x in xs for y in ys]


def u_ideal(h_subalg: list[AlgebraElement], p_subspace: list[AlgebraElement]) -> IdealSplit:
    """u = {W in h : [W, p] = 0} and its complementary ideal p + [p, p] in g = h + p."""
    everything = list(h_subalg) + list(p_subspace)
    if not everything:
        raise ParameterError("h and p are both empty")
    kind, n = everything[0].kind, everything[0].n
    for e in everything:
        e._same(everything[0])
    h = _basis_elements(list(h_subalg))
    p = _basis_elements(list(p_subspace))
    for x in h:
        for y in p:
            if invariant_form(x, y) != 0:
                raise ParameterError("p is not orthogonal to h under the invariant form")
    g_elems = h + p
    g = Span(g_elems)
    if g.dim != len(g_elems):
        raise ParameterError("h and p overlap")
    if not Span(h).contains_all(_pairwise(h)):
        raise ParameterError("h is not closed under the bracket")
    if not g.contains_all(_pairwise(h, p) + _pairwise(p)):
        raise ParameterError("h + p is not a subalgebra")

    if not h:
        u = []
    elif not p:
        u = h
    else:
        # sum_i c_i [h_i, p_j] = 0 for every j
        images = [_rows([bracket(x, y) for y in p]).to_list() for x in h]
        rows = [sum(per_x, []) for per_x in images]
        system = DomainMatrix(rows, (len(rows), len(rows[0])), QQ).transpose()
        coeffs = linalg.from_domain(system.nullspace())
        u = _basis_elements([sum((x * c for x, c in zip(h, vec) if c), AlgebraElement.zero(kind, n))
                             for vec in coeffs])

    comp = _basis_elements(p + _pairwise(p)) if p else []

    if len(u) + len(comp) != g.dim:
        raise ConsistencyError("u and p + [p, p] are not complementary")
    for x in u:
        for y in comp:
            if invariant_form(x, y) != 0:
                raise ConsistencyError("u is not orthogonal to p + [p, p]")
    for ideal in (u, comp):
        if ideal and len(ideal) < g.dim and not Span(ideal).contains_all(_pairwise(ideal, g_elems)):
            raise ConsistencyError("subspace is not an ideal of g")
    return IdealSplit(tuple(u), tuple(comp), g.dim)


def so3_triple(n: int) -> tuple[AlgebraElement, AlgebraElement, AlgebraElement]:
    """(F_{1,2}, F_{2,3}, F_{1,3}) in so(n), checked to satisfy [Y, [Y, X]] = -X."""
    if not isinstance(n, int) or n < 3:
        raise ParameterError(f"so3_triple needs n >= 3, got {n!r}")
    triple = (so_generator(n, 1, 2), so_generator(n, 2, 3), so_generator(n, 1, 3))
    norm = invariant_form(triple[0], triple[0])
    for x in triple:
        for y in triple:
            if x is y:
                if invariant_form(x, x) != norm:
                    raise ConsistencyError("triple is not of equal length")
                continue
            if invariant_form(x, y) != 0:
                raise ConsistencyError("triple is not orthogonal")
            if bracket(y, bracket(y, x)) != -x:
                raise ConsistencyError("[Y, [Y, X]] != -X on the triple")
    return triple

"""Killing fields on round spheres and on compact groups with bi-invariant metrics.

A linear Killing field on S^{N-1} is x -> A x for a real skew matrix A; the
metric is the ambient dot product, so ``g(X, Y)(x) = (A_X x) . (A_Y x)``.
Complex matrices (su, sp) act on R^{2N} via z_k = x_{2k} + i x_{2k+1}; see
:meth:`killing_lie.matrix_lie.AlgebraElement.real_form`.

Exact questions (is |A x| constant?) are decided in rational arithmetic; the
metric identities are checked by seeded sampling in float64.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import expm

from . import matrix_lie
from .errors import DomainError, ParameterError
from .matrix_lie import AlgebraElement

DEFAULT_SEED = 20240917
DEFAULT_SAMPLES = 1000
DEFAULT_TOLERANCE = 1e-10
UNIT_TOLERANCE = 1e-12


class SphereField:
    """The Killing field x -> A x on the unit sphere of R^N."""

    __slots__ = ("exact", "generator", "label")

    def __init__(self, matrix: Sequence[Sequence], label: str = ""):
        rows = [[Fraction(x) for x in row] for row in matrix]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ParameterError("generator must be a nonempty square matrix")
        for i in range(n):
            for j in range(n):
                if rows[i][j] != -rows[j][i]:
                    raise ParameterError(f"generator is not skew-symmetric at ({i}, {j})")
        self.exact = tuple(tuple(r) for r in rows)
        self.generator = np.array([[float(x) for x in r] for r in rows])
        self.label = label

    @classmethod
    def from_element(cls, x: AlgebraElement, label: str = "") -> "SphereField":
        """Real form of a matrix Lie algebra element, with exact entries."""
        m = x.matrix
        if x.kind == "so":
            return cls([[a for a, _ in row] for row in m], label)
        size = len(m)
        out = [[Fraction(0)] * (2 * size) for _ in range(2 * size)]
        for r, row in enumerate(m):
            for c, (a, b) in enumerate(row):
                out[2 * r][2 * c] = a
                out[2 * r][2 * c + 1] = -b
                out[2 * r + 1][2 * c] = b
                out[2 * r + 1][2 * c + 1] = a
        return cls(out, label)

    @property
    def ambient_dim(self) -> int:
        return len(self.exact)

    @property
    def sphere_dim(self) -> int:
        return self.ambient_dim - 1

    def __call__(self, x) -> np.ndarray:
        return self.generator @ x

    def __repr__(self) -> str:
        name = f" {self.label}" if self.label else ""
        return f"SphereField({name.strip() or 'A'} on S^{self.sphere_dim})"


@dataclass(frozen=True)
class ConstancyCertificate:
    """Outcome of the exact test A^T A = c Id.

    If constant, ``c`` is the squared length. Otherwise ``witness`` holds two
    unit vectors and their lengths, which differ.
    """

    constant: bool
    c: Fraction | None = None
    witness: tuple[tuple[float, ...], float, tuple[float, ...], float] | None = None

    def __bool__(self) -> bool:
        return self.constant

    def to_json(self) -> dict:
        out: dict = {"constant": self.constant}
        if self.c is not None:
            out["c"] = str(self.c)
        if self.witness is not None:
            x, lx, y, ly = self.witness
            out["witness"] = [{"x": list(x), "length": lx}, {"x": list(y), "length": ly}]
        return out


@dataclass(frozen=True)
class SampleReport:
    quantity_label: str
    num_samples: int
    seed: int
    max_abs_deviation: float
    tolerance: float
    status: str = ""
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != "hypothesis-not-met" and self.max_abs_deviation <= self.tolerance

    def to_json(self) -> dict:
        out = {
            "quantity_label": self.quantity_label,
            "num_samples": self.num_samples,
            "seed": self.seed,
            "max_abs_deviation": self.max_abs_deviation,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }
        if self.status:
            out["status"] = self.status
        if self.details:
            out["details"] = dict(self.details)
        return out


def _gram(field_: SphereField) -> list[list[Fraction]]:
    a = field_.exact
    n = len(a)
    return [[sum((a[k][i] * a[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def is_constant_length(field_: SphereField) -> ConstancyCertificate:
    """|A x|^2 = x^T (A^T A) x is constant on the sphere iff A^T A is scalar."""
    m = _gram(field_)
    n = len(m)
    diag = [m[i][i] for i in range(n)]
    off = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0]
    if len(set(diag)) == 1 and not off:
        return ConstancyCertificate(True, diag[0])

    if len(set(diag)) > 1:
        i = max(range(n), key=lambda k: diag[k])
        j = min(range(n), key=lambda k: diag[k])
        x = tuple(float(k == i) for k in range(n))
        y = tuple(float(k == j) for k in range(n))
        return ConstancyCertificate(False, None, (x, math.sqrt(diag[i]), y, math.sqrt(diag[j])))

    # equal diagonal, some m_ij != 0: (e_i +- e_j)/sqrt 2 have squared lengths c +- m_ij
    i, j = off[0]
    r = 1 / math.sqrt(2)
    x = tuple(r if k in (i, j) else 0.0 for k in range(n))
    y = tuple(r if k == i else (-r if k == j else 0.0) for k in range(n))
    c = diag[0]
    return ConstancyCertificate(False, None, (x, math.sqrt(c + m[i][j]), y, math.sqrt(c - m[i][j])))


def sample_points(dim: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> np.ndarray:
    """``samples`` seeded uniform points on the unit sphere of R^dim, one per row."""
    if samples < 1:
        raise ParameterError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((samples, dim))
    return pts / np.linalg.norm(pts, axis=1, keepdims=True)


def sampled_lengths(field_: SphereField, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> np.ndarray:
    pts = sample_points(field_.ambient_dim, samples, seed)
    return np.linalg.norm(pts @ field_.generator.T, axis=1)


def _check_same_sphere(*fields: SphereField) -> int:
    dims = {f.ambient_dim for f in fields}
    if len(dims) != 1:
        raise ParameterError(f"fields live on spheres of different dimensions: {sorted(dims)}")
    return dims.pop()


def pointwise_metric(f1: SphereField, f2: SphereField, x) -> float:
    """g(f1, f2) at the unit vector x."""
    n = _check_same_sphere(f1, f2)
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ParameterError(f"point must have {n} coordinates, got shape {x.shape}")
    if abs(float(np.linalg.norm(x)) - 1.0) > UNIT_TOLERANCE:
        raise ParameterError(f"point is not on the unit sphere: |x| = {np.linalg.norm(x)!r}")
    return float(np.dot(f1(x), f2(x)))


def _metric_samples(f1: SphereField, f2: SphereField, pts: np.ndarray) -> np.ndarray:
    return np.einsum("si,si->s", pts @ f1.generator.T, pts @ f2.generator.T)


def verify_orthogonality(
    z: SphereField,
    subspace: Sequence[SphereField],
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SampleReport:
    """max |g(Z, Y)| over the sample points and the given basis of m."""
    _check_same_sphere(z, *subspace)
    pts = sample_points(z.ambient_dim, samples, seed)
    worst = 0.0
    for y in subspace:
        worst = max(worst, float(np.max(np.abs(_metric_samples(z, y, pts)))))
    return SampleReport(
        "g(Z, m)",
        samples,
        seed,
        worst,
        tolerance,
        details={"z_constant_length": is_constant_length(z).constant, "basis_size": len(subspace)},
    )


def _coefficient(image: np.ndarray, target: np.ndarray, what: str) -> float:
    """The scalar c with image = c * target, checked to fit."""
    denom = float(np.sum(target * target))
    if denom == 0:
        raise DomainError(f"{what}: target matrix is zero")
    c = float(np.sum(image * target)) / denom
    scale = max(1.0, float(np.max(np.abs(image))))
    if float(np.max(np.abs(image - c * target))) > 1e-9 * scale:
        raise DomainError(f"{what}: matrices do not satisfy the root pair relations")
    return c


def _bracket(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


@dataclass(frozen=True)
class RootTriple:
    """U_alpha, V_alpha and the Cartan element realizing alpha, as sphere fields."""

    u: SphereField
    v: SphereField
    alpha: SphereField

    @classmethod
    def from_basis(cls, basis: matrix_lie.RootBasis, root) -> "RootTriple":
        from . import linalg

        root = linalg.as_vector(root)
        if root not in basis.pairs:
            raise DomainError(f"{tuple(str(x) for x in root)} is not a positive root of {basis.label}")
        u, v = basis.pairs[root]
        return cls(
            SphereField.from_element(u, "U"),
            SphereField.from_element(v, "V"),
            SphereField.from_element(basis.iota(root), "alpha"),
        )


def _pr3_terms(z: SphereField, t: RootTriple) -> tuple[float, float, float]:
    """(c, kappa, alpha(A)) from [Z, U] = c V, [U, V] = kappa A, [A, U] = alpha(A) V."""
    zm, um, vm, am = z.generator, t.u.generator, t.v.generator, t.alpha.generator
    _coefficient(_bracket(am, vm), -um, "[A, V]")
    c = _coefficient(_bracket(zm, um), vm, "[Z, U]")
    if abs(c) < 1e-12:
        raise DomainError("alpha is not in I_1(Z): <Z, alpha> = 0")
    kappa = _coefficient(_bracket(um, vm), am, "[U, V]")
    alpha_a = _coefficient(_bracket(am, um), vm, "[A, U]")
    return c, kappa, alpha_a


def pr3_reports(
    z: SphereField,
    triple: RootTriple,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tolerance: float = DEFAULT_TOLERANCE,
) -> list[SampleReport]:
    """One report per identity, in the form that does not fix the scale of Z or U.

    With [Z, U] = c V, [U, V] = kappa A and [A, U] = a V the identities read
    c g(U,U) = c g(V,V) = kappa g(A,Z) and c g(A,A) = a g(A,Z); for
    c = kappa = 1 they are the familiar g(U,U) = g(alpha,Z) and
    g(alpha,alpha) = <alpha,alpha> g(alpha,Z).
    """
    _check_same_sphere(z, triple.u, triple.v, triple.alpha)
    c, kappa, alpha_a = _pr3_terms(z, triple)
    pts = sample_points(z.ambient_dim, samples, seed)
    g = lambda f1, f2: _metric_samples(f1, f2, pts)
    u, v, a = triple.u, triple.v, triple.alpha
    gaz = g(a, z)
    quantities = [
        ("g(Z, U)", g(z, u)),
        ("g(Z, V)", g(z, v)),
        ("c g(U, U) - kappa g(alpha, Z)", c * g(u, u) - kappa * gaz),
        ("c g(V, V) - kappa g(alpha, Z)", c * g(v, v) - kappa * gaz),
        ("g(U, V)", g(u, v)),
        ("g(alpha, U)", g(a, u)),
        ("g(alpha, V)", g(a, v)),
        ("c g(alpha, alpha) - <alpha, alpha> g(alpha, Z)", c * g(a, a) - alpha_a * gaz),
    ]
    details = {"c": c, "kappa": kappa, "alpha_alpha": alpha_a}
    return [
        SampleReport(label, samples, seed, float(np.max(np.abs(vals))), tolerance, details=details)
        for label, vals in quantities
    ]


def verify_pr3(
    z: SphereField,
    triple: RootTriple,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SampleReport:
    reports = pr3_reports(z, triple, samples, seed, tolerance)
    worst = max(reports, key=lambda r: r.max_abs_deviation)
    details = dict(reports[0].details)
    details["identities"] = {r.quantity_label: r.max_abs_deviation for r in reports}
    details["z_constant_length"] = is_constant_length(z).constant
    return SampleReport("root pair identities", samples, seed, worst.max_abs_deviation, tolerance, details=details)


def verify_lemma_le8(
    z: SphereField,
    triple: RootTriple,
    beta: SphereField,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tolerance: float = DEFAULT_TOLERANCE,
) -> SampleReport:
    """<alpha,beta> g(U,U) = <alpha,beta> g(V,V) = kappa g(alpha,beta), given g(v_alpha, beta) = 0.

    ``beta`` is the Cartan element realizing the second root; <alpha, beta>
    is read off [B, U] = <alpha, beta> V.
    """
    _check_same_sphere(z, triple.u, triple.v, triple.alpha, beta)
    pts = sample_points(z.ambient_dim, samples, seed)
    g = lambda f1, f2: _metric_samples(f1, f2, pts)
    u, v, a = triple.u, triple.v, triple.alpha
    hyp = max(float(np.max(np.abs(g(u, beta)))), float(np.max(np.abs(g(v, beta)))))
    if hyp > tolerance:
        return SampleReport(
            "le8: g(v_alpha, beta) = 0", samples, seed, hyp, tolerance, "hypothesis-not-met"
        )
    kappa = _coefficient(_bracket(u.generator, v.generator), a.generator, "[U, V]")
    ab = _coefficient(_bracket(beta.generator, u.generator), v.generator, "[B, U]")
    gab = g(a, beta)
    dev_u = float(np.max(np.abs(ab * g(u, u) - kappa * gab)))
    dev_v = float(np.max(np.abs(ab * g(v, v) - kappa * gab)))
    return SampleReport(
        "<alpha, beta> g(U, U) - kappa g(alpha, beta)",
        samples,
        seed,
        max(dev_u, dev_v),
        tolerance,
        details={
            "alpha_beta": ab,
            "kappa": kappa,
            "hypothesis_deviation": hyp,
            "max_abs_g_alpha_beta": float(np.max(np.abs(gab))),
        },
    )


def block_sum(first: SphereField, second: SphereField) -> tuple[SphereField, SphereField]:
    """Both fields on the sphere of R^{N1+N2}, acting on complementary coordinate blocks."""
    n1, n2 = first.ambient_dim, second.ambient_dim
    zero = Fraction(0)
    a = [list(r) + [zero] * n2 for r in first.exact] + [[zero] * (n1 + n2) for _ in range(n2)]
    b = [[zero] * (n1 + n2) for _ in range(n1)] + [[zero] * n1 + list(r) for r in second.exact]
    return SphereField(a, first.label), SphereField(b, second.label)


def _random_element(basis_np: list[np.ndarray], rng: np.random.Generator, radius: float) -> np.ndarray:
    coeffs = rng.uniform(-1.0, 1.0, len(basis_np))
    x = sum(c * b for c, b in zip(coeffs, basis_np))
    norm = float(np.linalg.norm(x))
    return x * (radius / norm) if norm > 0 else x


def _form(x: np.ndarray, y: np.ndarray) -> float:
    return float(-np.real(np.trace(x @ y)))


def biinvariant_all_constant(
    kind: str,
    n: int,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tolerance: float = 1e-8,
    factors: int = 3,
) -> SampleReport:
    """Right-invariant fields of a bi-invariant metric have constant length.

    The field of X at the group point a has length |Ad(a^{-1}) X| in the
    invariant form; it is compared with |X| at seeded points a, each a
    product of exponentials of random algebra elements.
    """
    if n > 4:
        raise ParameterError(f"group sampling is limited to n <= 4, got n = {n}")
    basis = matrix_lie.build_algebra_basis(kind, n)
    elems = [b.to_numpy() for b in basis.elements]
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        a = np.eye(elems[0].shape[0], dtype=complex)
        for _ in range(factors):
            a = a @ expm(_random_element(elems, rng, radius=math.pi))
        inv = np.linalg.inv(a)
        for x in elems:
            y = inv @ x @ a
            worst = max(worst, abs(math.sqrt(max(_form(y, y), 0.0)) - math.sqrt(_form(x, x))))
    return SampleReport(
        f"|Ad(a^-1) X| - |X| on {kind}({n})",
        samples,
        seed,
        worst,
        tolerance,
        details={"basis_size": len(elems)},
    )

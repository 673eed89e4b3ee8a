"""Centralizers of Cartan elements and classification of Hermitian pairs.

For ``Z`` in the Cartan subalgebra the positive roots split into ``I_1(Z)``
(nonzero pairing with Z) and ``I_2(Z)`` (zero pairing). The centralizer of Z
is the Cartan subalgebra plus the root spaces of ``I_2``; its complement m is
the sum of the root spaces of ``I_1`` and carries the eigenvalues of
``-(ad Z)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import networkx as nx

from . import linalg, root_systems, weyl
from .errors import ConsistencyError, DomainError, ParameterError
from .root_systems import Root, RootSystem

CartanVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RootSplit:
    i1: tuple[Root, ...]
    i2: tuple[Root, ...]


@dataclass(frozen=True)
class CentralizerDescriptor:
    factors: tuple[tuple[str, int], ...]
    center_dim: int
    z_spans_center: bool

    @property
    def factor_labels(self) -> list[str]:
        return [factor_label(f) for f in self.factors]

    def to_json(self) -> dict:
        return {
            "factors": self.factor_labels,
            "center_dim": self.center_dim,
            "z_spans_center": self.z_spans_center,
        }


@dataclass(frozen=True)
class SpectrumReport:
    entries: tuple[tuple[Fraction, int], ...]
    dim_m0: int
    summands: tuple[tuple[Root, ...], ...]

    def to_json(self) -> dict:
        return {
            "levels": [{"lambda": linalg.format_rational(lam), "mult": m} for lam, m in self.entries],
            "dim_m0": self.dim_m0,
            "summands": [[linalg.vector_to_json(a) for a in comp] for comp in self.summands],
        }


@dataclass(frozen=True)
class Classification:
    """Outcome of matching (g_1, k) against the Hermitian list.

    ``case`` is ``1..4`` for the four classical families, or one of
    ``"not-hermitian"``, ``"excluded-e6"``, ``"excluded-e7"``.
    """

    case: int | str
    parameters: dict = field(default_factory=dict)
    descriptor: CentralizerDescriptor | None = None
    spectrum: SpectrumReport | None = None
    below_threshold: bool = False
    noncompact_index: int | None = None
    pair: str | None = None

    @property
    def hermitian(self) -> bool:
        return self.case != "not-hermitian"

    def to_json(self) -> dict:
        out = {
            "case": self.case,
            "parameters": dict(self.parameters),
            "below_threshold_flag": self.below_threshold,
        }
        # parameters are also exposed at top level, e.g. {"case": 2, "n": 5}
        out.update(self.parameters)
        if self.descriptor is not None:
            out["factors"] = self.descriptor.factor_labels
            out["center_dim"] = self.descriptor.center_dim
            out["z_spans_center"] = self.descriptor.z_spans_center
        if self.spectrum is not None:
            out["spectrum"] = self.spectrum.to_json()["levels"]
        if self.noncompact_index is not None:
            out["noncompact_index"] = self.noncompact_index
        if self.pair is not None:
            out["pair"] = self.pair
        return out


def factor_label(f: tuple[str, int]) -> str:
    kind, rank = f
    return kind if kind in ("E6", "E7") else f"{kind}{rank}"


def _check(rs: RootSystem, z) -> CartanVector:
    return weyl._check(rs, z)


def split_roots(rs: RootSystem, z) -> RootSplit:
    z = _check(rs, z)
    i1, i2 = [], []
    for a in rs.positive_roots:
        (i1 if linalg.dot(z, a) != 0 else i2).append(a)
    return RootSplit(tuple(i1), tuple(i2))


def is_regular(rs: RootSystem, z) -> bool:
    return not split_roots(rs, z).i2


# -- Dynkin type recognition -------------------------------------------------


def _subsystem_simple_roots(positive: list[Root]) -> list[Root]:
    pos = set(positive)
    simple = []
    for a in positive:
        decomposable = any(
            tuple(x - y for x, y in zip(a, b)) in pos for b in positive if b != a
        )
        if not decomposable:
            simple.append(a)
    return simple


def cartan_matrix(simple: list[Root]) -> list[list[int]]:
    """A_ij = 2<a_i, a_j>/<a_j, a_j>."""
    out = []
    for a in simple:
        row = []
        for b in simple:
            v = 2 * linalg.dot(a, b) / linalg.dot(b, b)
            if v.denominator != 1:
                raise ConsistencyError(f"non-integral Cartan entry {v}")
            row.append(int(v))
        out.append(row)
    return out


def _dynkin_graph(matrix: list[list[int]]) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(len(matrix)))
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if i != j and v != 0:
                g.add_edge(i, j, a=v)
    return g


def _candidates(rank: int):
    # Ordered so that low-rank coincidences get a single canonical label:
    # B1 = C1 = A1, C2 = B2, D3 = A3.
    yield "A", rank
    if rank >= 2:
        yield "B", rank
    if rank >= 3:
        yield "C", rank
    if rank >= 4:
        yield "D", rank
    if rank == 6:
        yield "E6", 6
    if rank == 7:
        yield "E7", 7


_REFERENCE_GRAPHS: dict[tuple[str, int], nx.DiGraph] = {}


def _reference(kind: str, rank: int) -> nx.DiGraph:
    key = (kind, rank)
    if key not in _REFERENCE_GRAPHS:
        rs = root_systems.build(kind, rank)
        _REFERENCE_GRAPHS[key] = _dynkin_graph(cartan_matrix(list(rs.simple_roots)))
    return _REFERENCE_GRAPHS[key]


def identify_type(matrix: list[list[int]]) -> tuple[str, int]:
    """Type of an indecomposable Cartan matrix, up to simultaneous permutation."""
    rank = len(matrix)
    g = _dynkin_graph(matrix)
    for kind, r in _candidates(rank):
        ref = _reference(kind, r)
        if nx.is_isomorphic(g, ref, edge_match=lambda e1, e2: e1["a"] == e2["a"]):
            return kind, r
    raise ConsistencyError(f"Cartan matrix {matrix} matches no supported type")


def subsystem_type(roots: list[Root]) -> tuple[tuple[str, int], ...]:
    """Simple factors of the root subsystem whose positive roots are ``roots``."""
    simple = _subsystem_simple_roots(list(roots))
    if not simple:
        return ()
    matrix = cartan_matrix(simple)
    g = _dynkin_graph(matrix).to_undirected()
    factors = []
    for comp in nx.connected_components(g):
        idx = sorted(comp)
        sub = [[matrix[i][j] for j in idx] for i in idx]
        factors.append(identify_type(sub))
    return tuple(sorted(factors, key=lambda f: (f[0], f[1])))


def centralizer_type(rs: RootSystem, z) -> CentralizerDescriptor:
    z = _check(rs, z)
    split = split_roots(rs, z)
    factors = subsystem_type(list(split.i2))
    span_rank = linalg.rank(split.i2)
    if span_rank != sum(r for _, r in factors):
        raise ConsistencyError("factor ranks do not add up to the rank of span(I_2)")
    center_dim = rs.rank - span_rank
    nonzero = any(x != 0 for x in z)
    orthogonal = all(linalg.dot(z, a) == 0 for a in split.i2)
    return CentralizerDescriptor(factors, center_dim, center_dim == 1 and nonzero and orthogonal)


# -- spectrum of -(ad Z)^2 ----------------------------------------------------


def irreducible_summands(rs: RootSystem, z) -> tuple[tuple[Root, ...], ...]:
    """Partition of I_1 into the root sets of the ad(m_0)-irreducible summands of m.

    Two roots of I_1 are linked when their sum or difference is +-gamma for a
    root gamma of I_2; summands are the connected components.
    """
    split = split_roots(rs, z)
    link = set(split.i2) | {tuple(-x for x in g) for g in split.i2}
    g = nx.Graph()
    g.add_nodes_from(range(len(split.i1)))
    for i, a in enumerate(split.i1):
        for j in range(i + 1, len(split.i1)):
            b = split.i1[j]
            diff = tuple(x - y for x, y in zip(a, b))
            total = tuple(x + y for x, y in zip(a, b))
            if diff in link or total in link:
                g.add_edge(i, j)
    comps = sorted(sorted(c) for c in nx.connected_components(g))
    return tuple(tuple(split.i1[i] for i in comp) for comp in comps)


def eigen_spectrum(rs: RootSystem, z) -> SpectrumReport:
    z = _check(rs, z)
    split = split_roots(rs, z)
    counts: dict[Fraction, int] = {}
    for a in split.i1:
        lam = abs(linalg.dot(z, a))
        counts[lam] = counts.get(lam, 0) + 1
    entries = tuple((lam, 2 * counts[lam]) for lam in sorted(counts))
    summands = irreducible_summands(rs, z)
    for comp in summands:
        if len({abs(linalg.dot(z, a)) for a in comp}) != 1:
            raise ConsistencyError("an irreducible summand straddles two eigenvalue levels")
    return SpectrumReport(entries, rs.rank + 2 * len(split.i2), summands)


# -- Hermitian generators and classification --------------------------------


def hermitian_generator(rs: RootSystem, j: int) -> CartanVector:
    """Z with <Z, pi_j> = 1 and <Z, pi_i> = 0 for i != j, for a non-compact pi_j.

    Then <Z, alpha> = 1 on every root of I_1(Z).
    """
    noncompact = root_systems.noncompact_simple_roots(rs)
    if j not in noncompact:
        raise DomainError(f"pi_{j} is not a non-compact simple root of {rs.label} (those are {noncompact})")
    gram = [[linalg.dot(p, q) for q in rs.simple_roots] for p in rs.simple_roots]
    rhs = [Fraction(int(i == j - 1)) for i in range(rs.rank)]
    c = linalg.solve(gram, rhs)
    z = tuple(
        sum((c[k] * rs.simple_roots[k][i] for k in range(rs.rank)), Fraction(0))
        for i in range(rs.ambient_dim)
    )
    if any(linalg.dot(z, a) not in (0, 1) for a in rs.positive_roots):
        raise ConsistencyError(f"generator for pi_{j} of {rs.label} pairs outside {{0, 1}}")
    return z


def _case_for(rs: RootSystem, j: int) -> tuple[int | str, dict, bool, str]:
    l = rs.rank
    if rs.kind == "A":
        p, q = sorted((j, l + 1 - j), reverse=True)
        return 1, {"p": p, "q": q}, False, f"(su({p + q}), su({p})+su({q})+R)"
    if rs.kind == "B":
        p = 2 * l - 1
        return 3, {"p": p}, p < 5, f"(so({p + 2}), so({p})+R)"
    if rs.kind == "C":
        return 4, {"n": l}, l < 2, f"(sp({l}), su({l})+R)"
    if rs.kind == "D":
        if j == 1:
            p = 2 * l - 2
            return 3, {"p": p}, p < 5, f"(so({p + 2}), so({p})+R)"
        return 2, {"n": l}, l < 5, f"(so({2 * l}), su({l})+R)"
    if rs.kind == "E6":
        return "excluded-e6", {}, False, "(e6, so(10)+R)"
    return "excluded-e7", {}, False, "(e7, e6+R)"


def classify_hermitian_pair(rs: RootSystem, z) -> Classification:
    z = _check(rs, z)
    desc = centralizer_type(rs, z)
    spec = eigen_spectrum(rs, z)
    if len(spec.entries) != 1 or not desc.z_spans_center:
        return Classification("not-hermitian", {}, desc, spec)

    dom = weyl.dominant_representative(rs, z)
    touching = [i + 1 for i, pi in enumerate(rs.simple_roots) if linalg.dot(dom, pi) != 0]
    noncompact = root_systems.noncompact_simple_roots(rs)
    if len(touching) != 1 or touching[0] not in noncompact:
        raise ConsistencyError(
            f"single eigenvalue level but simple pairings {touching} do not isolate a non-compact root"
        )
    j = touching[0]
    lam = spec.entries[0][0]
    top = root_systems.highest_root(rs)
    if linalg.dot(dom, top) != lam:
        raise ConsistencyError("<Z, alpha_max> differs from the unique eigenvalue")

    case, params, below, pair = _case_for(rs, j)
    return Classification(case, params, desc, spec, below, j, pair)


def commuting_unit_decomposition(rs: RootSystem, z) -> tuple[list[CartanVector], Fraction]:
    """Write Z = c * (U_1 + ... + U_n) with U_i = e_i, for so(2n) and sp(n)."""
    if rs.kind not in ("C", "D"):
        raise DomainError(f"decomposition into commuting units needs type C or D, got {rs.label}")
    z = _check(rs, z)
    c = z[0]
    if c <= 0 or any(x != c for x in z):
        raise DomainError(f"Z = {tuple(str(x) for x in z)} is not a positive multiple of e_1 + ... + e_n")
    n = rs.ambient_dim
    units = [tuple(Fraction(int(i == k)) for i in range(n)) for k in range(n)]
    return units, c


def parse_cartan(rs: RootSystem, values) -> CartanVector:
    if len(values) != rs.ambient_dim:
        raise ParameterError(f"{rs.label} expects {rs.ambient_dim} ambient coordinates, got {len(values)}")
    return _check(rs, values)

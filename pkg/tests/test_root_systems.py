import itertools
from fractions import Fraction

import pytest

from killing_lie import root_systems as R
from killing_lie.errors import DomainError, ParameterError

HALF = Fraction(1, 2)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _lattice_roots(kind, l):
    """Roots found by scanning short lattice vectors, independent of the builder."""
    if kind == "A":
        cands = itertools.product((-1, 0, 1), repeat=l + 1)
        return {tuple(map(Fraction, v)) for v in cands if sum(v) == 0 and _dot(v, v) == 2}
    cands = list(itertools.product((-2, -1, 0, 1, 2), repeat=l))
    if kind == "B":
        keep = lambda v: _dot(v, v) in (1, 2) and max(map(abs, v)) == 1
    elif kind == "C":
        keep = lambda v: (_dot(v, v) == 2 and max(map(abs, v)) == 1) or _dot(v, v) == 4 and max(map(abs, v)) == 2
    else:
        keep = lambda v: _dot(v, v) == 2 and max(map(abs, v)) == 1
    return {tuple(map(Fraction, v)) for v in cands if keep(v)}


def _e8_roots():
    out = set()
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            out.add(tuple(HALF * s for s in signs))
    return out


@pytest.mark.parametrize("kind,lo", [("A", 1), ("B", 2), ("C", 2), ("D", 3)])
def test_roots_match_lattice_scan(kind, lo):
    top = 5 if kind == "A" else 4
    for l in range(lo, top + 1):
        rs = R.build(kind, l)
        assert set(rs.roots) == _lattice_roots(kind, l)


def test_e_roots_are_e8_sublattice_roots():
    e8 = _e8_roots()
    assert len(e8) == 240
    e7 = {v for v in e8 if v[6] + v[7] == 0}
    e6 = {v for v in e8 if v[5] == v[6] == -v[7]}
    assert set(R.build("E7").roots) == e7
    assert set(R.build("E6").roots) == e6
    assert (len(e6), len(e7)) == (72, 126)


@pytest.mark.parametrize(
    "label,expected",
    [
        ("A2", (1, 1)),
        ("B2", (1, 2)),
        ("C3", (2, 2, 1)),
        ("D4", (1, 2, 1, 1)),
        ("E6", (1, 2, 2, 3, 2, 1)),
        ("E7", (2, 2, 3, 4, 3, 2, 1)),
    ],
)
def test_highest_root_coefficients(label, expected):
    rs = R.build(*R.parse_label(label))
    assert R.simple_root_coefficients(rs, R.highest_root(rs)) == expected


def test_highest_roots_in_coordinates():
    assert R.highest_root(R.build("C", 3)) == (2, 0, 0)
    assert R.highest_root(R.build("D", 4)) == (1, 1, 0, 0)
    assert R.highest_root(R.build("B", 3)) == (1, 1, 0)


def test_highest_root_dominates_every_root():
    for label in ("A4", "B4", "C4", "D5", "E6", "E7"):
        rs = R.build(*R.parse_label(label))
        top = R.simple_root_coefficients(rs, R.highest_root(rs))
        for a in rs.positive_roots:
            assert all(t >= c for t, c in zip(top, R.simple_root_coefficients(rs, a)))


@pytest.mark.parametrize(
    "label,expected",
    [
        ("A1", [1]),
        ("A4", [1, 2, 3, 4]),
        ("B3", [1]),
        ("B5", [1]),
        ("C2", [2]),
        ("C4", [4]),
        ("D4", [1, 3, 4]),
        ("D6", [1, 5, 6]),
        ("E6", [1, 6]),
        ("E7", [7]),
    ],
)
def test_noncompact_simple_roots(label, expected):
    rs = R.build(*R.parse_label(label))
    assert R.noncompact_simple_roots(rs) == expected
    assert R.noncompact_by_enumeration(rs) == expected


def test_simple_roots_are_positive_and_indecomposable():
    for label in ("A3", "B3", "C3", "D4", "E6", "E7"):
        rs = R.build(*R.parse_label(label))
        pos = rs.positive_set
        for i, pi in enumerate(rs.simple_roots):
            assert pi in pos
            coeffs = R.simple_root_coefficients(rs, pi)
            assert coeffs == tuple(int(k == i) for k in range(rs.rank))


def test_roots_satisfy_cartan_constraints():
    for label in ("A3", "E6", "E7"):
        rs = R.build(*R.parse_label(label))
        assert all(rs.in_cartan(a) for a in rs.roots)


def test_e_simple_roots():
    rs = R.build("E6")
    pi1 = rs.simple_roots[0]
    assert pi1 == (HALF, -HALF, -HALF, -HALF, -HALF, -HALF, -HALF, HALF)
    assert rs.simple_roots[1] == (1, 1, 0, 0, 0, 0, 0, 0)
    assert rs.simple_roots[2] == (-1, 1, 0, 0, 0, 0, 0, 0)


def test_coefficients_reject_non_roots():
    rs = R.build("B", 2)
    with pytest.raises(DomainError):
        R.simple_root_coefficients(rs, (2, 0))
    with pytest.raises(DomainError):
        R.simple_root_coefficients(rs, (-1, 0))


@pytest.mark.parametrize("args", [("F", 4), ("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E6", 7), ("D", None)])
def test_build_rejects_unsupported(args):
    with pytest.raises(ParameterError):
        R.build(*args)


def test_degenerate_ranks_behind_flag():
    assert len(R.build("B", 1, strict=False).positive_roots) == 1
    assert len(R.build("C", 1, strict=False).positive_roots) == 1
    assert len(R.build("D", 2, strict=False).positive_roots) == 2


def test_parse_label():
    assert R.parse_label("d5") == ("D", 5)
    assert R.parse_label("E7") == ("E7", 7)
    with pytest.raises(ParameterError):
        R.parse_label("G2")


def test_to_json_is_exact():
    data = R.build("E6").to_json()
    assert data["simple_roots"][0][0] == [1, 2]
    assert len(data["positive_roots"]) == 36

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from killing_lie import centralizer as C
from killing_lie import geometry_verifier as gv
from killing_lie import matrix_lie as ml
from killing_lie.errors import DomainError, ParameterError

H = Fraction(1, 2)
SF = gv.SphereField


def field(kind, n, z, label="Z"):
    b = ml.build_algebra_basis(kind, n)
    return SF.from_element(b.iota(z), label)


def type_a_generator(p, q):
    n = p + q
    return tuple([Fraction(q, n)] * p + [Fraction(-p, n)] * q)


# -- constant length ---------------------------------------------------------


@pytest.mark.parametrize(
    "kind,n,z,c",
    [
        ("so", 8, (H,) * 4, Fraction(1, 4)),
        ("so", 10, (H,) * 5, Fraction(1, 4)),
        ("su", 4, (1, 1, -1, -1), 1),
        ("su", 4, (H, H, -H, -H), Fraction(1, 4)),
        ("sp", 3, (1, 1, 1), 1),
        ("sp", 2, (H, H), Fraction(1, 4)),
    ],
)
def test_constant_length_examples(kind, n, z, c):
    f = field(kind, n, z)
    cert = gv.is_constant_length(f)
    assert cert.constant and cert.c == c
    spread = np.ptp(gv.sampled_lengths(f, 500, seed=3))
    assert spread < 1e-9
    assert abs(gv.sampled_lengths(f, 5, seed=4)[0] ** 2 - float(c)) < 1e-12


@pytest.mark.parametrize(
    "kind,n,z",
    [
        ("su", 3, type_a_generator(2, 1)),
        ("su", 5, type_a_generator(3, 2)),
        ("so", 7, (1, 0, 0)),
        ("so", 10, (1, 0, 0, 0, 0)),
        ("su", 3, (1, 0, -1)),
        ("sp", 2, (1, 0)),
    ],
)
def test_non_constant_examples(kind, n, z):
    f = field(kind, n, z)
    cert = gv.is_constant_length(f)
    assert not cert.constant
    x, lx, y, ly = cert.witness
    assert abs(np.linalg.norm(f(np.array(x))) - lx) < 1e-12
    assert abs(np.linalg.norm(f(np.array(y))) - ly) < 1e-12
    assert abs(lx - ly) > 1e-6
    assert np.ptp(gv.sampled_lengths(f, 500)) > 1e-3


def test_balanced_type_a_is_constant():
    assert gv.is_constant_length(field("su", 4, type_a_generator(2, 2)))
    assert gv.is_constant_length(field("su", 6, type_a_generator(3, 3)))


def test_witness_with_equal_diagonal():
    # A^T A has equal diagonal but is not scalar
    a = [[0, 1, 1], [-1, 0, 0], [-1, 0, 0]]
    cert = gv.is_constant_length(SF(a))
    assert not cert.constant
    _, lx, _, ly = cert.witness
    assert lx != ly


def test_so3_rotation_witness():
    cert = gv.is_constant_length(SF.from_element(ml.so_generator(3, 1, 2)))
    assert cert.witness == ((1.0, 0.0, 0.0), 1.0, (0.0, 0.0, 1.0), 0.0)
    assert cert.to_json()["witness"][1]["length"] == 0.0


@settings(max_examples=30, deadline=None)
@given(entries=st.lists(st.integers(-3, 3), min_size=6, max_size=6))
def test_exact_and_sampled_constancy_agree(entries):
    a = [[0] * 4 for _ in range(4)]
    k = 0
    for i in range(4):
        for j in range(i + 1, 4):
            a[i][j], a[j][i] = entries[k], -entries[k]
            k += 1
    f = SF(a)
    spread = float(np.ptp(gv.sampled_lengths(f, 300, seed=1) ** 2))
    if gv.is_constant_length(f):
        assert spread < 1e-9
    else:
        assert spread > 1e-3


def test_sphere_field_rejects_non_skew():
    with pytest.raises(ParameterError):
        SF([[1, 0], [0, -1]])
    with pytest.raises(ParameterError):
        SF([[0, 1]])


# -- pointwise metric ----------------------------------------------------------


def test_pointwise_metric_values():
    f12 = SF.from_element(ml.so_generator(3, 1, 2))
    f13 = SF.from_element(ml.so_generator(3, 1, 3))
    x = np.array([0.0, 0.6, 0.8])
    assert gv.pointwise_metric(f12, f12, x) == pytest.approx(0.36)
    assert gv.pointwise_metric(f12, f13, x) == pytest.approx(0.48)


def test_pointwise_metric_errors():
    f = SF.from_element(ml.so_generator(3, 1, 2))
    with pytest.raises(ParameterError):
        gv.pointwise_metric(f, f, [1.0, 1.0, 0.0])
    with pytest.raises(ParameterError):
        gv.pointwise_metric(f, f, [1.0, 0.0])
    with pytest.raises(ParameterError):
        gv.pointwise_metric(f, SF.from_element(ml.so_generator(4, 1, 2)), [1.0, 0.0, 0.0])


@settings(max_examples=30, deadline=None)
@given(
    coeffs=st.lists(st.floats(-2, 2), min_size=3, max_size=3),
    point=st.lists(st.floats(-1, 1), min_size=3, max_size=3).filter(lambda p: np.linalg.norm(p) > 0.1),
)
def test_pointwise_metric_is_symmetric_and_bilinear(coeffs, point):
    x = np.array(point) / np.linalg.norm(point)
    fs = [SF.from_element(ml.so_generator(3, i, j)) for i, j in ((1, 2), (1, 3), (2, 3))]
    a, b, c = coeffs
    combo = SF([[0, 0, 0]] * 3)
    combo.generator = a * fs[0].generator + b * fs[1].generator
    lhs = gv.pointwise_metric(combo, fs[2], x)
    rhs = a * gv.pointwise_metric(fs[0], fs[2], x) + b * gv.pointwise_metric(fs[1], fs[2], x)
    assert lhs == pytest.approx(rhs, abs=1e-12)
    assert gv.pointwise_metric(fs[0], fs[1], x) == pytest.approx(gv.pointwise_metric(fs[1], fs[0], x), abs=1e-15)


# -- orthogonality -------------------------------------------------------------


@pytest.mark.parametrize(
    "kind,n,z",
    [("su", 4, (1, 1, -1, -1)), ("so", 8, (H,) * 4), ("so", 10, (H,) * 5), ("sp", 3, (H, H, H))],
)
def test_hermitian_generator_is_orthogonal_to_m(kind, n, z):
    b = ml.build_algebra_basis(kind, n)
    zf = SF.from_element(b.iota(z))
    m = [SF.from_element(y) for y in b.cartan_split(z)[1]]
    rep = gv.verify_orthogonality(zf, m, samples=300)
    assert rep.passed and rep.details["z_constant_length"]
    assert rep.to_json()["pass"] is True


def test_orthogonality_fails_for_so3_rotation():
    b = ml.build_algebra_basis("so", 3)
    z = (1,)
    zf = SF.from_element(b.iota(z))
    m = [SF.from_element(y) for y in b.cartan_split(z)[1]]
    rep = gv.verify_orthogonality(zf, m, samples=300)
    assert not rep.passed and rep.max_abs_deviation > 0.1
    assert not rep.details["z_constant_length"]


def test_orthogonality_fails_for_unbalanced_type_a():
    b = ml.build_algebra_basis("su", 3)
    z = type_a_generator(2, 1)
    rep = gv.verify_orthogonality(SF.from_element(b.iota(z)), [SF.from_element(y) for y in b.cartan_split(z)[1]])
    assert not rep.passed


# -- root pair identities -----------------------------------------------------


@pytest.mark.parametrize(
    "kind,n,z,root",
    [
        ("so", 8, (H,) * 4, (1, 1, 0, 0)),
        ("so", 8, (H,) * 4, (0, 0, 1, 1)),
        ("su", 4, (1, 1, -1, -1), (1, 0, -1, 0)),
        ("su", 4, (1, 1, -1, -1), (0, 1, 0, -1)),
        ("sp", 2, (H, H), (2, 0)),
        ("sp", 2, (H, H), (1, 1)),
        ("so", 10, (H,) * 5, (1, 0, 0, 0, 1)),
    ],
)
def test_pr3_holds_for_constant_length_generators(kind, n, z, root):
    b = ml.build_algebra_basis(kind, n)
    zf = SF.from_element(b.iota(z))
    reports = gv.pr3_reports(zf, gv.RootTriple.from_basis(b, root), samples=300)
    assert len(reports) == 8
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]
    assert gv.verify_pr3(zf, gv.RootTriple.from_basis(b, root), samples=300).passed


def test_pr3_fails_after_perturbing_z():
    b = ml.build_algebra_basis("so", 8)
    z = b.iota((H,) * 4) + ml.so_generator(8, 1, 2) * Fraction(1, 10)
    rep = gv.verify_pr3(SF.from_element(z), gv.RootTriple.from_basis(b, (1, 1, 0, 0)), samples=300)
    assert not rep.passed and rep.max_abs_deviation > 1e-3
    assert rep.details["z_constant_length"] is False


def test_pr3_domain_errors():
    b = ml.build_algebra_basis("su", 4)
    z = SF.from_element(b.iota((1, 1, -1, -1)))
    with pytest.raises(DomainError):
        gv.verify_pr3(z, gv.RootTriple.from_basis(b, (1, -1, 0, 0)))
    with pytest.raises(DomainError):
        gv.RootTriple.from_basis(b, (-1, 0, 1, 0))
    generic = SF.from_element(b.iota((1, 1, -1, -1)) + b.pairs[(1, 0, -1, 0)][0])
    with pytest.raises(DomainError):
        gv.verify_pr3(generic, gv.RootTriple.from_basis(b, (1, 0, 0, -1)))


def test_le8_strongly_orthogonal_roots():
    b = ml.build_algebra_basis("su", 4)
    z = SF.from_element(b.iota((1, 1, -1, -1)))
    beta = SF.from_element(b.iota((0, 1, 0, -1)))
    rep = gv.verify_lemma_le8(z, gv.RootTriple.from_basis(b, (1, 0, -1, 0)), beta, samples=300)
    assert rep.passed and rep.details["alpha_beta"] == 0
    assert rep.details["max_abs_g_alpha_beta"] < 1e-12


def test_le8_on_so10():
    b = ml.build_algebra_basis("so", 10)
    z = SF.from_element(b.iota((H,) * 5))
    t = gv.RootTriple.from_basis(b, (1, 1, 0, 0, 0))
    ok = gv.verify_lemma_le8(z, t, SF.from_element(b.iota((0, 0, 1, 1, 0))), samples=300)
    assert ok.passed
    bad = gv.verify_lemma_le8(z, t, SF.from_element(b.iota((1, 0, 1, 0, 0))), samples=300)
    assert bad.status == "hypothesis-not-met" and not bad.passed
    assert bad.to_json()["status"] == "hypothesis-not-met"


def test_le8_same_root():
    b = ml.build_algebra_basis("sp", 2)
    z = SF.from_element(b.iota((H, H)))
    t = gv.RootTriple.from_basis(b, (1, 1))
    rep = gv.verify_lemma_le8(z, t, t.alpha, samples=300)
    assert rep.passed


# -- compact groups ----------------------------------------------------------


@pytest.mark.parametrize("kind,n", [("su", 2), ("so", 3), ("sp", 1), ("su", 3)])
def test_biinvariant_fields_have_constant_length(kind, n):
    rep = gv.biinvariant_all_constant(kind, n, samples=50)
    assert rep.passed and rep.max_abs_deviation < 1e-10


def test_biinvariant_limits():
    with pytest.raises(ParameterError):
        gv.biinvariant_all_constant("su", 5, samples=1)


def test_block_sum_fields_are_orthogonal():
    f = SF.from_element(ml.so_generator(3, 1, 2))
    g = SF.from_element(ml.so_generator(4, 1, 3))
    a, b = gv.block_sum(f, g)
    assert a.ambient_dim == 7
    rep = gv.verify_orthogonality(a, [b], samples=300)
    assert rep.passed and rep.max_abs_deviation == 0.0


def test_sampling_is_seeded():
    assert np.array_equal(gv.sample_points(5, 10, seed=9), gv.sample_points(5, 10, seed=9))
    assert not np.array_equal(gv.sample_points(5, 10, seed=9), gv.sample_points(5, 10, seed=10))
    assert np.allclose(np.linalg.norm(gv.sample_points(5, 10), axis=1), 1.0)
    with pytest.raises(ParameterError):
        gv.sample_points(3, 0)


def test_summand_orthogonality_matches_spectrum():
    # distinct eigenspaces of ad(Z)^2 are orthogonal in the invariant form
    b = ml.build_algebra_basis("su", 4)
    s = ml.ad_squared_eigenspaces(b, (3, 1, -1, -3))
    levels = [space for _, space in s.levels]
    for i in range(len(levels)):
        for j in range(i + 1, len(levels)):
            assert all(ml.invariant_form(x, y) == 0 for x in levels[i] for y in levels[j])
    assert C.eigen_spectrum(b.root_system, (3, 1, -1, -3)).dim_m0 == len(s.m0)

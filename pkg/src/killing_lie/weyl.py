"""Weyl group action on the Cartan subalgebra by reflections."""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from . import linalg
from .errors import ConsistencyError, ParameterError, ResourceError
from .root_systems import RootSystem

CartanVector = tuple[Fraction, ...]

DEFAULT_ORBIT_CAP = 10**7


def _check(rs: RootSystem, h) -> CartanVector:
    h = linalg.as_vector(h)
    if len(h) != rs.ambient_dim:
        raise ParameterError(f"{rs.label} vectors have {rs.ambient_dim} coordinates, got {len(h)}")
    if not rs.in_cartan(h):
        raise ParameterError(
            f"vector violates the Cartan constraints of {rs.label}: residual [{', '.join(str(x) for x in rs.constraint_residual(h))}]"
        )
    return h


def reflect(rs: RootSystem, alpha, h) -> CartanVector:
    """phi_alpha(H) = H - 2<H,alpha>/<alpha,alpha> alpha."""
    alpha = linalg.as_vector(alpha)
    h = linalg.as_vector(h)
    c = 2 * linalg.dot(h, alpha) / linalg.dot(alpha, alpha)
    if c == 0:
        return h
    return tuple(x - c * a for x, a in zip(h, alpha))


def _simple_data(rs: RootSystem):
    return [(pi, 2 / linalg.dot(pi, pi)) for pi in rs.simple_roots]


def weyl_orbit(rs: RootSystem, h, cap: int = DEFAULT_ORBIT_CAP) -> set[CartanVector]:
    """Orbit of ``h`` under W, by breadth-first closure under simple reflections."""
    h = _check(rs, h)
    simple = _simple_data(rs)
    seen = {h}
    queue = deque([h])
    while queue:
        v = queue.popleft()
        for pi, k in simple:
            c = k * linalg.dot(v, pi)
            if c == 0:
                continue
            w = tuple(x - c * a for x, a in zip(v, pi))
            if w not in seen:
                seen.add(w)
                if len(seen) > cap:
                    raise ResourceError(f"Weyl orbit exceeds the cap of {cap} elements")
                queue.append(w)
    return seen


def sorted_orbit(rs: RootSystem, h, cap: int = DEFAULT_ORBIT_CAP) -> list[CartanVector]:
    return sorted(weyl_orbit(rs, h, cap), reverse=True)


def is_dominant(rs: RootSystem, h) -> bool:
    return all(linalg.dot(h, pi) >= 0 for pi in rs.simple_roots)


def _negative_count(rs: RootSystem, h) -> int:
    return sum(1 for a in rs.positive_roots if linalg.dot(h, a) < 0)


def dominant_representative(rs: RootSystem, h) -> CartanVector:
    """The unique element of the W-orbit of ``h`` in the closed chamber C(Delta+)."""
    h = _check(rs, h)
    simple = _simple_data(rs)
    remaining = _negative_count(rs, h)
    while True:
        for pi, k in simple:
            p = linalg.dot(h, pi)
            if p < 0:
                h = tuple(x - k * p * a for x, a in zip(h, pi))
                break
        else:
            return h
        count = _negative_count(rs, h)
        if count >= remaining:
            raise ConsistencyError("negative pairings did not decrease under a simple reflection")
        remaining = count


def weyl_vector(rs: RootSystem) -> CartanVector:
    """rho, the half-sum of the positive roots."""
    total = [Fraction(0)] * rs.ambient_dim
    for a in rs.positive_roots:
        for i, x in enumerate(a):
            total[i] += x
    return tuple(x / 2 for x in total)


def _listed_without_minus_identity(rs: RootSystem) -> bool:
    # A_l (l >= 2), D_{2k+1} (k >= 1) and e6 are exactly the simple types
    # whose Weyl group does not contain -Id.
    if rs.kind == "A":
        return rs.rank >= 2
    if rs.kind == "D":
        return rs.rank % 2 == 1
    return rs.kind == "E6"


def asymmetric_regular_vector(rs: RootSystem) -> CartanVector:
    """The dominant H with <H, pi_i> = i.

    Distinct simple pairings mean no nontrivial diagram symmetry fixes H.
    """
    gram = [[linalg.dot(p, q) for q in rs.simple_roots] for p in rs.simple_roots]
    c = linalg.solve(gram, [Fraction(i + 1) for i in range(rs.rank)])
    return tuple(
        sum((c[k] * rs.simple_roots[k][i] for k in range(rs.rank)), Fraction(0))
        for i in range(rs.ambient_dim)
    )


def contains_minus_identity(rs: RootSystem) -> bool:
    """Whether -Id is in W.

    The dominant representative of -H is -w0(H). For H = rho this is always
    rho again, so rho cannot detect -Id; a regular H whose simple pairings are
    all distinct satisfies -w0(H) = H exactly when w0 = -Id.
    """
    h = asymmetric_regular_vector(rs)
    result = dominant_representative(rs, tuple(-x for x in h)) == h
    if result == _listed_without_minus_identity(rs):
        raise ConsistencyError(f"-Id test for {rs.label} disagrees with the classical list")
    return result

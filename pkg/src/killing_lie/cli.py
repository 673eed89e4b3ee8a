"""Command-line front end: ``killing-lie <subcommand> ...``.

Cartan vectors are given in ambient coordinates, either as comma-separated
exact rationals (``--z 1/2,1/2,-1``) or as a JSON list of ``[num, den]``
pairs. Float literals are rejected. Exit status is 0 on success, 2 on bad
parameters and 1 when a check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import centralizer, geometry_verifier, linalg, matrix_lie, root_systems, weyl
from .errors import DomainError, KillingLieError, ParameterError, ResourceError

SEED_ENV = "KILLING_LIE_SEED"

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"argument {flag}: {message}")
        self.flag = flag


def _rational(text: str, flag: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise UsageError(flag, f"{text!r} is not an exact rational (use p or p/q, floats are rejected)")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise UsageError(flag, f"{text!r} has a zero denominator")
    return Fraction(text)


def parse_vector(text: str, flag: str = "--z") -> tuple[Fraction, ...]:
    text = text.strip()
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(flag, f"malformed JSON vector: {exc.msg}") from None
        if not isinstance(data, list):
            raise UsageError(flag, "JSON vector must be a list")
        out = []
        for item in data:
            if isinstance(item, bool) or isinstance(item, float):
                raise UsageError(flag, f"{item!r} is not an exact rational")
            if isinstance(item, int):
                out.append(Fraction(item))
            elif isinstance(item, str):
                out.append(_rational(item, flag))
            elif (
                isinstance(item, list)
                and len(item) == 2
                and all(isinstance(x, int) and not isinstance(x, bool) for x in item)
            ):
                if item[1] == 0:
                    raise UsageError(flag, "zero denominator")
                out.append(Fraction(item[0], item[1]))
            else:
                raise UsageError(flag, f"{item!r} is not an exact rational or [num, den] pair")
        return tuple(out)
    parts = [p for p in text.split(",")]
    if not text or any(not p.strip() for p in parts):
        raise UsageError(flag, "empty coordinate")
    return tuple(_rational(p, flag) for p in parts)


def _algebra(label: str) -> root_systems.RootSystem:
    try:
        kind, rank = root_systems.parse_label(label)
        return root_systems.build(kind, rank)
    except ParameterError as exc:
        raise UsageError("--algebra", str(exc)) from None


def _cartan_from_args(rs: root_systems.RootSystem, args) -> tuple[Fraction, ...]:
    if args.z is not None and args.noncompact is not None:
        raise UsageError("--noncompact", "give either --z or --noncompact, not both")
    if args.noncompact is not None:
        try:
            return centralizer.hermitian_generator(rs, args.noncompact)
        except DomainError as exc:
            raise UsageError("--noncompact", str(exc)) from None
    if args.z is None:
        raise UsageError("--z", "a Cartan vector is required (or use --noncompact)")
    z = parse_vector(args.z)
    try:
        return centralizer.parse_cartan(rs, z)
    except ParameterError as exc:
        raise UsageError("--z", str(exc)) from None


def _seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get(SEED_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(SEED_ENV, f"{env!r} is not an integer seed") from None
    return geometry_verifier.DEFAULT_SEED


# -- subcommands --------------------------------------------------------------


def cmd_roots(args) -> dict:
    rs = _algebra(args.algebra)
    top = root_systems.highest_root(rs)
    out = rs.to_json()
    out["label"] = rs.label
    out["num_positive_roots"] = len(rs.positive_roots)
    out["highest_root"] = linalg.vector_to_json(top)
    out["highest_root_coefficients"] = list(root_systems.simple_root_coefficients(rs, top))
    out["noncompact_simple_roots"] = root_systems.noncompact_simple_roots(rs)
    out["contains_minus_identity"] = weyl.contains_minus_identity(rs)
    return out


def cmd_orbit(args) -> dict:
    rs = _algebra(args.algebra)
    z = _cartan_from_args(rs, args)
    orbit = weyl.sorted_orbit(rs, z, cap=args.cap)
    return {
        "algebra": rs.label,
        "z": linalg.vector_to_json(z),
        "size": len(orbit),
        "dominant": linalg.vector_to_json(weyl.dominant_representative(rs, z)),
        "orbit": [linalg.vector_to_json(v) for v in orbit],
    }


def cmd_spectrum(args) -> dict:
    rs = _algebra(args.algebra)
    z = _cartan_from_args(rs, args)
    out = centralizer.eigen_spectrum(rs, z).to_json()
    out["regular"] = centralizer.is_regular(rs, z)
    out["algebra"] = rs.label
    out["z"] = linalg.vector_to_json(z)
    return out


def cmd_classify(args) -> dict:
    rs = _algebra(args.algebra)
    z = _cartan_from_args(rs, args)
    out = centralizer.classify_hermitian_pair(rs, z).to_json()
    out["algebra"] = rs.label
    out["z"] = linalg.vector_to_json(z)
    return out


def cmd_decompose(args) -> dict:
    rs = _algebra(args.algebra)
    z = _cartan_from_args(rs, args)
    try:
        units, c = centralizer.commuting_unit_decomposition(rs, z)
    except DomainError as exc:
        raise UsageError("--algebra" if rs.kind not in ("C", "D") else "--z", str(exc)) from None
    return {
        "algebra": rs.label,
        "z": linalg.vector_to_json(z),
        "units": [linalg.vector_to_json(u) for u in units],
        "coefficient": linalg.format_rational(c),
    }


SPHERE_FIXTURES = ("example2", "example4", "example8", "le8")


def _sphere_fixture(name: str):
    """(basis, Z vector, alpha, beta or None) for a named fixture."""
    half = Fraction(1, 2)
    if name == "example4":
        return matrix_lie.build_algebra_basis("su", 4), (1, 1, -1, -1), (1, 0, -1, 0), (0, 1, 0, -1)
    if name == "example2":
        return matrix_lie.build_algebra_basis("so", 8), (1, 1, 1, 1), (1, 1, 0, 0), None
    if name == "example8":
        return matrix_lie.build_algebra_basis("sp", 3), (1, 1, 1), (2, 0, 0), None
    return matrix_lie.build_algebra_basis("so", 10), (half,) * 5, (1, 1, 0, 0, 0), (0, 0, 1, 1, 0)


def sphere_reports(name: str, samples: int, seed: int) -> list[dict]:
    gv = geometry_verifier
    basis, zvec, alpha, beta = _sphere_fixture(name)
    z = gv.SphereField.from_element(basis.iota(zvec), "Z")
    cert = gv.is_constant_length(z)
    _, m = basis.cartan_split(zvec)
    reports = [{"quantity_label": "constant length of Z", "pass": cert.constant, **cert.to_json()}]
    reports.append(gv.verify_orthogonality(z, [gv.SphereField.from_element(x) for x in m], samples, seed).to_json())
    triple = gv.RootTriple.from_basis(basis, alpha)
    reports += [r.to_json() for r in gv.pr3_reports(z, triple, samples, seed)]
    if beta is not None:
        b = gv.SphereField.from_element(basis.iota(beta), "beta")
        reports.append(gv.verify_lemma_le8(z, triple, b, samples, seed).to_json())
    return reports


def cmd_verify_sphere(args) -> dict:
    if args.samples < 1:
        raise UsageError("--samples", "must be positive")
    seed = _seed(args)
    reports = sphere_reports(args.fixture, args.samples, seed)
    return {"fixture": args.fixture, "seed": seed, "reports": reports, "pass": all(r["pass"] for r in reports)}


def _selftest_checks(samples: int, seed: int):
    expected = [
        ("A2", 2, 1, {"p": 2, "q": 1}),
        ("A3", 2, 1, {"p": 2, "q": 2}),
        ("D5", 5, 2, {"n": 5}),
        ("B3", 1, 3, {"p": 5}),
        ("C2", 2, 4, {"n": 2}),
        ("C3", 3, 4, {"n": 3}),
    ]
    for label, j, case, params in expected:
        rs = root_systems.build(*root_systems.parse_label(label))
        c = centralizer.classify_hermitian_pair(rs, centralizer.hermitian_generator(rs, j))
        ok = (
            c.case == case
            and c.parameters == params
            and c.descriptor.center_dim == 1
            and c.descriptor.z_spans_center
            and len(c.spectrum.entries) == 1
        )
        yield f"hermitian case {case} on {label}", ok

    e6 = root_systems.build("E6")
    z6 = tuple(Fraction(2, 3) * x for x in (0, 0, 0, 0, 0, -1, -1, 1))
    c6 = centralizer.classify_hermitian_pair(e6, z6)
    yield "e6 excluded with factors D5", c6.case == "excluded-e6" and c6.descriptor.factor_labels == ["D5"]
    e7 = root_systems.build("E7")
    z7 = tuple(Fraction(1, 2) * x for x in (0, 0, 0, 0, 0, 2, -1, 1))
    c7 = centralizer.classify_hermitian_pair(e7, z7)
    yield "e7 excluded with factors E6", c7.case == "excluded-e7" and c7.descriptor.factor_labels == ["E6"]

    for kind, n in (("su", 4), ("so", 7), ("so", 8), ("sp", 3)):
        try:
            matrix_lie.build_algebra_basis(kind, n)
            ok = True
        except KillingLieError:
            ok = False
        yield f"root pair relations on {kind}({n})", ok

    for name in ("example4", "example2"):
        reports = sphere_reports(name, samples, seed)
        yield f"sphere identities for {name}", all(r["pass"] for r in reports)


def cmd_selftest(args) -> dict:
    seed = _seed(args)
    checks = [{"name": name, "pass": bool(ok)} for name, ok in _selftest_checks(args.samples, seed)]
    return {"checks": checks, "pass": all(c["pass"] for c in checks), "seed": seed}


# -- driver -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="killing-lie", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def algebra(p):
        p.add_argument("--algebra", required=True, help="A2, B3, C2, D5, E6, E7, ...")

    def cartan(p):
        algebra(p)
        p.add_argument("--z", help="Cartan vector, e.g. 1/2,1/2,-1 or [[1,2],[1,2],[-1,1]]")
        p.add_argument("--noncompact", type=int, help="use the generator of the j-th non-compact simple root")

    p = sub.add_parser("roots", help="root system data")
    algebra(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("orbit", help="Weyl orbit and dominant representative")
    cartan(p)
    p.add_argument("--cap", type=int, default=weyl.DEFAULT_ORBIT_CAP)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("spectrum", help="eigenvalues of -(ad Z)^2")
    cartan(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="match (g, centralizer of Z) against the Hermitian pairs")
    cartan(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="Z as a multiple of a sum of commuting units (types C, D)")
    cartan(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-sphere", help="sampled metric identities on a sphere fixture")
    p.add_argument("--fixture", choices=SPHERE_FIXTURES, default="example4")
    p.add_argument("--samples", type=int, default=geometry_verifier.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify_sphere)

    p = sub.add_parser("selftest", help="run the built-in fixture suite")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_selftest)
    return parser


def _text(payload, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            if isinstance(value, (dict, list)) and value and not _flat_list(value):
                lines.append(f"{pad}{key}:")
                lines.extend(_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(value, sort_keys=True)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {json.dumps(item, sort_keys=True)}")
    else:
        lines.append(f"{pad}{payload}")
    return lines


def _flat_list(value) -> bool:
    return isinstance(value, list) and all(not isinstance(v, dict) for v in value)


def render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    return "\n".join(_text(payload))


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload = args.func(args)
    except UsageError as exc:
        print(f"killing-lie: error: {exc}", file=stderr)
        return 2
    except (ParameterError, DomainError) as exc:
        print(f"killing-lie: error: {exc}", file=stderr)
        return 2
    except ResourceError as exc:
        print(f"killing-lie: error: {exc} (raise --cap)", file=stderr)
        return 1
    print(render(payload, args.format), file=stdout)
    if args.command in ("verify-sphere", "selftest") and not payload["pass"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end.

    hkdyn classify  INPUT [--precision P] [--json | --text]
    hkdyn degrees   INPUT --n N
    hkdyn certify   INPUT --n N [--b2 B]
    hkdyn catalog   (--list | --name NAME [--param N])

INPUT is a path to an isometry JSON file or ``-`` for stdin. Exit codes:
0 success, 2 mathematical rejection (not an isometry, degenerate form,
undecidable plateau), 3 malformed input or flags.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from hkdyn.errors import (
    DegenerateFormError,
    DimensionError,
    DomainError,
    HkdynError,
    NotAnIsometryError,
    UnknownLatticeError,
)
from hkdyn.exact.matrix import IntMatrix
from hkdyn.degrees import degree_sequence
from hkdyn.fibration import primitivity_certificate
from hkdyn.isometry import DEFAULT_PRECISION, Isometry, classify
from hkdyn.lattice import CATALOG_NAMES, Lattice, catalog
from hkdyn import report

EXIT_OK = 0
EXIT_REJECTED = 2
EXIT_INPUT = 3


class InputError(Exception):
    pass


class Rejected(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _precision(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid precision {text!r}")
    if p <= 0:
        raise argparse.ArgumentTypeError("precision must be positive")
    return p


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hkdyn", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, needs_n=False, needs_b2=False):
        p.add_argument("input", help="isometry JSON file, or - for stdin")
        p.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION,
                       help="width of certified intervals (default 1e-20)")
        if needs_n:
            p.add_argument("--n", type=_positive, required=True,
                           help="half the complex dimension of the manifold")
        if needs_b2:
            p.add_argument("--b2", type=_positive, default=None,
                           help="second Betti number (default: lattice rank)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json", default="json")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock timing (makes output non-deterministic)")

    common(sub.add_parser("classify", help="classify an isometry"))
    common(sub.add_parser("degrees", help="dynamical degree sequence"), needs_n=True)
    common(sub.add_parser("certify", help="primitivity certificate"), needs_n=True, needs_b2=True)

    cat = sub.add_parser("catalog", help="standard lattices")
    group = cat.add_mutually_exclusive_group(required=True)
    group.add_argument("--list", action="store_true")
    group.add_argument("--name", choices=[c for c in CATALOG_NAMES if c != "custom"])
    cat.add_argument("--param", type=int, default=None, help="n for K3n and Kummer")
    return parser


# -- input --------------------------------------------------------------

def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON: {e}")


def _int_rows(obj, what: str):
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise InputError(f"{what} must be a non-empty list of rows")
    for r in obj:
        for a in r:
            if isinstance(a, bool) or not isinstance(a, int):
                raise InputError(f"{what} entries must be integers, got {a!r}")
    return obj


def parse_lattice(obj) -> Lattice:
    """Lattice object, catalog name string, or ``{"catalog": name, "n": int}``."""
    try:
        if isinstance(obj, str):
            return catalog(obj)
        if isinstance(obj, dict) and "catalog" in obj:
            return catalog(obj["catalog"], obj.get("n"))
        if isinstance(obj, dict):
            label = obj.get("label")
            if label is not None and not isinstance(label, str):
                raise InputError("lattice label must be a string")
            return Lattice(IntMatrix(_int_rows(obj.get("gram"), "gram")), label)
    except (UnknownLatticeError, DomainError, DimensionError) as e:
        raise InputError(str(e))
    raise InputError("lattice must be an object with 'gram', a catalog reference, or a name")


def parse_isometry(obj) -> Isometry:
    if not isinstance(obj, dict) or "lattice" not in obj or "matrix" not in obj:
        raise InputError("isometry input needs 'lattice' and 'matrix'")
    lat = parse_lattice(obj["lattice"])
    m = IntMatrix(_int_rows(obj["matrix"], "matrix"))
    try:
        return Isometry(lat, m)
    except DimensionError as e:
        raise InputError(str(e))


# -- commands -----------------------------------------------------------

def _base_report(command: str, iso: Isometry, precision) -> dict:
    return {
        "schema_version": report.SCHEMA_VERSION,
        "command": command,
        "precision": report.frac(precision),
        "input": iso.to_json(),
    }


def cmd_classify(iso: Isometry, precision) -> dict:
    c = classify(iso, precision)
    out = _base_report("classify", iso, precision)
    out["classification"] = report.classification_json(c, precision, iso.lattice.signature())
    out["warnings"] = list(c.structural_warnings)
    return out


def cmd_degrees(iso: Isometry, precision, n: int) -> dict:
    c = classify(iso, precision)
    seq = degree_sequence(c, n)
    out = _base_report("degrees", iso, precision)
    out["classification"] = report.classification_json(c, precision, iso.lattice.signature())
    out["degree_sequence"] = report.sequence_json(seq, precision)
    out["warnings"] = list(c.structural_warnings)
    return out


def cmd_certify(iso: Isometry, precision, n: int, b2: int | None) -> dict:
    c = classify(iso, precision)
    b2 = iso.lattice.rank if b2 is None else b2
    if b2 < iso.lattice.rank:
        raise InputError(f"--b2 {b2} is smaller than the lattice rank {iso.lattice.rank}")
    cert = primitivity_certificate(c, n, b2)
    if any(note.startswith("indeterminate plateau") for note in cert.notes):
        raise Rejected("plateau of the degree sequence is undecided; refusing to certify")
    out = _base_report("certify", iso, precision)
    out["classification"] = report.classification_json(c, precision, iso.lattice.signature())
    out["degree_sequence"] = report.sequence_json(cert.degree_sequence, precision)
    out["certificate"] = report.certificate_json(cert, precision)
    out["warnings"] = list(c.structural_warnings)
    return out


def cmd_catalog(list_: bool, name: str | None, param: int | None) -> dict:
    if list_:
        return {"schema_version": report.SCHEMA_VERSION, "command": "catalog",
                "names": [c for c in CATALOG_NAMES if c != "custom"]}
    try:
        lat = catalog(name, param)
    except (DomainError, UnknownLatticeError) as e:
        raise InputError(str(e))
    return lat.to_json()


# -- output -------------------------------------------------------------

def render_text(rep: dict) -> str:
    lines = []
    if "names" in rep:
        return "\n".join(rep["names"]) + "\n"
    if "gram" in rep:
        lines.append(f"lattice {rep.get('label', '')} rank {len(rep['gram'])}")
        lines.extend(" ".join(f"{a:3d}" for a in row) for row in rep["gram"])
        return "\n".join(lines) + "\n"
    c = rep.get("classification")
    if c:
        lines.append(f"kind            {c['kind']}")
        lines.append(f"char poly       {c['char_poly_text']}")
        lines.append(f"signature       {tuple(c['signature'])}")
        lines.append(f"lambda1         {c['lambda1']['decimal']}")
        if c["lambda1_quadratic"] is not None:
            lines.append(f"lambda1 minpoly x^2 - {c['lambda1_quadratic']}*x "
                         f"{'+' if c['lambda1_norm'] == 1 else '-'} 1")
        if c["finite_order"] is not None:
            lines.append(f"finite order    {c['finite_order']}")
        if c["jordan_ranks"] is not None:
            lines.append(f"unipotent power {c['unipotence_exponent']}, ranks {c['jordan_ranks']}")
        lines.append(f"growth          rate {c['growth']['exponential_rate']['hi']}, "
                     f"degree {c['growth']['polynomial_degree']}")
    seq = rep.get("degree_sequence")
    if seq:
        lines.append("")
        lines.append(" p  lambda_p")
        for p, v in enumerate(seq["values"]):
            lines.append(f"{p:2d}  {v['decimal']}")
        lines.append(f"log-concave     {seq['log_concave']}")
    cert = rep.get("certificate")
    if cert:
        lines.append("")
        lines.append(f"verdict         {cert['verdict']}")
        lines.append(f"justification   {cert['justification']}")
        lines.append(f"max periodic hypersurfaces  {cert['max_periodic_hypersurfaces']}")
        lines.append(f"dense generic orbit         {cert['dense_generic_orbit']}")
        lines.append(f"base dim lower bound        {cert['base_dim_lower_bound']}")
        lines.append("")
        lines.append(" dim B  feasible")
        for f in cert["general_type_feasibility"]:
            lines.append(f"{f['base_dim']:5d}  {f['feasible']}")
        for note in cert["notes"]:
            lines.append(f"note: {note}")
    for w in rep.get("warnings", []):
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        if args.command == "catalog":
            rep = cmd_catalog(args.list, args.name, args.param)
            fmt = "json"
        else:
            iso = parse_isometry(_read_json(args.input))
            if args.command == "classify":
                rep = cmd_classify(iso, args.precision)
            elif args.command == "degrees":
                rep = cmd_degrees(iso, args.precision, args.n)
            else:
                rep = cmd_certify(iso, args.precision, args.n, args.b2)
            fmt = args.fmt
            if args.timing:
                rep["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    except InputError as e:
        print(f"hkdyn: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (NotAnIsometryError, DegenerateFormError, Rejected) as e:
        print(f"hkdyn: rejected: {e}", file=sys.stderr)
        return EXIT_REJECTED
    except HkdynError as e:
        print(f"hkdyn: input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    if fmt == "text":
        sys.stdout.write(render_text(rep))
    else:
        sys.stdout.write(json.dumps(rep, indent=2) + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

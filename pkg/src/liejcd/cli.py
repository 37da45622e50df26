"""Command-line front end.

Exit codes: 0 success, 1 verification report has a failing check,
2 element not in [g, g], 3 basis not closed under the bracket,
4 parse or validation error, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field

from . import __version__
from .algebra import center, derived_algebra, from_matrices, is_solvable, killing_gram, lie_closure, solvable_radical
from .decompose import AbstractJordanPair, Decomposer, report_ok, verify_decomposition
from .errors import InternalInvariantViolation, LieJCDError, NotClosed, NotInDerivedAlgebra, ValidationError
from .linalg import vector
from .matrix_jcd import matrix_jordan_chevalley
from .poly import minimal_polynomial
from .reps import build_representation
from .serialize import (
    dump_matrix,
    dump_subspace,
    dump_vector,
    load_json,
    parse_algebra,
    parse_element,
    parse_matrix,
    parse_vector,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NOT_IN_DERIVED = 2
EXIT_NOT_CLOSED = 3
EXIT_INVALID = 4
EXIT_INTERNAL = 5

COMMANDS = ("matrix-jcd", "decompose", "verify", "radical", "levi", "closure")


@dataclass
class CommandRequest:
    command: str
    algebra_path: str
    element_path: str | None = None
    rep_descriptors: list[str] = field(default_factory=list)
    auto_close: bool = False
    emit_internals: bool = False
    samples: int = 10
    seed: int = 0

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.command in ("decompose", "verify") and not self.element_path:
            raise ValidationError(f"{self.command} needs a second file argument")


def _reps(g, descriptors):
    if not descriptors:
        descriptors = (["natural"] if g.is_matrix_mode else []) + ["adjoint"]
    return [build_representation(g, d) for d in descriptors]


def _load_algebra(req: CommandRequest):
    return parse_algebra(load_json(req.algebra_path), auto_close=req.auto_close)


def _certificate(g, dec: Decomposer, pair: AbstractJordanPair, reps, req: CommandRequest) -> dict:
    it = pair.internals
    report = verify_decomposition(dec, pair, reps, samples=req.samples, rng=random.Random(req.seed))
    doc = {
        "x": dump_vector(pair.element),
        "S": dump_vector(pair.semisimple),
        "N": dump_vector(pair.nilpotent),
        "n0_dim": it.n0.dim,
        "nstar_dim": it.nstar.dim,
        "checks": report,
    }
    if req.emit_internals:
        doc.update(
            a=dump_vector(it.a), r=dump_vector(it.r), s=dump_vector(it.s), n=dump_vector(it.n),
            b=dump_vector(it.b), n0=dump_subspace(it.n0), nstar=dump_subspace(it.nstar),
        )
    if g.is_matrix_mode:
        doc["realization"] = {
            "x": dump_matrix(g.realize(pair.element)),
            "S": dump_matrix(g.realize(pair.semisimple)),
            "N": dump_matrix(g.realize(pair.nilpotent)),
        }
    return doc


def _cmd_matrix_jcd(req: CommandRequest) -> tuple[int, dict]:
    doc = load_json(req.algebra_path)
    if isinstance(doc, dict) and "matrix" in doc:
        doc = doc["matrix"]
    a = parse_matrix(doc)
    pair = matrix_jordan_chevalley(a)
    return EXIT_OK, {
        "input": dump_matrix(a),
        "semisimple": dump_matrix(pair.semisimple),
        "nilpotent": dump_matrix(pair.nilpotent),
        "witness_poly": dump_vector(pair.witness_poly.coeffs),
        "minimal_polynomial": dump_vector(minimal_polynomial(a).coeffs),
    }


def _cmd_decompose(req: CommandRequest) -> tuple[int, dict]:
    g = _load_algebra(req)
    x = parse_element(load_json(req.element_path), g)
    reps = _reps(g, req.rep_descriptors)
    dec = Decomposer(g)
    pair = dec.decompose(x)
    return EXIT_OK, _certificate(g, dec, pair, reps, req)


def _cmd_verify(req: CommandRequest) -> tuple[int, dict]:
    g = _load_algebra(req)
    cert = load_json(req.element_path)
    if not isinstance(cert, dict) or not {"x", "S", "N"} <= cert.keys():
        raise ValidationError("certificate must contain 'x', 'S' and 'N'")
    x, big_s, big_n = (vector(parse_vector(cert[k])) for k in ("x", "S", "N"))
    for v in (x, big_s, big_n):
        if len(v) != g.dim:
            raise ValidationError(f"certificate vector of length {len(v)}, algebra has dimension {g.dim}")
    dec = Decomposer(g)
    recomputed = dec.decompose(x)
    pair = AbstractJordanPair(x, big_s, big_n, recomputed.internals)
    reps = _reps(g, req.rep_descriptors)
    report = verify_decomposition(dec, pair, reps, samples=req.samples, rng=random.Random(req.seed))
    report["matches_recomputed"] = (big_s, big_n) == (recomputed.semisimple, recomputed.nilpotent)
    ok = report_ok(report)
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), {"ok": ok, "checks": report}


def _cmd_radical(req: CommandRequest) -> tuple[int, dict]:
    g = _load_algebra(req)
    rad = solvable_radical(g)
    return EXIT_OK, {
        "dim": g.dim,
        "radical": dump_subspace(rad.subspace),
        "radical_dim": rad.dim,
        "radical_is_solvable": is_solvable(g, rad.subspace),
        "derived_algebra": dump_subspace(derived_algebra(g).subspace),
        "center": dump_subspace(center(g).subspace),
        "killing_gram": dump_matrix(killing_gram(g)),
    }


def _cmd_levi(req: CommandRequest) -> tuple[int, dict]:
    from .levi import levi_decomposition

    g = _load_algebra(req)
    ld = levi_decomposition(g)
    return EXIT_OK, {
        "levi": [dump_vector(v) for v in ld.levi_basis],
        "radical": dump_subspace(ld.radical.subspace),
        "nilpotent_ideal": dump_subspace(ld.nilpotent_ideal.subspace),
        "invariants": ld.invariants(),
    }


def _cmd_closure(req: CommandRequest) -> tuple[int, dict]:
    doc = load_json(req.algebra_path)
    if not isinstance(doc, dict) or doc.get("mode") != "matrix":
        g = parse_algebra(doc)
        return EXIT_OK, {"closed": True, "dim": g.dim}
    mats = [parse_matrix(m) for m in doc.get("basis", [])]
    if req.auto_close:
        closed = lie_closure(mats)
        g = from_matrices(closed)
        return EXIT_OK, {
            "closed": True,
            "dim": g.dim,
            "added": len(closed) - len(mats),
            "algebra": {"mode": "matrix", "n": g.ambient_dim, "basis": [dump_matrix(m) for m in closed]},
        }
    g = from_matrices(mats)
    return EXIT_OK, {"closed": True, "dim": g.dim}


_HANDLERS = {
    "matrix-jcd": _cmd_matrix_jcd,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "radical": _cmd_radical,
    "levi": _cmd_levi,
    "closure": _cmd_closure,
}


def run(req: CommandRequest) -> tuple[int, dict | None]:
    """Execute one request; returns the exit code and the JSON document (if any).

    Diagnostics go to standard error.
    """
    try:
        req.validate()
        return _HANDLERS[req.command](req)
    except NotInDerivedAlgebra as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_DERIVED, None
    except NotClosed as exc:
        i, j = exc.pair
        print(f"error: basis not closed: bracket of basis pair ({i}, {j}) leaves the span", file=sys.stderr)
        return EXIT_NOT_CLOSED, None
    except InternalInvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, None
    except (LieJCDError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID, None


class _Parser(argparse.ArgumentParser):
    # usage errors share the validation exit code; argparse's default 2 would collide
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liejcd", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, element: str | None = None):
        p.add_argument("algebra", help="algebra JSON document")
        if element:
            p.add_argument("element", help=element)
        p.add_argument("--auto-close", action="store_true", help="complete the basis to its Lie closure")

    p = sub.add_parser("matrix-jcd", help="Jordan-Chevalley decomposition of one matrix")
    p.add_argument("algebra", metavar="matrix", help="JSON array of rows")
    for name, elem in (("decompose", "element JSON"), ("verify", "certificate JSON from decompose")):
        p = sub.add_parser(name, help=f"{name} an element of [g, g]")
        common(p, elem)
        p.add_argument("--rep", action="append", default=[], metavar="DESC",
                       help="representation descriptor, e.g. 'tensor(natural,adjoint)'; repeatable")
        p.add_argument("--samples", type=int, default=10, help="random samples for the sampled checks")
        p.add_argument("--seed", type=int, default=0)
        if name == "decompose":
            p.add_argument("--emit-internals", action="store_true",
                           help="include a, r, s, n, b, n0 and n* in the certificate")
    for name, desc in (("radical", "solvable radical, center, derived algebra"),
                       ("levi", "Levi decomposition"),
                       ("closure", "check bracket closure of a matrix basis")):
        common(sub.add_parser(name, help=desc))
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    req = CommandRequest(
        command=args.command,
        algebra_path=args.algebra,
        element_path=getattr(args, "element", None),
        rep_descriptors=getattr(args, "rep", []),
        auto_close=getattr(args, "auto_close", False),
        emit_internals=getattr(args, "emit_internals", False),
        samples=getattr(args, "samples", 10),
        seed=getattr(args, "seed", 0),
    )
    code, doc = run(req)
    if doc is not None:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())

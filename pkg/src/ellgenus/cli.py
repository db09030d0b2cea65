"""Command-line front end.

Subcommands: basis (weak Jacobi form bases), chern (Chern numbers), genus
(elliptic genus), chi-y (the q^0 specialization) and info (space summary).
Spaces use the grammar LETTER RANK [nodes], e.g. A4[1] for P^4 or G2[1,2]
for the full G2 flag; --bundle takes comma-separated highest-weight
coordinates and may repeat, turning the space into the zero locus of a
general section.

Exit codes: 0 success, 2 malformed command line, 3 mathematically invalid
input (odd basis weight, non-dominant bundle weight, negative-dimensional
intersection, bad degree list), 4 integration failure.  Results go to
stdout; diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from dataclasses import dataclass, field

from .bundles import completely_reducible_bundle
from .ci import CompleteIntersection, chern_number
from .errors import (DegeneratePoint, EllgenusError, FloatUnstable,
                     NegativeDimension, NotPDominant, OddWeight, UnknownType)
from .genus import chi_y, elliptic_genus
from .homog import HomogeneousSpace
from .jacobi import basis_half_integral
from .render import (format_laurent, format_series, format_series_payload,
                     laurent_payload, parse_laurent_payload, series_payload)
from .roots import parabolic

_SPACE_RE = re.compile(r"([A-Ga-g])(\d+)\[(\d+(?:,\d+)*)\]")

_MATH_ERRORS = (NotPDominant, NegativeDimension, OddWeight, ValueError)
_INTEGRATION_ERRORS = (DegeneratePoint, FloatUnstable)


def _series_terms(series):
    """QYSeries -> the (doubled exponent, sorted (y, coeff) pairs) list the
    render payload helpers consume."""
    return [(k2, sorted(lau.c.items())) for k2, lau in series.terms2()]


class SpecError(ValueError):
    """Malformed command-line specification (exit code 2)."""


@dataclass(frozen=True)
class JobSpec:
    """Validated description of one CLI invocation."""

    command: str
    space: str | None = None
    bundles: tuple = ()
    order: int = 2
    weight: int = 0
    double_index: int = 0
    prec: int = 7
    degrees: tuple = ()
    mode: str = "exact"
    fmt: str = "text"
    seed: int | None = None

    def to_argv(self):
        """Command line that re-parses to this same JobSpec."""
        argv = [self.command]
        if self.space is not None:
            argv += ["--space", self.space]
        for hw in self.bundles:
            argv += ["--bundle", ",".join(str(c) for c in hw)]
        if self.command == "genus":
            argv += ["--order", str(self.order)]
        if self.command == "basis":
            argv += ["--weight", str(self.weight),
                     "--double-index", str(self.double_index),
                     "--prec", str(self.prec)]
        if self.command == "chern":
            argv += ["--degrees", ",".join(str(d) for d in self.degrees)]
        argv += ["--mode", self.mode, "--format", self.fmt]
        if self.seed is not None:
            argv += ["--seed", str(self.seed)]
        return argv


def parse_space(text):
    """'A4[1,3]' -> (letter, rank, crossed nodes); SpecError when malformed."""
    m = _SPACE_RE.fullmatch(text.strip())
    if not m:
        raise SpecError(f"space must look like A4[3] or G2[1,2], got {text!r}")
    crossed = tuple(sorted(int(v) for v in m.group(3).split(",")))
    if len(set(crossed)) != len(crossed):
        raise SpecError(f"duplicate crossed node in {text!r}")
    return m.group(1).upper(), int(m.group(2)), crossed


def _int_list(text, what):
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise SpecError(f"{what} must be comma-separated integers, got {text!r}")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="ellgenus",
        description="Elliptic genera of homogeneous spaces and complete "
                    "intersections, and weak Jacobi form bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, space=True, bundle=True):
        if space:
            p.add_argument("--space", required=True,
                           help="homogeneous space, e.g. A4[3]")
        if bundle:
            p.add_argument("--bundle", action="append", default=[],
                           metavar="W1,W2,...",
                           help="highest weight of a section-bundle component "
                                "(repeatable)")
        p.add_argument("--mode", choices=["exact", "float"], default="exact")
        p.add_argument("--format", dest="fmt", choices=["text", "json"],
                       default="text")
        p.add_argument("--seed", type=int, default=None)

    p = sub.add_parser("basis", help="basis of weak Jacobi forms")
    p.add_argument("--weight", type=int, default=0, help="even weight")
    p.add_argument("--double-index", type=int, required=True,
                   help="twice the index (odd values give half-integral index)")
    p.add_argument("--prec", type=int, default=7, help="q-expansion order")
    add_common(p, space=False, bundle=False)

    p = sub.add_parser("chern", help="Chern number of a manifold")
    p.add_argument("--degrees", required=True, metavar="D1,D2,...",
                   help="degrees of the Chern-class factors")
    add_common(p)

    p = sub.add_parser("genus", help="elliptic genus to a q-order")
    p.add_argument("--order", type=int, default=2, help="highest q power")
    add_common(p)

    p = sub.add_parser("chi-y", help="chi_y genus (q^0 term)")
    add_common(p)

    p = sub.add_parser("info", help="structure of a homogeneous space")
    add_common(p, bundle=False)
    return parser


def parse_args(argv):
    """argv -> JobSpec; raises SpecError on malformed input."""
    parser = _build_parser()
    ns = parser.parse_args(argv)
    fields = {"command": ns.command, "mode": ns.mode, "fmt": ns.fmt,
              "seed": ns.seed}
    if ns.command != "basis":
        letter, rank, crossed = parse_space(ns.space)
        fields["space"] = f"{letter}{rank}[{','.join(str(c) for c in crossed)}]"
    if ns.command in ("chern", "genus", "chi-y"):
        fields["bundles"] = tuple(_int_list(b, "--bundle") for b in ns.bundle)
    if ns.command == "basis":
        fields["weight"] = ns.weight
        fields["double_index"] = ns.double_index
        fields["prec"] = ns.prec
        if ns.prec < 0:
            raise SpecError("--prec must be nonnegative")
    if ns.command == "chern":
        fields["degrees"] = _int_list(ns.degrees, "--degrees")
    if ns.command == "genus":
        if ns.order < 0:
            raise SpecError("--order must be nonnegative")
        fields["order"] = ns.order
    return JobSpec(**fields)


def _space_parabolic(space_text):
    """Space string -> ParabolicSubgroup; malformed specs (unsupported type
    or rank, crossed node out of range) raise SpecError."""
    letter, rank, crossed = parse_space(space_text)
    try:
        return parabolic(f"{letter}{rank}", crossed)
    except (UnknownType, ValueError) as err:
        raise SpecError(str(err))


def _build_manifold(job):
    space = HomogeneousSpace(_space_parabolic(job.space))
    if not job.bundles:
        return space
    bundle = completely_reducible_bundle(space, [list(hw) for hw in job.bundles])
    return CompleteIntersection(bundle)


def _payload(job, rng):
    """Compute the job's result as a JSON-ready dict."""
    if job.command == "basis":
        elements = basis_half_integral(job.weight, job.double_index, job.prec)
        return {"weight": job.weight, "double_index": job.double_index,
                "order": job.prec,
                "elements": [series_payload(_series_terms(e.series), job.prec)
                             for e in elements]}
    if job.command == "info":
        p = _space_parabolic(job.space)
        space = HomogeneousSpace(p)
        return {"diagram": p.dynkin_ascii(),
                "dimension": space.dimension(),
                "fixed_points": space.fixed_point_count()}
    manifold = _build_manifold(job)
    if job.command == "chern":
        value = chern_number(manifold, list(job.degrees), mode=job.mode, rng=rng)
        return {"value": str(value)}
    if job.command == "genus":
        series = elliptic_genus(manifold, job.order, mode=job.mode, rng=rng)
        return {"dimension": manifold.dimension(),
                "y_half_power": manifold.dimension(),
                "terms": series_payload(_series_terms(series), job.order),
                "order": job.order}
    assert job.command == "chi-y"
    value = chi_y(manifold, mode=job.mode, rng=rng)
    return {"dimension": manifold.dimension(),
            "y_half_power": manifold.dimension(),
            "coeffs": laurent_payload(sorted(value.c.items()))}


def render_payload(payload):
    """Text rendering of any command's JSON payload; the text output path
    uses this same function, so JSON round-trips byte-for-byte."""
    if "elements" in payload:
        return "\n".join(format_series_payload(terms, payload["order"])
                         for terms in payload["elements"])
    if "diagram" in payload:
        return (f"{payload['diagram']}\n"
                f"dimension: {payload['dimension']}\n"
                f"fixed points: {payload['fixed_points']}")
    if "terms" in payload:
        return format_series_payload(payload["terms"], payload["order"])
    if "coeffs" in payload:
        return format_laurent(parse_laurent_payload(payload["coeffs"]))
    return payload["value"]


def main(argv=None, rng=None):
    """Run the CLI; an injected rng overrides --seed (tests use this to
    force degenerate draws)."""
    try:
        job = parse_args(argv)
    except SpecError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    if rng is None:
        rng = random.Random(job.seed) if job.seed is not None else random.Random()
    try:
        payload = _payload(job, rng)
    except _INTEGRATION_ERRORS as err:
        print(f"integration failed: {err}", file=sys.stderr)
        return 4
    except SpecError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except _MATH_ERRORS as err:
        print(f"invalid input: {err}", file=sys.stderr)
        return 3
    if job.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(render_payload(payload))
    return 0


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()

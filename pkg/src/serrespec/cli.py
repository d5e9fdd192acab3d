"""Command-line surface.

Every subcommand emits one JSON document with a stable field order, so
identical inputs produce byte-identical reports.  Exit codes: 0 success,
1 well-formed input but the queried property is false, 2 input error,
3 basis-size guard exceeded.  Ring arguments accept a file path or
``gallery:NAME``.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .coefficients import CoefficientError
from .gallery import gallery_expected, gallery_names, gallery_summary, \
    load_gallery
from .ideals import (IdealSubset, ImproperIdeal, NotAnIdeal,
                     enumerate_serre_ideals, is_serre_ideal, product_support,
                     quotient_ring, serre_closure)
from .io import resolve_ring_arg, serialize_ring
from .monomial import MonomialRing, build_monoid_ideal, face_quotient, \
    monoid_ideal_is_prime, truncate_to_ring
from .spectrum import (DEFINITIONAL, FAST, NoPrimeOver, chain_product_support,
                       is_completely_prime, is_serre_prime, is_semiprime,
                       make_multiplicative_set, minimal_primes_over,
                       serre_spec)
from .topology import (BALMER, ZARISKI, build_topology, ideal_node_name,
                       specialization_edges, to_dot)
from .twocat import check_unit_decomposition, classify_completely_primes
from .zring import (LEFT, RIGHT, TWO_SIDED, BasisTooLarge, RingError,
                    RingValidationError, basis_element, labels_from_mask,
                    mask_from_labels)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_GUARD = 3

_SIDES = {"l": LEFT, "r": RIGHT, "2": TWO_SIDED}


@dataclass
class CommandResult:
    exit_code: int
    report: dict


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser():
    parser = _Parser(prog="serrespec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("ring", metavar="F",
                       help="ring file path or gallery:NAME")
        p.add_argument("--allow-large", action="store_true",
                       help="override the exhaustive-scan basis guard")
        return p

    ring_cmd("validate", "parse and validate a ring file")

    p = ring_cmd("ideals", "list the Serre ideal lattice")
    p.add_argument("--side", choices=sorted(_SIDES), default="2")

    ring_cmd("spec", "Serre prime spectrum with flags")

    p = ring_cmd("check", "test one ideal for a primality property")
    p.add_argument("--ideal", required=True,
                   help="comma-separated labels; empty string for the zero ideal")
    p.add_argument("--prop", required=True,
                   choices=["prime", "cprime", "semiprime"])
    p.add_argument("--mode", choices=["fast", "oracle"], default="fast")

    p = ring_cmd("closure", "smallest Serre ideal containing the generators")
    p.add_argument("--gens", required=True)
    p.add_argument("--side", choices=sorted(_SIDES), default="2")

    p = ring_cmd("minimal-primes", "minimal primes over an ideal plus a product chain")
    p.add_argument("--ideal", required=True)

    p = ring_cmd("quotient", "quotient ring by a two-sided Serre ideal")
    p.add_argument("--ideal", required=True)
    p.add_argument("-o", "--output", help="write the quotient ring file here")

    p = ring_cmd("topology", "closed-set family on the spectrum")
    p.add_argument("--style", choices=[ZARISKI, BALMER], required=True)
    p.add_argument("--dot", help="write the specialization digraph here")

    p = ring_cmd("twocat", "block-ring analysis")
    p.add_argument("--classify-cprimes", action="store_true")

    p = sub.add_parser("monomial", help="q-twisted monomial ring operations")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--twist", required=True,
                   help="rows separated by ';', entries by ','")
    p.add_argument("--prime", help="ideal generators, ';'-separated vectors")
    p.add_argument("--truncate", type=int, help="truncation degree")
    p.add_argument("--face", help="1-based variable indices, ','-separated")

    p = sub.add_parser("gallery", help="list or show built-in rings")
    p.add_argument("name", nargs="?")

    ring_cmd("oracle", "run every fast-vs-definitional cross-check")

    return parser


def _parse_labels(text):
    return [t.strip() for t in text.split(",") if t.strip()]


def _ideal_from_arg(ring, text):
    return mask_from_labels(ring, _parse_labels(text))


def _ideal_labels(ring, ideal):
    members = ideal.members if isinstance(ideal, IdealSubset) else ideal
    return labels_from_mask(ring, members)


def _cmd_validate(args):
    try:
        ring = resolve_ring_arg(args.ring)
    except RingValidationError as exc:
        report = {
            "command": "validate",
            "ring": exc.ring_name,
            "ok": False,
            "violations": [v.describe() for v in exc.violations],
            "hints": list(exc.hints),
        }
        return EXIT_FALSE, report
    report = {
        "command": "validate",
        "ring": ring.name,
        "ok": True,
        "basis": list(ring.labels),
        "mode": ring.mode,
        "has_blocks": ring.blocks is not None,
        "has_units": ring.units is not None,
    }
    return EXIT_OK, report


def _cmd_ideals(args):
    ring = resolve_ring_arg(args.ring)
    side = _SIDES[args.side]
    ideals = enumerate_serre_ideals(ring, side, args.allow_large)
    report = {
        "command": "ideals",
        "ring": ring.name,
        "side": side,
        "count": len(ideals),
        "ideals": [_ideal_labels(ring, i) for i in ideals],
    }
    return EXIT_OK, report


def _spec_doc(ring, spec):
    primes = []
    for i, p in enumerate(spec.primes):
        primes.append({
            "ideal": _ideal_labels(ring, p),
            "completely_prime": spec.completely_prime[i],
            "semiprime": spec.semiprime[i],
        })
    return {
        "ring": ring.name,
        "basis": list(ring.labels),
        "prime_count": len(primes),
        "primes": primes,
        "inclusions": [list(pair) for pair in spec.inclusions],
    }


def _cmd_spec(args):
    ring = resolve_ring_arg(args.ring)
    spec = serre_spec(ring, args.allow_large)
    report = {"command": "spec"}
    report.update(_spec_doc(ring, spec))
    return EXIT_OK, report


def _cmd_check(args):
    ring = resolve_ring_arg(args.ring)
    ideal = IdealSubset(_ideal_from_arg(ring, args.ideal))
    mode = FAST if args.mode == "fast" else DEFINITIONAL
    if args.prop == "prime":
        holds, witness = is_serre_prime(ring, ideal, mode, args.allow_large)
    elif args.prop == "cprime":
        holds, witness = is_completely_prime(ring, ideal)
    else:
        holds, witness = is_semiprime(ring, ideal, mode, args.allow_large)
    report = {
        "command": "check",
        "ring": ring.name,
        "ideal": _ideal_labels(ring, ideal),
        "property": args.prop,
        "mode": args.mode,
        "holds": holds,
        "witness": witness,
    }
    return (EXIT_OK if holds else EXIT_FALSE), report


def _cmd_closure(args):
    ring = resolve_ring_arg(args.ring)
    side = _SIDES[args.side]
    gens = mask_from_labels(ring, _parse_labels(args.gens))
    closed = serre_closure(ring, gens, side)
    report = {
        "command": "closure",
        "ring": ring.name,
        "side": side,
        "generators": labels_from_mask(ring, gens),
        "closure": _ideal_labels(ring, closed),
    }
    return EXIT_OK, report


def _cmd_minimal_primes(args):
    ring = resolve_ring_arg(args.ring)
    ideal = IdealSubset(_ideal_from_arg(ring, args.ideal))
    try:
        minimal, chain = minimal_primes_over(ring, ideal, args.allow_large)
    except NoPrimeOver as exc:
        report = {
            "command": "minimal-primes",
            "ring": ring.name,
            "ideal": _ideal_labels(ring, ideal),
            "minimal_primes": [],
            "chain": [],
            "note": str(exc),
        }
        return EXIT_FALSE, report
    fold = chain_product_support(ring, chain)
    report = {
        "command": "minimal-primes",
        "ring": ring.name,
        "ideal": _ideal_labels(ring, ideal),
        "minimal_primes": [_ideal_labels(ring, p) for p in minimal],
        "chain": [_ideal_labels(ring, p) for p in chain],
        "chain_product_support": labels_from_mask(ring, fold),
        "chain_verified": not fold & ~ideal.members,
    }
    return EXIT_OK, report


def _cmd_quotient(args):
    ring = resolve_ring_arg(args.ring)
    ideal = IdealSubset(_ideal_from_arg(ring, args.ideal))
    result = quotient_ring(ring, ideal)
    text = serialize_ring(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    report = {
        "command": "quotient",
        "ring": ring.name,
        "ideal": _ideal_labels(ring, ideal),
        "quotient_basis": list(result.labels),
        "output": args.output,
        "ring_file": text,
    }
    return EXIT_OK, report


def _cmd_topology(args):
    ring = resolve_ring_arg(args.ring)
    family = build_topology(ring, args.style, allow_large=args.allow_large)
    dot_text = to_dot(ring, family)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot_text)
    points = [ideal_node_name(ring, p) for p in family.space]
    sets = []
    for s in family.sets:
        tag = None
        if s.tag is not None:
            tag = labels_from_mask(ring, s.tag)
        sets.append({
            "points": [points[i] for i in _bits(s.extent)],
            "tag": tag,
        })
    report = {
        "command": "topology",
        "ring": ring.name,
        "style": args.style,
        "points": points,
        "closed_sets": sets,
        "generators_union_closed": family.generators_union_closed,
        "empty_set_adjoined": family.empty_set_adjoined,
        "specialization": [[points[i], points[j]]
                           for i, j in specialization_edges(family)],
        "dot": args.dot,
    }
    return EXIT_OK, report


def _bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _cmd_twocat(args):
    ring = resolve_ring_arg(args.ring)
    ok, witness = check_unit_decomposition(ring)
    report = {
        "command": "twocat",
        "ring": ring.name,
        "unit_decomposition": ok,
        "unit_witness": witness,
    }
    if args.classify_cprimes:
        primes = classify_completely_primes(ring, args.allow_large)
        report["completely_primes"] = [_ideal_labels(ring, p) for p in primes]
    return (EXIT_OK if ok else EXIT_FALSE), report


def _parse_vectors(text):
    vecs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        vecs.append(tuple(int(t) for t in chunk.split(",")))
    return vecs


def _cmd_monomial(args):
    rows = _parse_vectors(args.twist)
    ring = MonomialRing(args.vars, tuple(rows))
    chosen = [name for name in ("prime", "truncate", "face")
              if getattr(args, name) is not None]
    if len(chosen) != 1:
        raise _UsageError(
            "monomial needs exactly one of --prime, --truncate, --face")
    report = {
        "command": "monomial",
        "vars": args.vars,
        "twist": [list(r) for r in ring.twist],
    }
    if args.prime is not None:
        gens = _parse_vectors(args.prime)
        ideal = build_monoid_ideal(args.vars, gens)
        holds, payload = monoid_ideal_is_prime(ideal)
        report["action"] = "prime"
        report["generators"] = [list(g) for g in gens]
        report["minimal_generators"] = [list(g) for g in ideal.gens]
        report["is_prime"] = holds
        if holds:
            report["face"] = [i + 1 for i in payload]
            report["witness"] = None
        else:
            report["face"] = None
            report["witness"] = [list(payload[0]), list(payload[1])]
        return (EXIT_OK if holds else EXIT_FALSE), report
    if args.truncate is not None:
        truncated = truncate_to_ring(ring, args.truncate)
        report["action"] = "truncate"
        report["degree"] = args.truncate
        report["basis"] = list(truncated.labels)
        report["ring_file"] = serialize_ring(truncated)
        return EXIT_OK, report
    face = [int(t) - 1 for t in args.face.split(",") if t.strip()]
    quotient = face_quotient(ring, face)
    report["action"] = "face"
    report["face"] = [i + 1 for i in sorted(face)]
    report["remaining_vars"] = quotient.nvars
    report["twist_restricted"] = [list(r) for r in quotient.twist]
    return EXIT_OK, report


def _cmd_gallery(args):
    if args.name is None:
        entries = []
        for name in gallery_names():
            ring = load_gallery(name)
            entries.append({
                "name": name,
                "summary": gallery_summary(name),
                "basis_size": ring.size,
            })
        report = {"command": "gallery", "names": list(gallery_names()),
                  "entries": entries}
        return EXIT_OK, report
    ring = load_gallery(args.name)
    report = {
        "command": "gallery",
        "name": args.name,
        "summary": gallery_summary(args.name),
        "expected": gallery_expected(args.name),
        "ring_file": serialize_ring(ring),
    }
    return EXIT_OK, report


def _cmd_oracle(args):
    ring = resolve_ring_arg(args.ring)
    ideals = enumerate_serre_ideals(ring, TWO_SIDED, args.allow_large)
    full = ring.full_mask
    mismatches = []
    checked = 0
    for ideal in ideals:
        if ideal.members == full:
            continue
        checked += 1
        fast_p = is_serre_prime(ring, ideal, FAST)[0]
        def_p = is_serre_prime(ring, ideal, DEFINITIONAL, args.allow_large)[0]
        fast_s = is_semiprime(ring, ideal, FAST)[0]
        def_s = is_semiprime(ring, ideal, DEFINITIONAL, args.allow_large)[0]
        labels = _ideal_labels(ring, ideal)
        if fast_p != def_p:
            mismatches.append({"ideal": labels, "property": "prime",
                               "fast": fast_p, "definitional": def_p})
        if fast_s != def_s:
            mismatches.append({"ideal": labels, "property": "semiprime",
                               "fast": fast_s, "definitional": def_s})
    report = {
        "command": "oracle",
        "ring": ring.name,
        "ideals_checked": checked,
        "mismatches": mismatches,
        "ok": not mismatches,
    }
    return (EXIT_OK if not mismatches else EXIT_FALSE), report


_HANDLERS = {
    "validate": _cmd_validate,
    "ideals": _cmd_ideals,
    "spec": _cmd_spec,
    "check": _cmd_check,
    "closure": _cmd_closure,
    "minimal-primes": _cmd_minimal_primes,
    "quotient": _cmd_quotient,
    "topology": _cmd_topology,
    "twocat": _cmd_twocat,
    "monomial": _cmd_monomial,
    "gallery": _cmd_gallery,
    "oracle": _cmd_oracle,
}


def run_command(argv):
    """Run one CLI invocation; returns CommandResult(exit_code, report)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandResult(EXIT_INPUT, {
            "error": "usage", "message": str(exc),
            "usage": parser.format_usage().strip(),
        })
    try:
        code, report = _HANDLERS[args.command](args)
    except _UsageError as exc:
        return CommandResult(EXIT_INPUT, {"error": "usage",
                                          "message": str(exc)})
    except BasisTooLarge as exc:
        return CommandResult(EXIT_GUARD, {"error": "guard",
                                          "message": str(exc)})
    except (RingError, CoefficientError, ValueError) as exc:
        return CommandResult(EXIT_INPUT, {"error": "input",
                                          "message": str(exc)})
    return CommandResult(code, report)


def render_report(report):
    return json.dumps(report, indent=2) + "\n"


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    try:
        result = run_command(argv)
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    sys.stdout.write(render_report(result.report))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())

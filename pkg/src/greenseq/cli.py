"""Command-line front end.

Subcommands: mutate, classify, search, verify, invariants, walk.
All JSON output is canonical: 2-space indent, documented key order,
newline-terminated, so runs are byte-for-byte reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import YSeed, load_seed, mutate_seed, seed_to_dict
from .diagram import DEFAULT_BUDGET, classify_mutation_cyclicity, diagram_of, is_cyclic
from .errors import (
    GreenSeqError,
    IdentityViolation,
    InconclusiveClassification,
    IndexOutOfRange,
    InvalidSeedFile,
    LemmaMismatch,
    NotFromInitialSeed,
    NotMaximal,
    NotMutationAcyclic,
    NotMutationCyclic,
    NotSkewSymmetrizable,
    PositivityViolation,
    SignCoherenceViolation,
    TheoremViolation,
    UnsupportedDimension,
    ZeroMatrix,
)
from .radical import (
    certify_no_mgs,
    check_radical_identity,
    coordinate_change,
    radical_vector,
    track_step,
)
from .search import is_green_vertex, search_mgs, verify_sequence

EXIT_OK = 0
EXIT_FAIL = 1  # a checked property is false
EXIT_USAGE = 2  # invalid input
EXIT_INCONCLUSIVE = 3  # bounded search/classification was cut short

_USAGE_ERRORS = (
    InvalidSeedFile,
    IndexOutOfRange,
    UnsupportedDimension,
    NotSkewSymmetrizable,
    ZeroMatrix,
    NotFromInitialSeed,
    ValueError,
)
_PROPERTY_ERRORS = (
    LemmaMismatch,
    IdentityViolation,
    PositivityViolation,
    TheoremViolation,
    NotMaximal,
    NotMutationCyclic,
    NotMutationAcyclic,
)


def _parse_sequence(text, n):
    if not text:
        return ()
    try:
        seq = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise InvalidSeedFile(f"bad sequence {text!r}: {exc}") from exc
    for k in seq:
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"sequence entry {k} outside 1..{n}")
    return seq


def _emit(payload: dict, out_path):
    text = json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_mutate(args) -> int:
    seed = load_seed(args.seed)
    seq = _parse_sequence(args.sequence, seed.n)
    s = seed
    for step, k in enumerate(seq, start=1):
        try:
            s = mutate_seed(s, k)
        except SignCoherenceViolation as exc:
            print(f"sign coherence violated at step {step}: {exc}", file=sys.stderr)
            return EXIT_FAIL
    _emit(seed_to_dict(s), args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    seed = load_seed(args.seed)
    verdict = classify_mutation_cyclicity(seed.b, args.budget)
    _emit(verdict.to_dict(), args.out)
    return EXIT_INCONCLUSIVE if verdict.kind == "Inconclusive" else EXIT_OK


def cmd_search(args) -> int:
    seed = load_seed(args.seed)
    mode = "EnumerateAll" if args.all else "FirstFound"
    report = search_mgs(seed, args.depth, mode, args.budget)
    _emit(report.to_dict(), args.out)
    if report.found:
        return EXIT_OK
    return EXIT_FAIL if report.exhausted else EXIT_INCONCLUSIVE


def cmd_verify(args) -> int:
    seed = load_seed(args.seed)
    if args.sequence is None:
        raise InvalidSeedFile("verify requires --sequence")
    seq = _parse_sequence(args.sequence, seed.n)
    report = verify_sequence(seed, seq, args.budget)
    _emit(report.to_dict(), args.out)
    return EXIT_OK if report.all_hold() else EXIT_FAIL


def cmd_invariants(args) -> int:
    seed = load_seed(args.seed)
    seq = _parse_sequence(args.sequence, seed.n)
    if seed.n != 3:
        raise UnsupportedDimension("invariant audits require a 3x3 seed")
    verdict = classify_mutation_cyclicity(seed.b, args.budget)
    if verdict.kind == "Inconclusive":
        _emit({"classifier": verdict.to_dict()}, args.out)
        return EXIT_INCONCLUSIVE
    payload: dict = {"classifier": verdict.to_dict()}
    certificate = None
    if verdict.kind == "MutationCyclic":
        certificate = certify_no_mgs(seed, args.budget)
        payload["certificate"] = certificate.to_dict()
    payload["radical_identity"] = check_radical_identity(
        seq, seed, args.budget
    ).to_dict()
    # Lemma conformance along the sequence; raises LemmaMismatch on failure.
    a = radical_vector(seed.b).coords
    s = seed
    trace = [list(a)]
    for i, k in enumerate(seq):
        a, _ = track_step(a, s, k, seq[: i + 1])
        s = mutate_seed(s, k)
        trace.append(list(a))
    payload["tracked_coordinates"] = trace
    if certificate is not None and seq:
        certificate.replay(seq)
    _emit(payload, args.out)
    return EXIT_OK


def _walk_show(s: YSeed, a, out):
    print("B =", file=out)
    for row in s.b.entries:
        print("  " + " ".join(f"{x:4d}" for x in row), file=out)
    print("c-vectors:", file=out)
    for i, v in enumerate(s.c, start=1):
        try:
            status = "green" if is_green_vertex(s, i) else "red"
        except SignCoherenceViolation:
            status = "NOT SIGN-COHERENT"
        print(f"  c_{i} = {list(v)}  [{status}]", file=out)
    g = diagram_of(s.b)
    print(f"diagram: {'cyclic' if is_cyclic(g) else 'acyclic'}", file=out)
    if a is not None:
        print(f"tracked radical coordinates: {list(a)}", file=out)


def cmd_walk(args) -> int:
    seed = load_seed(args.seed)
    a0 = None
    if seed.n == 3 and seed.has_initial_c():
        try:
            a0 = radical_vector(seed.b).coords
        except ZeroMatrix:
            a0 = None
    history = [(seed, a0)]
    out = sys.stdout
    _walk_show(seed, a0, out)
    while True:
        print("mutate vertex (1..%d), 'u' undo, 'q' quit> " % seed.n, end="", file=out)
        out.flush()
        line = sys.stdin.readline()
        if not line or line.strip() == "q":
            return EXIT_OK
        cmd = line.strip()
        if cmd == "u":
            if len(history) == 1:
                print("nothing to undo", file=out)
                continue
            history.pop()
            s, a = history[-1]
            _walk_show(s, a, out)
            continue
        try:
            k = int(cmd)
        except ValueError:
            print(f"unrecognized command {cmd!r}", file=out)
            continue
        s, a = history[-1]
        if not 1 <= k <= s.n:
            print("no such vertex", file=out)
            continue
        try:
            if not is_green_vertex(s, k):
                print(f"note: vertex {k} is not green", file=out)
            a2 = coordinate_change(a, s, k) if a is not None else None
            s2 = mutate_seed(s, k)
        except SignCoherenceViolation as exc:
            print(f"mutation refused: {exc}", file=out)
            continue
        history.append((s2, a2))
        _walk_show(s2, a2, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greenseq",
        description=(
            "Exact mutation of skew-symmetrizable matrices, maximal green "
            "sequence search, and rank-3 invariant auditing."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, sequence=False):
        p.add_argument("--seed", required=True, help="seed JSON file")
        p.add_argument("--out", default=None, help="write output here instead of stdout")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="step budget for the cyclicity classifier")
        if sequence:
            p.add_argument("--sequence", default=None,
                           help="comma-separated 1-based mutation sequence")

    p = sub.add_parser("mutate", help="apply a mutation sequence and print the seed")
    common(p, sequence=True)
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("classify", help="mutation-cyclicity verdict for a 3x3 seed")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="search for maximal green sequences")
    common(p)
    p.add_argument("--depth", type=int, default=12, help="green-walk depth limit")
    p.add_argument("--all", action="store_true", help="enumerate all MGS up to depth")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="verify a mutation sequence is a (maximal) green sequence")
    common(p, sequence=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("invariants", help="audit the radical identity, lemmas and certificate")
    common(p, sequence=True)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("walk", help="interactive mutation walk")
    common(p)
    p.set_defaults(func=cmd_walk)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "sequence", None) is None and args.subcommand == "mutate":
        args.sequence = ""
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconclusiveClassification as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except SignCoherenceViolation as exc:
        print(f"sign coherence violated: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except _PROPERTY_ERRORS as exc:
        print(f"property failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GreenSeqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

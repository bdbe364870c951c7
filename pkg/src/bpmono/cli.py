"""Command line entry point: ``bpmono <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 resource
budget exhausted.  Budget defaults may be overridden with the environment
variables BPMONO_MAX_MU, BPMONO_MAX_WORD_LEN, BPMONO_ORBIT_CAP and
BPMONO_MAX_STRANDS.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import harness
from .generators import FamilySpec, family_json, generator_family, sigma
from .hurwitz import DEFAULT_ORBIT_CAP, EXCEEDED, HOLDS, orbit_enumerate, parse_tuple_spec, stabilizer_report
from .multiindex import ExponentVector, build_dynkin, index_label, parse_index
from .polynomials import (
    MAX_MU_BIFURCATION,
    MAX_MU_DISCRIMINANT,
    ResourceExceeded,
    degree_report,
    hl_bifurcation,
    hl_discriminant,
)
from .presentations import bp_presentation, presentation_from_dynkin
from .words import DEFAULT_MAX_WORD_LEN, BraidWord, IndexOutOfRange, WordLengthOverflow, braids_equal

OK, FAILED, USAGE, RESOURCE = 0, 1, 2, 3


@dataclass(frozen=True)
class Budgets:
    max_mu: int | None = None
    max_word_len: int = DEFAULT_MAX_WORD_LEN
    orbit_cap: int = DEFAULT_ORBIT_CAP
    max_strands: int = harness.DEFAULT_MAX_STRANDS

    @classmethod
    def from_env(cls, env=os.environ) -> "Budgets":
        def get(name, default):
            v = env.get(name)
            return default if v in (None, "") else int(v)

        return cls(
            max_mu=get("BPMONO_MAX_MU", None),
            max_word_len=get("BPMONO_MAX_WORD_LEN", DEFAULT_MAX_WORD_LEN),
            orbit_cap=get("BPMONO_ORBIT_CAP", DEFAULT_ORBIT_CAP),
            max_strands=get("BPMONO_MAX_STRANDS", harness.DEFAULT_MAX_STRANDS),
        )


class UsageError(ValueError):
    pass


def parse_pair(text: str, l: ExponentVector) -> tuple[tuple, tuple]:
    """``11-22`` or ``[1,1]-[2,2]``."""
    if text.startswith("["):
        a, sep, b = text.partition("]-[")
        if not sep:
            raise UsageError(f"bad index pair {text!r}")
        a, b = a + "]", "[" + b
    else:
        a, sep, b = text.partition("-")
        if not sep:
            raise UsageError(f"bad index pair {text!r}")
    return parse_index(a, l.n), parse_index(b, l.n)


def parse_params(text: str) -> tuple:
    """``3;4;2,2`` -> (3, 4, (2, 2))."""
    out = []
    for tok in text.split(";"):
        tok = tok.strip()
        if not tok:
            continue
        nums = tuple(int(x) for x in tok.split(","))
        out.append(nums if "," in tok else nums[0])
    return tuple(out)


def parse_family(text: str) -> FamilySpec:
    name, _, args = text.partition(":")
    nums = tuple(int(x) for x in args.split(",") if x)
    return FamilySpec(name, nums)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_bp_gens(args, budgets) -> int:
    l = ExponentVector.of(args.l)
    if args.pair:
        i, j = parse_pair(args.pair, l)
        w = sigma(i, j, l)
        _emit(args, str(w), {"i": list(i), "j": list(j), "word": str(w)})
        return OK
    gens = generator_family(FamilySpec("bp_monodromy", l.exponents))
    _emit(args, "\n".join(f"{g.label}\t{g.word}" for g in gens), [g.to_json() for g in gens])
    return OK


def cmd_an_gens(args, budgets) -> int:
    gens = generator_family(FamilySpec("an", (args.n,)))
    _emit(args, "\n".join(f"{g.label}\t{g.word}" for g in gens), [g.to_json() for g in gens])
    return OK


def cmd_family(args, budgets) -> int:
    spec = FamilySpec(args.name, tuple(int(x) for x in args.params.split(",") if x))
    gens = generator_family(spec)
    if args.json:
        print(family_json(gens))
    else:
        print("\n".join(f"{g.label}\t{g.word}" for g in gens))
    return OK


def cmd_dynkin(args, budgets) -> int:
    D = build_dynkin(args.l)
    if args.json:
        print(D.dumps())
    elif args.dot:
        sys.stdout.write(D.to_dot())
    else:
        l = D.exponents
        for a, b, w in D.edges:
            print(f"{index_label(a, l)} {index_label(b, l)} {w:+d}")
    return OK


def cmd_presentation(args, budgets) -> int:
    l = ExponentVector.of(args.l)
    P = presentation_from_dynkin(build_dynkin(l)) if args.from_dynkin else bp_presentation(l)
    print(P.dumps() if args.json or args.format == "json" else P.to_text())
    return OK


def cmd_hl_disc(args, budgets) -> int:
    P = hl_discriminant(args.l, max_mu=args.max_mu or budgets.max_mu or MAX_MU_DISCRIMINANT)
    _emit(args, str(P), P.to_json())
    return OK


def cmd_hl_bif(args, budgets) -> int:
    P = hl_bifurcation(args.l, max_mu=args.max_mu or budgets.max_mu or MAX_MU_BIFURCATION)
    if args.report:
        r = degree_report(P, args.l)
        _emit(args, json.dumps(r.to_json()), r.to_json())
    else:
        _emit(args, str(P), P.to_json())
    return OK


def cmd_word_eq(args, budgets) -> int:
    a, b = BraidWord.parse(args.n, args.a), BraidWord.parse(args.n, args.b)
    same = braids_equal(a, b, max_len=args.max_word_len or budgets.max_word_len)
    _emit(args, "equal" if same else "different", {"equal": same})
    return OK if same else FAILED


def cmd_hurwitz_stab(args, budgets) -> int:
    t = parse_tuple_spec(args.tuple)
    gens = generator_family(parse_family(args.gens))
    r = stabilizer_report("hurwitz-stab", {"tuple": args.tuple, "gens": args.gens}, gens, t)
    _emit(args, f"{r.verdict}" + ("" if r.ok else f" {json.dumps(r.witness)}"), r.to_json())
    return OK if r.ok else FAILED


def cmd_hurwitz_orbit(args, budgets) -> int:
    t = parse_tuple_spec(args.tuple)
    words = [BraidWord.parse(len(t), w) for w in args.word or []]
    if args.gens:
        words += [g.word for g in generator_family(parse_family(args.gens))]
    if not words:
        raise UsageError("give at least one --word or --gens")
    res = orbit_enumerate(t, words, cap=args.orbit_cap or budgets.orbit_cap)
    payload = {"verdict": res.verdict, "size": res.size}
    if args.states:
        payload["states"] = [s.to_json() for s in res.states]
    _emit(args, f"{res.verdict} {res.size}", payload)
    return RESOURCE if res.verdict == EXCEEDED else OK


def cmd_verify(args, budgets) -> int:
    cap = args.max_strands or budgets.max_strands
    if args.filt:
        reports = [harness.run_filt(harness.iso_tri_gen_filtration(args.filt), f"filt/iso-tri-gen-{args.filt}")]
    elif args.id:
        case = harness.find_case(args.id)
        if args.params:
            case = case.with_params(parse_params(args.params))
        reports = [harness.run_identity(case, cap)]
    elif args.all or args.pattern:
        reports = harness.run_suite(args.pattern, cap)
        if not reports:
            raise UsageError(f"no catalogued identity matches {args.pattern!r}")
    else:
        raise UsageError("verify needs --all, --pattern, --id or --filt")
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    elif args.id and not args.verbose:
        r = reports[0]
        print(r.verdict + ("" if r.witness is None or r.verdict == HOLDS else f" {json.dumps(r.witness)}"))
    else:
        for r in reports:
            print(r.line())
    if args.id and reports[0].verdict == EXCEEDED:
        return RESOURCE
    if args.filt:
        return OK if reports[0].ok else FAILED
    return OK if harness.suite_ok(reports) else FAILED


def cmd_out_of_reach(args, budgets) -> int:
    _emit(args, "\n".join(f"{k}: {v}" for k, v in harness.OUT_OF_REACH), [{"id": k, "note": v} for k, v in harness.OUT_OF_REACH])
    return OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bpmono", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine readable output")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("bp-gens", cmd_bp_gens, "monodromy generators for an exponent vector")
    sp.add_argument("l", help="exponent vector, e.g. 2,3")
    sp.add_argument("--pair", help="print only sigma for one pair, e.g. 11-22 or [1,1]-[2,2]")

    sp = add("an-gens", cmd_an_gens, "monodromy generators of x^(n+1)")
    sp.add_argument("n", type=int)

    sp = add("family", cmd_family, "a named generator family")
    sp.add_argument("name", choices=["bp_monodromy", "an", "g_n", "f_n", "ffn", "cw_delta", "E", "E_spherical"])
    sp.add_argument("params", help="comma separated parameters")

    sp = add("dynkin", cmd_dynkin, "Dynkin diagram of the exponent vector")
    sp.add_argument("l")
    sp.add_argument("--dot", action="store_true")

    sp = add("presentation", cmd_presentation, "finite presentation")
    sp.add_argument("l")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--from-dynkin", action="store_true", help="read relators off the diagram")

    for name, fn in (("hl-disc", cmd_hl_disc), ("hl-bif", cmd_hl_bif)):
        sp = add(name, fn, "discriminant polynomial" if name == "hl-disc" else "bifurcation polynomial")
        sp.add_argument("l")
        sp.add_argument("--max-mu", type=int)
        if name == "hl-bif":
            sp.add_argument("--report", action="store_true", help="degrees and vanishing orders")

    sp = add("word-eq", cmd_word_eq, "decide equality of two braid words")
    sp.add_argument("n", type=int, help="number of strands")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--max-word-len", type=int)

    sp = add("hurwitz-stab", cmd_hurwitz_stab, "check that a family stabilizes a tuple")
    sp.add_argument("--tuple", required=True, help="psi:l,l' | phi:n | perm_h:n | braid_h:n")
    sp.add_argument("--gens", required=True, help="family:params, e.g. E:2,3")

    sp = add("hurwitz-orbit", cmd_hurwitz_orbit, "enumerate a Hurwitz orbit")
    sp.add_argument("--tuple", required=True)
    sp.add_argument("--word", action="append", help="braid word acting, repeatable")
    sp.add_argument("--gens", help="family:params")
    sp.add_argument("--orbit-cap", type=int)
    sp.add_argument("--states", action="store_true", help="include orbit elements in JSON")

    sp = add("verify", cmd_verify, "run the identity catalogue")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--id")
    g.add_argument("--pattern", help="glob over case ids, e.g. 'braid/*'")
    g.add_argument("--filt", type=int, metavar="N", help="filtration check on Br_N")
    sp.add_argument("--params", help="override parameters, e.g. '3;4' or '2,2'")
    sp.add_argument("--max-strands", type=int)
    sp.add_argument("-v", "--verbose", action="store_true")

    add("out-of-reach", cmd_out_of_reach, "results this package does not decide")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        budgets = Budgets.from_env()
        return args.fn(args, budgets)
    except (ResourceExceeded, WordLengthOverflow) as e:
        print(f"bpmono: resource budget exceeded: {e}", file=sys.stderr)
        return RESOURCE
    except (UsageError, IndexOutOfRange, KeyError, ValueError) as e:
        print(f"bpmono: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())

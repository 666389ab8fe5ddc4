"""Command-line front end.

Exit status: 0 on success (including negative mathematical verdicts such as a
truant or a non-new vector), 1 on a mismatch with the recorded classification
or a nonempty counterexample list, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracles
from .classify import OutOfCatalog, diff_expected, enumerate_new
from .polygonal import GonalSet, LimitError, is_member, values_up_to
from .sieve import FormVector, find_witness, repr_set, truant
from .universality import (
    DEFAULT_BASE_BOUND,
    DEFAULT_BOUND,
    Certificate,
    is_new,
    validate_certificate,
    verify_tight,
)

DEFAULT_SEED = 20240101

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(text)


def _gonal_set(args) -> GonalSet:
    generalized = getattr(args, "generalized", False)
    if generalized and args.m is None:
        raise UsageError("--generalized requires --m")
    m = 3 if args.m is None else args.m
    if m < 3:
        raise UsageError(f"--m must be >= 3, got {m}")
    return GonalSet(m, generalized)


def _coeffs(args) -> FormVector:
    try:
        return FormVector.parse(args.coeffs)
    except ValueError as e:
        raise UsageError(f"--coeffs: {e}") from None


def _fmt(vec) -> str:
    return "(" + ",".join(map(str, vec)) + ")"


def cmd_gonal(args) -> int:
    S = _gonal_set(args)
    if args.action == "list":
        vals = values_up_to(S, args.bound)
        _emit(args, {"m": S.m, "generalized": S.generalized, "bound": args.bound, "values": vals},
              " ".join(map(str, vals)))
    else:
        ok, x = is_member(S, args.N)
        _emit(args, {"m": S.m, "generalized": S.generalized, "N": args.N, "member": ok, "index": x},
              f"{args.N} in {S}: {ok}" + (f" (x={x})" if ok else ""))
    return OK


def cmd_repr(args) -> int:
    S = _gonal_set(args)
    a = _coeffs(args)
    base = {"coeffs": list(a), "m": S.m, "generalized": S.generalized}
    if args.action == "set":
        rs = repr_set(a, S, args.bound, want_witnesses=args.witnesses)
        missing = rs.missing()
        payload = dict(base, bound=args.bound, missing=missing)
        lines = [f"V_{S}{_fmt(a)} on [0,{args.bound}]: {len(rs)} represented, {len(missing)} missing",
                 "missing: " + " ".join(map(str, missing))]
        if rs.witnesses is not None:
            payload["witnesses"] = {str(g): list(w.assignment) for g, w in rs.witnesses.items()}
            lines += [f"{g}: {list(w.assignment)}" for g, w in rs.witnesses.items()]
        _emit(args, payload, "\n".join(lines))
    elif args.action == "witness":
        w = find_witness(a, S, args.target)
        _emit(args, dict(base, target=args.target, witness=list(w.assignment) if w else None),
              f"{args.target}: " + (" ".join(map(str, w.assignment)) if w else "not represented"))
    else:
        if args.bound < args.n:
            raise UsageError("--bound must be >= --n")
        t = truant(a, S, args.n, args.bound)
        _emit(args, dict(base, n=args.n, bound=args.bound, truant=t),
              "none" if t is None else str(t))
    return OK


def cmd_verify(args) -> int:
    if args.check_cert:
        with open(args.check_cert) as f:
            cert = Certificate.from_dict(json.load(f))
        ok = validate_certificate(cert)
        _emit(args, {"certificate": cert.to_dict(), "valid": ok}, "valid" if ok else "INVALID")
        return OK if ok else MISMATCH
    if args.coeffs is None or args.n is None:
        raise UsageError("verify needs --coeffs and --n (or --check-cert)")
    S = _gonal_set(args)
    a = _coeffs(args)
    if args.bound < 2 * args.n:
        raise UsageError(f"--bound must be >= 2n = {2 * args.n}")
    v = verify_tight(a, S, args.n, args.bound, certify=args.certify, base_bound=args.base_bound)
    text = f"{v.status.value}"
    text += f" {v.truant}" if v.truant is not None else f" {v.bound}"
    if v.below_min:
        text += " (represented below n)"
    if v.certificate:
        c = v.certificate
        text += f"\ncertificate: Lemma123 e1={c.e1} e2={c.e2} e3={c.e3} base_bound={c.base_bound}"
    _emit(args, v.to_dict(), text)
    return OK


def cmd_new(args) -> int:
    S = _gonal_set(args)
    a = _coeffs(args)
    v = verify_tight(a, S, args.n, args.bound)
    if not v.ok:
        _emit(args, {"verdict": v.to_dict(), "newness": None},
              f"not tight: {v.status.value} {v.truant}")
        return OK
    rep = is_new(a, S, args.n, args.bound)
    lines = [f"{'new' if rep.is_new else 'not new'}"]
    for r in rep.removals:
        lines.append(f"  drop a_{r.index + 1}={r.value}: {r.evidence}" + (f" {r.truant}" if r.truant is not None else ""))
    _emit(args, {"verdict": v.to_dict(), "newness": rep.to_dict()}, "\n".join(lines))
    return OK


def cmd_classify(args) -> int:
    S = _gonal_set(args)
    if args.bound < 2 * args.n:
        raise UsageError(f"--bound must be >= 2n = {2 * args.n}")
    if args.depth_cap is not None and args.depth_cap < args.n + 2:
        raise UsageError(f"--depth-cap must be >= n+2 = {args.n + 2}")
    rep = enumerate_new(S, args.n, args.bound, args.depth_cap, threads=args.threads)
    payload = rep.to_dict()
    lines = [_fmt(v) for v in rep.vector_list()]
    lines.append(f"{len(rep.vectors)} new tight T({args.n})-universal vector(s) for {S}, verified to {args.bound}")
    if not rep.classified_by_paper:
        lines.append("note: unclassified by paper for these parameters (exploratory)")
    if not rep.complete:
        lines.append(f"DepthCapHit: {len(rep.frontier)} open branch(es): " + " ".join(_fmt(v) for v in rep.frontier))
    status = OK
    if args.diff_paper:
        try:
            missing, extra = diff_expected(rep)
        except OutOfCatalog as e:
            raise UsageError(str(e)) from None
        payload["diff"] = {"missing": [list(v) for v in missing], "unexpected": [list(v) for v in extra]}
        lines.append(f"diff vs paper: {len(missing)} missing, {len(extra)} unexpected")
        lines += [f"  missing {_fmt(v)}" for v in missing] + [f"  unexpected {_fmt(v)}" for v in extra]
        if missing or extra or not rep.complete:
            status = MISMATCH
    _emit(args, payload, "\n".join(lines))
    return status


def cmd_oracle(args) -> int:
    if args.action == "residue":
        claim = oracles.preset_claim(args.preset, args.bound)
        bad = oracles.check_residue_claim(claim)
        payload = {"preset": args.preset, "bound": args.bound, "counterexamples": bad}
        text = f"{claim.description} up to {args.bound}: {len(bad)} counterexample(s)"
    elif args.action == "f346":
        bad = oracles.check_346(args.bound)
        payload = {"bound": args.bound, "counterexamples": bad}
        text = f"3x^2+4y^2+6z^2 up to {args.bound}: {len(bad)} counterexample(s)"
    elif args.action == "jones":
        bad = [N for N in range(1, args.nmax + 1) if not oracles.jones_check(args.k, args.p, N)]
        payload = {"k": args.k, "p": args.p, "nmax": args.nmax, "counterexamples": bad}
        text = f"x^2+{args.k}y^2, p={args.p}, N<={args.nmax}: {len(bad)} counterexample(s)"
    elif args.action == "identity":
        ok = oracles.identity_check(args.name, args.trials, seed=args.seed)
        bad = [] if ok else [args.name]
        payload = {"name": args.name, "trials": args.trials, "seed": args.seed, "holds": ok}
        text = f"{args.name}: {'holds' if ok else 'FAILS'} on {args.trials} random points"
    else:
        bad_x3 = oracles.check_x3_table(args.bound)
        bad_y3 = oracles.check_y3_table(args.bound)
        bad = bad_x3 + bad_y3
        payload = {"bound": args.bound, "x3": bad_x3, "y3": bad_y3}
        text = f"d-selection tables up to {args.bound}: x3 {len(bad_x3)}, y3 {len(bad_y3)} counterexample(s)"
    if bad and args.format == "text":
        text += "\n" + " ".join(map(str, bad[:50]))
    _emit(args, payload, text)
    return MISMATCH if bad else OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    def family(p, sums=False):
        p.add_argument("--m", type=int, default=None)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--generalized", action="store_true", help="generalized m-gonal numbers (x in Z)")
        if sums:
            g.add_argument("--sums", action="store_true", help="m-gonal numbers with x >= 0 (default)")

    parser = argparse.ArgumentParser(prog="tightgonal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gonal", help="list or test (generalized) m-gonal numbers")
    gsub = p.add_subparsers(dest="action", required=True)
    q = gsub.add_parser("list", parents=[common])
    family(q)
    q.add_argument("--bound", type=int, required=True)
    q = gsub.add_parser("member", parents=[common])
    family(q)
    q.add_argument("N", type=int)
    p.set_defaults(func=cmd_gonal)

    p = sub.add_parser("repr", help="representation sets, witnesses, truants")
    rsub = p.add_subparsers(dest="action", required=True)
    q = rsub.add_parser("set", parents=[common])
    family(q, sums=True)
    q.add_argument("--coeffs", required=True)
    q.add_argument("--bound", type=int, required=True)
    q.add_argument("--witnesses", action="store_true")
    q = rsub.add_parser("witness", parents=[common])
    family(q, sums=True)
    q.add_argument("--coeffs", required=True)
    q.add_argument("--target", type=int, required=True)
    q = rsub.add_parser("truant", parents=[common])
    family(q, sums=True)
    q.add_argument("--coeffs", required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("verify", parents=[common], help="bounded tight T(n)-universality check")
    family(p, sums=True)
    p.add_argument("--coeffs")
    p.add_argument("--n", type=int)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--certify", action="store_true", help="attach a constructive certificate when the shape allows")
    p.add_argument("--base-bound", type=int, default=DEFAULT_BASE_BOUND)
    p.add_argument("--check-cert", metavar="FILE", help="re-validate a certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("new", parents=[common], help="is a tight vector new?")
    family(p, sums=True)
    p.add_argument("--coeffs", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("classify", parents=[common], help="enumerate all new tight T(n)-universal vectors")
    family(p, sums=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--depth-cap", type=int, default=None)
    p.add_argument("--diff-paper", action="store_true", help="exit 1 unless the result matches the known classification")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("oracle", help="brute-force checks of facts used in the proofs")
    osub = p.add_subparsers(dest="action", required=True)
    q = osub.add_parser("residue", parents=[common])
    q.add_argument("--preset", choices=sorted(oracles.PRESETS), required=True)
    q.add_argument("--bound", type=int, default=10**5)
    q = osub.add_parser("f346", parents=[common])
    q.add_argument("--bound", type=int, default=10**5)
    q = osub.add_parser("jones", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--nmax", type=int, default=2000)
    q = osub.add_parser("identity", parents=[common])
    q.add_argument("--name", choices=sorted(oracles.IDENTITIES), required=True)
    q.add_argument("--trials", type=int, default=10**4)
    q = osub.add_parser("tables", parents=[common])
    q.add_argument("--bound", type=int, default=10**5)
    p.set_defaults(func=cmd_oracle)
    return parser


def dispatch(args: argparse.Namespace) -> int:
    try:
        return args.func(args)
    except (UsageError, LimitError, OutOfCatalog, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return USAGE
    return dispatch(args)


if __name__ == "__main__":
    sys.exit(main())

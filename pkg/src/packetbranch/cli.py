"""Command-line front end.

Exit codes: 0 success, 1 a verification report has failures, 2 bad flags.
Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import branching, oracle
from .errors import BranchingError
from .exactnum import HalfInt, half
from .repmodel import SIGNS, Signature, make_rep, rep_to_json

PROG = "packetbranch"


class FlagError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise FlagError(self.prog, message)


def _halfint(text: str) -> HalfInt:
    try:
        return HalfInt.parse(text)
    except (ValueError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        a, b = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an inclusive range A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return a, b


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {text!r}")
    return v


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def _table(rows: list[tuple]) -> str:
    if not rows:
        return ""
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _flag(flag, fn, *args):
    """Run a domain constructor, attributing errors to ``flag``."""
    try:
        return fn(*args)
    except BranchingError as exc:
        raise FlagError(flag, f"{type(exc).__name__}: {exc}") from None


def _rep_flags(p, q, sign, lam, lam_flag="--lambda", sign_flag="--sign"):
    sig = _flag("--p/--q", Signature, p, q)
    return _flag(lam_flag, make_rep, sig, sign, lam)


def cmd_rep_info(args):
    r = _rep_flags(args.p, args.q, args.sign, args.lam)
    data = rep_to_json(r)
    if args.output == "table":
        return 0, _table([(k, json.dumps(v) if not isinstance(v, str) else v) for k, v in data.items()])
    return 0, _dump(data)


def cmd_branch_mult(args):
    big = _rep_flags(args.p, args.q, args.big_sign, args.lam)
    sub = _flag("--p", Signature, args.p - 1, args.q)
    small = _flag("--mu", make_rep, sub, args.small_sign, args.mu)
    if args.ochar is None:
        m = branching.multiplicity(big, small)
    else:
        m = branching.multiplicity_with_o1(big, small, branching.OneChar(args.ochar))
    if args.output == "table":
        return 0, _table([("multiplicity", m)])
    return 0, _dump({"multiplicity": m})


def cmd_branch_spectrum(args):
    big = _rep_flags(args.p, args.q, args.sign, args.lam)
    spec = _flag("--p", branching.discrete_spectrum, big, args.max_entries)
    if args.output == "table":
        rows = [("n", "sign", "mu", "ochar")]
        rows += [(e.n, e.rep.sign, str(e.rep.lam), e.ochar.value) for e in spec]
        tail = f"truncated={spec.truncated} omitted={spec.omitted}"
        return 0, _table(rows) + "\n" + tail
    return 0, _dump(spec.to_json())


def cmd_packet_verify(args):
    sig = _flag("--p/--q", Signature, args.p, args.q)
    decomp = _flag("--lambda/--mu", branching.packet_decomposition, sig, args.lam, args.mu)
    total = sum(decomp.values())
    witness = [list(pair) for pair, m in decomp.items() if m]
    data = {
        "p": sig.p,
        "q": sig.q,
        "lambda": str(args.lam),
        "mu": str(args.mu),
        "packet_multiplicity": total,
        "decomposition": {d + e: m for (d, e), m in decomp.items()},
        "witness": witness,
    }
    if args.output == "table":
        rows = [("pair", "multiplicity")] + [(k, v) for k, v in data["decomposition"].items()]
        return 0, _table(rows) + f"\ntotal={total}"
    return 0, _dump(data)


def cmd_sweep_versions(args):
    (p0, p1), (q0, q1) = args.p_range, args.q_range
    if p0 < 3 or q0 < 2:
        raise FlagError("--p-range/--q-range", "sweeps need p >= 3 and q >= 2")
    grid = {"p": [p0, p1], "q": [q0, q1], "lambda_max": str(args.lambda_max)}
    reports = [
        branching.verify_versions(Signature(p, q), args.lambda_max)
        for p in range(p0, p1 + 1)
        for q in range(q0, q1 + 1)
    ]
    report = branching.BranchingReport.merge(grid, reports)
    return _report_out(report, args.output)


def cmd_oracle_compact(args):
    if not 3 <= args.p_max <= 10:
        raise FlagError("--p-max", "must lie in 3..10")
    grid = {"p": [3, args.p_max], "q": 0, "ell_max": args.ell_max}
    reports = [
        oracle.compact_consistency(p, half(p) + args.ell_max) for p in range(3, args.p_max + 1)
    ]
    return _report_out(branching.BranchingReport.merge(grid, reports), args.output)


def cmd_oracle_harmonic(args):
    from .repmodel import harmonic_dim

    n, b = args.n, args.b
    if n < 1:
        raise FlagError("--n", "must be >= 1")
    brute = _flag("--n/--b", oracle.brute_force_harmonic_dim, n, b)
    data = {"n": n, "b": b, "harmonic_dim": harmonic_dim(n, b), "brute_force": brute}
    if args.output == "table":
        return 0, _table(list(data.items()))
    return 0, _dump(data)


def _report_out(report, output):
    code = 0 if report.passed else 1
    if output == "table":
        rows = [("checks", report.checks_run), ("failures", len(report.failures))]
        return code, _table(rows)
    return code, _dump(report.to_json())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description="Branching laws for O(p,q) -> O(p-1,q).")
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(group_sub, name, func, help_):
        sp = group_sub.add_parser(name, help=help_)
        sp.add_argument("--output", choices=("json", "table"), default="json")
        sp.set_defaults(func=func)
        return sp

    def pq(sp):
        sp.add_argument("--p", type=_natural, required=True)
        sp.add_argument("--q", type=_natural, required=True)

    rep = top.add_parser("rep", help="inspect a single representation")
    rep_sub = rep.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(rep_sub, "info", cmd_rep_info, "parameters, infinitesimal character, minimal K-type")
    pq(sp)
    sp.add_argument("--sign", choices=SIGNS, required=True)
    sp.add_argument("--lambda", dest="lam", type=_halfint, required=True)

    br = top.add_parser("branch", help="restriction to O(p-1,q)")
    br_sub = br.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(br_sub, "mult", cmd_branch_mult, "multiplicity of one subgroup representation")
    pq(sp)
    sp.add_argument("--big-sign", choices=SIGNS, required=True)
    sp.add_argument("--lambda", dest="lam", type=_halfint, required=True)
    sp.add_argument("--small-sign", choices=SIGNS, required=True)
    sp.add_argument("--mu", type=_halfint, required=True)
    sp.add_argument("--ochar", choices=[c.value for c in branching.OneChar])
    sp = leaf(br_sub, "spectrum", cmd_branch_spectrum, "discrete spectrum of the restriction")
    pq(sp)
    sp.add_argument("--sign", choices=SIGNS, required=True)
    sp.add_argument("--lambda", dest="lam", type=_halfint, required=True)
    sp.add_argument("--max-entries", type=_natural, default=branching.DEFAULT_MAX_ENTRIES)

    pk = top.add_parser("packet", help="packet-level multiplicities")
    pk_sub = pk.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(pk_sub, "verify", cmd_packet_verify, "multiplicity of U(lambda) against V(mu)")
    pq(sp)
    sp.add_argument("--lambda", dest="lam", type=_halfint, required=True)
    sp.add_argument("--mu", type=_halfint, required=True)

    sw = top.add_parser("sweep", help="verification sweeps")
    sw_sub = sw.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(sw_sub, "versions", cmd_sweep_versions, "multiplicity vs interlacing over a grid")
    sp.add_argument("--p-range", type=_range, required=True)
    sp.add_argument("--q-range", type=_range, required=True)
    sp.add_argument("--lambda-max", type=_halfint, required=True)

    orc = top.add_parser("oracle", help="compact-case oracle")
    orc_sub = orc.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    sp = leaf(orc_sub, "compact", cmd_oracle_compact, "classical SO(p) -> SO(p-1) comparison")
    sp.add_argument("--p-max", type=_natural, required=True)
    sp.add_argument("--ell-max", type=_natural, required=True)
    sp = leaf(orc_sub, "harmonic", cmd_oracle_harmonic, "closed-form vs brute-force harmonic dimension")
    sp.add_argument("--n", type=_natural, required=True)
    sp.add_argument("--b", type=_natural, required=True)
    return parser


def run(argv, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = args.func(args)
    except FlagError as exc:
        print(f"{PROG}: error: {exc}", file=stderr)
        return 2
    if text:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

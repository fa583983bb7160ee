"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, ctd as ctd_mod, diagrams, oracle, render, tails
from ._errors import SuperweightsError
from .core import BaseWord, ShiftedWeight

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _weight(args) -> ShiftedWeight:
    return ShiftedWeight.parse(args.weight)


def _base(args, lam: ShiftedWeight) -> BaseWord | None:
    if args.base and args.set:
        raise UsageError("give only one of --base and --set")
    if args.base:
        w = BaseWord(args.base.replace(" ", ""))
    elif args.set:
        w = core.base_from_incomparable_set(core.parse_root_set(args.set), lam.m, lam.n)
    else:
        return None
    if (w.m, w.n) != (lam.m, lam.n):
        raise SuperweightsError(
            f"base {w} has {w.m} e's and {w.n} d's but the weight is gl({lam.m}|{lam.n})"
        )
    return w


def _emit_diagram(D, args, arrows=(), caps=(), extra=None) -> str:
    if args.format == "json":
        if extra is None:
            return render.diagram_to_json(D) + "\n"
        data = json.loads(render.diagram_to_json(D))
        data.update(extra)
        return json.dumps(data) + "\n"
    if args.format == "svg":
        return render.render_svg(D, arrows, caps, args.lo, args.hi)
    return render.render_ascii(D, arrows, caps, args.lo, args.hi)


def cmd_diagram(args) -> str:
    lam = _weight(args)
    w = _base(args, lam)
    nu = ctd_mod.shifted_weight_for_base(lam, w) if w is not None else lam
    return _emit_diagram(diagrams.weight_diagram(nu), args)


def cmd_arrows(args) -> str:
    lam = _weight(args)
    A = diagrams.arrow_diagram(lam)
    if args.format == "json":
        return json.dumps({"k": list(A.k), "M": list(A.M)}) + "\n"
    text = _emit_diagram(diagrams.weight_diagram(lam), args, arrows=A.arrows())
    if args.format == "ascii":
        text += "k = " + " ".join(map(str, A.k)) + "\nM = " + " ".join(map(str, A.M)) + "\n"
    return text


def cmd_caps(args) -> str:
    lam = _weight(args)
    C = diagrams.cap_diagram(lam)
    if args.format == "json":
        return json.dumps({"caps": [list(c) for c in C.caps]}) + "\n"
    return _emit_diagram(diagrams.weight_diagram(lam), args, caps=C.caps)


def cmd_ctd(args) -> str:
    C = ctd_mod.ctd(_weight(args))
    if args.format == "json":
        return json.dumps(C.to_json()) + "\n"
    if args.format == "svg":
        return render.render_ctd_svg(C)
    return render.render_ctd_ascii(C)


def cmd_transport(args) -> str:
    lam = _weight(args)
    w = _base(args, lam)
    if w is None:
        raise UsageError("transport requires --base or --set")
    nu = ctd_mod.shifted_weight_for_base(lam, w)
    if args.format == "json":
        return json.dumps({"base": str(w), "weight": str(nu)}) + "\n"
    if args.format == "svg":
        return render.render_svg(diagrams.weight_diagram(nu), lo=args.lo, hi=args.hi)
    return f"{nu}\n"


def cmd_anti(args) -> str:
    return _emit_diagram(ctd_mod.anti_distinguished_diagram(_weight(args)), args)


def cmd_walk(args) -> str:
    lam = _weight(args)
    walk = ctd_mod.distinguished_to_anti_walk(lam)
    steps = [(BaseWord.sigma_i(lam.m - t, lam.m, lam.n), nu) for t, nu in enumerate(walk)]
    if args.format == "json":
        return json.dumps([{"base": str(w), "weight": str(nu)} for w, nu in steps]) + "\n"
    all_d = [diagrams.weight_diagram(nu) for _, nu in steps]
    lo = args.lo if args.lo is not None else min(
        render.display_range(D)[0] for D in all_d
    )
    hi = args.hi if args.hi is not None else max(
        render.display_range(D)[1] for D in all_d
    )
    if args.format == "svg":
        return "".join(render.render_svg(D, lo=lo, hi=hi) for D in all_d)
    out = []
    for (w, nu), D in zip(steps, all_d):
        out.append(f"{w}  {nu}\n" + render.render_ascii(D, lo=lo, hi=hi))
    return "\n".join(out)


def cmd_atoms(args) -> str:
    lam = _weight(args)
    atoms = ctd_mod.atom_index_sets(lam, include_trivial=args.trivial)
    recs = [
        {
            "index_set": sorted(A.index_set, key=lambda x: (x < 0, abs(x))),
            "segment": list(A.segment),
            "weight": str(ctd_mod.atom_weight(lam, A)),
        }
        for A in atoms
    ]
    if args.format == "json":
        return json.dumps(recs) + "\n"
    return "".join(
        f"{A}  [{A.segment[0]},{A.segment[1]}]  {r['weight']}\n" for A, r in zip(atoms, recs)
    )


def _scalar(name, value, args) -> str:
    if args.format == "json":
        return json.dumps({name: value}) + "\n"
    return f"{value}\n"


def cmd_tail(args) -> str:
    return _scalar("tail", tails.tail(_weight(args)), args)


def cmd_longtail(args) -> str:
    return _scalar("longtail", tails.longtail(_weight(args)), args)


def cmd_hwt(args) -> str:
    ws = tails.hwt(_weight(args))
    if args.format == "json":
        return json.dumps([str(w) for w in ws]) + "\n"
    return "".join(f"{w}\n" for w in ws)


def cmd_phi(args) -> str:
    dag = tails.phi(_weight(args))
    extra = {"stacked": dag.stacked, "multiplicity": dag.multiplicity}
    return _emit_diagram(dag.diagram, args, extra=extra)


def cmd_psi(args) -> str:
    lam = tails.psi(render.parse_diagram(args.diagram))
    if args.format == "json":
        return json.dumps({"weight": str(lam)}) + "\n"
    return f"{lam}\n"


def cmd_verify(args) -> tuple[str, int]:
    report = oracle.run_verification_suite(args.m, args.n, args.bound, seed=args.seed)
    code = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return report.to_json() + "\n", code
    lines = [f"checked {report.checked}", f"mismatches {len(report.mismatches)}"]
    lines += ["  " + " | ".join(x) for x in report.mismatches[:50]]
    return "\n".join(lines) + "\n", code


def cmd_search(args) -> str:
    found = tails.search_tail_gap(args.m, args.n, args.bound, jobs=args.jobs)
    return "".join(rec.to_json() + "\n" for rec in found)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superweights", description="Weight diagrams for gl(m|n).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weight=True):
        if weight:
            sp.add_argument("weight", help='shifted weight, e.g. "4 3 0 | 0 -1 -3"')
        sp.add_argument("--format", choices=("ascii", "json", "svg"), default="ascii")
        sp.add_argument("--from", dest="lo", type=int, default=None)
        sp.add_argument("--to", dest="hi", type=int, default=None)
        return sp

    def with_base(sp):
        sp.add_argument("--base", help="base word over e/d")
        sp.add_argument("--set", help='incomparable set "i:j,i:j"')
        return sp

    handlers = {
        "diagram": (cmd_diagram, True),
        "arrows": (cmd_arrows, False),
        "caps": (cmd_caps, False),
        "ctd": (cmd_ctd, False),
        "transport": (cmd_transport, True),
        "anti": (cmd_anti, False),
        "walk": (cmd_walk, False),
        "atoms": (cmd_atoms, False),
        "tail": (cmd_tail, False),
        "longtail": (cmd_longtail, False),
        "hwt": (cmd_hwt, False),
        "phi": (cmd_phi, False),
    }
    for name, (fn, needs_base) in handlers.items():
        sp = common(sub.add_parser(name))
        if needs_base:
            with_base(sp)
        else:
            sp.set_defaults(base=None, set=None)
        if name == "atoms":
            sp.add_argument("--trivial", action="store_true", help="add singleton atoms")
        sp.set_defaults(func=fn)

    sp = common(sub.add_parser("psi"), weight=False)
    sp.add_argument("diagram", help='dagger diagram, e.g. "0:X2,3:X,4:X,5:X"')
    sp.set_defaults(func=cmd_psi)

    for name, fn in (("verify", cmd_verify), ("search", cmd_search)):
        sp = common(sub.add_parser(name), weight=False)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--bound", type=int, required=True)
        if name == "search":
            sp.add_argument("--jobs", type=int, default=1)
        else:
            sp.add_argument("--seed", type=int, default=0)
        sp.set_defaults(func=fn)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SuperweightsError as exc:
        print(f"invalid input: {exc}", file=stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    stdout.write(result)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command line interface: ``astopo <command> [options]``.

Exit status: 0 success, 1 a checked property failed (a witness is printed),
2 malformed input.  ``--json`` prints one JSON object per invocation with
the keys ``command``, ``ok``, ``result``, ``witness`` and ``exit``.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import connectivity as cn
from . import core, figures as fg, metric as mt, morphism as mo, real as rl
from . import spec_io, suite

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED = 0, 1, 2


@dataclass
class Report:
    command: str
    ok: bool
    result: object = None
    witness: object = None
    exit: int = EXIT_OK

    def as_dict(self) -> dict:
        return {"command": self.command, "ok": self.ok, "result": _plain(self.result),
                "witness": _plain(self.witness), "exit": self.exit}

    def render(self) -> str:
        lines = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        if self.result is not None:
            lines.append(f"result: {_text(self.result)}")
        if self.witness is not None:
            lines.append(f"witness: {_text(self.witness)}")
        return "\n".join(lines)


def _key(x):
    return (0, x, "") if isinstance(x, (int, Fraction)) else (1, 0, str(x))


def _plain(v):
    """JSON-ready form: sets sorted, rationals as "p/q" strings."""
    if isinstance(v, Fraction):
        return spec_io.format_id(v)
    if isinstance(v, (frozenset, set)):
        return [_plain(x) for x in sorted(v, key=_key)]
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {str(_plain(k)): _plain(x) for k, x in v.items()}
    if isinstance(v, core.Violation):
        return {"condition": v.condition, "level": v.level, "witness": _plain(v.witness)}
    return v


def _text(v) -> str:
    p = _plain(v)
    if isinstance(p, list) and all(not isinstance(x, (list, dict)) for x in p):
        return "{" + ", ".join(str(x) for x in p) + "}" if isinstance(v, (set, frozenset)) \
            else "(" + ", ".join(str(x) for x in p) + ")"
    return json.dumps(p) if isinstance(p, (list, dict)) else str(p)


class Failed(Exception):
    """Raised by handlers to report a failed check."""

    def __init__(self, result=None, witness=None):
        super().__init__()
        self.result, self.witness = result, witness


# -- helpers --------------------------------------------------------------

def _space(args) -> spec_io.Space:
    return spec_io.load(args.spec)


def _valid_space(args) -> spec_io.Space:
    sp = _space(args)
    if not sp.report.ok:
        raise Failed("space does not satisfy the generating-sequence laws",
                     list(sp.report.violations))
    return sp


def _class(sp, args, attr="cls", members_attr="members"):
    return sp.resolve_class(getattr(args, attr, None), getattr(args, members_attr, None))


def _ids(sp, text):
    xs = [spec_io.parse_id(t.strip(), "sequence") for t in text.split(",") if t.strip()]
    for x in xs:
        sp.continuum.idx(x)
    return xs


def _q(text, where):
    try:
        return rl.parse_rational(text)
    except core.InputError:
        raise spec_io.SpecError(where, f"not an exact rational: {text!r}") from None


# -- handlers (return result, or raise Failed) ------------------------------

def cmd_validate(args):
    sp = _space(args)
    if not sp.report.ok:
        raise Failed("invalid", list(sp.report.violations))
    ok, pair = fg.monads_discernible(sp.continuum)
    return {"carrier": len(sp.continuum), "depth": sp.continuum.depth,
            "monad side condition": ok, "undiscernible monads": pair}


def cmd_closure(args):
    sp = _valid_space(args)
    return fg.closure(sp.continuum, _class(sp, args), args.level)


def cmd_interior(args):
    sp = _valid_space(args)
    return fg.interior(sp.continuum, _class(sp, args), args.level)


def cmd_figure(args):
    sp = _valid_space(args)
    return fg.figure_of(sp.continuum, _class(sp, args))


def cmd_monad(args):
    sp = _valid_space(args)
    return core.monad(sp.continuum, _ids(sp, args.point)[0])


def cmd_sep(args):
    sp = _valid_space(args)
    ans = fg.separable(sp.continuum, _class(sp, args), _class(sp, args, "other", "other_members"))
    if not ans:
        raise Failed({"separable": False})
    return {"separable": True, "level": ans.level}


def _predicate(test, args):
    sp = _valid_space(args)
    X = _class(sp, args)
    c = sp.continuum
    if not test(c, X, args.level):
        full = frozenset(c.carrier)
        witness = {"closure adds": fg.closure(c, X, args.level) - X,
                   "complement closure adds": fg.closure(c, full - X, args.level) - (full - X)}
        raise Failed(False, witness)
    return True


def cmd_open(args):
    return _predicate(fg.is_open, args)


def cmd_closed(args):
    return _predicate(fg.is_closed, args)


def cmd_clopen(args):
    return _predicate(fg.is_clopen, args)


def cmd_components(args):
    sp = _valid_space(args)
    return cn.components(sp.continuum, _class(sp, args), args.level)


def cmd_connected(args):
    sp = _valid_space(args)
    X = _class(sp, args)
    if not cn.is_connected_set(sp.continuum, X, args.level):
        raise Failed(False, cn.components(sp.continuum, X, args.level))
    return True


def cmd_motion(args):
    sp = _valid_space(args)
    c = sp.continuum
    try:
        if args.start is not None or args.end is not None:
            if args.start is None or args.end is None:
                raise spec_io.SpecError("motion", "--from and --to go together")
            m = cn.motion_between(c, _ids(sp, args.start)[0], _ids(sp, args.end)[0], args.level)
        else:
            m = cn.motion_through(c, _class(sp, args), args.level)
    except core.PreconditionError as exc:
        raise Failed(str(exc), exc.witness) from None
    return list(m.steps)


def cmd_net(args):
    sp = _valid_space(args)
    net = cn.maximal_net(sp.continuum, _class(sp, args), args.level)
    if not net.maximal:
        raise Failed(net.members, "greedy net is not maximal")
    return net.members


def cmd_cluster(args):
    sp = _valid_space(args)
    pos, count = cn.cluster_position(sp.continuum, _ids(sp, args.seq), args.level)
    return {"position": pos, "count": count}


def cmd_converge(args):
    sp = _valid_space(args)
    return {"depth": cn.converges_to(sp.continuum, _ids(sp, args.seq), _ids(sp, args.point)[0])}


def cmd_accpoints(args):
    sp = _valid_space(args)
    A = _class(sp, args)
    return {"accumulation": cn.accumulation_points(sp.continuum, A, args.budget),
            "isolation": cn.isolation_points(sp.continuum, A, args.budget)}


def cmd_topology(args):
    sp = _valid_space(args)
    fam = fg.open_family(sp.continuum, args.level)
    C = frozenset(sp.continuum.carrier)
    bad = [(U, V) for U in fam for V in fam if U & V not in fam or U | V not in fam]
    if frozenset() not in fam or C not in fam or bad:
        raise Failed(sorted(fam, key=len), bad[:1])
    return sorted(fam, key=lambda s: (len(s), sorted(s, key=_key)))


def cmd_real_lub(args):
    members = [_q(t, "--members") for t in args.members.split(",") if t.strip()]
    try:
        c = rl.lub(members, _q(args.a, "--a"), _q(args.b, "--b"), args.iters)
    except rl.LubError as exc:
        raise spec_io.SpecError("real-lub", str(exc), exc.witness) from None
    return {"lub": c, "gap": c - max(members)}


def _grid(text):
    try:
        G, M, L = (int(t) for t in text.split(","))
    except ValueError:
        raise spec_io.SpecError("--grid", "expected G,M,L") from None
    return rl.RealGrid(G, M, L)


def cmd_real_interval(args):
    grid = _grid(args.grid)
    out = {"interval": rl.interval(grid, _q(args.a, "--a"), _q(args.b, "--b"),
                                   args.kind, args.level)}
    if args.kind.startswith("half-open"):
        x, y = rl.half_open_forms(grid, args.a, args.b, args.kind, args.level)
        out["forms agree"] = x == y
        out["endpoints separated"] = rl.endpoints_separated(grid, args.a, args.b, args.level)
    return out


def cmd_real_arith(args):
    p = rl.mon(_q(args.p, "--p"))
    if args.op == "neg":
        return str(rl.neg(p))
    if args.op == "inv":
        return str(rl.inv(p))
    if args.op == "archimedes":
        return rl.archimedean_witness(p.value)
    if args.q is None:
        raise spec_io.SpecError("--q", f"{args.op} needs a second operand")
    q = rl.mon(_q(args.q, "--q"))
    if args.op == "add":
        return str(rl.add(p, q))
    if args.op == "mul":
        return str(rl.mul(p, q))
    if args.op == "le":
        return rl.le(p, q)
    return rl.real_eq(p, q, args.level)


def cmd_morphism_modulus(args):
    F = _valid_space(args).function(args.function)
    mod = mo.modulus(F)
    if not mod.complete:
        raise Failed(mod.as_dict(), {"levels without modulus":
                                     [k for k, j in enumerate(mod.levels) if j is None]})
    return mod.as_dict()


def cmd_morphism_check(args):
    F = _valid_space(args).function(args.function)
    checks = {"preserves connected": mo.preserves_connected(F, args.n1, args.n2)}
    skipped = []
    if max(len(F.source), len(F.target)) <= fg.MAX_ENUMERATION:
        checks["preimage open"] = mo.preimage_open_check(F, args.n1, args.n2)
        checks["preimage closed"] = mo.preimage_closed_check(F, args.n1, args.n2)
    else:
        skipped = ["preimage open", "preimage closed"]
    if args.epsilon:
        checks["epsilon-delta"] = mo.epsilon_delta_check(
            F, [_q(t, "--epsilon") for t in args.epsilon.split(",")])
    result = {k: bool(v) for k, v in checks.items()}
    if skipped:
        result["skipped (carrier above enumeration limit)"] = skipped
    if not all(v for k, v in result.items() if k in checks):
        raise Failed(result, {k: v.witness for k, v in checks.items() if not v})
    return result


def cmd_morphism_push(args):
    sp = _valid_space(args)
    F = sp.function(args.function)
    steps = _ids(sp, args.seq)
    if not cn.is_motion(F.source, steps, args.n1):
        raise spec_io.SpecError("--seq", f"not a level-{args.n1} motion of the source")
    out = mo.push_motion(F, cn.Motion(tuple(steps), args.n1), args.n2)
    if not out:
        raise Failed(None, {"step": out.step, "pair": out.pair})
    return list(out.steps)


def cmd_ball(args):
    sp = _valid_space(args)
    if sp.metric is None and sp.continuum.metric is None:
        raise spec_io.SpecError("metric", "the space has no metric")
    m = sp.metric or sp.continuum.metric
    a = _ids(sp, args.center)[0]
    e = _q(args.radius, "--radius")
    depth = args.depth if args.depth is not None else mt.sufficient_depth(m, a, e)
    B = mt.ball(m, a, e, depth)
    out = {"ball": B, "depth": depth}
    if args.level is not None:
        out["open"] = fg.is_open(sp.continuum, B, args.level)
        if not out["open"]:
            raise Failed(out, fg.closure(sp.continuum, frozenset(sp.continuum.carrier) - B,
                                         args.level) & B)
    return out


def cmd_export_dot(args):
    sp = _space(args)
    return spec_io.export_dot(sp.continuum, args.level)


def cmd_suite(args):
    results = suite.run(args.names or ["all"], seed=args.seed)
    lines = {f"criterion {r.criterion}": ("PASS" if r.ok else "FAIL") for r in results}
    if not all(r.ok for r in results):
        raise Failed(lines, {f"criterion {r.criterion}": r.failures
                             for r in results if not r.ok})
    return lines


# -- parser ---------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="astopo", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="print a JSON report")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, spec=True, cls=False, level=False, help=""):
        s = sub.add_parser(name, help=help)
        s.set_defaults(fn=fn)
        s.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        if spec:
            s.add_argument("--spec", required=True, help="path to a .space file")
        if cls:
            s.add_argument("--class", dest="cls", help="name of a class in the spec")
            s.add_argument("--members", help="comma-separated ids (instead of --class)")
        if level:
            s.add_argument("--level", type=int, required=True)
        return s

    cmd("validate", cmd_validate, help="check the generating-sequence laws")
    for name, fn in (("closure", cmd_closure), ("interior", cmd_interior),
                     ("open", cmd_open), ("closed", cmd_closed), ("clopen", cmd_clopen),
                     ("components", cmd_components), ("connected", cmd_connected),
                     ("net", cmd_net), ("topology", None)):
        if fn is not None:
            cmd(name, fn, cls=True, level=True)
    cmd("topology", cmd_topology, level=True)
    cmd("figure", cmd_figure, cls=True)
    s = cmd("monad", cmd_monad)
    s.add_argument("--point", required=True)
    s = cmd("sep", cmd_sep, cls=True)
    s.add_argument("--other", help="second class name")
    s.add_argument("--other-members", dest="other_members")
    s = cmd("motion", cmd_motion, cls=True, level=True)
    s.add_argument("--from", dest="start")
    s.add_argument("--to", dest="end")
    s = cmd("cluster", cmd_cluster, level=True)
    s.add_argument("--seq", required=True, help="comma-separated prefix")
    s = cmd("converge", cmd_converge)
    s.add_argument("--seq", required=True)
    s.add_argument("--point", required=True)
    s = cmd("accpoints", cmd_accpoints, cls=True)
    s.add_argument("--budget", type=int, required=True)
    s = cmd("real-lub", cmd_real_lub, spec=False)
    s.add_argument("--members", required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--iters", type=int, required=True)
    s = cmd("real-interval", cmd_real_interval, spec=False, level=True)
    s.add_argument("--grid", required=True, help="G,M,L")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--kind", choices=rl.INTERVAL_KINDS, required=True)
    s = cmd("real-arith", cmd_real_arith, spec=False)
    s.add_argument("--op", choices=("add", "mul", "neg", "inv", "le", "eq", "archimedes"),
                   required=True)
    s.add_argument("--p", required=True)
    s.add_argument("--q")
    s.add_argument("--level", type=int, default=0)
    s = cmd("morphism-modulus", cmd_morphism_modulus)
    s.add_argument("--function", required=True)
    s = cmd("morphism-check", cmd_morphism_check)
    s.add_argument("--function", required=True)
    s.add_argument("--n1", type=int, required=True)
    s.add_argument("--n2", type=int, required=True)
    s.add_argument("--epsilon", help="comma-separated positive rationals")
    s = cmd("morphism-push", cmd_morphism_push)
    s.add_argument("--function", required=True)
    s.add_argument("--seq", required=True)
    s.add_argument("--n1", type=int, required=True)
    s.add_argument("--n2", type=int, required=True)
    s = cmd("ball", cmd_ball)
    s.add_argument("--center", required=True)
    s.add_argument("--radius", required=True)
    s.add_argument("--depth", type=int)
    s.add_argument("--level", type=int, help="also check openness at this level")
    s = cmd("export-dot", cmd_export_dot)
    s.add_argument("--level", type=int)
    s = cmd("suite", cmd_suite, spec=False)
    s.add_argument("names", nargs="*", help="all, 1-9, or a module name")
    s.add_argument("--seed", type=int, default=suite.DEFAULT_SEED)
    return p


def run(argv) -> Report:
    """Parse and execute one command; never raises for bad input."""
    parser = _parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        text = err.getvalue().strip()
        if not exc.code:
            return Report("help", True, text)
        name = next((a for a in argv if not a.startswith("-")), "astopo")
        return Report(name, False, text.splitlines()[-1] if text else "usage error", "usage error",
                      EXIT_MALFORMED)
    try:
        result = args.fn(args)
        return Report(args.command, True, result)
    except Failed as f:
        return Report(args.command, False, f.result, f.witness, EXIT_FAILED)
    except core.InputError as exc:
        return Report(args.command, False, str(exc), getattr(exc, "witness", None),
                      EXIT_MALFORMED)
    except core.PreconditionError as exc:
        return Report(args.command, False, str(exc), exc.witness, EXIT_MALFORMED)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    rep = run(argv)
    as_json = "--json" in argv
    if rep.command in ("export-dot", "help") and rep.ok and not as_json:
        sys.stdout.write(rep.result.rstrip("\n") + "\n")
    elif as_json:
        print(json.dumps(rep.as_dict(), sort_keys=True))
    else:
        print(rep.render(), file=sys.stdout if rep.exit != EXIT_MALFORMED else sys.stderr)
    return rep.exit


if __name__ == "__main__":
    sys.exit(main())

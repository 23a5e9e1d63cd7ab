"""Reading and writing ``.space`` files (JSON) and DOT export.

Schema (all rationals are exact strings "p/q" or JSON integers; floats
are rejected)::

    {
      "name": "E1",
      "carrier": [0, 1, 2, 3, 4]            # ids: integers, rationals, or names
               | {"grid": {"G": 4, "M": 2}},  # {k / 2**G : |k| <= M * 2**G}
      "depth": 2,                             # L; required with a level selector
      "levels": ["full", "absdiff<=2", [[0, 1], [1, 0]]]
              | "real-continuum" | "paper-literal-real" | "metric",
      "partition": [[0, 1], [2], [3, 4]],     # optional monad blocks
      "classes": {"X0": [0]},                 # optional named classes
      "metric": "absdiff" | [[x, y, d], ...], # optional
      "functions": {"f": {"rule": "2*x", "target": "other.space"},
                    "g": {"table": [[x, y], ...]}}
    }

A level is "full", "absdiff<t", "absdiff<=t", or an explicit list of
ordered pairs whose diagonal is implicit; an asymmetric list is rejected.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import core, metric as mt, morphism as mo, real as rl

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
SELECTORS = ("real-continuum", "paper-literal-real", "metric")


class SpecError(core.InputError):
    """Malformed space file; the message starts with the offending location."""

    def __init__(self, where, message, witness=None):
        super().__init__(f"{where}: {message}")
        self.where = where
        self.witness = witness


def parse_id(raw, where="id"):
    if isinstance(raw, bool) or isinstance(raw, float):
        raise SpecError(where, f"ids must be integers, rational strings or names, got {raw!r}")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, str):
        if _RATIONAL.match(raw.strip()):
            q = Fraction(raw.strip())
            return q.numerator if q.denominator == 1 else q
        if any(ch in raw for ch in ".eE") and re.match(r"^[+-]?[\d.]+([eE][+-]?\d+)?$", raw):
            raise SpecError(where, f"inexact number {raw!r}; write it as p/q")
        return raw
    raise SpecError(where, f"unsupported id {raw!r}")


def format_id(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else rl.format_rational(x)
    return x


def _rational(raw, where):
    try:
        return rl.parse_rational(raw)
    except core.InputError:
        raise SpecError(where, f"not an exact rational: {raw!r}") from None


@dataclass
class SpaceSpec:
    """Normalized contents of a space file; equality is semantic."""

    name: str
    carrier: tuple
    grid: tuple | None = None          # (G, M) when the carrier is a grid
    depth: int | None = None
    levels: object = None              # selector string or tuple of level descriptors
    partition: tuple | None = None
    classes: dict = field(default_factory=dict)
    metric: object = None              # "absdiff" or tuple of (x, y, d)
    functions: dict = field(default_factory=dict)
    base: Path | None = field(default=None, compare=False)


@dataclass
class Space:
    spec: SpaceSpec
    continuum: core.Continuum
    report: core.ValidationReport
    classes: dict
    metric: object

    def function(self, name) -> mo.MorphismTable:
        fs = self.spec.functions
        if name not in fs:
            raise SpecError(f"functions.{name}", "no such function")
        entry = fs[name]
        target = self
        if entry.get("target"):
            path = Path(entry["target"])
            if not path.is_absolute() and self.spec.base is not None:
                path = self.spec.base / path
            target = load(path)
        if "rule" in entry:
            a, b = mo.parse_affine(entry["rule"])
            try:
                return mo.affine(self.continuum, target.continuum, a, b)
            except core.InputError as exc:
                raise SpecError(f"functions.{name}.rule", str(exc)) from None
        try:
            return mo.MorphismTable(self.continuum, target.continuum, dict(entry["table"]),
                                    label=name)
        except core.InputError as exc:
            raise SpecError(f"functions.{name}.table", str(exc)) from None

    def resolve_class(self, name=None, members=None) -> frozenset:
        if name is not None:
            if name not in self.classes:
                raise SpecError(f"classes.{name}", "no such class")
            return self.classes[name]
        if members is not None:
            xs = [parse_id(t.strip(), "members") for t in members.split(",") if t.strip()]
            for x in xs:
                self.continuum.idx(x)
            return frozenset(xs)
        return frozenset(self.continuum.carrier)


def _parse_level(raw, n, carrier, where):
    if isinstance(raw, str):
        s = raw.replace(" ", "")
        if s == "full":
            return ("full",)
        m = re.match(r"^absdiff(<=|<)(.+)$", s)
        if m:
            return ("absdiff", m.group(1), _rational(m.group(2), where))
        raise SpecError(where, f"unknown level rule {raw!r}")
    if isinstance(raw, list):
        pairs = set()
        ids = set(carrier)
        for k, p in enumerate(raw):
            if not (isinstance(p, list) and len(p) == 2):
                raise SpecError(f"{where}[{k}]", "an edge is a two-element list")
            x, y = (parse_id(v, f"{where}[{k}]") for v in p)
            for v in (x, y):
                if v not in ids:
                    raise SpecError(f"{where}[{k}]", f"unknown id {format_id(v)!r}")
            pairs.add((x, y))
        for x, y in sorted(pairs, key=lambda p: (carrier.index(p[0]), carrier.index(p[1]))):
            if x != y and (y, x) not in pairs:
                raise SpecError(where, f"asymmetric edge list: ({format_id(x)}, {format_id(y)}) "
                                       "has no reverse", (x, y))
        return ("edges", frozenset(pairs))
    raise SpecError(where, f"a level is a rule string or an edge list, got {raw!r}")


def parse(data: dict, base=None) -> SpaceSpec:
    if not isinstance(data, dict):
        raise SpecError("<root>", "a space file holds a JSON object")
    unknown = set(data) - {"name", "carrier", "depth", "levels", "partition", "classes",
                           "metric", "functions"}
    if unknown:
        raise SpecError("<root>", f"unknown keys {sorted(unknown)}")
    name = str(data.get("name", ""))
    raw_c = data.get("carrier")
    grid = None
    if isinstance(raw_c, dict):
        g = raw_c.get("grid")
        if not isinstance(g, dict) or set(g) != {"G", "M"}:
            raise SpecError("carrier.grid", "expected {\"G\": int, \"M\": int}")
        G, M = g["G"], g["M"]
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (G, M)) \
                or G < 0 or M < 1:
            raise SpecError("carrier.grid", "G >= 0 and M >= 1 must be integers")
        grid = (G, M)
        carrier = tuple(Fraction(k, 2 ** G) for k in range(-M * 2 ** G, M * 2 ** G + 1))
        carrier = tuple(q.numerator if q.denominator == 1 else q for q in carrier)
    elif isinstance(raw_c, list) and raw_c:
        carrier = tuple(parse_id(v, f"carrier[{i}]") for i, v in enumerate(raw_c))
        if len(set(carrier)) != len(carrier):
            raise SpecError("carrier", "duplicate ids")
    else:
        raise SpecError("carrier", "expected a nonempty id list or a grid descriptor")
    depth = data.get("depth")
    if depth is not None and (not isinstance(depth, int) or isinstance(depth, bool)
                              or depth < 1):
        raise SpecError("depth", "depth must be an integer >= 1")
    raw_l = data.get("levels")
    if isinstance(raw_l, str):
        if raw_l not in SELECTORS:
            raise SpecError("levels", f"unknown selector {raw_l!r}; expected one of {SELECTORS}")
        if depth is None:
            raise SpecError("depth", f"selector {raw_l!r} needs a depth")
        levels = raw_l
    elif isinstance(raw_l, list):
        if len(raw_l) < 2:
            raise SpecError("levels", "need levels 0..L with L >= 1")
        levels = tuple(_parse_level(v, n, carrier, f"levels[{n}]") for n, v in enumerate(raw_l))
        if depth is not None and depth != len(levels) - 1:
            raise SpecError("depth", f"depth {depth} but {len(levels)} levels given")
        depth = len(levels) - 1
    else:
        raise SpecError("levels", "expected a level list or a selector string")
    ids = set(carrier)

    def id_list(raw, where):
        if not isinstance(raw, list):
            raise SpecError(where, "expected a list of ids")
        out = []
        for i, v in enumerate(raw):
            x = parse_id(v, f"{where}[{i}]")
            if x not in ids:
                raise SpecError(f"{where}[{i}]", f"unknown id {format_id(x)!r}")
            out.append(x)
        return frozenset(out)

    partition = None
    if data.get("partition") is not None:
        raw_p = data["partition"]
        if not isinstance(raw_p, list):
            raise SpecError("partition", "expected a list of blocks")
        partition = tuple(id_list(b, f"partition[{i}]") for i, b in enumerate(raw_p))
    classes = {}
    raw_cls = data.get("classes", {})
    if not isinstance(raw_cls, dict):
        raise SpecError("classes", "expected an object of named id lists")
    for k, v in raw_cls.items():
        classes[str(k)] = id_list(v, f"classes.{k}")
    metric = None
    raw_m = data.get("metric")
    if raw_m == "absdiff":
        for x in carrier:
            if not isinstance(x, (int, Fraction)):
                raise SpecError("metric", "absdiff needs a numeric carrier")
        metric = "absdiff"
    elif isinstance(raw_m, list):
        rows = []
        for i, t in enumerate(raw_m):
            if not (isinstance(t, list) and len(t) == 3):
                raise SpecError(f"metric[{i}]", "a metric entry is [x, y, d]")
            x, y = (parse_id(v, f"metric[{i}]") for v in t[:2])
            if x not in ids or y not in ids:
                raise SpecError(f"metric[{i}]", "unknown id")
            rows.append((x, y, _rational(t[2], f"metric[{i}]")))
        metric = tuple(rows)
    elif raw_m is not None:
        raise SpecError("metric", "expected \"absdiff\" or a list of [x, y, d]")
    if levels == "metric" and metric is None:
        raise SpecError("levels", "selector \"metric\" needs a metric")
    if levels in ("real-continuum", "paper-literal-real"):
        for x in carrier:
            if not isinstance(x, (int, Fraction)):
                raise SpecError("levels", f"{levels} needs a numeric carrier")
    functions = {}
    raw_f = data.get("functions", {})
    if not isinstance(raw_f, dict):
        raise SpecError("functions", "expected an object of named functions")
    for k, v in raw_f.items():
        where = f"functions.{k}"
        if not isinstance(v, dict) or ("rule" in v) == ("table" in v):
            raise SpecError(where, "give exactly one of \"rule\" or \"table\"")
        entry = {}
        if v.get("target") is not None:
            entry["target"] = str(v["target"])
        if "rule" in v:
            try:
                mo.parse_affine(str(v["rule"]))
            except core.InputError as exc:
                raise SpecError(f"{where}.rule", str(exc)) from None
            entry["rule"] = str(v["rule"])
        else:
            table = []
            for i, p in enumerate(v["table"]):
                if not (isinstance(p, list) and len(p) == 2):
                    raise SpecError(f"{where}.table[{i}]", "an entry is [x, F(x)]")
                table.append((parse_id(p[0], f"{where}.table[{i}]"),
                              parse_id(p[1], f"{where}.table[{i}]")))
            entry["table"] = tuple(table)
        functions[str(k)] = entry
    return SpaceSpec(name, carrier, grid, depth, levels, partition, classes, metric,
                     functions, Path(base) if base is not None else None)


def _metric_table(spec):
    if spec.metric is None:
        return None
    if spec.metric == "absdiff":
        return mt.absdiff_metric(spec.carrier)
    table = {(x, y): d for x, y, d in spec.metric}
    try:
        return mt.MetricTable(spec.carrier, table, label="table")
    except core.InputError as exc:
        raise SpecError("metric", str(exc)) from None


def build(spec: SpaceSpec) -> Space:
    C, L = spec.carrier, spec.depth
    m = _metric_table(spec)
    try:
        if spec.levels == "real-continuum":
            if spec.grid is not None:
                c = rl.real_continuum(spec.grid[0], spec.grid[1], L)
            else:
                levels = [core.full_relation(C)] + [
                    core.relation_from_predicate(C, n, lambda a, b, n=n: rl.near(a, b, n))
                    for n in range(1, L + 1)]
                c = core.continuum(C, levels)
        elif spec.levels == "paper-literal-real":
            c = rl.paper_literal_family(C, L)
        elif spec.levels == "metric":
            c = mt.continuum_from_metric(m, L)
        else:
            rels = []
            for n, lv in enumerate(spec.levels):
                if lv[0] == "full":
                    rels.append(core.full_relation(C, n))
                elif lv[0] == "absdiff":
                    rels.append(core.absdiff_relation(C, n, lv[2], strict=lv[1] == "<"))
                else:
                    rels.append(core.Relation(n, lv[1] | {(x, x) for x in C}))
            c = core.continuum(C, rels)
        c = core.Continuum(c.gen, spec.partition, m if m is not None else c.metric,
                           spec.name or c.name)
    except core.InputError as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError("levels" if spec.partition is None else "partition", str(exc)) from None
    return Space(spec, c, core.validate(c.gen), dict(spec.classes), m)


def load(path) -> Space:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise SpecError(str(path), f"cannot read: {exc.strerror}") from None
    return loads(text, base=path.parent, where=str(path))


def loads(text: str, base=None, where="<string>") -> Space:
    return build(parse_text(text, base, where))


def parse_text(text: str, base=None, where="<string>") -> SpaceSpec:
    try:
        data = json.loads(text, parse_float=_no_float)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{where}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return parse(data, base)


def _no_float(text):
    raise SpecError("number", f"inexact number {text}; write it as \"p/q\"")


def _level_out(lv, carrier):
    if lv[0] == "full":
        return "full"
    if lv[0] == "absdiff":
        return f"absdiff{lv[1]}{rl.format_rational(lv[2])}"
    order = {x: i for i, x in enumerate(carrier)}
    return [[format_id(x), format_id(y)]
            for x, y in sorted(lv[1], key=lambda p: (order[p[0]], order[p[1]])) if x != y]


def dump(spec: SpaceSpec) -> dict:
    """The JSON object that :func:`parse` maps back to ``spec``."""
    out = {"name": spec.name}
    if spec.grid is not None:
        out["carrier"] = {"grid": {"G": spec.grid[0], "M": spec.grid[1]}}
    else:
        out["carrier"] = [format_id(x) for x in spec.carrier]
    out["depth"] = spec.depth
    if isinstance(spec.levels, str):
        out["levels"] = spec.levels
    else:
        out["levels"] = [_level_out(lv, spec.carrier) for lv in spec.levels]
    order = {x: i for i, x in enumerate(spec.carrier)}

    def ids(xs):
        return [format_id(x) for x in sorted(xs, key=order.__getitem__)]

    if spec.partition is not None:
        out["partition"] = [ids(b) for b in spec.partition]
    if spec.classes:
        out["classes"] = {k: ids(v) for k, v in spec.classes.items()}
    if spec.metric == "absdiff":
        out["metric"] = "absdiff"
    elif spec.metric is not None:
        out["metric"] = [[format_id(x), format_id(y), rl.format_rational(d)]
                         for x, y, d in spec.metric]
    if spec.functions:
        fs = {}
        for k, v in spec.functions.items():
            e = {}
            if "target" in v:
                e["target"] = v["target"]
            if "rule" in v:
                e["rule"] = v["rule"]
            else:
                e["table"] = [[format_id(x), format_id(y)] for x, y in v["table"]]
            fs[k] = e
        out["functions"] = fs
    return out


def dumps(spec: SpaceSpec) -> str:
    return json.dumps(dump(spec), indent=1) + "\n"


def export_dot(c: core.Continuum, n: int | None = None) -> str:
    """Undirected DOT graphs of R_n without self-loops; every level when n is None."""
    levels = range(c.depth + 1) if n is None else [n]
    out = []
    for lv in levels:
        rows = c.nbr(lv)
        label = (c.name or "continuum").replace('"', "'")
        out.append(f'graph "{label} R_{lv}" {{')
        for x in c.carrier:
            out.append(f'  "{format_id(x)}";')
        for i, row in enumerate(rows):
            for j in core._bits(row >> (i + 1) << (i + 1)):
                out.append(f'  "{format_id(c.carrier[i])}" -- "{format_id(c.carrier[j])}";')
        out.append("}")
    return "\n".join(out) + "\n"


__all__ = [
    "SELECTORS", "Space", "SpaceSpec", "SpecError", "build", "dump", "dumps", "export_dot",
    "format_id", "load", "loads", "parse", "parse_id", "parse_text",
]

"""Functions between continua: level preservation, moduli, and continuity checks.

A morphism is a total table from the source carrier into the target
carrier.  Continuity is tested in four equivalent forms: edgewise
preservation (connected sets map to connected sets), pushing motions,
preimages of level neighbourhoods, and the closure form obtained from it by
complementation.

The level-n open classes of a finite continuum are unions of R_n
components, which is far coarser than the neighbourhood structure, so the
preimage checks quantify over interiors of arbitrary classes: every
F-preimage of a level-n2 neighbourhood of F(x) must be a level-n1
neighbourhood of x.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connectivity import Motion, is_motion
from .core import Continuum, InputError, PreconditionError, _bits, value_of
from .figures import MAX_ENUMERATION
from .real import RealGrid, grid_continuum, parse_rational


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True, eq=False)
class MorphismTable:
    source: Continuum
    target: Continuum
    mapping: dict
    label: str = "table"

    def __post_init__(self):
        mapping = dict(self.mapping)
        for x in self.source.carrier:
            if x not in mapping:
                raise InputError(f"function is undefined at {x!r}")
        extra = set(mapping) - set(self.source.carrier)
        if extra:
            raise InputError(f"function defined off the source carrier at {min(extra, key=repr)!r}")
        tgt = [self.target.idx(mapping[x]) for x in self.source.carrier]
        object.__setattr__(self, "mapping", mapping)
        object.__setattr__(self, "_f", tuple(tgt))
        pre = [0] * len(self.target)
        for i, t in enumerate(tgt):
            pre[t] |= 1 << i
        object.__setattr__(self, "_pre", tuple(pre))

    def __call__(self, x):
        return self.mapping[x]

    def image_mask(self, mask) -> int:
        out = 0
        for i in _bits(mask):
            out |= 1 << self._f[i]
        return out

    def preimage_mask(self, mask) -> int:
        out = 0
        for t in _bits(mask):
            out |= self._pre[t]
        return out


def from_rule(source: Continuum, target: Continuum, rule, label="rule") -> MorphismTable:
    """Materialize ``rule`` over the source carrier."""
    return MorphismTable(source, target, {x: rule(x) for x in source.carrier}, label)


def parse_affine(text: str):
    """"a*x+b" (also "a*x", "x+b", "x", "b") with exact rational coefficients."""
    s = text.replace(" ", "")
    if "x" not in s:
        return Fraction(0), parse_rational(s)
    head, _, tail = s.partition("x")
    if head in ("", "+"):
        a = Fraction(1)
    elif head == "-":
        a = Fraction(-1)
    elif head.endswith("*"):
        a = parse_rational(head[:-1])
    else:
        raise InputError(f"cannot read affine rule {text!r}")
    b = parse_rational(tail) if tail else Fraction(0)
    if tail and tail[0] not in "+-":
        raise InputError(f"cannot read affine rule {text!r}")
    return a, b


def affine(source: Continuum, target: Continuum, a, b=0) -> MorphismTable:
    a, b = Fraction(a), Fraction(b)
    return from_rule(source, target, lambda x: a * value_of(x) + b,
                     label=f"{a}*x+{b}")


def identity(c: Continuum) -> MorphismTable:
    return MorphismTable(c, c, {x: x for x in c.carrier}, "id")


def constant(source: Continuum, target: Continuum, y) -> MorphismTable:
    return MorphismTable(source, target, {x: y for x in source.carrier}, f"const {y!r}")


def step_morphism(grid: RealGrid) -> MorphismTable:
    """1 on the block |x| < 2**-L around 0, else 0, on the grid continuum."""
    c = grid_continuum(grid)
    cut = Fraction(1, 2 ** grid.L)
    return MorphismTable(c, c, {x: Fraction(1 if abs(x) < cut else 0) for x in c.carrier},
                         "step")


def _first_break(F: MorphismTable, j: int, k: int):
    src, tgt = F.source.nbr(j), F.target.nbr(k)
    for i, row in enumerate(src):
        bad = row & ~F.preimage_mask(tgt[F._f[i]])
        if bad:
            return i, (bad & -bad).bit_length() - 1
    return None


def preserves_at(F: MorphismTable, j: int, k: int) -> bool:
    """Every R_{1,j} pair maps into R_{2,k}."""
    return _first_break(F, j, k) is None


def _break_witness(F, j, k):
    hit = _first_break(F, j, k)
    if hit is None:
        return None
    x, y = (F.source.carrier[i] for i in hit)
    return x, y, F(x), F(y)


@dataclass(frozen=True)
class ModulusTable:
    """Least source level per target level k, or None when no level suffices."""

    levels: tuple

    def __getitem__(self, k):
        return self.levels[k]

    def __len__(self):
        return len(self.levels)

    def as_dict(self) -> dict:
        return dict(enumerate(self.levels))

    @property
    def complete(self) -> bool:
        return all(j is not None for j in self.levels)

    def monotone(self) -> bool:
        seen = [j for j in self.levels if j is not None]
        return seen == sorted(seen) and (
            None not in self.levels
            or all(j is None for j in self.levels[self.levels.index(None):]))


def modulus(F: MorphismTable) -> ModulusTable:
    out = []
    for k in range(F.target.depth + 1):
        out.append(next((j for j in range(F.source.depth + 1) if preserves_at(F, j, k)), None))
    return ModulusTable(tuple(out))


def is_uniformly_continuous(F: MorphismTable) -> bool:
    return modulus(F).complete


def pointwise_modulus(F: MorphismTable, x, k: int):
    """Least j with Z_j(x) inside the preimage of Z_k(F(x)), or None."""
    i = F.source.idx(x)
    allowed = F.preimage_mask(F.target.nbr(k)[F._f[i]])
    for j in range(F.source.depth + 1):
        if not F.source.nbr(j)[i] & ~allowed:
            return j
    return None


def uniform_from_pointwise(F: MorphismTable) -> ModulusTable:
    """Maximum of the pointwise moduli per level; None if some point has none."""
    out = []
    for k in range(F.target.depth + 1):
        js = [pointwise_modulus(F, x, k) for x in F.source.carrier]
        out.append(None if None in js else max(js))
    return ModulusTable(tuple(out))


def preserves_connected(F: MorphismTable, n1: int, n2: int) -> Verdict:
    """Connected level-n1 classes map to connected level-n2 classes.

    Checked edgewise: a connected class is spanned by walks along R_{1,n1}
    edges, and such a walk maps to a walk exactly when every edge maps to an
    equal or R_{2,n2}-related pair.  The witness is (x, y, F(x), F(y)).
    """
    w = _break_witness(F, n1, n2)
    return Verdict(w is None, w)


@dataclass(frozen=True)
class PushFailure:
    step: int
    pair: tuple

    def __bool__(self):
        return False


def push_motion(F: MorphismTable, m: Motion, n2: int):
    """The image of ``m`` as a level-n2 motion, or the first step that breaks."""
    if not is_motion(F.source, m.steps, m.level):
        raise PreconditionError(f"not a level-{m.level} motion of the source", m.steps)
    F.target.check_level(n2)
    image = tuple(F(x) for x in m.steps)
    for s, (u, v) in enumerate(zip(image, image[1:])):
        if not F.target.related(u, v, n2):
            return PushFailure(s, (u, v))
    return Motion(image, n2)


def _subset_tables(seeds):
    # figure of every subset, built from the subset minus its lowest bit
    size = 1 << len(seeds)
    out = [0] * size
    for s in range(1, size):
        low = s & -s
        out[s] = out[s ^ low] | seeds[low.bit_length() - 1]
    return out


def _preimage_tables(F, n2):
    m = len(F.target)
    if m > MAX_ENUMERATION:
        raise InputError(
            f"exhaustive preimage check needs |target| <= {MAX_ENUMERATION}, got {m}")
    if len(F.source) > MAX_ENUMERATION:
        raise InputError(
            f"exhaustive preimage check needs |source| <= {MAX_ENUMERATION}, got {len(F.source)}")
    cl = _subset_tables(F.target.nbr(n2))
    pre = _subset_tables(F._pre)
    return cl, pre


def preimage_open_check(F: MorphismTable, n1: int, n2: int) -> Verdict:
    """For every X in the target: F^-1(int_n2 X) is inside int_n1 F^-1(X).

    Equivalently the preimage of every level-n2 neighbourhood is a level-n1
    neighbourhood.  The witness is the first failing X.
    """
    F.source.check_level(n1)
    cl, pre = _preimage_tables(F, n2)
    full2, full1 = F.target.full_mask, F.source.full_mask
    for X in range(len(cl)):
        inner = full2 & ~cl[full2 & ~X]
        back = pre[X]
        int_back = full1 & ~F.source.figure_mask(full1 & ~back, n1)
        if pre[inner] & ~int_back:
            return Verdict(False, F.target.members(X))
    return Verdict(True)


def preimage_closed_check(F: MorphismTable, n1: int, n2: int) -> Verdict:
    """For every X in the target: cl_n1 F^-1(X) is inside F^-1(cl_n2 X).

    The complement of the open form, via F^-1(C2 - X) = C1 - F^-1(X).
    """
    F.source.check_level(n1)
    cl, pre = _preimage_tables(F, n2)
    for X in range(len(cl)):
        if F.source.figure_mask(pre[X], n1) & ~pre[cl[X]]:
            return Verdict(False, F.target.members(X))
    return Verdict(True)


def _numeric(F):
    try:
        return [value_of(F(x)) for x in F.source.carrier]
    except InputError:
        raise InputError("function comparison needs a numeric target") from None


def functions_equal_at(F: MorphismTable, G: MorphismTable, k: int) -> bool:
    """|F(x) - G(x)| <= 2**-k at every source position."""
    if F.source is not G.source and F.source.carrier != G.source.carrier:
        raise InputError("functions have different sources")
    cut = Fraction(1, 2 ** k)
    return all(abs(a - b) <= cut for a, b in zip(_numeric(F), _numeric(G)))


def delta_for(F: MorphismTable, e):
    """Largest d = 2**-j, j <= L_source, with d(x,a) < d => d(Fx,Fa) < e; else None."""
    if F.source.metric is None or F.target.metric is None:
        raise InputError("epsilon-delta check needs metric-derived continua")
    e = Fraction(e)
    if e <= 0:
        raise InputError(f"epsilon must be positive, got {e}")
    ds, dt = F.source.metric, F.target.metric
    C = F.source.carrier
    for j in range(F.source.depth + 1):
        d = Fraction(1, 2 ** j)
        if all(dt(F(x), F(a)) < e for x in C for a in C if ds(x, a) < d):
            return d
    return None


def epsilon_delta_check(F: MorphismTable, samples) -> Verdict:
    """Every sampled epsilon has a dyadic delta; the witness is the first that does not."""
    for e in samples:
        if delta_for(F, e) is None:
            return Verdict(False, Fraction(e))
    return Verdict(True)


__all__ = [
    "ModulusTable", "MorphismTable", "PushFailure", "Verdict", "affine", "constant",
    "delta_for", "epsilon_delta_check", "from_rule", "functions_equal_at", "identity",
    "is_uniformly_continuous", "modulus", "parse_affine", "pointwise_modulus",
    "preimage_closed_check", "preimage_open_check", "preserves_at", "preserves_connected",
    "push_motion", "step_morphism", "uniform_from_pointwise",
]

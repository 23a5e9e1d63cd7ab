"""Motions, connected sets, components, R-nets, and finite sequence analogs.

An infinite sequence is represented by a finite prefix.  "Some tail lies
in Z_n(x)" is read literally over the prefix, so the certified convergence
depth is governed by where the prefix ends up.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Continuum, PreconditionError, _bits, _low
from .figures import hull_mask


@dataclass(frozen=True)
class Motion:
    steps: tuple
    level: int

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class Net:
    members: frozenset
    level: int
    maximal: bool


def is_motion(c: Continuum, seq, n: int) -> bool:
    seq = list(seq)
    if not seq:
        return False
    for x in seq:
        c.idx(x)
    return all(c.related(a, b, n) for a, b in zip(seq, seq[1:]))


def motion(c: Continuum, seq, n: int) -> Motion:
    if not is_motion(c, seq, n):
        raise PreconditionError(f"not a level-{n} motion", tuple(seq))
    return Motion(tuple(seq), n)


def trace(m: Motion) -> frozenset:
    return frozenset(m.steps)


def _connected_mask(c, mask, n):
    if not mask:
        return True
    rows = c.nbr(n)
    seen = frontier = mask & -mask
    while frontier:
        grown = 0
        for i in _bits(frontier):
            grown |= rows[i]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected_set(c: Continuum, u, n: int) -> bool:
    """Connectivity of the R_n graph restricted to u (empty u counts as connected)."""
    return _connected_mask(c, c.mask(u), n)


def _component_within(c, start, mask, n):
    rows = c.nbr(n)
    seen = frontier = 1 << start
    while frontier:
        grown = 0
        for i in _bits(frontier):
            grown |= rows[i]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen


def components(c: Continuum, X, n: int) -> list:
    """Partition of X into R_n-connected pieces, in canonical order."""
    rest = mask = c.mask(X)
    out = []
    while rest:
        comp = _component_within(c, _low(rest), mask, n)
        out.append(c.members(comp))
        rest &= ~comp
    return out


def motion_through(c: Continuum, u, n: int) -> Motion:
    """A level-n motion whose trace is exactly u (depth-first walk, at most 2|u|-1 steps)."""
    mask = c.mask(u)
    if not mask:
        raise PreconditionError("motion_through needs a nonempty class")
    start = _low(mask)
    comp = _component_within(c, start, mask, n)
    if comp != mask:
        raise PreconditionError(
            f"class is not connected at level {n}",
            (c.members(comp), c.members(mask & ~comp)))
    rows = c.nbr(n)
    walk = [start]
    stack = [start]
    seen = 1 << start
    while seen != mask:
        top = stack[-1]
        fresh = rows[top] & mask & ~seen
        if fresh:
            j = _low(fresh)
            seen |= 1 << j
            stack.append(j)
            walk.append(j)
        else:
            stack.pop()
            walk.append(stack[-1])
    return Motion(tuple(c.carrier[i] for i in walk), n)


def motion_between(c: Continuum, a, b, n: int) -> Motion:
    """Shortest level-n motion from a to b (breadth-first)."""
    src, dst = c.idx(a), c.idx(b)
    rows = c.nbr(n)
    parent = {src: None}
    frontier = [src]
    while frontier and dst not in parent:
        nxt = []
        for i in frontier:
            for j in _bits(rows[i]):
                if j not in parent:
                    parent[j] = i
                    nxt.append(j)
        frontier = nxt
    if dst not in parent:
        reach = c.members(_component_within(c, src, c.full_mask, n))
        raise PreconditionError(f"{b!r} not reachable from {a!r} at level {n}",
                                (reach, c.members(c.full_mask) - reach))
    path = [dst]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return Motion(tuple(c.carrier[i] for i in reversed(path)), n)


def is_net(c: Continuum, X, n: int) -> bool:
    rows = c.nbr(n)
    mask = c.mask(X)
    return all(not (rows[i] & mask & ~(1 << i)) for i in _bits(mask))


def maximal_net(c: Continuum, X, n: int) -> Net:
    """Greedy R_n-net of X in carrier order; maximality is checked, not assumed."""
    rows = c.nbr(n)
    mask = c.mask(X)
    chosen = covered = 0
    for i in _bits(mask):
        if not covered >> i & 1:
            chosen |= 1 << i
            covered |= rows[i]
    maximal = mask & ~c.figure_mask(chosen, n) == 0
    return Net(c.members(chosen), n, maximal)


def net_bound(c: Continuum, n: int) -> int:
    """Upper bound on the size of any R_n-net.

    Every R_n-net injects into a maximal R_{n+1}-net (two net points sharing
    an R_{n+1} neighbour would be R_n-related), so for n < L the greedy
    maximal R_{n+1}-net size bounds them all.  At the finest level only the
    carrier size is available.
    """
    c.check_level(n)
    if n == c.depth:
        return len(c)
    return len(maximal_net(c, c.carrier, n + 1).members)


def largest_net_size(c: Continuum, n: int) -> int:
    """Exact maximum R_n-net size by exhaustive search (small carriers only)."""
    rows = c.nbr(n)
    size = len(c)
    for k in range(size, 0, -1):
        for pick in combinations(range(size), k):
            m = sum(1 << i for i in pick)
            if all(not (rows[i] & m & ~(1 << i)) for i in pick):
                return k
    return 0


def cluster_position(c: Continuum, seq, n: int):
    """Net member whose level-n image holds the most terms of ``seq``.

    Returns ``(position, count)``; by pigeonhole the count is at least
    ceil(len(seq) / |net|).
    """
    seq = list(seq)
    if not seq:
        raise PreconditionError("cluster_position needs a nonempty prefix")
    net = c.ordered(maximal_net(c, c.carrier, n).members)
    rows = c.nbr(n)
    idx = [c.idx(x) for x in seq]
    best, best_count = None, -1
    for x in net:
        row = rows[c.idx(x)]
        count = sum(1 for i in idx if row >> i & 1)
        if count > best_count:
            best, best_count = x, count
    return best, best_count


def accumulation_points(c: Continuum, A, budget: int) -> frozenset:
    """Positions x with Z_n(x) meeting A minus the monad of x for every n <= budget."""
    c.check_level(budget)
    amask = c.mask(A)
    out = 0
    for i in range(len(c)):
        others = amask & ~c._block[i]
        if all(c._nbr[n][i] & others for n in range(budget + 1)):
            out |= 1 << i
    return c.members(out)


def isolation_points(c: Continuum, A, budget: int) -> frozenset:
    fig = c.saturate_mask(c.mask(A))
    return c.members(fig) - accumulation_points(c, A, budget)


def converges_to(c: Continuum, seq, x) -> int:
    """Largest k <= L such that for each n <= k some tail of ``seq`` sits inside Z_n(x)."""
    seq = list(seq)
    if not seq:
        raise PreconditionError("converges_to needs a nonempty prefix")
    idx = [c.idx(a) for a in seq]
    i = c.idx(x)
    depth = 0
    for n in range(1, c.depth + 1):
        if not _has_tail(c._nbr[n][i], idx):
            break
        depth = n
    return depth


def _has_tail(row, idx):
    # the shortest tail is the last term; longer tails only add constraints
    return any(all(row >> j & 1 for j in idx[start:]) for start in range(len(idx)))


def tails_in_neighborhoods(c: Continuum, seq, x, budget: int) -> bool:
    c.check_level(budget)
    idx = [c.idx(a) for a in seq]
    row = c._nbr
    i = c.idx(x)
    return all(_has_tail(row[n][i], idx) for n in range(budget + 1))


def converging_prefix(c: Continuum, A, x) -> list:
    """Pairwise-distinct points of A (outside the monad of x) converging to x at depth L.

    Picks, for n = 0..L, a fresh monad of A inside Z_n(x); the last pick is
    the one at the finest level.  Returns [] when x is not an accumulation
    point of A at budget L.
    """
    amask = c.mask(A)
    i = c.idx(x)
    others = amask & ~c._block[i]
    L = c.depth
    if not c._nbr[L][i] & others:
        return []
    used = 0
    picks = []
    for n in range(L):
        fresh = c._nbr[n][i] & others & ~used
        if fresh:
            j = _low(fresh)
            picks.append(j)
            used |= c._block[j]
    last = c._nbr[L][i] & others & ~used
    if last:
        j = _low(last)
    else:
        # every finest-level candidate already used; move it to the end
        j = next(p for p in picks if c._nbr[L][i] >> p & 1)
        picks.remove(j)
    picks.append(j)
    return [c.carrier[p] for p in picks]


def limit_positions(c: Continuum, seq, n: int) -> frozenset:
    """Positions x whose convergence depth for ``seq`` is at least n."""
    return frozenset(x for x in c.carrier if converges_to(c, seq, x) >= n)


def component_of(c: Continuum, x, n: int) -> frozenset:
    return c.members(hull_mask(c, 1 << c.idx(x), n))


__all__ = [
    "Motion", "Net", "accumulation_points", "cluster_position", "component_of",
    "components", "converges_to", "converging_prefix", "is_connected_set", "is_motion",
    "is_net", "isolation_points", "largest_net_size", "limit_positions", "maximal_net",
    "motion", "motion_between", "motion_through", "net_bound", "tails_in_neighborhoods",
    "trace",
]

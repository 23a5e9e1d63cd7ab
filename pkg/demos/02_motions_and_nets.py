"""Connectedness through motions, and R-nets as finite compactness.

A class is connected at level n when a walk of R_n steps visits it all.
Nets are maximal sets of pairwise unrelated points; every sequence has a
net member whose neighbourhood catches a pigeonhole share of its terms.
"""
from math import ceil

from astopo import connectivity as cn, samples

c = samples.path10()
u = {2, 3, 4, 5}
m = cn.motion_through(c, u, 3)
print("walk through", sorted(u), "at level 3:", m.steps)
print("components of {0,1,5,6} at level 2:", [sorted(x) for x in cn.components(c, {0, 1, 5, 6}, 2)])
print("a walk from 0 to 9 at level 2:", cn.motion_between(c, 0, 9, 2).steps)

for n in range(c.depth + 1):
    net = cn.maximal_net(c, c.carrier, n)
    print(f"level {n}: greedy net {sorted(net.members)} (bound {cn.net_bound(c, n)})")

seq = [9, 0, 1, 8, 2, 0, 1, 7, 0]
net = cn.maximal_net(c, c.carrier, 2)
pos, count = cn.cluster_position(c, seq, 2)
print(f"\nsequence {seq}: net member {pos} catches {count} terms"
      f" (pigeonhole guarantees {ceil(len(seq) / len(net.members))})")
print("convergence depth of (5,3,1,0,0) toward 0:", cn.converges_to(c, [5, 3, 1, 0, 0], 0))

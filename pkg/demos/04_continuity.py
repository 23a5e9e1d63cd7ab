"""Continuity of functions between continua, and a function that fails it.

Doubling moves level-(k+1) neighbours to level-k neighbours, so its
modulus is k -> k+1.  The step function is 1 near 0 and 0 elsewhere; the
jump at the edge of the monad of 0 breaks every equivalent form of
continuity at once.
"""
from fractions import Fraction

from astopo import connectivity as cn, morphism as mo, real as rl

dbl = mo.affine(rl.real_continuum(6, 1, 5), rl.real_continuum(6, 2, 4), 2)
print("doubling modulus:", mo.modulus(dbl).as_dict())
print("doubling delta for epsilon 1/4:", mo.delta_for(dbl, Fraction(1, 4)))

step = mo.step_morphism(rl.RealGrid(6, 1, 4))
print("\nstep(0) =", step(0), " step(1/2) =", step(Fraction(1, 2)))
print("step modulus:", mo.modulus(step).as_dict())
print("preserves connected at (4,4):", mo.preserves_connected(step, 4, 4))
walk = cn.motion_between(step.source, 0, Fraction(1, 8), 4)
print("pushing a walk from 0 to 1/8:", mo.push_motion(step, walk, 4))
print("epsilon 1/2 has a delta:", bool(mo.epsilon_delta_check(step, [Fraction(1, 2)])))

small = mo.step_morphism(rl.RealGrid(3, 1, 2))
print("\non a 17-point grid, open-preimage form:", mo.preimage_open_check(small, 2, 2))
print("closed-preimage form:", mo.preimage_closed_check(small, 2, 2))

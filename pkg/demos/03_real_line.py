"""The rational real continuum on a dyadic grid, and the bisection lub.

Two grid points are level-n equal when they differ by less than 2**-n, or
both lie beyond 2**n on the same side.  Dropping the sign split (the
literal "distance above 2**n" reading) breaks the composition law, and
the validator finds the counterexample.
"""
from fractions import Fraction

from astopo import core, real as rl

c = rl.real_continuum(4, 2, 3)
print(c, "valid:", core.validate(c.gen).ok)

bad = rl.paper_literal_family([0, 8, 48], 4)
for v in core.validate(bad.gen).violations:
    print("unsplit far branch:", v)

print("\nmon(1/2) + mon(1/3) =", rl.add(rl.mon("1/2"), rl.mon("1/3")))
print("0 and 1/16 equal at level 3:", rl.real_eq(0, Fraction(1, 16), 3))
print("least natural above 1000001/1000:", rl.archimedean_witness("1000001/1000"))

c8 = rl.lub(["1/3"], 0, 1, 8)
print(f"\nlub of {{1/3}} from [0, 1] in 8 steps: {c8}, gap {c8 - Fraction(1, 3)}")

g = rl.RealGrid(4, 2, 3)
print("open (0,1) at level 3:", [str(x) for x in sorted(rl.interval(g, 0, 1, "open", 3))])
for a, b in ((0, 1), (0, Fraction(1, 8))):
    left, right = rl.half_open_forms(g, a, b, "half-open-right", 3)
    print(f"half-open ({a},{b}]: two constructions agree = {left == right},"
          f" endpoints separated = {rl.endpoints_separated(g, a, b, 3)}")

"""A five-point continuum, its closures, and why closure is graded.

E1 lives on {0..4}: every pair is related at level 0, pairs at distance
<= 2 at level 1, neighbours at level 2.  Closure at level n is the R_n
image, so applying it twice can keep growing; the growth is bounded by
one coarser level.
"""
from astopo import core, figures as fg, samples

E1 = samples.e1()
print(E1, "valid:", core.validate(E1.gen).ok)

X = {0}
for n in range(E1.depth + 1):
    once = fg.closure(E1, X, n)
    twice = fg.closure(E1, once, n)
    print(f"level {n}: cl{{0}} = {sorted(once)}, cl cl{{0}} = {sorted(twice)}")

# twice at level 2 reaches 2, but never beyond the level-1 closure
assert fg.closure(E1, fg.closure(E1, X, 2), 2) <= fg.closure(E1, X, 1)

print("\ninterior of {0,1,2} at level 2:", sorted(fg.interior(E1, {0, 1, 2}, 2)))
print("separable {0} vs {4}:", fg.separable(E1, {0}, {4}))
print("separable {0} vs {2}:", bool(fg.separable(E1, {0}, {2})))

print("\nopen classes of E2 at level 2 (unions of R_2 components):")
for U in sorted(fg.open_family(samples.e2(), 2), key=len):
    print("  ", sorted(U))

"""
The nerve of a cover equals the complex of its code
===================================================

The identification needs no topology: for any family of subsets of a
finite set, the nerve and the complex of the code coincide.  Here it is
checked on random covers, and on a two-dimensional box cover.
"""

import random

from neuralcode import Cover, f_vector, grid_box_cover, nerve_equals_delta

rng = random.Random(0)
for trial in range(1000):
    m, n = rng.randint(1, 12), rng.randint(1, 6)
    sets = [{p for p in range(1, m + 1) if rng.random() < 0.4} for _ in range(n)]
    report = nerve_equals_delta(Cover(m, tuple(sets)))
    assert report.equal, report.witness
print("1000 random covers: nerve == Delta(code)")

# Four boxes around a hole in a 7x7 grid: an annulus.
boxes = [
    [(0, 6), (0, 1)],
    [(0, 6), (5, 6)],
    [(0, 1), (0, 6)],
    [(5, 6), (0, 6)],
]
annulus = grid_box_cover(2, boxes, [(0, 6), (0, 6)])
report = nerve_equals_delta(annulus)
print("annulus equal:", report.equal, "f-vector:", f_vector(report.nerve))

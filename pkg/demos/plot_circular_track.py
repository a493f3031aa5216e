"""
Recovering a circular track from place-cell firing
==================================================

Three place cells cover a circular track with overlapping 200-degree
fields.  Only the set of firing patterns is kept; from it we rebuild the
simplicial complex and read off that the track is a loop.
"""

from neuralcode import (
    betti_numbers,
    circle_arc_cover,
    code_of_cover,
    delta_complex,
    helly_lower_bound,
    pi1_presentation,
)

# The track is discretized to one point per degree.
track = circle_arc_cover(360, [(0, 200), (120, 200), (240, 200)])

# Each position produces a firing pattern; the distinct patterns form the code.
code = code_of_cover(track)
print("code:", code)

# The complex of the code: three vertices, three edges, no triangle.
k = delta_complex(code)
print("facets:", k.render().split())

# One component and one independent loop.
print("betti:", betti_numbers(k))

# Edge-path group: a single generator and no relations, i.e. free of rank 1.
print(pi1_presentation(k).render())

# Convex fields realizing this code need at least the plane.
print("embedding dimension >=", helly_lower_bound(k))

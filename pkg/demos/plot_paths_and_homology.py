"""
Paths through receptive fields and the homology of a sphere
===========================================================

Sequences of codewords trace routes between fields.  The code of all
words of weight at most three on four neurons has the hollow tetrahedron
as its complex, a combinatorial 2-sphere.
"""

from neuralcode import (
    Code,
    betti_numbers,
    delta_complex,
    euler_characteristic,
    f_vector,
    pi1_presentation,
    shortest_edge_path,
)
from neuralcode.topology import render_betti

sphere = Code(4, frozenset(m for m in range(16) if bin(m).count("1") <= 3))
k = delta_complex(sphere)
print("f-vector:", f_vector(k), "euler:", euler_characteristic(k))
print(render_betti(betti_numbers(k)))

# The raw presentation: three generators, each killed by a triangle.
print(pi1_presentation(k).render())

# A linear track of six overlapping fields; walking from one end to the other.
n = 6
words = {"0" * n}
for i in range(n):
    words.add("".join("1" if j == i else "0" for j in range(n)))
    if i + 1 < n:
        words.add("".join("1" if j in (i, i + 1) else "0" for j in range(n)))
track = delta_complex(Code.from_strings(sorted(words)))
print("route 1 -> 6:", shortest_edge_path(track, 1, 6))

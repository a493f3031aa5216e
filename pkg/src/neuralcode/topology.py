"""Invariants of simplicial complexes: F2 homology, components, edge-path
group presentations, a Helly dimension bound and shortest edge paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .codes import mask_to_indices
from .complex import SimplicialComplex
from .errors import Disconnected, LengthMismatch, MissingBasepoint, MissingVertex, NoPath


@dataclass(frozen=True)
class Gf2Matrix:
    """Dense matrix over F2 with each row packed into an int (bit j = column j)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.rows:
            raise LengthMismatch(f"expected {self.rows} rows, got {len(self.bits)}")
        limit = 1 << self.cols
        if any(r < 0 or r >= limit for r in self.bits):
            raise LengthMismatch(f"row wider than {self.cols} columns")

    @classmethod
    def from_array(cls, a) -> Gf2Matrix:
        a = np.asarray(a, dtype=np.uint8) & 1
        rows, cols = a.shape
        bits = tuple(sum(int(v) << j for j, v in enumerate(row)) for row in a)
        return cls(rows, cols, bits)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(rows, cols, (0,) * rows)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for i, r in enumerate(self.bits):
            for j in range(self.cols):
                out[i, j] = r >> j & 1
        return out

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.bits[i] >> j & 1

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.rows:
            raise LengthMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for r in self.bits:
            acc = 0
            j = 0
            while r:
                if r & 1:
                    acc ^= other.bits[j]
                r >>= 1
                j += 1
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def is_zero(self) -> bool:
        return not any(self.bits)

    def rank(self) -> int:
        pivots: dict[int, int] = {}
        for r in self.bits:
            while r:
                lead = r.bit_length() - 1
                if lead not in pivots:
                    pivots[lead] = r
                    break
                r ^= pivots[lead]
        return len(pivots)


def boundary_matrix(k: SimplicialComplex, dim: int) -> Gf2Matrix:
    """Boundary map from dim-faces to (dim-1)-faces, both in lexicographic order.

    Rows index (dim-1)-faces, columns index dim-faces.  ``dim = 0`` maps to
    the zero-dimensional space spanned by nothing, so it has no rows.
    """
    if dim < 0:
        raise ValueError(f"dim must be nonnegative, got {dim}")
    top = k.faces_of_dim(dim)
    if dim == 0:
        return Gf2Matrix.zeros(0, len(top))
    low = k.faces_of_dim(dim - 1)
    row_of = {f: i for i, f in enumerate(low)}
    rows = [0] * len(low)
    for j, face in enumerate(top):
        for drop in range(len(face)):
            rows[row_of[face[:drop] + face[drop + 1:]]] |= 1 << j
    return Gf2Matrix(len(low), len(top), tuple(rows))


def boundary_rank(k: SimplicialComplex, dim: int) -> int:
    if dim == 0:
        return 0
    return boundary_matrix(k, dim).rank()


def betti_numbers(k: SimplicialComplex, kmax: int | None = None) -> tuple[int, ...]:
    """Unreduced F2 Betti numbers b_0..b_kmax (kmax defaults to the dimension)."""
    if kmax is None:
        kmax = max(k.dimension, 0)
    if kmax < 0:
        raise ValueError(f"kmax must be nonnegative, got {kmax}")
    ranks = [boundary_rank(k, d) for d in range(kmax + 2)]
    return tuple(
        len(k.faces_of_dim(d)) - ranks[d] - ranks[d + 1] for d in range(kmax + 1)
    )


def render_betti(betti: tuple[int, ...]) -> str:
    return " ".join(f"b{i}={b}" for i, b in enumerate(betti))


def connected_components(k: SimplicialComplex) -> list[list[int]]:
    """Vertex classes of the 1-skeleton, each ascending, ordered by least vertex."""
    adj = k.neighbors()
    seen: set[int] = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def _bfs_parents(adj: dict[int, list[int]], root: int) -> dict[int, int | None]:
    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    return parent


@dataclass(frozen=True)
class Pi1Presentation:
    """Edge-path group presentation based at ``basepoint``.

    Generator ``g_k`` (1-based) is the k-th non-tree edge ``(i, j)``,
    ``i < j``, traversed from i to j.  A relation is a tuple of letters
    ``(k, +1)`` or ``(k, -1)``.
    """

    basepoint: int
    generators: tuple[tuple[int, int], ...]
    relations: tuple[tuple[tuple[int, int], ...], ...]
    tree: tuple[tuple[int, int], ...]

    def render(self) -> str:
        gens = ", ".join(f"e({i},{j})" for i, j in self.generators)
        lines = [f"generators: {gens}".rstrip(), "relations:"]
        for rel in self.relations:
            lines.append(" ".join(f"g{g}" if e > 0 else f"g{g}^-1" for g, e in rel))
        return "\n".join(lines) + "\n"


def pi1_presentation(k: SimplicialComplex, basepoint: int | None = None) -> Pi1Presentation:
    adj = k.neighbors()
    if not adj:
        raise MissingBasepoint("complex has no vertices")
    if basepoint is None:
        basepoint = min(adj)
    if basepoint not in adj:
        raise MissingBasepoint(f"basepoint {basepoint} is not a vertex")
    parent = _bfs_parents(adj, basepoint)
    if len(parent) != len(adj):
        missing = sorted(set(adj) - set(parent))
        raise Disconnected(f"vertices {missing} are not reachable from {basepoint}")
    tree = sorted(
        (min(v, p), max(v, p)) for v, p in parent.items() if p is not None
    )
    tree_set = set(tree)
    generators = [e for e in k.edges() if e not in tree_set]
    gen_index = {e: g for g, e in enumerate(generators, start=1)}

    def letter(a: int, b: int):
        edge = (min(a, b), max(a, b))
        g = gen_index.get(edge)
        if g is None:
            return None
        return (g, 1 if a < b else -1)

    relations = []
    for a, b, c in k.faces_of_dim(2):
        word = [letter(a, b), letter(b, c), letter(c, a)]
        relations.append(tuple(x for x in word if x is not None))
    return Pi1Presentation(basepoint, tuple(generators), tuple(relations), tuple(tree))


def minimal_nonfaces(k: SimplicialComplex) -> list[frozenset[int]]:
    """Non-faces whose proper subsets are all faces, over indices 1..n."""
    if k.is_void():
        return [frozenset()]
    faces = k.faces()
    out = [frozenset({i}) for i in range(1, k.n + 1) if 1 << (i - 1) not in faces]
    verts = mask_to_indices(k.vertex_mask)
    seen: set[int] = set()
    for face in faces:
        if face == 0:
            continue
        # extend a face by a larger vertex; each candidate is reached from
        # its largest-vertex-removed subset
        top = face.bit_length()
        for v in verts:
            if v <= top:
                continue
            cand = face | 1 << (v - 1)
            if cand in faces or cand in seen:
                continue
            seen.add(cand)
            if all(cand & ~(1 << (i - 1)) in faces for i in mask_to_indices(cand)):
                out.append(frozenset(mask_to_indices(cand)))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def helly_lower_bound(k: SimplicialComplex) -> int:
    """Embedding-dimension lower bound for convex realizations.

    If the sets indexed by a minimal non-face of size m were convex in R^d
    with d <= m - 2, every (d+1)-subfamily would meet, so by Helly's
    theorem all m would, a contradiction.  Hence d >= m - 1.
    """
    return max([0] + [len(s) - 1 for s in minimal_nonfaces(k)])


def shortest_edge_path(k: SimplicialComplex, u: int, v: int) -> list[int]:
    """Breadth-first shortest path in the 1-skeleton, ascending tie-breaks."""
    adj = k.neighbors()
    for x in (u, v):
        if x not in adj:
            raise MissingVertex(f"{x} is not a vertex")
    parent = _bfs_parents(adj, u)
    if v not in parent:
        raise NoPath(f"no edge path from {u} to {v}")
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]

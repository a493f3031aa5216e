"""Abstract simplicial complexes stored by their facets.

Faces are vertex masks over ``{1, ..., n}`` (bit ``i - 1`` for vertex
``i``).  Two degenerate complexes matter: the void complex has no faces at
all (Delta of the empty code), while ``{∅}`` has only the empty face.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .codes import (
    Code,
    face_key,
    indices_to_mask,
    mask_to_indices,
    popcount,
    simplicial_completion,
    submasks,
)
from .errors import CapacityExceeded, LengthMismatch

if TYPE_CHECKING:
    from .cover import Cover

FACET_SIZE_LIMIT = 24


def _maximal(masks: Iterable[int]) -> tuple[int, ...]:
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount, reverse=True):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=face_key))


@dataclass(frozen=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        facets = _maximal(self.facets)
        for f in facets:
            if f >> self.n:
                raise LengthMismatch(f"face {mask_to_indices(f)} exceeds vertex capacity {self.n}")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_faces(cls, n: int, faces: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Downward closure of the given index sets."""
        return cls(n, tuple(indices_to_mask(f) for f in faces))

    @classmethod
    def void(cls, n: int) -> SimplicialComplex:
        return cls(n, ())

    @classmethod
    def simplex(cls, n: int) -> SimplicialComplex:
        return cls(n, ((1 << n) - 1,))

    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """Largest face size minus one; -1 for both void and ``{∅}``."""
        return max((popcount(f) for f in self.facets), default=0) - 1

    @property
    def vertex_mask(self) -> int:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @property
    def vertices(self) -> tuple[int, ...]:
        return mask_to_indices(self.vertex_mask)

    def __contains__(self, face) -> bool:
        if not isinstance(face, int):
            face = indices_to_mask(face)
        return any(face & ~f == 0 for f in self.facets)

    def _check_size(self):
        big = max((popcount(f) for f in self.facets), default=0)
        if big > FACET_SIZE_LIMIT:
            raise CapacityExceeded(f"facet of size {big} exceeds the enumeration limit {FACET_SIZE_LIMIT}")

    def faces(self) -> frozenset[int]:
        """Every face, as masks, including the empty face when non-void."""
        self._check_size()
        out: set[int] = set()
        for f in self.facets:
            out.update(submasks(f))
        return frozenset(out)

    def faces_of_dim(self, k: int) -> list[tuple[int, ...]]:
        """The k-faces as ascending index tuples, in lexicographic order."""
        if k < -1:
            return []
        self._check_size()
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            out.update(itertools.combinations(mask_to_indices(f), k + 1))
        return sorted(out)

    def edges(self) -> list[tuple[int, int]]:
        return self.faces_of_dim(1)

    def neighbors(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges():
            adj[a].append(b)
            adj[b].append(a)
        for v in adj:
            adj[v].sort()
        return adj

    def render(self) -> str:
        return "".join(render_face(f) + "\n" for f in self.facets)


def render_face(mask: int) -> str:
    idx = mask_to_indices(mask)
    return ",".join(map(str, idx)) if idx else "{}"


def delta_complex(code: Code) -> SimplicialComplex:
    """Delta(C): supports of the simplicial completion of the code."""
    completed = simplicial_completion(code)
    return SimplicialComplex(code.n, completed.maximal_words())


def nerve(cover: Cover) -> SimplicialComplex:
    """Index sets whose members have a common point.

    Built by depth-first extension of index sets while the running
    intersection stays nonempty; it never looks at membership patterns.
    """
    sets = [indices_to_mask(u) for u in cover.sets]
    n = len(sets)
    faces = [0]

    def extend(face: int, common: int, start: int):
        for i in range(start, n):
            meet = common & sets[i]
            if meet:
                grown = face | 1 << i
                faces.append(grown)
                extend(grown, meet, i + 1)

    everything = (1 << cover.ground_size) - 1
    extend(0, everything, 0)
    return SimplicialComplex(n, tuple(faces))


def facets(k: SimplicialComplex) -> list[frozenset[int]]:
    return [frozenset(mask_to_indices(f)) for f in k.facets]


def f_vector(k: SimplicialComplex) -> tuple[int, ...]:
    return tuple(len(k.faces_of_dim(d)) for d in range(k.dimension + 1))


def euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** d * c for d, c in enumerate(f_vector(k)))

"""Finite covers of a discretized stimulus space.

The ground set is ``{1, ..., M}``.  A point's membership pattern across
``U_1, ..., U_n`` is a codeword, and the code of the cover is the set of
patterns that occur.  Uncovered points contribute the all-zero word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .codes import Code, Codeword, check_capacity, indices_to_mask, mask_to_indices, mask_to_string
from .complex import SimplicialComplex, delta_complex, nerve
from .errors import (
    BadArc,
    BadHeader,
    BadPoint,
    BoxOutOfExtent,
    EmptyExtent,
    LengthMismatch,
    ZeroSets,
)


@dataclass(frozen=True)
class Cover:
    ground_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.ground_size < 1:
            raise EmptyExtent(f"ground set must have at least one point, got {self.ground_size}")
        sets = tuple(frozenset(u) for u in self.sets)
        for i, u in enumerate(sets, start=1):
            bad = [p for p in u if not 1 <= p <= self.ground_size]
            if bad:
                raise LengthMismatch(f"U{i} contains points outside 1..{self.ground_size}: {sorted(bad)}")
        object.__setattr__(self, "sets", sets)

    @property
    def n(self) -> int:
        return len(self.sets)

    def permuted(self, order: Sequence[int]) -> Cover:
        """Cover whose k-th set is ``sets[order[k]]`` (0-based order)."""
        return Cover(self.ground_size, tuple(self.sets[i] for i in order))

    def render(self) -> str:
        lines = [f"points {self.ground_size} sets {self.n}"]
        lines += [" ".join(map(str, sorted(u))) for u in self.sets]
        return "\n".join(lines) + "\n"


def _patterns(cover: Cover) -> list[int]:
    if cover.n == 0:
        raise ZeroSets("a cover needs at least one set")
    check_capacity(cover.n)
    masks = [indices_to_mask(u) for u in cover.sets]
    out = []
    for p in range(cover.ground_size):
        pattern = 0
        for i, m in enumerate(masks):
            if m >> p & 1:
                pattern |= 1 << i
        out.append(pattern)
    return out


def code_of_cover(cover: Cover) -> Code:
    """Membership patterns that some point realizes."""
    return Code(cover.n, frozenset(_patterns(cover)))


def atoms(cover: Cover) -> dict[Codeword, frozenset[int]]:
    """Map each realized codeword to the points realizing it.

    Keys are ordered by the lexicographic order of the word strings.
    """
    groups: dict[int, set[int]] = {}
    for p, pattern in enumerate(_patterns(cover), start=1):
        groups.setdefault(pattern, set()).add(p)
    ordered = sorted(groups, key=lambda m: mask_to_string(m, cover.n))
    return {Codeword.from_mask(m, cover.n): frozenset(groups[m]) for m in ordered}


def _as_range(r) -> tuple[int, int]:
    lo, hi = r
    return int(lo), int(hi)


def _normalize_box(box, dim: int) -> list[tuple[int, int]]:
    # a bare (lo, hi) pair is accepted as a 1-d box
    if dim == 1 and len(box) == 2 and all(isinstance(v, (int,)) for v in box):
        box = [box]
    if len(box) != dim:
        raise LengthMismatch(f"box {box!r} has {len(box)} axes, expected {dim}")
    return [_as_range(r) for r in box]


def grid_box_cover(dim: int, boxes, extent) -> Cover:
    """Integer grid points of ``extent`` covered by axis-aligned boxes.

    All ranges are inclusive.  Points are numbered from 1 in row-major
    order, the last axis varying fastest.
    """
    if dim not in (1, 2, 3):
        raise LengthMismatch(f"dim must be 1, 2 or 3, got {dim}")
    ext = _normalize_box(extent, dim)
    if any(lo > hi for lo, hi in ext):
        raise EmptyExtent(f"extent {ext} is empty")
    grid = list(itertools.product(*(range(lo, hi + 1) for lo, hi in ext)))
    index = {pt: k for k, pt in enumerate(grid, start=1)}
    sets = []
    for box in boxes:
        b = _normalize_box(box, dim)
        for (lo, hi), (elo, ehi) in zip(b, ext):
            if lo > hi or lo < elo or hi > ehi:
                raise BoxOutOfExtent(f"box {b} does not lie inside extent {ext}")
        pts = itertools.product(*(range(lo, hi + 1) for lo, hi in b))
        sets.append(frozenset(index[pt] for pt in pts))
    return Cover(len(grid), tuple(sets))


def circle_arc_cover(grid: int, arcs) -> Cover:
    """Arcs on the cycle Z/grid; arc (s, l) covers s, s+1, ..., s+l-1 mod grid."""
    if grid < 3:
        raise BadArc(f"circle grid must have at least 3 points, got {grid}")
    sets = []
    for start, length in arcs:
        if not 0 < length < grid:
            raise BadArc(f"arc length {length} must lie strictly between 0 and {grid}")
        sets.append(frozenset((start + t) % grid + 1 for t in range(length)))
    return Cover(grid, tuple(sets))


@dataclass(frozen=True)
class NerveReport:
    equal: bool
    witness: frozenset[int] | None
    nerve: SimplicialComplex
    delta: SimplicialComplex


def nerve_equals_delta(cover: Cover) -> NerveReport:
    """Compare N(U) with Delta(C(U)), built along independent routes."""
    code = code_of_cover(cover)
    n_cx = nerve(cover)
    d_cx = delta_complex(code)
    diff = n_cx.faces() ^ d_cx.faces()
    witness = None
    if diff:
        first = min(diff, key=lambda m: (bin(m).count("1"), mask_to_indices(m)))
        witness = frozenset(mask_to_indices(first))
    return NerveReport(not diff, witness, n_cx, d_cx)


def parse_cover(text: str) -> Cover:
    """Read a cover file.

    Header ``points M sets N``, then N set lines of ascending point
    indices.  Comment lines are skipped everywhere; blank lines are skipped
    outside the set block and mean the empty set inside it.
    """
    lines = text.splitlines()
    pos = 0
    header = None
    while pos < len(lines):
        line = lines[pos].strip()
        pos += 1
        if line and not line.startswith("#"):
            header = (pos, line)
            break
    if header is None:
        raise BadHeader("missing 'points M sets N' header")
    lineno, line = header
    parts = line.split()
    if len(parts) != 4 or parts[0] != "points" or parts[2] != "sets":
        raise BadHeader(f"expected 'points M sets N', got {line!r}", lineno)
    try:
        m, n = int(parts[1]), int(parts[3])
    except ValueError:
        raise BadHeader(f"non-integer count in header {line!r}", lineno) from None
    if m < 1:
        raise BadHeader(f"point count must be positive, got {m}", lineno)
    if n < 1:
        raise BadHeader(f"set count must be positive, got {n}", lineno)

    sets: list[frozenset[int]] = []
    while len(sets) < n:
        if pos >= len(lines):
            raise BadHeader(f"expected {n} set lines, found {len(sets)}", len(lines))
        line = lines[pos].strip()
        pos += 1
        if line.startswith("#"):
            continue
        pts = []
        for tok in line.split():
            try:
                p = int(tok)
            except ValueError:
                raise BadPoint(f"invalid point {tok!r}", pos) from None
            if not 1 <= p <= m:
                raise BadPoint(f"point {p} outside 1..{m}", pos)
            if pts and p <= pts[-1]:
                raise BadPoint(f"points must be strictly ascending ({pts[-1]} then {p})", pos)
            pts.append(p)
        sets.append(frozenset(pts))
    for extra in range(pos, len(lines)):
        line = lines[extra].strip()
        if line and not line.startswith("#"):
            raise BadHeader(f"unexpected content after {n} set lines: {line!r}", extra + 1)
    return Cover(m, tuple(sets))


def render_cover(cover: Cover) -> str:
    return cover.render()


def render_atoms(atlas: dict[Codeword, frozenset[int]]) -> str:
    return "".join(f"{w}: {' '.join(map(str, sorted(pts)))}\n" for w, pts in atlas.items())

"""Polynomial description of codes over F2.

Every code of length ``n`` is the zero set of exactly one reduced
(square-free) polynomial, obtained as the algebraic normal form of the
indicator of the complement of the code.  Pseudo-monomials
``prod_{i in sigma} x_i * prod_{j in tau} (1 + x_j)`` that vanish on a
code encode receptive-field relations
``intersection(U_i, i in sigma) <= union(U_j, j in tau)``; the
divisibility-minimal ones form the canonical form of the neural ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .codes import (
    Code,
    Codeword,
    check_capacity,
    face_key,
    indices_to_mask,
    mask_to_indices,
    popcount,
)
from .errors import CapacityExceeded, EmptyCode, LengthMismatch

ENUMERATION_LIMIT = 24
CANONICAL_FORM_LIMIT = 12


@dataclass(frozen=True)
class ReducedPolynomial:
    """Square-free polynomial over F2; ``monomials`` holds variable masks.

    The empty mask is the constant 1 and an empty set is the zero polynomial.
    """

    n: int
    monomials: frozenset[int]

    def __post_init__(self):
        check_capacity(self.n)
        object.__setattr__(self, "monomials", frozenset(self.monomials))
        for m in self.monomials:
            if m < 0 or m >> self.n:
                raise LengthMismatch(f"monomial {m:#x} uses variables beyond x{self.n}")

    @classmethod
    def from_terms(cls, n: int, terms) -> ReducedPolynomial:
        """Build from index tuples, e.g. ``[(2,), (1, 2)]`` for x2 + x1*x2.

        Repeated terms cancel in pairs.
        """
        acc: set[int] = set()
        for t in terms:
            acc ^= {indices_to_mask(t)}
        return cls(n, frozenset(acc))

    def __add__(self, other: ReducedPolynomial) -> ReducedPolynomial:
        if other.n != self.n:
            raise LengthMismatch(f"cannot add polynomials in {self.n} and {other.n} variables")
        return ReducedPolynomial(self.n, self.monomials ^ other.monomials)

    def degree(self) -> int:
        return max((popcount(m) for m in self.monomials), default=-1)

    def terms(self) -> list[tuple[int, ...]]:
        return [mask_to_indices(m) for m in sorted(self.monomials, key=face_key)]

    def render(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for idx in self.terms():
            parts.append("*".join(f"x{i}" for i in idx) if idx else "1")
        return " + ".join(parts)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class PseudoMonomial:
    n: int
    sigma: int
    tau: int

    def __post_init__(self):
        if self.sigma & self.tau:
            raise ValueError(
                f"sigma {mask_to_indices(self.sigma)} and tau {mask_to_indices(self.tau)} overlap"
            )
        if (self.sigma | self.tau) >> self.n:
            raise LengthMismatch(f"pseudo-monomial uses variables beyond x{self.n}")

    @classmethod
    def from_indices(cls, n: int, sigma=(), tau=()) -> PseudoMonomial:
        return cls(n, indices_to_mask(sigma), indices_to_mask(tau))

    @property
    def degree(self) -> int:
        return popcount(self.sigma | self.tau)

    def divides(self, other: PseudoMonomial) -> bool:
        return self.sigma & ~other.sigma == 0 and self.tau & ~other.tau == 0

    def evaluate(self, w: Codeword | int) -> int:
        mask = w.mask if isinstance(w, Codeword) else w
        return int(self.sigma & ~mask == 0 and self.tau & mask == 0)

    def sort_key(self):
        return (self.degree, mask_to_indices(self.sigma), mask_to_indices(self.tau))

    def render(self) -> str:
        factors = [f"x{i}" for i in mask_to_indices(self.sigma)]
        factors += [f"(1+x{j})" for j in mask_to_indices(self.tau)]
        return "*".join(factors) if factors else "1"

    def __str__(self):
        return self.render()


class RelationKind(Enum):
    CONTAINMENT = "containment"
    EMPTY_INTERSECTION = "empty-intersection"
    COVERING = "covering"


@dataclass(frozen=True)
class RfRelation:
    """``intersection(U_i, i in sigma) <= union(U_j, j in tau)``."""

    sigma: frozenset[int]
    tau: frozenset[int]

    @property
    def kind(self) -> RelationKind:
        if not self.tau:
            return RelationKind.EMPTY_INTERSECTION
        if not self.sigma:
            return RelationKind.COVERING
        return RelationKind.CONTAINMENT

    def render(self) -> str:
        cap = " ∩ ".join(f"U{i}" for i in sorted(self.sigma))
        cup = " ∪ ".join(f"U{j}" for j in sorted(self.tau))
        kind = self.kind
        if kind is RelationKind.EMPTY_INTERSECTION:
            return f"{cap or 'X'} = ∅"
        if kind is RelationKind.COVERING:
            return f"X ⊆ {cup}"
        return f"{cap} ⊆ {cup}"

    def __str__(self):
        return self.render()


def evaluate(p: ReducedPolynomial, w: Codeword | int) -> int:
    if isinstance(w, Codeword):
        if w.length != p.n:
            raise LengthMismatch(f"word of length {w.length} against polynomial in {p.n} variables")
        w = w.mask
    value = 0
    for m in p.monomials:
        if m & ~w == 0:
            value ^= 1
    return value


def _check_enumerable(n: int, limit: int) -> None:
    if n > limit:
        raise CapacityExceeded(f"n={n} exceeds the exhaustive enumeration limit {limit}")


def _moebius(values: np.ndarray, n: int) -> np.ndarray:
    """In-place binary Moebius transform (truth table <-> ANF coefficients)."""
    for i in range(n):
        step = 1 << i
        v = values.reshape(-1, 2, step)
        v[:, 1, :] ^= v[:, 0, :]
    return values


def code_to_polynomial(code: Code, limit: int = ENUMERATION_LIMIT) -> ReducedPolynomial:
    """The unique reduced P with P(w) = 0 exactly on the code."""
    _check_enumerable(code.n, limit)
    table = np.ones(1 << code.n, dtype=np.uint8)
    table[list(code.words)] = 0
    coeffs = _moebius(table, code.n)
    return ReducedPolynomial(code.n, frozenset(int(m) for m in np.flatnonzero(coeffs)))


def polynomial_to_code(p: ReducedPolynomial, limit: int = ENUMERATION_LIMIT) -> Code:
    """All points of F2^n where ``p`` vanishes, by evaluating its truth table."""
    _check_enumerable(p.n, limit)
    table = np.zeros(1 << p.n, dtype=np.uint8)
    table[list(p.monomials)] = 1
    values = _moebius(table, p.n)
    return Code(p.n, frozenset(int(w) for w in np.flatnonzero(values == 0)))


def vanishes_on(z: PseudoMonomial, code: Code) -> bool:
    if z.n != code.n:
        raise LengthMismatch(f"pseudo-monomial in {z.n} variables against code of length {code.n}")
    return not any(z.sigma & ~w == 0 and z.tau & w == 0 for w in code.words)


def _interval_counts(code: Code) -> np.ndarray:
    """Codeword counts for every ternary pattern.

    Axis ``i - 1`` indexes neuron ``i``; digit 0 means x_i = 0 is required
    (i in tau), 1 means x_i = 1 is required (i in sigma), 2 means free.  The
    entry is the number of codewords on which the pseudo-monomial is 1.
    """
    n = code.n
    counts = np.zeros((3,) * n, dtype=np.int64)
    for w in code.words:
        counts[tuple(w >> i & 1 for i in range(n))] = 1
    for axis in range(n):
        counts = np.moveaxis(counts, axis, 0)
        counts[2] = counts[0] + counts[1]
        counts = np.moveaxis(counts, 0, axis)
    return counts


def canonical_form(code: Code, limit: int = CANONICAL_FORM_LIMIT) -> list[PseudoMonomial]:
    """Divisibility-minimal pseudo-monomials vanishing on ``code``.

    Every one of the 3^n pseudo-monomials is tested at once: interval
    counts give vanishing, and since vanishing is inherited by multiples
    a vanishing element is minimal iff dropping any single factor makes
    it non-vanishing.  Returned in ``(degree, sigma, tau)`` order.
    """
    if not code.words:
        raise EmptyCode("the canonical form of the empty code is not defined here")
    _check_enumerable(code.n, limit)
    n = code.n
    vanish = _interval_counts(code) == 0
    minimal = vanish.copy()
    for axis in range(n):
        dropped = np.take(vanish, [2], axis=axis)
        fixed = [slice(None)] * n
        fixed[axis] = slice(0, 2)
        minimal[tuple(fixed)] &= ~dropped
    out = []
    for digits in zip(*np.nonzero(minimal)):
        sigma = tau = 0
        for i, d in enumerate(digits):
            if d == 1:
                sigma |= 1 << i
            elif d == 0:
                tau |= 1 << i
        out.append(PseudoMonomial(n, sigma, tau))
    out.sort(key=PseudoMonomial.sort_key)
    return out


def all_pseudo_monomials(n: int):
    """Every (sigma, tau) with disjoint parts, 3^n in total."""
    for digits in itertools.product((0, 1, 2), repeat=n):
        sigma = sum(1 << i for i, d in enumerate(digits) if d == 1)
        tau = sum(1 << i for i, d in enumerate(digits) if d == 0)
        yield PseudoMonomial(n, sigma, tau)


def rf_relations(code: Code, limit: int = CANONICAL_FORM_LIMIT) -> list[RfRelation]:
    cf = canonical_form(code, limit)
    return [
        RfRelation(frozenset(mask_to_indices(z.sigma)), frozenset(mask_to_indices(z.tau)))
        for z in cf
    ]

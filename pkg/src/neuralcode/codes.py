"""Binary codewords, codes and simplicial completion.

A codeword of length ``n`` is stored as an integer bit mask whose bit
``i - 1`` is set when neuron ``i`` fires, so the support of a word and its
mask carry the same information.  Text renderings put neuron 1 in the
leftmost column: the word ``"110"`` has support ``{1, 2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import BadCharacter, CapacityExceeded, EmptyCode, LengthMismatch, MixedLength

MAX_LENGTH = 63


def check_capacity(n: int) -> None:
    if n < 1:
        raise LengthMismatch(f"code length must be positive, got {n}")
    if n > MAX_LENGTH:
        raise CapacityExceeded(f"code length {n} exceeds the supported maximum {MAX_LENGTH}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_to_indices(mask: int) -> tuple[int, ...]:
    """1-based indices of the set bits, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def submasks(mask: int) -> Iterator[int]:
    """Every submask of ``mask``, including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_to_string(mask: int, n: int) -> str:
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def string_to_mask(word: str) -> int:
    mask = 0
    for i, ch in enumerate(word):
        if ch == "1":
            mask |= 1 << i
        elif ch != "0":
            raise BadCharacter(f"invalid character {ch!r} in codeword {word!r}")
    return mask


def face_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: size first, then the ascending index sequence."""
    idx = mask_to_indices(mask)
    return len(idx), idx


@dataclass(frozen=True)
class Codeword:
    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise LengthMismatch("a codeword needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise BadCharacter(f"codeword bits must be 0 or 1: {self.bits}")

    @classmethod
    def from_string(cls, word: str) -> Codeword:
        string_to_mask(word)
        return cls(tuple(int(c) for c in word))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> Codeword:
        if mask >> n:
            raise LengthMismatch(f"mask {mask:#x} does not fit in length {n}")
        return cls(tuple(mask >> i & 1 for i in range(n)))

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def mask(self) -> int:
        return sum(b << i for i, b in enumerate(self.bits))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, b in enumerate(self.bits) if b)

    def __str__(self):
        return "".join(map(str, self.bits))


@dataclass(frozen=True)
class Code:
    """A set of binary words of common length ``n``, held as support masks."""

    n: int
    words: frozenset[int]

    def __post_init__(self):
        check_capacity(self.n)
        object.__setattr__(self, "words", frozenset(self.words))
        for w in self.words:
            if w < 0 or w >> self.n:
                raise LengthMismatch(f"word mask {w:#x} does not fit in length {self.n}")

    @classmethod
    def from_strings(cls, words: Iterable[str], n: int | None = None) -> Code:
        words = list(words)
        if n is None:
            if not words:
                raise EmptyCode("cannot infer the length of an empty code")
            n = len(words[0])
        masks = set()
        for w in words:
            if len(w) != n:
                raise MixedLength(f"word {w!r} has length {len(w)}, expected {n}")
            masks.add(string_to_mask(w))
        return cls(n, frozenset(masks))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> Code:
        masks = set()
        for s in supports:
            m = indices_to_mask(s)
            if m >> n:
                raise LengthMismatch(f"support {sorted(s)} exceeds length {n}")
            masks.add(m)
        return cls(n, frozenset(masks))

    @classmethod
    def full(cls, n: int) -> Code:
        check_capacity(n)
        return cls(n, frozenset(range(1 << n)))

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator[Codeword]:
        return iter(self.codewords())

    def __contains__(self, item) -> bool:
        if isinstance(item, str):
            return len(item) == self.n and string_to_mask(item) in self.words
        if isinstance(item, Codeword):
            return item.length == self.n and item.mask in self.words
        return item in self.words

    def sorted_masks(self) -> list[int]:
        """Masks in the lexicographic order of their string renderings."""
        return sorted(self.words, key=lambda m: mask_to_string(m, self.n))

    def codewords(self) -> list[Codeword]:
        return [Codeword.from_mask(m, self.n) for m in self.sorted_masks()]

    def strings(self) -> list[str]:
        return [mask_to_string(m, self.n) for m in self.sorted_masks()]

    def supports(self) -> list[frozenset[int]]:
        return [frozenset(mask_to_indices(m)) for m in self.sorted_masks()]

    def maximal_words(self) -> list[int]:
        """Masks not strictly contained in another word of the code."""
        ordered = sorted(self.words, key=popcount, reverse=True)
        kept: list[int] = []
        for w in ordered:
            if not any(w & ~k == 0 for k in kept):
                kept.append(w)
        return kept

    def render(self) -> str:
        return "".join(s + "\n" for s in self.strings())

    def __str__(self):
        return "{" + ",".join(self.strings()) + "}"


def parse_code(text: str) -> Code:
    """Read a code file: one 0/1 word per line, ``#`` comments and blanks skipped.

    Duplicate lines collapse. Errors carry the 1-based line number.
    """
    n = None
    masks = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        for ch in line:
            if ch not in "01":
                raise BadCharacter(f"invalid character {ch!r} in codeword {line!r}", lineno)
        if n is None:
            n = len(line)
            if n > MAX_LENGTH:
                raise CapacityExceeded(f"code length {n} exceeds the supported maximum {MAX_LENGTH}")
        elif len(line) != n:
            raise MixedLength(f"word of length {len(line)}, expected {n}", lineno)
        masks.add(string_to_mask(line))
    if n is None:
        raise EmptyCode("no codewords found")
    return Code(n, frozenset(masks))


def render_code(code: Code) -> str:
    return code.render()


def is_simplicial(code: Code) -> bool:
    words = code.words
    for w in code.maximal_words():
        for sub in submasks(w):
            if sub not in words:
                return False
    return True


def simplicial_completion(code: Code) -> Code:
    """Smallest simplicial code containing ``code``."""
    closed: set[int] = set()
    for w in code.maximal_words():
        if w in closed:
            continue
        closed.update(submasks(w))
    return Code(code.n, frozenset(closed))

"""Hamming-space primitives and the code / set-system correspondence.

Words are held as integer masks: position ``i`` (1-based, the ``i``-th
character from the left in text form) is bit ``i - 1`` of the mask.  With
this layout the numeric order of equal-weight masks coincides with the
co-lexicographic order of their supports, which is the order every code in
this package is stored in.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Union

import numpy as np

from lpbus.errors import InvalidArgumentError

# Pair counts above this switch diameter computations to the distance transform.
_PAIRWISE_LIMIT = 1 << 16
# The transform allocates 2**n cells.
_TRANSFORM_MAX_ORDER = 24


@dataclass(frozen=True)
class BitWord:
    """A fixed-width binary vector, an element of the Hamming ``n``-space."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError(f"width must be non-negative, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise InvalidArgumentError(f"mask {self.mask:#x} does not fit in {self.n} bits")

    @classmethod
    def from_string(cls, text: str) -> "BitWord":
        """Parse ``"111000"``; the leftmost character is position 1."""
        text = text.strip()
        if text.strip("01"):
            raise InvalidArgumentError(f"not a bit string: {text!r}")
        return cls(len(text), int(text[::-1], 2) if text else 0)

    @classmethod
    def from_support(cls, n: int, points: Iterable[int]) -> "BitWord":
        """Incidence vector of a subset of ``[n] = {1, ..., n}``."""
        mask = 0
        for p in points:
            if not 1 <= p <= n:
                raise InvalidArgumentError(f"point {p} outside [1, {n}]")
            mask |= 1 << (p - 1)
        return cls(n, mask)

    @classmethod
    def from_int(cls, n: int, value: int) -> "BitWord":
        """Word whose text form is ``value`` in binary, most significant bit first."""
        if value < 0 or value >> n:
            raise InvalidArgumentError(f"value {value} does not fit in {n} bits")
        if n == 0:
            return cls(0, 0)
        return cls(n, int(format(value, f"0{n}b")[::-1], 2))

    def to_int(self) -> int:
        """Inverse of :meth:`from_int`."""
        return int(str(self), 2) if self.n else 0

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        """Ascending positions holding a 1."""
        return mask_support(self.mask)

    def __str__(self) -> str:
        return format(self.mask, f"0{self.n}b")[::-1] if self.n else ""


def mask_support(mask: int) -> tuple[int, ...]:
    """Ascending 1-based positions of the set bits of ``mask``."""
    points = []
    while mask:
        low = mask & -mask
        points.append(low.bit_length())
        mask ^= low
    return tuple(points)


def _canonical_key(mask: int) -> tuple[int, int]:
    return mask.bit_count(), mask


class Code:
    """A set of distinct codewords of common width ``n``.

    Codewords are kept in canonical order: by weight, then co-lexicographically.
    """

    __slots__ = ("n", "masks")

    def __init__(self, n: int, words: Iterable[Union[BitWord, str]] = ()):
        masks = []
        for word in words:
            if isinstance(word, str):
                word = BitWord.from_string(word)
            if word.n != n:
                raise InvalidArgumentError(f"codeword {word} has width {word.n}, expected {n}")
            masks.append(word.mask)
        self._init(n, masks)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Code":
        code = cls.__new__(cls)
        masks = list(masks)
        limit = 1 << n
        for m in masks:
            if not 0 <= m < limit:
                raise InvalidArgumentError(f"mask {m:#x} does not fit in {n} bits")
        code._init(n, masks)
        return code

    def _init(self, n: int, masks: list[int]) -> None:
        if len(set(masks)) != len(masks):
            raise InvalidArgumentError("duplicate codewords")
        self.n = n
        self.masks = tuple(sorted(masks, key=_canonical_key))

    @property
    def words(self) -> tuple[BitWord, ...]:
        return tuple(iter(self))

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[BitWord]:
        return (BitWord(self.n, m) for m in self.masks)

    def __contains__(self, word: object) -> bool:
        return isinstance(word, BitWord) and word.n == self.n and word.mask in set(self.masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"Code(n={self.n}, size={len(self)})"


class SetSystem:
    """A family of distinct subsets ("blocks") of the point set ``[n]``."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]] = ()):
        frozen = [frozenset(b) for b in blocks]
        for block in frozen:
            if any(not 1 <= p <= n for p in block):
                raise InvalidArgumentError(f"block {sorted(block)} has points outside [1, {n}]")
        if len(set(frozen)) != len(frozen):
            raise InvalidArgumentError("duplicate blocks")
        self.n = n
        self.blocks = tuple(sorted(frozen, key=lambda b: _canonical_key(block_mask(b))))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetSystem":
        return cls(n, (mask_support(m) for m in masks))

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(block_mask(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.blocks)

    def __contains__(self, block: object) -> bool:
        try:
            return frozenset(block) in set(self.blocks)  # type: ignore[arg-type]
        except TypeError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetSystem):
            return NotImplemented
        return self.n == other.n and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return f"SetSystem(n={self.n}, blocks={len(self)})"


def block_mask(block: Iterable[int]) -> int:
    mask = 0
    for p in block:
        mask |= 1 << (p - 1)
    return mask


def weight(u: BitWord) -> int:
    return u.weight


def support(u: BitWord) -> frozenset[int]:
    return frozenset(u.support)


def hamming_distance(u: BitWord, v: BitWord) -> int:
    """Number of positions in which ``u`` and ``v`` differ."""
    if u.n != v.n:
        raise InvalidArgumentError(f"width mismatch: {u.n} vs {v.n}")
    return (u.mask ^ v.mask).bit_count()


def words_of_weight(n: int, w: int) -> list[int]:
    """Masks of all weight-``w`` words of length ``n``, in colex order."""
    return sorted(block_mask(c) for c in combinations(range(1, n + 1), w))


def farthest_distance_table(n: int, masks: Iterable[int]) -> np.ndarray:
    """For every ``x`` in H(n), the largest distance from ``x`` to a word in ``masks``.

    Uses ``d(x, v) = n - d(x, ~v)`` and a separable nearest-distance transform
    over the hypercube, one sweep per coordinate: O(n 2^n) work.
    """
    if n > _TRANSFORM_MAX_ORDER:
        raise InvalidArgumentError(f"distance table needs n <= {_TRANSFORM_MAX_ORDER}, got {n}")
    full = (1 << n) - 1
    nearest = np.full(1 << n, n + 1, dtype=np.int16)
    targets = np.fromiter((full ^ m for m in masks), dtype=np.int64)
    if targets.size == 0:
        raise InvalidArgumentError("empty word set")
    nearest[targets] = 0
    for b in range(n):
        view = nearest.reshape(-1, 2, 1 << b)
        low, high = view[:, 0, :].copy(), view[:, 1, :]
        np.minimum(low, high + 1, out=view[:, 0, :])
        np.minimum(high, low + 1, out=view[:, 1, :])
    return n - nearest


def max_cross_distance(n: int, left: tuple[int, ...], right: tuple[int, ...]) -> int:
    """max d(u, v) over masks u in ``left`` and v in ``right``."""
    if not left or not right:
        raise InvalidArgumentError("diameter of an empty code is undefined")
    if len(left) * len(right) <= _PAIRWISE_LIMIT or n > _TRANSFORM_MAX_ORDER:
        return max((a ^ b).bit_count() for a in left for b in right)
    table = farthest_distance_table(n, right)
    return int(table[np.fromiter(left, dtype=np.int64)].max())


def diameter(code: Code) -> int:
    """Maximum pairwise distance within ``code``; 0 for a single word."""
    if not len(code):
        raise InvalidArgumentError("diameter of an empty code is undefined")
    return max_cross_distance(code.n, code.masks, code.masks)


def cross_diameter(first: Code, second: Code) -> int:
    """Maximum distance between a word of ``first`` and a word of ``second``."""
    if first.n != second.n:
        raise InvalidArgumentError(f"width mismatch: {first.n} vs {second.n}")
    if not len(first) or not len(second):
        raise InvalidArgumentError("cross diameter with an empty code is undefined")
    return max_cross_distance(first.n, first.masks, second.masks)


def to_set_system(code: Code) -> SetSystem:
    return SetSystem.from_masks(code.n, code.masks)


def from_set_system(system: SetSystem) -> Code:
    return Code.from_masks(system.n, system.masks)


def parse_code(text: str, n: int | None = None) -> Code:
    """Parse the line-oriented code format.

    One bit string per line, all of the same width; lines starting with ``#``
    and blank lines are skipped.
    """
    words = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            word = BitWord.from_string(line)
        except InvalidArgumentError as exc:
            raise InvalidArgumentError(f"line {lineno}: {exc}") from None
        if n is None:
            n = word.n
        elif word.n != n:
            raise InvalidArgumentError(f"line {lineno}: width {word.n}, expected {n}")
        words.append(word)
    if n is None:
        raise InvalidArgumentError("code text contains no codewords and no width was given")
    return Code(n, words)


def format_code(code: Code, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.extend(str(w) for w in code)
    return "\n".join(lines) + "\n"


def read_code(path: Union[str, Path], n: int | None = None) -> Code:
    return parse_code(Path(path).read_text(), n)


def write_code(path: Union[str, Path], code: Code, header: Iterable[str] = ()) -> None:
    Path(path).write_text(format_code(code, header))

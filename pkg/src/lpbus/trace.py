"""Bus transmission traces and their text format.

One word per line, either a fixed-width bit string (leftmost character is
wire 1) or ``0x``-prefixed hex expanded most-significant-bit first to the
trace width.  ``#`` lines and blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Union

from lpbus.errors import InvalidArgumentError, InvalidTraceError
from lpbus.hamming import BitWord


@dataclass(frozen=True)
class Trace:
    """Words sent on consecutive bus cycles; all share ``width``."""

    width: int
    words: tuple[BitWord, ...]
    source: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        for i, word in enumerate(self.words):
            if word.n != self.width:
                raise InvalidTraceError(f"word {word} has width {word.n}, expected {self.width}", i + 1)

    @classmethod
    def from_ints(cls, width: int, values: Iterable[int], source: str = "") -> "Trace":
        return cls(width, tuple(BitWord.from_int(width, v) for v in values), source)

    def to_ints(self) -> list[int]:
        return [w.to_int() for w in self.words]

    def __len__(self) -> int:
        return len(self.words)


def parse_trace(text: str, width: int | None = None, source: str = "") -> Trace:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            entries.append((lineno, line))
    if width is None:
        width = next((len(s) for _, s in entries if not s.lower().startswith("0x")), None)
        if width is None:
            if entries:
                raise InvalidTraceError("hex-only trace needs an explicit width", entries[0][0])
            raise InvalidTraceError("empty trace needs an explicit width")
    words = []
    for lineno, line in entries:
        try:
            if line.lower().startswith("0x"):
                word = BitWord.from_int(width, int(line[2:], 16))
            else:
                word = BitWord.from_string(line)
        except (InvalidArgumentError, ValueError) as exc:
            raise InvalidTraceError(str(exc), lineno) from None
        if word.n != width:
            raise InvalidTraceError(f"width {word.n}, expected {width}", lineno)
        words.append(word)
    return Trace(width, tuple(words), source)


def format_trace(trace: Trace) -> str:
    return "".join(f"{w}\n" for w in trace.words)


def read_trace(path: Union[str, Path], width: int | None = None) -> Trace:
    path = Path(path)
    return parse_trace(path.read_text(), width, source=str(path))


def write_trace(path: Union[str, Path], trace: Trace) -> None:
    Path(path).write_text(format_trace(trace))

"""Table-free encoder and decoder for the optimal stateless LP code.

A ``k``-bit source value ``x`` is sent as a word of weight ``t``, where the
cumulative layer counts ``N_{t-1} < x <= N_t`` select the layer and colex
unranking of ``x - N_{t-1} - 1`` selects the word inside it.  Layers are
filled lightest first, so the image of the source is a prefix of the Kleitman
code in (weight, colex) order and any two codewords differ in at most
``delta`` wires.

For odd ``delta`` the heaviest layer only holds words with a 1 on the fixed
wire ``x0``; those are ranked through the remaining ``n - 1`` wires.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction

from lpbus.combinatorics import binomial, colex_rank, colex_unrank, rank_points, unrank_points
from lpbus.errors import InvalidArgumentError, InvalidCodewordError, InvalidTraceError
from lpbus.hamming import BitWord
from lpbus.lp_codes import kleitman_size
from lpbus.trace import Trace


def _capacity(n: int, delta: int) -> int:
    return kleitman_size(n, min(delta, n))


def minimal_width(k: int, delta: int) -> tuple[int, Fraction]:
    """Smallest bus width ``n`` whose optimal LP code holds ``2^k`` words.

    Returns ``(n, n/k)``; the second item is the wire expansion.
    """
    if k < 1:
        raise InvalidArgumentError(f"need k >= 1, got {k}")
    if delta < 1:
        raise InvalidArgumentError(f"need delta >= 1, got {delta}")
    if delta == 1 and k > 1:
        # diameter-1 codes never exceed two words
        raise InvalidArgumentError(f"no width carries 2^{k} words with delta=1")
    target = 1 << k
    # capacity is non-decreasing in n, so gallop then bisect
    lo, hi = k, k
    while _capacity(hi, delta) < target:
        lo, hi = hi + 1, 2 * hi
    while lo < hi:
        mid = (lo + hi) // 2
        if _capacity(mid, delta) >= target:
            hi = mid
        else:
            lo = mid + 1
    return lo, Fraction(lo, k)


@dataclass(frozen=True)
class CodecConfig:
    """Immutable encoder/decoder parameters.

    ``delta`` is stored clamped to ``n``.  ``cumulative[i + 1]`` holds
    ``N_i``, the largest source value sent with weight at most ``i``;
    ``cumulative[0] = N_{-1} = -1``.
    """

    k: int
    n: int
    delta: int
    x0: int = 1
    max_weight: int = field(init=False)
    pinned_top: bool = field(init=False)
    cumulative: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        if self.k < 1 or self.n < 1:
            raise InvalidArgumentError(f"need k, n >= 1, got k={self.k}, n={self.n}")
        if self.delta < 1:
            raise InvalidArgumentError(f"need delta >= 1, got {self.delta}")
        if not 1 <= self.x0 <= self.n:
            raise InvalidArgumentError(f"fixed wire x0={self.x0} outside [1, {self.n}]")
        delta = min(self.delta, self.n)
        if delta == self.n:
            full, pinned = self.n, False
        else:
            full, pinned = delta // 2, bool(delta % 2)
        counts = [binomial(self.n, i) for i in range(full + 1)]
        if pinned:
            counts.append(binomial(self.n - 1, full))
        cumulative = [-1]
        for c in counts:
            cumulative.append(cumulative[-1] + c)
        if cumulative[-1] + 1 < 1 << self.k:
            raise InvalidArgumentError(
                f"(n={self.n}, delta={delta}) code has {cumulative[-1] + 1} words, "
                f"fewer than the 2^{self.k} source values"
            )
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "max_weight", len(counts) - 1)
        object.__setattr__(self, "pinned_top", pinned)
        object.__setattr__(self, "cumulative", tuple(cumulative))

    @classmethod
    def create(cls, k: int, delta: int, n: int | None = None, x0: int = 1) -> "CodecConfig":
        """Config for ``k`` source bits; ``n`` defaults to :func:`minimal_width`."""
        if n is None:
            n, _ = minimal_width(k, delta)
        return cls(k, n, delta, x0)

    @property
    def wire_expansion(self) -> Fraction:
        return Fraction(self.n, self.k)

    def layer_bound(self, t: int) -> int:
        """N_t, with N_{-1} = -1."""
        return self.cumulative[t + 1]


def encode_value(cfg: CodecConfig, value: int) -> BitWord:
    if not 0 <= value < 1 << cfg.k:
        raise InvalidArgumentError(f"source value {value} outside [0, 2^{cfg.k} - 1]")
    t = bisect_left(cfg.cumulative, value) - 1
    rank = value - cfg.layer_bound(t - 1) - 1
    if cfg.pinned_top and t == cfg.max_weight:
        rest = unrank_points(cfg.n - 1, t - 1, rank)
        return BitWord.from_support(cfg.n, [p if p < cfg.x0 else p + 1 for p in rest] + [cfg.x0])
    return colex_unrank(cfg.n, t, rank)


def encode(cfg: CodecConfig, x: BitWord) -> BitWord:
    """Map a ``k``-bit source word (read MSB first) to its ``n``-bit codeword."""
    if x.n != cfg.k:
        raise InvalidArgumentError(f"source word has width {x.n}, expected {cfg.k}")
    return encode_value(cfg, x.to_int())


def decode_value(cfg: CodecConfig, y: BitWord) -> int:
    if y.n != cfg.n:
        raise InvalidCodewordError(f"received word has width {y.n}, expected {cfg.n}")
    w = y.weight
    if w > cfg.max_weight:
        raise InvalidCodewordError(f"{y} has weight {w} > {cfg.max_weight}")
    if cfg.pinned_top and w == cfg.max_weight:
        points = y.support
        if cfg.x0 not in points:
            raise InvalidCodewordError(f"{y} lacks the fixed wire {cfg.x0}")
        rank = rank_points(tuple(p if p < cfg.x0 else p - 1 for p in points if p != cfg.x0))
    else:
        rank = colex_rank(w, y)
    value = rank + cfg.layer_bound(w - 1) + 1
    if value >= 1 << cfg.k:
        raise InvalidCodewordError(f"{y} lies beyond the codewords in use")
    return value


def decode(cfg: CodecConfig, y: BitWord) -> BitWord:
    """Inverse of :func:`encode` on the code image."""
    return BitWord.from_int(cfg.k, decode_value(cfg, y))


def encode_trace(cfg: CodecConfig, trace: Trace) -> Trace:
    if trace.width != cfg.k:
        raise InvalidTraceError(f"trace width {trace.width} != k={cfg.k}")
    out = []
    for i, word in enumerate(trace.words):
        try:
            out.append(encode(cfg, word))
        except InvalidArgumentError as exc:
            raise InvalidTraceError(str(exc), i + 1) from None
    return Trace(cfg.n, tuple(out), trace.source)


def decode_trace(cfg: CodecConfig, trace: Trace) -> Trace:
    if trace.width != cfg.n:
        raise InvalidTraceError(f"trace width {trace.width} != n={cfg.n}")
    out = []
    for i, word in enumerate(trace.words):
        try:
            out.append(decode(cfg, word))
        except InvalidArgumentError as exc:
            raise InvalidTraceError(str(exc), i + 1) from None
    return Trace(cfg.k, tuple(out), trace.source)

"""Cycle-based switching-energy simulation for off-chip buses.

Energy follows ``E = (sum_i k_i) * C * Vdd^2`` where ``k_i`` is the number of
wires that toggle on transition ``i``.  A trace of ``N`` words has ``N - 1``
transitions; ``k_i`` is the transition into word ``i + 1``.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from lpbus.codec import CodecConfig, encode_trace
from lpbus.errors import InvalidArgumentError, InvalidTraceError
from lpbus.trace import Trace

CYCLE_CONVENTION = "N words -> N-1 transitions; per_cycle[i] counts wires toggling into word i+1"

TRACE_KINDS = ("random", "alternating", "counter")


@dataclass(frozen=True)
class BusParams:
    capacitance: float
    vdd: float
    frequency: float | None = None

    def __post_init__(self) -> None:
        if not self.capacitance > 0 or not self.vdd > 0:
            raise InvalidArgumentError("capacitance and vdd must be positive")
        if self.frequency is not None and not self.frequency > 0:
            raise InvalidArgumentError("frequency must be positive")


@dataclass(frozen=True)
class EnergyReport:
    width: int
    cycles: int
    per_cycle: list[int]
    total_switches: int
    max_switches: int
    energy_joules: float
    avg_power_watts: float | None
    convention: str = CYCLE_CONVENTION

    def to_dict(self) -> dict:
        data = asdict(self)
        if self.avg_power_watts is None:
            del data["avg_power_watts"]
        return data


@dataclass(frozen=True)
class Comparison:
    raw: EnergyReport
    encoded: EnergyReport
    delta_guarantee: int

    def to_dict(self) -> dict:
        return {
            "raw": self.raw.to_dict(),
            "encoded": self.encoded.to_dict(),
            "delta_guarantee": self.delta_guarantee,
        }


def count_switches(trace: Trace) -> list[int]:
    """Toggled-wire count for every consecutive pair of words."""
    if not len(trace):
        raise InvalidTraceError("trace has no words")
    words = trace.words
    for i, word in enumerate(words):
        if word.n != trace.width:
            raise InvalidTraceError(f"width {word.n}, expected {trace.width}", i + 1)
    return [(a.mask ^ b.mask).bit_count() for a, b in zip(words, words[1:])]


def energy(trace: Trace, params: BusParams) -> EnergyReport:
    """Switch counts and energy of ``trace``.

    Average power is energy over elapsed time, ``cycles / frequency``; it is
    only reported when a frequency is given.
    """
    per_cycle = count_switches(trace)
    total = sum(per_cycle)
    joules = total * params.capacitance * params.vdd**2
    power = None
    if params.frequency is not None:
        power = joules * params.frequency / len(per_cycle) if per_cycle else 0.0
    return EnergyReport(
        width=trace.width,
        cycles=len(per_cycle),
        per_cycle=per_cycle,
        total_switches=total,
        max_switches=max(per_cycle, default=0),
        energy_joules=joules,
        avg_power_watts=power,
    )


def compare(raw: Trace, cfg: CodecConfig, params: BusParams) -> Comparison:
    """Energy of ``raw`` sent unencoded versus through the LP encoder."""
    if raw.width != cfg.k:
        raise InvalidTraceError(f"trace width {raw.width} != k={cfg.k}")
    encoded = energy(encode_trace(cfg, raw), params)
    if encoded.max_switches > cfg.delta:
        raise RuntimeError(
            f"encoded trace toggled {encoded.max_switches} wires, above delta={cfg.delta}"
        )
    return Comparison(energy(raw, params), encoded, cfg.delta)


def synth_trace(kind: str, width: int, length: int, seed: int | None = None) -> Trace:
    """Synthetic trace.

    ``alternating`` starts at all zeros and flips every wire each cycle,
    ``counter`` counts up modulo ``2^width``, ``random`` draws uniform words
    from ``random.Random(seed)`` and requires a seed.
    """
    if length < 1:
        raise InvalidArgumentError(f"length must be >= 1, got {length}")
    if width < 1:
        raise InvalidArgumentError(f"width must be >= 1, got {width}")
    full = (1 << width) - 1
    if kind == "alternating":
        values = [0 if i % 2 == 0 else full for i in range(length)]
    elif kind == "counter":
        values = [i & full for i in range(length)]
    elif kind == "random":
        if seed is None:
            raise InvalidArgumentError("random traces need an explicit seed")
        rng = random.Random(seed)
        values = [rng.getrandbits(width) for _ in range(length)]
    else:
        raise InvalidArgumentError(f"unknown trace kind {kind!r}; expected one of {TRACE_KINDS}")
    descriptor = f"synth:{kind}:width={width}:length={length}" + (f":seed={seed}" if kind == "random" else "")
    return Trace.from_ints(width, values, descriptor)

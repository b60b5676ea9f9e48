"""Optimal memoryless low-power bus codes.

Constructions of maximum-size codes whose words stay within a fixed Hamming
distance of each other, a table-free encoder/decoder for them, brute-force
optimality oracles for small instances and a switching-energy simulator.
"""

from lpbus.errors import (
    InvalidArgumentError,
    InvalidCodewordError,
    InvalidTraceError,
    LpBusError,
    ResourceLimitError,
)
from lpbus.hamming import BitWord, Code, SetSystem

__version__ = "0.1.0"

__all__ = [
    "BitWord",
    "Code",
    "SetSystem",
    "InvalidArgumentError",
    "InvalidCodewordError",
    "InvalidTraceError",
    "LpBusError",
    "ResourceLimitError",
]

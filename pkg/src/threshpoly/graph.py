"""Threshold graphs encoded by their creation sequences.

A graph on n vertices is given by n-1 bits b_1 .. b_(n-1).  Vertices are
numbered 1..n and {i, j} with i < j is an edge exactly when b_i = 1: a
set bit means vertex i is adjacent to every higher-numbered vertex, a
clear bit means it is added isolated.  Two such graphs are isomorphic
exactly when their bit strings are equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .oracle import DenseIntMatrix, oracle_cap


@dataclass(frozen=True)
class CreationSequence:
    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if self.n < 1:
            raise ValueError(f"vertex count must be at least 1, got {self.n}")
        if len(self.bits) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} bits for n={self.n}, got {len(self.bits)}"
            )
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("creation sequence bits must be 0 or 1")


def parse_sequence(text: str) -> CreationSequence:
    """Parse a string of '0'/'1' characters; n-1 characters give n vertices.

    The empty string is the single-vertex graph.
    """
    for pos, ch in enumerate(text, start=1):
        if ch not in "01":
            raise ValueError(
                f"invalid character {ch!r} at position {pos}: "
                "creation sequences contain only '0' and '1'"
            )
    return CreationSequence(len(text) + 1, tuple(1 if ch == "1" else 0 for ch in text))


@dataclass(frozen=True)
class ThresholdGraph:
    seq: CreationSequence

    @classmethod
    def from_string(cls, text: str) -> "ThresholdGraph":
        return cls(parse_sequence(text))

    @property
    def n(self) -> int:
        return self.seq.n

    @property
    def bits(self) -> tuple[int, ...]:
        return self.seq.bits


def edge_query(g: ThresholdGraph, i: int, j: int) -> bool:
    """Whether {i, j} is an edge; vertices are 1-indexed."""
    n = g.n
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"vertex out of range 1..{n}: ({i}, {j})")
    if i == j:
        raise ValueError(f"vertex {i} paired with itself")
    return g.bits[min(i, j) - 1] == 1


def edge_count(g: ThresholdGraph) -> int:
    """Number of edges: each set bit b_i contributes n - i edges."""
    n = g.n
    return sum(n - i for i, b in enumerate(g.bits, start=1) if b)


def to_dense_adjacency(g: ThresholdGraph, cap: int | None = None) -> DenseIntMatrix:
    """Explicit 0/1 adjacency matrix.

    Exists only to feed the dense oracles, so it refuses to materialize
    anything larger than the oracle cap.
    """
    if cap is None:
        cap = oracle_cap()
    if g.n > cap:
        raise ValueError(
            f"dense adjacency refused for n={g.n} > cap {cap} "
            "(set THRESH_ORACLE_CAP to raise it)"
        )
    n, bits = g.n, g.bits
    return DenseIntMatrix(
        tuple(
            tuple(1 if i != j and bits[min(i, j)] else 0 for j in range(n))
            for i in range(n)
        )
    )

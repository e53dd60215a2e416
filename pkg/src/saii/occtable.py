"""Sampled occurrence table: checkpointed per-symbol counts every k positions.

Checkpoint j stores raw code tallies over BWT positions [0, j*k); the
sentinel slot counts as an A here and is corrected at query time using
the BWT's dollar position.  A point query is one checkpoint lookup plus
a scan of at most k - 1 positions, so the table is k times smaller than
a full per-position table at the cost of that scan.

After an insertion at position p only checkpoints covering positions
>= p can be stale, so the incremental constructor refreshes blocks
floor(p / k) onward and leaves the prefix untouched.
"""

from __future__ import annotations

import numpy as np

from .alphabet import A
from .bwt import Bwt


class SampledOccTable:
    __slots__ = ("k", "_cp", "num_checkpoints")

    def __init__(self, k: int, reserve_len: int = 0):
        if k < 1:
            raise ValueError(f"sampling rate must be >= 1, got {k}")
        self.k = k
        self._cp = np.zeros((reserve_len // k + 1, 4), dtype=np.int64)
        self.num_checkpoints = 1

    def checkpoint(self, j: int):
        """Raw tallies over BWT[0 : j*k] (half open); row view, do not mutate."""
        return self._cp[j]

    def checkpoints(self):
        """(num_checkpoints, 4) view of the live rows."""
        return self._cp[: self.num_checkpoints]

    def rebuild_from(self, bwt: Bwt, from_block: int) -> "SampledOccTable":
        """Recompute checkpoints from `from_block` onward against `bwt`.

        Blocks before `from_block` must already agree with the buffer;
        they are not touched.  Handles growth when the BWT has crossed
        a k boundary since the last rebuild.
        """
        k = self.k
        n = bwt.data.length
        total = n // k + 1
        if total > len(self._cp):
            grown = np.zeros((max(total, 2 * len(self._cp)), 4), dtype=np.int64)
            grown[: self.num_checkpoints] = self._cp[: self.num_checkpoints]
            self._cp = grown
        cp = self._cp
        if from_block == 0:
            cp[0] = 0
            from_block = 1
        buf = bwt.data
        for j in range(from_block, total):
            tallies = buf.count_range((j - 1) * k, j * k)
            prev = cp[j - 1]
            row = cp[j]
            row[0] = prev[0] + tallies[0]
            row[1] = prev[1] + tallies[1]
            row[2] = prev[2] + tallies[2]
            row[3] = prev[3] + tallies[3]
        self.num_checkpoints = total
        return self

    @classmethod
    def build(cls, bwt: Bwt, k: int) -> "SampledOccTable":
        table = cls(k, reserve_len=bwt.data.length)
        table.rebuild_from(bwt, 0)
        return table

    def __eq__(self, other) -> bool:
        if not isinstance(other, SampledOccTable):
            return NotImplemented
        return (
            self.k == other.k
            and self.num_checkpoints == other.num_checkpoints
            and bool(np.array_equal(self.checkpoints(), other.checkpoints()))
        )

    def __repr__(self) -> str:
        return f"SampledOccTable(k={self.k}, checkpoints={self.num_checkpoints})"


def block_scan_count(bwt: Bwt, code: int, start: int, end: int) -> int:
    """Occurrences of `code` in bwt[start..end] inclusive.

    The sentinel slot is excluded when counting A.  Intended for spans
    shorter than one sampling block.
    """
    total = bwt.data.count_code(code, start, end + 1)
    if code == A and bwt.dollar_pos is not None and start <= bwt.dollar_pos <= end:
        total -= 1
    return total


def occ_count(table: SampledOccTable, bwt: Bwt, code: int, i: int) -> int:
    """Occurrences of `code` in bwt[0..i], sentinel excluded; occ(*, -1) = 0."""
    if i < 0:
        return 0
    k = table.k
    block = i // k
    anchor = block * k
    total = int(table._cp[block][code]) + bwt.data.count_code(code, anchor, i + 1)
    if code == A and bwt.dollar_pos is not None and bwt.dollar_pos <= i:
        total -= 1
    return total

"""DNA symbol codec: A,C,G,T as the 2-bit codes 0..3.

Code order equals lexical order, so comparing code sequences compares
the source strings.  The end-of-string sentinel is never encoded here;
it exists only as a position (see `saii.bwt.Bwt.dollar_pos`).
"""

from __future__ import annotations

from .errors import EmptyText, InvalidCharacter
from .packedbuf import tally_bytes

A, C, G, T = 0, 1, 2, 3
SYMBOLS = "ACGT"
N_SYMBOLS = 4

_CODE_OF = {}
for _i, _ch in enumerate(SYMBOLS):
    _CODE_OF[_ch] = _i
    _CODE_OF[_ch.lower()] = _i


class PackedSequence:
    """Immutable ACGT text packed at 2 bits per symbol.

    `data` holds exactly ceil(len/4) bytes, least-significant slot
    first; unused slots in the last byte are zero.
    """

    __slots__ = ("data", "length")

    def __init__(self, data: bytes, length: int):
        if len(data) != (length + 3) >> 2:
            raise ValueError(
                f"payload is {len(data)} bytes, expected {(length + 3) >> 2} for {length} symbols"
            )
        self.data = bytes(data)
        self.length = length

    @classmethod
    def from_codes(cls, codes) -> "PackedSequence":
        data = bytearray((len(codes) + 3) >> 2)
        for i, c in enumerate(codes):
            data[i >> 2] |= c << ((i & 3) << 1)
        return cls(bytes(data), len(codes))

    def __len__(self) -> int:
        return self.length

    def code_at(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.data[i >> 2] >> ((i & 3) << 1)) & 3

    def codes(self) -> list:
        data = self.data
        return [(data[i >> 2] >> ((i & 3) << 1)) & 3 for i in range(self.length)]

    def suffix(self, start: int) -> "PackedSequence":
        return PackedSequence.from_codes(self.codes()[start:])

    def tally(self) -> list:
        """Per-code symbol counts."""
        return tally_bytes(self.data, self.length)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PackedSequence):
            return NotImplemented
        return self.length == other.length and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.data, self.length))

    def __lt__(self, other: "PackedSequence") -> bool:
        return self.codes() < other.codes()

    def __repr__(self) -> str:
        shown = decode(self) if self.length <= 32 else decode(self)[:29] + "..."
        return f"PackedSequence({shown!r})"


def encode_text(text: str, substitute: bool = False) -> PackedSequence:
    """Pack an ACGT string (case folded).

    Characters outside ACGT raise InvalidCharacter unless `substitute`
    is set, in which case they become A.
    """
    if not text:
        raise EmptyText("cannot encode an empty text")
    data = bytearray((len(text) + 3) >> 2)
    get = _CODE_OF.get
    for i, ch in enumerate(text):
        code = get(ch)
        if code is None:
            if not substitute:
                raise InvalidCharacter(i, ch)
            code = A
        data[i >> 2] |= code << ((i & 3) << 1)
    return PackedSequence(bytes(data), len(text))


def decode(seq: PackedSequence) -> str:
    """Inverse of encode_text for every valid input."""
    data = seq.data
    return "".join(SYMBOLS[(data[i >> 2] >> ((i & 3) << 1)) & 3] for i in range(seq.length))

"""General bit twiddling functions used by this package."""
import typing


def iter_bits(mask: int) -> typing.Iterator[int]:
    """
    Iterate over the positions of the set bits of a mask, lowest first.

    Args:
        mask (int): A non-negative integer.

    Returns:
        generator: Bit positions.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    """Count the set bits of a non-negative integer."""
    return bin(mask).count("1")


def mask_of(indices: typing.Iterable[int]) -> int:
    """
    Get the bitmask with the given positions set.

    Args:
        indices (iterable): Bit positions.

    Returns:
        int
    """
    mask = 0
    for index in indices:
        mask |= 1 << index

    return mask


def low_mask(width: int) -> int:
    """Get an integer with the lowest `width` bits set."""
    return (1 << width) - 1


class BitPermuter:
    """
    Applies a fixed scatter of source bit positions onto target bit positions.

    The scatter is compiled into lookup tables over fixed-width chunks of the source,
    so applying it costs one table lookup per chunk.

    Attributes:
        width (int): Number of source bits.
        chunk (int): Number of source bits per lookup table.
    """

    __slots__ = ("width", "chunk", "_tables")

    def __init__(self, targets: typing.Sequence[int], chunk: int = 6) -> None:
        """
        Args:
            targets (sequence): `targets[k]` is the target position of source bit `k`.
            chunk (int, optional): Source bits handled per lookup table.
        """
        self.width = len(targets)
        self.chunk = chunk
        tables = []
        for start in range(0, self.width, chunk):
            positions = targets[start : start + chunk]
            table = [0] * (1 << len(positions))
            for value in range(1, len(table)):
                low = value & -value
                table[value] = table[value ^ low] | (1 << positions[low.bit_length() - 1])

            tables.append(tuple(table))

        self._tables = tuple(tables)

    def __call__(self, mask: int) -> int:
        result = 0
        chunk = self.chunk
        step = (1 << chunk) - 1
        for table in self._tables:
            result |= table[mask & step]
            mask >>= chunk

        return result

    def __repr__(self) -> str:
        return f"<BitPermuter(width={self.width})>"


__all__ = ["iter_bits", "popcount", "mask_of", "low_mask", "BitPermuter"]

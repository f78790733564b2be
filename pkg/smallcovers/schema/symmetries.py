"""The face-poset automorphisms of the n-cube, acting on characteristic matrices."""
import itertools
import typing


from pydantic import root_validator


from smallcovers.gf2 import Perm
from smallcovers.schema.base import CustomBase


class CubeSymmetry(CustomBase):
    """
    A symmetry `mu * chi_1^e_1 * ... * chi_n^e_n` of the n-cube's facets.

    `mu` permutes the pairs of opposite facets and `chi_t` swaps the two facets of pair `t`. As a map on facet
    columns it sends column `t + s*n` (pair `t`, side `s`) to column `mu(t) + (s ^ e_t)*n`. Multiplication is
    composition of these facet maps, `(g * h).facet_map() == g.facet_map() o h.facet_map()`.

    Attributes:
        perm (tuple): The permutation `mu` of facet pairs.
        reflections (tuple): The exponents `e_t`, each 0 or 1.
    """

    perm: typing.Tuple[int, ...]
    reflections: typing.Tuple[int, ...]

    @root_validator(skip_on_failure=True)
    def _consistent(cls, values: dict) -> dict:
        perm, reflections = values["perm"], values["reflections"]
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation")

        if len(reflections) != len(perm) or any(bit not in (0, 1) for bit in reflections):
            raise ValueError(f"{reflections} is not a reflection vector for {len(perm)} facet pair(s)")

        return values

    @classmethod
    def identity(cls, n: int) -> "CubeSymmetry":
        return cls(perm=tuple(range(n)), reflections=(0,) * n)

    @classmethod
    def from_reflections(cls, n: int, indices: typing.Iterable[int]) -> "CubeSymmetry":
        """Get the product of the reflections `chi_t` for `t` in `indices` (0-based)."""
        chosen = set(indices)
        return cls(perm=tuple(range(n)), reflections=tuple(int(t in chosen) for t in range(n)))

    @classmethod
    def all(cls, n: int) -> typing.Iterator["CubeSymmetry"]:
        """Iterate over all `2^n * n!` symmetries, permutations outermost."""
        for perm in itertools.permutations(range(n)):
            for reflections in itertools.product((0, 1), repeat=n):
                yield cls(perm=perm, reflections=reflections)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def mu(self) -> Perm:
        return Perm(self.perm)

    @property
    def reflection_count(self) -> int:
        return sum(self.reflections)

    def facet_map(self) -> typing.Tuple[int, ...]:
        """Get the image column of every facet column."""
        n = self.n
        return tuple(
            self.perm[column % n] + ((column // n) ^ self.reflections[column % n]) * n for column in range(2 * n)
        )

    def __mul__(self, other: "CubeSymmetry") -> "CubeSymmetry":
        if self.n != other.n:
            raise ValueError(f"Cannot compose symmetries of {self.n} and {other.n} facet pair(s)")

        return CubeSymmetry(
            perm=tuple(self.perm[t] for t in other.perm),
            reflections=tuple(other.reflections[t] ^ self.reflections[other.perm[t]] for t in range(self.n)),
        )

    def __repr__(self) -> str:
        return f"<CubeSymmetry(mu={list(self.perm)}, e={list(self.reflections)})>"


__all__ = ["CubeSymmetry"]

"""The polytopes small covers are counted over, and their facet conventions.

Facets map to matrix columns as follows. Factor `i` of a product contributes its facets `f_1 .. f_{n_i}` as the
consecutive columns `offset_i .. offset_i + n_i - 1` (offsets accumulate the factor dimensions), and its facet
`f_0` as column `n + i`. The first `n` facets therefore meet at a vertex. An n-cube is the product of `n`
intervals, so column `t` is facet F_{t+1} and column `n + t` is the opposite facet F_{n+t+1}.
"""
import itertools
import typing


from pydantic import NonNegativeInt, PositiveInt, validator


from smallcovers.schema.base import CustomBase


class PolytopeSpec(CustomBase):
    """The shared interface of the supported polytopes."""

    @property
    def factors(self) -> typing.Tuple[int, ...]:
        """The simplex dimensions `(n_1, ..., n_l)`."""
        raise NotImplementedError

    @property
    def n(self) -> int:
        """The dimension of the polytope."""
        return sum(self.factors)

    @property
    def l(self) -> int:  # noqa: E743
        """The number of simplex factors."""
        return len(self.factors)

    @property
    def facet_count(self) -> int:
        return self.n + self.l

    @property
    def offsets(self) -> typing.Tuple[int, ...]:
        """The first row/column used by each factor."""
        return tuple(itertools.accumulate((0,) + self.factors))[:-1]

    def factor_of(self, index: int) -> int:
        """Get the factor whose coordinates include row `index`."""
        for factor, (offset, dim) in enumerate(zip(self.offsets, self.factors)):
            if offset <= index < offset + dim:
                return factor

        raise IndexError(f"Row {index} is outside 0..{self.n - 1}")

    @property
    def descriptor(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.descriptor


class Cube(PolytopeSpec):
    """
    The n-cube, with facets F_j and F_{n+j} opposite each other.

    Attributes:
        dimension (int): n.
    """

    dimension: NonNegativeInt

    @property
    def factors(self) -> typing.Tuple[int, ...]:
        return (1,) * self.dimension

    @property
    def facet_count(self) -> int:
        return 2 * self.dimension

    @property
    def descriptor(self) -> str:
        return f"cube({self.dimension})"


class SimplexProduct(PolytopeSpec):
    """
    A product of simplices of the given dimensions.

    Attributes:
        dims (tuple): `(n_1, ..., n_l)`, each at least 1.
    """

    dims: typing.Tuple[PositiveInt, ...]

    @validator("dims")
    def _non_empty(cls, value: typing.Tuple[int, ...]) -> typing.Tuple[int, ...]:
        if not value:
            raise ValueError("a product needs at least one simplex")

        return value

    @property
    def factors(self) -> typing.Tuple[int, ...]:
        return self.dims

    @property
    def descriptor(self) -> str:
        return f"simplices({','.join(map(str, self.dims))})"


__all__ = ["PolytopeSpec", "Cube", "SimplexProduct"]

"""Characteristic matrices over cubes and products of simplices, their refined forms, the bijections with
acyclic digraphs, the cube's symmetry action and the brute force counting oracles.

Column conventions are documented in `smallcovers.schema.polytopes`.
"""
import functools
import itertools
import typing


from pydantic import root_validator


from smallcovers.config import get_settings
from smallcovers.counts import burnside, cube_symmetry_order, exact_quotient, gl2_order
from smallcovers.dags import Digraph, successor_masks, topo_order
from smallcovers.errors import CycleError, DimensionError, MembershipError, check_cap
from smallcovers.gf2 import (
    BitMatrix,
    Perm,
    all_minors_one_rows,
    all_principal_minors_one,
    conjugate_by_perm,
    det_gf2,
    get_conjugator,
    inverse_gf2,
    mul_gf2,
    principal_det_rows,
    principal_subsets,
    rows_independent,
    select_columns,
)
from smallcovers.schema.base import CustomBase
from smallcovers.schema.polytopes import Cube, PolytopeSpec, SimplexProduct
from smallcovers.schema.symmetries import CubeSymmetry
from smallcovers.util.bits import BitPermuter, low_mask
from smallcovers.util.logging import LoggingClass
from smallcovers.util.partition import MaskRange, PartitionedStream, PartitionPlan, map_plan


Polytope = typing.Union[Cube, SimplexProduct]


@functools.lru_cache(maxsize=None)
def _vertex_sets(factors: typing.Tuple[int, ...]) -> typing.Tuple[typing.Tuple[int, ...], ...]:
    n = sum(factors)
    choices = []
    offset = 0
    for factor, dim in enumerate(factors):
        own = tuple(range(offset, offset + dim))
        #  Each option omits one facet of the simplex: f_0 first, then f_1 .. f_dim.
        options = [own] + [own[:k] + own[k + 1 :] + (n + factor,) for k in range(dim)]
        choices.append(options)
        offset += dim

    return tuple(tuple(sorted(itertools.chain.from_iterable(vertex))) for vertex in itertools.product(*choices))


def vertices(spec: PolytopeSpec) -> typing.List[typing.Tuple[int, ...]]:
    """
    Get the vertices of a polytope, each as the sorted columns of the `n` facets meeting there.

    A vertex of a product picks, per factor, every facet of that simplex except one. For the n-cube these are
    the `2^n` sets `{e(1), ..., e(n)}` with `e(t)` either facet `t` or its opposite `n + t`.
    """
    return list(_vertex_sets(spec.factors))


def _columns_characteristic(columns: typing.Sequence[int], vertex_sets: typing.Iterable[typing.Sequence[int]]) -> bool:
    return all(rows_independent(columns[column] for column in vertex) for vertex in vertex_sets)


def _require_shape(matrix: BitMatrix, n_rows: int, n_cols: int, what: str) -> None:
    if matrix.n_rows != n_rows or matrix.n_cols != n_cols:
        raise DimensionError(f"{what} must be {n_rows}x{n_cols}, got {matrix.n_rows}x{matrix.n_cols}")


def is_characteristic(matrix: BitMatrix, spec: PolytopeSpec) -> bool:
    """
    Check the non-singularity condition: the columns of the facets meeting at each vertex form a basis.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't `n x m` for the polytope.
    """
    _require_shape(matrix, spec.n, spec.facet_count, "A characteristic matrix")
    #  det(select_columns(matrix, vertex)) == 1 exactly when the selected columns are independent.
    return _columns_characteristic(matrix.columns(), _vertex_sets(spec.factors))


def _block_nonzero(matrix: BitMatrix, spec: PolytopeSpec, row_factor: int, column: int) -> bool:
    offset = spec.offsets[row_factor]
    return any((matrix.rows[row] >> column) & 1 for row in range(offset, offset + spec.factors[row_factor]))


def _selections(matrix: BitMatrix, spec: PolytopeSpec) -> typing.Iterator[typing.Tuple[int, ...]]:
    #  Row j of each scalar matrix is row k_j of block row j.
    blocks = [matrix.rows[offset : offset + dim] for offset, dim in zip(spec.offsets, spec.factors)]
    return itertools.product(*blocks)


def nonsingular_product_check(matrix: BitMatrix, spec: PolytopeSpec) -> bool:
    """
    Check a reduced `n x l` matrix over a product of simplices: every scalar `l x l` matrix built by picking
    one coordinate row from each block row must have all principal minors 1.

    Block `(i, j)` is the vector of column `j` over the rows of factor `i`. For a cube there is a single
    selection and this is `all_principal_minors_one`.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't `n x l`.
    """
    _require_shape(matrix, spec.n, spec.l, "A reduced matrix")
    return all(all_minors_one_rows(rows, spec.l) for rows in _selections(matrix, spec))


class CharMatrix(CustomBase):
    """
    A characteristic matrix: facet labels as columns, validated against the non-singularity condition.

    Attributes:
        spec (smallcovers.schema.polytopes.PolytopeSpec): The polytope.
        mat (smallcovers.gf2.BitMatrix): The `n x m` matrix `(A | B)`.
    """

    spec: Polytope
    mat: BitMatrix

    @root_validator(skip_on_failure=True)
    def _characteristic(cls, values: dict) -> dict:
        if not is_characteristic(values["mat"], values["spec"]):
            raise ValueError(f"{values['mat']!r} is not characteristic over {values['spec']}")

        return values

    def __repr__(self) -> str:
        return f"<CharMatrix({self.spec}:{self.mat.to_string()})>"


class ReducedMatrix(CustomBase):
    """
    The reduced submatrix `A^-1 B` of a refined characteristic matrix `(E_n | A^-1 B)`.

    Attributes:
        spec (smallcovers.schema.polytopes.PolytopeSpec): The polytope.
        mat (smallcovers.gf2.BitMatrix): The `n x (m - n)` matrix.
    """

    spec: Polytope
    mat: BitMatrix

    @root_validator(skip_on_failure=True)
    def _non_singular(cls, values: dict) -> dict:
        if not nonsingular_product_check(values["mat"], values["spec"]):
            raise ValueError(f"{values['mat']!r} is not a valid reduced matrix over {values['spec']}")

        return values

    def characteristic(self) -> CharMatrix:
        """Get the refined characteristic matrix `(E_n | self)`."""
        return CharMatrix.construct(spec=self.spec, mat=BitMatrix.identity(self.spec.n).augment(self.mat))

    def __repr__(self) -> str:
        return f"<ReducedMatrix({self.spec}:{self.mat.to_string()})>"


def refine(char: CharMatrix) -> ReducedMatrix:
    """
    Get the reduced submatrix `A^-1 B` of a characteristic matrix `(A | B)`, the refined representative of
    its GL(n, Z_2) orbit.

    `A` is invertible because the first `n` facets meet at a vertex.
    """
    n = char.spec.n
    columns = list(range(char.mat.n_cols))
    left = select_columns(char.mat, columns[:n])
    right = select_columns(char.mat, columns[n:])
    return ReducedMatrix.construct(spec=char.spec, mat=mul_gf2(inverse_gf2(left), right))


def _mn_rows(n: int, mask: int) -> typing.Tuple[int, ...]:
    return tuple((1 << index) | successors for index, successors in enumerate(successor_masks(mask, n)))


def mn_candidate_count(n: int) -> int:
    """Get the number of off-diagonal patterns of an `n x n` matrix."""
    return 1 << (n * (n - 1))


def mn_in_range(n: int, mask_range: MaskRange) -> typing.List[BitMatrix]:
    """Get the members of M(n) whose off-diagonal patterns lie in a candidate range, ascending."""
    members = []
    for mask in mask_range.indices():
        rows = _mn_rows(n, mask)
        if all_minors_one_rows(rows, n):
            members.append(BitMatrix._trusted(rows, n))

    return members


def count_mn_in_range(n: int, mask_range: MaskRange) -> int:
    """Count the members of M(n) whose off-diagonal patterns lie in a candidate range."""
    return sum(1 for mask in mask_range.indices() if all_minors_one_rows(_mn_rows(n, mask), n))


def _mn_cap(n: int, allow_long_runs: bool) -> None:
    if n < 1:
        raise DimensionError(f"M(n) is enumerated for n >= 1, got {n}")

    check_cap("M(n) enumeration", n, get_settings().enumeration_limit(allow_long_runs))


def enumerate_mn(n: int, allow_long_runs: bool = False, plan: PartitionPlan = None) -> PartitionedStream:
    """
    Stream M(n), the `n x n` matrices over GF(2) with every principal minor 1.

    The diagonal is forced to 1 by the 1x1 minors, so the `2^(n(n-1))` off-diagonal patterns are iterated in
    ascending order (with the digraph edge-mask bit order) and filtered.

    Args:
        n (int): The matrix size, at least 1.
        allow_long_runs (bool, optional): Use the long-run enumeration cap.
        plan (smallcovers.util.partition.PartitionPlan, optional): Restrict the stream to these candidate ranges.

    Returns:
        `smallcovers.util.partition.PartitionedStream` [ `smallcovers.gf2.BitMatrix` ]

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _mn_cap(n, allow_long_runs)
    return PartitionedStream(functools.partial(mn_in_range, n), plan or PartitionPlan.paged(mn_candidate_count(n)))


def count_mn(n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map) -> int:
    """
    Count M(n) by exhaustive filtering.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _mn_cap(n, allow_long_runs)
    plan = plan or PartitionPlan.split(mn_candidate_count(n))
    return sum(map_plan(functools.partial(count_mn_in_range, n), plan, mapper))


def _off_diagonal_graph(matrix: BitMatrix) -> Digraph:
    return Digraph(
        matrix.n_rows,
        ((i, j) for i, row in enumerate(matrix.rows) for j in range(matrix.n_cols) if i != j and (row >> j) & 1),
    )


def phi(graph: Digraph) -> BitMatrix:
    """
    Map an acyclic digraph to its member `E_n + A(G)` of M(n).

    Raises:
        CycleError (smallcovers.errors.CycleError): If the digraph has a cycle.
    """
    topo_order(graph)
    return BitMatrix(
        ((1 << index) | successors for index, successors in enumerate(graph.successors())), graph.n
    )


def phi_inv(matrix: BitMatrix) -> Digraph:
    """
    Map a member of M(n) back to its acyclic digraph, reading off-diagonal ones as edges.

    Raises:
        MembershipError (smallcovers.errors.MembershipError): If the matrix isn't in M(n).
    """
    if not matrix.is_square or not all_principal_minors_one(matrix):
        raise MembershipError(f"{matrix!r} is not in M(n)")

    return _off_diagonal_graph(matrix)


class UnipotentForm(CustomBase):
    """
    `conjugate_by_perm(A, perm)` is unipotent upper triangular.

    Attributes:
        perm (smallcovers.gf2.Perm): The conjugating permutation.
    """

    perm: Perm


class CycleForm(CustomBase):
    """
    `conjugate_by_perm(A, perm)` has unit diagonal, ones on the superdiagonal, a one in the bottom left corner
    and zeros elsewhere.

    Attributes:
        perm (smallcovers.gf2.Perm): The conjugating permutation.
    """

    perm: Perm


def cycle_form_rows(n: int) -> typing.Tuple[int, ...]:
    """Get the packed rows of the `n x n` cyclic normal form over GF(2)."""
    return tuple((1 << index) | (1 << ((index + 1) % n)) for index in range(n))


def lemma_normal_form(matrix: BitMatrix) -> typing.Union[UnipotentForm, CycleForm]:
    """
    Conjugate a matrix whose proper principal minors are all 1 into normal form.

    An invertible matrix conjugates to unipotent upper triangular form. A singular one conjugates to the cyclic
    form, whose off-diagonal digraph is a single cycle through every node.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square.
        MembershipError (smallcovers.errors.MembershipError): If a proper principal minor is 0.
    """
    if not matrix.is_square:
        raise DimensionError(f"Expected a square matrix, got {matrix.n_rows}x{matrix.n_cols}")

    n = matrix.n_rows
    full = low_mask(n)
    for subset, _ in principal_subsets(n):
        if subset != full and not principal_det_rows(matrix.rows, subset):
            raise MembershipError(f"{matrix!r} has a proper principal minor equal to 0")

    graph = _off_diagonal_graph(matrix)
    if det_gf2(matrix):
        return UnipotentForm(perm=topo_order(graph))

    if n == 1:
        return CycleForm(perm=Perm.identity(1))

    try:
        topo_order(graph)
    except CycleError as exc:
        perm = Perm(exc.cycle) if len(exc.cycle) == n else None
    else:
        perm = None

    if perm is None or conjugate_by_perm(matrix, perm).rows != cycle_form_rows(n):
        raise MembershipError(f"{matrix!r} doesn't conjugate to the cyclic normal form")

    return CycleForm(perm=perm)


def psi(reduced: ReducedMatrix) -> Digraph:
    """
    Map a reduced matrix over a product of `l` simplices to the digraph on `l` nodes with an edge `(i, j)`
    for every non-zero off-diagonal vector block. The result is acyclic.

    Raises:
        MembershipError (smallcovers.errors.MembershipError): If the reduced matrix fails the non-singularity check.
    """
    spec, matrix = reduced.spec, reduced.mat
    if not nonsingular_product_check(matrix, spec):
        raise MembershipError(f"{reduced!r} is not a valid reduced matrix")

    return Digraph(
        spec.l,
        ((i, j) for i in range(spec.l) for j in range(spec.l) if i != j and _block_nonzero(matrix, spec, i, j)),
    )


class _ReducedLayout:
    #  Candidate reduced matrices over a product: the diagonal blocks are forced to all-ones vectors
    #  and the remaining n(l-1) bits are iterated as a free mask, scattered into row-major position.

    __slots__ = ("n", "l", "diagonal", "scatter", "free_bits")

    def __init__(self, spec: PolytopeSpec) -> None:
        self.n, self.l = spec.n, spec.l
        positions = [row * self.l + spec.factor_of(row) for row in range(self.n)]
        self.diagonal = sum(1 << position for position in positions)
        free = [position for position in range(self.n * self.l) if not (self.diagonal >> position) & 1]
        self.free_bits = len(free)
        self.scatter = BitPermuter(free, chunk=8)

    def rows(self, mask: int) -> typing.Tuple[int, ...]:
        flat = self.scatter(mask) | self.diagonal
        step = low_mask(self.l)
        return tuple((flat >> (row * self.l)) & step for row in range(self.n))


@functools.lru_cache(maxsize=None)
def _reduced_layout(spec: PolytopeSpec) -> _ReducedLayout:
    return _ReducedLayout(spec)


def reduced_candidate_count(spec: PolytopeSpec) -> int:
    """Get the number of reduced-matrix candidates iterated for a product (diagonal blocks forced)."""
    return 1 << _reduced_layout(spec).free_bits


def reduced_in_range(spec: PolytopeSpec, mask_range: MaskRange) -> typing.List[ReducedMatrix]:
    """Get the valid reduced matrices of a candidate range, ascending."""
    layout = _reduced_layout(spec)
    found = []
    for mask in mask_range.indices():
        matrix = BitMatrix._trusted(layout.rows(mask), layout.l)
        if nonsingular_product_check(matrix, spec):
            found.append(ReducedMatrix.construct(spec=spec, mat=matrix))

    return found


def count_reduced_in_range(spec: PolytopeSpec, mask_range: MaskRange) -> int:
    """Count the valid reduced matrices of a candidate range."""
    layout = _reduced_layout(spec)
    return sum(
        1
        for mask in mask_range.indices()
        if nonsingular_product_check(BitMatrix._trusted(layout.rows(mask), layout.l), spec)
    )


def _reduced_cap(spec: PolytopeSpec, allow_long_runs: bool) -> None:
    #  The cap on free bits matches M(n) enumeration: n(n-1) at the enumeration cap.
    limit = get_settings().enumeration_limit(allow_long_runs)
    check_cap("reduced matrix enumeration (free bits)", _reduced_layout(spec).free_bits, limit * (limit - 1))


def enumerate_reduced_product(
    spec: PolytopeSpec, allow_long_runs: bool = False, plan: PartitionPlan = None
) -> PartitionedStream:
    """
    Stream every valid reduced matrix over a product of simplices, in ascending candidate order.

    Every candidate is re-checked in full by `nonsingular_product_check`; forcing the diagonal blocks only
    skips candidates that fail a 1x1 minor.

    Returns:
        `smallcovers.util.partition.PartitionedStream` [ `smallcovers.covers.ReducedMatrix` ]

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If the free bits are over the enumeration cap.
    """
    _reduced_cap(spec, allow_long_runs)
    return PartitionedStream(
        functools.partial(reduced_in_range, spec), plan or PartitionPlan.paged(reduced_candidate_count(spec))
    )


def count_reduced_product(
    spec: PolytopeSpec, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count the D-J classes over a product of simplices by exhaustive enumeration of reduced matrices.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If the free bits are over the enumeration cap.
    """
    _reduced_cap(spec, allow_long_runs)
    plan = plan or PartitionPlan.split(reduced_candidate_count(spec))
    return sum(map_plan(functools.partial(count_reduced_in_range, spec), plan, mapper))


def psi_fiber_sizes(
    spec: PolytopeSpec, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> typing.Dict[Digraph, int]:
    """
    Count, for every digraph hit, the valid reduced matrices `psi` sends to it.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If the free bits are over the enumeration cap.
    """
    sizes: typing.Dict[Digraph, int] = {}
    for reduced in enumerate_reduced_product(spec, allow_long_runs, plan).collect(mapper):
        graph = psi(reduced)
        sizes[graph] = sizes.get(graph, 0) + 1

    return sizes


def symmetry_apply(char: CharMatrix, symmetry: CubeSymmetry) -> CharMatrix:
    """
    Act on a characteristic matrix over the n-cube by a facet symmetry: `lambda -> lambda o h`.

    Column `c` of the result is column `h(c)` of the input, so `mu` moves the facet-pair blocks together and each
    reflection swaps a facet with its opposite. This is a right action:
    `symmetry_apply(symmetry_apply(c, g), h) == symmetry_apply(c, g * h)`.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the polytope isn't a cube of the symmetry's dimension.
    """
    if not isinstance(char.spec, Cube) or char.spec.dimension != symmetry.n:
        raise DimensionError(f"{symmetry!r} doesn't act on {char.spec}")

    columns = char.mat.columns()
    image = tuple(columns[target] for target in symmetry.facet_map())
    return CharMatrix.construct(spec=char.spec, mat=BitMatrix.from_columns(image, char.mat.n_rows))


def cube_candidate_count(n: int) -> int:
    """Get the number of `n x 2n` candidate matrices."""
    return 1 << (2 * n * n)


def cube_characteristic_in_range(n: int, mask_range: MaskRange) -> typing.List[typing.Tuple[int, ...]]:
    """
    Get the characteristic matrices over the n-cube among a range of candidates, as packed column tuples.

    Candidate `c` has column `k` equal to bits `k*n .. k*n + n - 1` of `c`.
    """
    vertex_sets = _vertex_sets((1,) * n)
    step = low_mask(n)
    found = []
    for candidate in mask_range.indices():
        columns = tuple((candidate >> (k * n)) & step for k in range(2 * n))
        if all(columns) and _columns_characteristic(columns, vertex_sets):
            found.append(columns)

    return found


class CubeCharacteristicCache(LoggingClass):
    """A process local cache of cf(I^n) as packed column tuples, filled by brute force on first use."""

    def __init__(self) -> None:
        self._found: typing.Dict[int, typing.Tuple[typing.Tuple[int, ...], ...]] = {}

    def get(
        self, n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
    ) -> typing.Tuple[typing.Tuple[int, ...], ...]:
        """
        Get every characteristic matrix over the n-cube, in ascending candidate order.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If `n` is negative.
            CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the cube brute force cap.
        """
        if n < 0:
            raise DimensionError(f"cf(I^n) is enumerated for n >= 0, got {n}")

        check_cap("cf(I^n) brute force", n, get_settings().cube_bruteforce_limit(allow_long_runs))
        if n not in self._found:
            self.log.info("Enumerating cf(I^%s) over %s candidates", n, cube_candidate_count(n))
            plan = plan or PartitionPlan.split(cube_candidate_count(n))
            parts = map_plan(functools.partial(cube_characteristic_in_range, n), plan, mapper)
            self._found[n] = tuple(itertools.chain.from_iterable(parts))
            self.log.info("Found %s characteristic matrices over the %s-cube", len(self._found[n]), n)

        return self._found[n]


_CUBE_CHARACTERISTIC = CubeCharacteristicCache()


def enumerate_cube_characteristic(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> typing.List[CharMatrix]:
    """
    Get cf(I^n), every characteristic matrix over the n-cube, by brute force over all `2^(2n^2)` candidates.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If `n` is below 1; cf(I^0) only holds the empty 0x0 matrix.
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the cube brute force cap.
    """
    if n < 1:
        raise DimensionError(f"Characteristic matrices are built for n >= 1, got {n}")

    spec = Cube(dimension=n)
    return [
        CharMatrix.construct(spec=spec, mat=BitMatrix.from_columns(columns, n))
        for columns in _CUBE_CHARACTERISTIC.get(n, allow_long_runs, plan, mapper)
    ]


def count_cube_dj_bruteforce(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count the D-J classes over the n-cube as |cf(I^n)| / |GL(n, Z_2)|; the action is free so this divides.

    Raises:
        ConsistencyError (smallcovers.errors.ConsistencyError): If |cf(I^n)| isn't a multiple of |GL(n, Z_2)|.
    """
    found = _CUBE_CHARACTERISTIC.get(n, allow_long_runs, plan, mapper)
    return exact_quotient(len(found), gl2_order(n), f"|cf(I^{n})|")


def fixed_set_size(
    n: int,
    symmetry: CubeSymmetry,
    allow_long_runs: bool = False,
    plan: PartitionPlan = None,
    mapper: typing.Callable = map,
) -> int:
    """
    Count the characteristic matrices over the n-cube fixed by a symmetry, by brute force.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the symmetry isn't of the n-cube.
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the cube brute force cap.
    """
    if symmetry.n != n:
        raise DimensionError(f"{symmetry!r} is not a symmetry of the {n}-cube")

    facet_map = symmetry.facet_map()
    found = _CUBE_CHARACTERISTIC.get(n, allow_long_runs, plan, mapper)
    return sum(
        1 for columns in found if all(columns[target] == columns[source] for source, target in enumerate(facet_map))
    )


def _row_major_key(columns: typing.Sequence[int], n_rows: int) -> int:
    #  The row-major serialization as a binary number, so keys order like serializations.
    width = len(columns)
    last = n_rows * width - 1
    key = 0
    for column, bits in enumerate(columns):
        for row in range(n_rows):
            if (bits >> row) & 1:
                key |= 1 << (last - (row * width + column))

    return key


def orbit_count_equivariant_bruteforce(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count the orbits of cf(I^n) under all `2^n n!` facet symmetries, i.e. equivariant homeomorphism classes.

    Each matrix is replaced by the least serialization over its orbit and the distinct minima are counted.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the cube brute force cap.
    """
    found = _CUBE_CHARACTERISTIC.get(n, allow_long_runs, plan, mapper)
    facet_maps = [symmetry.facet_map() for symmetry in CubeSymmetry.all(n)]
    minima = set()
    for columns in found:
        minima.add(min(_row_major_key([columns[target] for target in facet_map], n) for facet_map in facet_maps))

    return len(minima)


def burnside_equivariant_bruteforce(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """Count the orbits of cf(I^n) by Burnside's formula over brute force fixed-set sizes."""
    sizes = [fixed_set_size(n, symmetry, allow_long_runs, plan, mapper) for symmetry in CubeSymmetry.all(n)]
    return burnside(sizes, cube_symmetry_order(n))


def conjugation_keys_in_range(n: int, mask_range: MaskRange) -> typing.FrozenSet[int]:
    """Get the conjugation-orbit keys of the members of M(n) whose patterns lie in a candidate range."""
    conjugator = get_conjugator(n)
    return frozenset(
        conjugator.orbit_key(rows)
        for rows in (_mn_rows(n, mask) for mask in mask_range.indices())
        if all_minors_one_rows(rows, n)
    )


def sn_conjugation_orbit_count(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count the orbits of M(n) under conjugation by all n! permutation matrices.

    M(0) holds only the empty matrix, so n = 0 gives one orbit.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    if n == 0:
        return 1

    _mn_cap(n, allow_long_runs)
    plan = plan or PartitionPlan.split(mn_candidate_count(n))
    keys: typing.Set[int] = set()
    for partial_keys in map_plan(functools.partial(conjugation_keys_in_range, n), plan, mapper):
        keys |= partial_keys

    return len(keys)


__all__ = [
    "vertices",
    "is_characteristic",
    "nonsingular_product_check",
    "CharMatrix",
    "ReducedMatrix",
    "refine",
    "mn_candidate_count",
    "mn_in_range",
    "count_mn_in_range",
    "enumerate_mn",
    "count_mn",
    "phi",
    "phi_inv",
    "UnipotentForm",
    "CycleForm",
    "cycle_form_rows",
    "lemma_normal_form",
    "psi",
    "reduced_candidate_count",
    "reduced_in_range",
    "count_reduced_in_range",
    "enumerate_reduced_product",
    "count_reduced_product",
    "psi_fiber_sizes",
    "symmetry_apply",
    "cube_candidate_count",
    "cube_characteristic_in_range",
    "CubeCharacteristicCache",
    "enumerate_cube_characteristic",
    "count_cube_dj_bruteforce",
    "fixed_set_size",
    "orbit_count_equivariant_bruteforce",
    "burnside_equivariant_bruteforce",
    "conjugation_keys_in_range",
    "sn_conjugation_orbit_count",
]

"""Exact closed-form and recurrence based counts of small covers and acyclic digraphs."""
import math
import threading
import typing


from smallcovers.dags import count_unlabeled_dags, enumerate_dags, outdegrees
from smallcovers.errors import ConsistencyError, DimensionError
from smallcovers.schema.symmetries import CubeSymmetry
from smallcovers.util.logging import LoggingClass
from smallcovers.util.partition import PartitionPlan


#  Labeled acyclic digraphs on n nodes, n = 0..7 (Robinson; Stanley).
LABELED_DAG_TABLE: typing.Tuple[int, ...] = (1, 1, 3, 25, 543, 29281, 3781503, 1138779265)
#  Equivariant homeomorphism classes of small covers over the n-cube, n = 0..5.
EQUIVARIANT_CLASS_TABLE: typing.Tuple[int, ...] = (1, 1, 6, 259, 87360, 236240088)
#  Acyclic digraphs on n unlabeled nodes, n = 0..7 (Robinson); an upper bound for weakly equivariant classes.
UNLABELED_DAG_TABLE: typing.Tuple[int, ...] = (1, 1, 2, 6, 31, 302, 5984, 243668)


class LabeledDagTable(LoggingClass):
    """
    A memo of R_k, the number of labeled acyclic digraphs, filled by the recurrence
    `R_n = sum_{k=1..n} (-1)^(k+1) C(n, k) 2^(k(n-k)) R_(n-k)`.

    Reads are lock free; extending the table takes a lock, so concurrent callers see a consistent prefix.
    """

    def __init__(self) -> None:
        self._values: typing.List[int] = [1]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise DimensionError(f"R_n is undefined for n = {n}")

        values = self._values
        if n < len(values):
            return values[n]

        with self._lock:
            values = list(self._values)
            for size in range(len(values), n + 1):
                total = 0
                for k in range(1, size + 1):
                    total += (-1) ** (k + 1) * math.comb(size, k) * 2 ** (k * (size - k)) * values[size - k]

                if total < 0:
                    raise ConsistencyError(f"The recurrence gave R_{size} = {total}")

                values.append(total)

            self.log.debug("Extended R_k up to k = %s", n)
            self._values = values

        return values[n]

    def __len__(self) -> int:
        return len(self._values)


_LABELED_DAGS = LabeledDagTable()


def r_labeled(n: int) -> int:
    """
    Get R_n, the number of acyclic digraphs on `n` labeled nodes, from the memoised recurrence.

    This is also the number of D-J classes of small covers over the n-cube.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If `n` is negative.
    """
    return _LABELED_DAGS[n]


def gl2_order(n: int) -> int:
    """Get |GL(n, Z_2)| = prod_{i=0..n-1} (2^n - 2^i), 1 for n = 0."""
    return math.prod((1 << n) - (1 << i) for i in range(n))


def cube_symmetry_order(n: int) -> int:
    """Get the order 2^n * n! of the n-cube's facet automorphism group."""
    return (1 << n) * math.factorial(n)


def exact_quotient(numerator: int, denominator: int, what: str) -> int:
    """
    Divide exactly.

    Raises:
        ConsistencyError (smallcovers.errors.ConsistencyError): If the division leaves a remainder.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ConsistencyError(f"{what}: {numerator} is not divisible by {denominator}")

    return quotient


def q_equivariant(n: int) -> int:
    """
    Get Q_n, the number of equivariant homeomorphism classes of small covers over the n-cube:
    `sum_k C(n, k) 2^(k(n-k)) R_k * |GL(n, Z_2)| / (2^n n!)`.

    Raises:
        ConsistencyError (smallcovers.errors.ConsistencyError): If the numerator isn't divisible by 2^n n!.
    """
    numerator = sum(math.comb(n, k) * 2 ** (k * (n - k)) * r_labeled(k) for k in range(n + 1)) * gl2_order(n)
    return exact_quotient(numerator, cube_symmetry_order(n), f"Q_{n}")


def fixed_set_formula(n: int, k: int) -> int:
    """
    Get the number of characteristic matrices over the n-cube fixed by a product of `k` distinct reflections.

    Fixing `k` reflections forces `k` columns of the reduced submatrix to unit vectors, leaving a free
    `k x (n-k)` block and an `(n-k) x (n-k)` block in M(n-k): `|GL(n, Z_2)| * 2^(k(n-k)) * R_(n-k)`.
    """
    if not 0 <= k <= n:
        raise DimensionError(f"Can't take {k} reflection(s) of the {n}-cube")

    return gl2_order(n) * 2 ** (k * (n - k)) * r_labeled(n - k)


def burnside_fixed_sizes(n: int) -> typing.List[int]:
    """
    Get the closed-form fixed-set size of every symmetry of the n-cube, in `CubeSymmetry.all` order.

    Symmetries that move a facet pair fix nothing.
    """
    return [
        fixed_set_formula(n, symmetry.reflection_count) if symmetry.mu.is_identity() else 0
        for symmetry in CubeSymmetry.all(n)
    ]


def burnside(fixed_sizes: typing.Iterable[int], group_order: int) -> int:
    """
    Count orbits as the average fixed-set size over a group.

    Args:
        fixed_sizes (iterable): |X^g| for every group element g.
        group_order (int): |G|.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If `group_order` is below 1.
        ConsistencyError (smallcovers.errors.ConsistencyError): If the sum isn't divisible by the group order,
            which means an upstream fixed-set count is wrong.
    """
    if group_order < 1:
        raise DimensionError(f"A group has at least one element, got {group_order}")

    return exact_quotient(sum(fixed_sizes), group_order, "Burnside sum")


def dj_weight(dims: typing.Sequence[int], degrees: typing.Sequence[int]) -> int:
    """Get `prod_i (2^(n_i) - 1)^outdeg(v_i)`, the number of reduced matrices over a DAG."""
    return math.prod(((1 << dim) - 1) ** degree for dim, degree in zip(dims, degrees))


def dj_product(*dims: int, allow_long_runs: bool = False) -> int:
    """
    Get the number of D-J classes over the product of simplices of dimensions `dims`, as the sum over labeled
    DAGs on `l = len(dims)` nodes of `prod_i (2^(n_i) - 1)^outdeg(v_i)`.

    With every `n_i = 1` this is R_l.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If no dimension is given or one is below 1.
        CapExceededError (smallcovers.errors.CapExceededError): If `l` is over the DAG enumeration cap.
    """
    if not dims or any(dim < 1 for dim in dims):
        raise DimensionError(f"Simplex dimensions must be at least 1, got {dims}")

    return sum(dj_weight(dims, outdegrees(graph)) for graph in enumerate_dags(len(dims), allow_long_runs))


def dj_product_pair(n1: int, n2: int) -> int:
    """The two factor closed form `1 + (2^n1 - 1) + (2^n2 - 1)`."""
    return 1 + ((1 << n1) - 1) + ((1 << n2) - 1)


def dj_product_triple(n1: int, n2: int, n3: int) -> int:
    """
    The three factor closed form in `x_i = 2^(n_i) - 1`:
    `1 + 2s + s^2 + e2 + s * p2 - p3`, with `s`, `e2`, `p2`, `p3` the sum, second elementary symmetric
    polynomial, sum of squares and sum of cubes of the `x_i`.
    """
    x = [(1 << dim) - 1 for dim in (n1, n2, n3)]
    total = sum(x)
    pairs = x[0] * x[1] + x[1] * x[2] + x[2] * x[0]
    squares = sum(value ** 2 for value in x)
    cubes = sum(value ** 3 for value in x)
    return 1 + 2 * total + total ** 2 + pairs + total * squares - cubes


def t_upper_bound(
    n: int,
    compute: bool = False,
    allow_long_runs: bool = False,
    plan: PartitionPlan = None,
    mapper: typing.Callable = map,
) -> int:
    """
    Get the number of acyclic digraphs on `n` unlabeled nodes, an upper bound for the number of weakly
    equivariant homeomorphism classes of small covers over the n-cube.

    Args:
        n (int): The dimension.
        compute (bool, optional): Count by canonical forms instead of reading the stored table.
            Sizes past the table are always computed.
        allow_long_runs (bool, optional): Use the long-run enumeration cap when computing.
        plan (smallcovers.util.partition.PartitionPlan, optional): The candidate ranges to compute over.
        mapper (callable, optional): An order preserving `map` used to run the ranges.

    Raises:
        ConsistencyError (smallcovers.errors.ConsistencyError): If a computed value disagrees with the table.
        CapExceededError (smallcovers.errors.CapExceededError): If a computation is over the enumeration cap.
    """
    in_table = 0 <= n < len(UNLABELED_DAG_TABLE)
    if in_table and not compute:
        return UNLABELED_DAG_TABLE[n]

    computed = count_unlabeled_dags(n, allow_long_runs, plan, mapper)
    if in_table and computed != UNLABELED_DAG_TABLE[n]:
        raise ConsistencyError(
            f"Computed {computed} unlabeled DAGs on {n} nodes, the table says {UNLABELED_DAG_TABLE[n]}"
        )

    return computed


__all__ = [
    "LABELED_DAG_TABLE",
    "EQUIVARIANT_CLASS_TABLE",
    "UNLABELED_DAG_TABLE",
    "LabeledDagTable",
    "r_labeled",
    "gl2_order",
    "cube_symmetry_order",
    "exact_quotient",
    "q_equivariant",
    "fixed_set_formula",
    "burnside_fixed_sizes",
    "burnside",
    "dj_weight",
    "dj_product",
    "dj_product_pair",
    "dj_product_triple",
    "t_upper_bound",
]

"""Labeled digraphs, acyclicity, exhaustive DAG enumeration and unlabeled (relabeling orbit) counts.

Edge sets are packed into an `n(n-1)`-bit mask. Ordered pairs `(i, j)` with `i != j` are numbered in
row-major order skipping the diagonal, so pair `(i, j)` is bit `i * (n - 1) + (j if j < i else j - 1)`.
"""
import functools
import typing


from smallcovers.config import get_settings
from smallcovers.errors import CycleError, DimensionError, check_cap
from smallcovers.gf2 import BitMatrix, Perm
from smallcovers.util.bits import BitPermuter, iter_bits, low_mask, popcount
from smallcovers.util.partition import MaskRange, PartitionedStream, PartitionPlan, map_plan


def pair_index(i: int, j: int, n: int) -> int:
    """Get the mask bit of the ordered pair `(i, j)` among `n` nodes."""
    return i * (n - 1) + (j if j < i else j - 1)


@functools.lru_cache(maxsize=None)
def pairs(n: int) -> typing.Tuple[typing.Tuple[int, int], ...]:
    """Get the ordered pairs of `n` nodes in mask bit order."""
    return tuple((i, j) for i in range(n) for j in range(n) if i != j)


class _PairTables:
    #  Per-n lookup tables shared by every digraph of that size.

    __slots__ = ("n", "row_width", "successor_tables", "predecessors")

    def __init__(self, n: int) -> None:
        self.n = n
        self.row_width = max(n - 1, 0)
        self.successor_tables = tuple(
            tuple(
                sum(1 << (j if j < i else j + 1) for j in iter_bits(bits)) for bits in range(1 << self.row_width)
            )
            for i in range(n)
        )
        #  Edge (i, j) becomes bit i of the predecessor mask of j, packed at offset j * n.
        self.predecessors = BitPermuter([j * n + i for i, j in pairs(n)], chunk=max(n - 1, 1))


@functools.lru_cache(maxsize=None)
def _tables(n: int) -> _PairTables:
    return _PairTables(n)


def successor_masks(mask: int, n: int) -> typing.Tuple[int, ...]:
    """Unpack an edge mask into per-node successor bitmasks."""
    tables = _tables(n)
    width = tables.row_width
    step = low_mask(width)
    return tuple(table[(mask >> (i * width)) & step] for i, table in enumerate(tables.successor_tables))


def _predecessor_masks(mask: int, n: int) -> typing.List[int]:
    packed = _tables(n).predecessors(mask)
    full = low_mask(n)
    return [(packed >> (j * n)) & full for j in range(n)]


def _acyclic_mask(mask: int, n: int) -> bool:
    predecessors = _predecessor_masks(mask, n)
    remaining = low_mask(n)
    while remaining:
        sources = 0
        for node in iter_bits(remaining):
            if not predecessors[node] & remaining:
                sources |= 1 << node

        if not sources:
            return False

        remaining ^= sources

    return True


class Digraph:
    """
    A labeled simple digraph without self-loops.

    Attributes:
        n (int): The number of nodes.
        mask (int): The packed edge set, see the module docstring for the bit order.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, edges: typing.Iterable[typing.Tuple[int, int]] = ()) -> None:
        """
        Args:
            n (int): The number of nodes.
            edges (iterable, optional): Ordered pairs `(i, j)`, repeats collapse into one edge.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): On a negative size, a self-loop
                or an endpoint out of range.
        """
        if n < 0:
            raise DimensionError(f"A digraph can't have {n} nodes")

        mask = 0
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise DimensionError(f"Invalid edge ({i}, {j}) on {n} node(s)")

            mask |= 1 << pair_index(i, j, n)

        self.n = n
        self.mask = mask

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Digraph":
        """
        Build a digraph from a packed edge mask.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If the mask has bits past `n(n-1)`.
        """
        if n < 0 or not 0 <= mask < 1 << (n * (n - 1) if n else 0):
            raise DimensionError(f"Edge mask {mask:#x} doesn't fit {n} node(s)")

        graph = object.__new__(cls)
        graph.n = n
        graph.mask = mask
        return graph

    @classmethod
    def from_line(cls, line: str) -> "Digraph":
        """
        Parse the dump serialization `"<n> <hex edge mask>"`.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): On malformed input.
        """
        try:
            n, mask = line.split()
            return cls.from_mask(int(n), int(mask, 16))
        except ValueError as exc:
            raise DimensionError(f"Malformed digraph line {line!r}") from exc

    @property
    def edges(self) -> typing.FrozenSet[typing.Tuple[int, int]]:
        ordered = pairs(self.n)
        return frozenset(ordered[bit] for bit in iter_bits(self.mask))

    def successors(self) -> typing.Tuple[int, ...]:
        """Get, per node, the bitmask of nodes it has an edge to."""
        return successor_masks(self.mask, self.n)

    def predecessors(self) -> typing.Tuple[int, ...]:
        """Get, per node, the bitmask of nodes with an edge into it."""
        return tuple(_predecessor_masks(self.mask, self.n))

    def adjacency_matrix(self) -> BitMatrix:
        """
        Get the vertex adjacency matrix A(G) over GF(2).

        Raises:
            DimensionError (smallcovers.errors.DimensionError): On the empty digraph, which has no matrix.
        """
        return BitMatrix(self.successors(), self.n)

    def to_line(self) -> str:
        """Get the dump serialization: the node count and the hex edge mask."""
        return f"{self.n} {self.mask:x}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"<Digraph({self.n}:{sorted(self.edges)})>"


def is_acyclic(graph: Digraph) -> bool:
    """Check whether a digraph has no directed cycle, by repeatedly removing source nodes."""
    return _acyclic_mask(graph.mask, graph.n)


def _witness_cycle(predecessors: typing.Sequence[int], remaining: int) -> typing.List[int]:
    #  Every remaining node has a remaining predecessor, so walking backwards must revisit a node.
    node = (remaining & -remaining).bit_length() - 1
    seen: typing.Dict[int, int] = {}
    walk: typing.List[int] = []
    while node not in seen:
        seen[node] = len(walk)
        walk.append(node)
        choices = predecessors[node] & remaining
        node = (choices & -choices).bit_length() - 1

    backwards = walk[seen[node] :]
    return backwards[:1] + backwards[:0:-1]


def topo_order(graph: Digraph) -> Perm:
    """
    Get a topological order of an acyclic digraph as a permutation.

    The returned `mu` lists the nodes in order, `mu(k)` being the k-th node, so every edge `(a, b)` has
    `mu.inverse()(a) < mu.inverse()(b)`. Equivalently `conjugate_by_perm(E + A(G), mu)` is unipotent upper
    triangular, and relabeling by `mu.inverse()` makes every edge go from a lower to a higher index.
    Among the available sources the smallest index is always removed first.

    Raises:
        CycleError (smallcovers.errors.CycleError): If the digraph has a cycle, carrying one witness cycle.
    """
    predecessors = _predecessor_masks(graph.mask, graph.n)
    remaining = low_mask(graph.n)
    order = []
    while remaining:
        source = next((node for node in iter_bits(remaining) if not predecessors[node] & remaining), None)
        if source is None:
            raise CycleError(_witness_cycle(predecessors, remaining))

        order.append(source)
        remaining ^= 1 << source

    return Perm(order)


def dag_candidate_count(n: int) -> int:
    """Get the number of edge masks on `n` labeled nodes."""
    return 1 << (n * (n - 1)) if n else 1


def acyclic_masks(n: int, mask_range: MaskRange) -> typing.Iterator[int]:
    """Iterate the acyclic edge masks of a candidate range in ascending order."""
    return (mask for mask in mask_range.indices() if _acyclic_mask(mask, n))


def dags_in_range(n: int, mask_range: MaskRange) -> typing.List[Digraph]:
    """Get the DAGs whose edge masks lie in a candidate range, ascending."""
    return [Digraph.from_mask(n, mask) for mask in acyclic_masks(n, mask_range)]


def count_dags_in_range(n: int, mask_range: MaskRange) -> int:
    """Count the acyclic edge masks of a candidate range."""
    return sum(1 for _ in acyclic_masks(n, mask_range))


def _enumeration_cap(n: int, allow_long_runs: bool) -> None:
    check_cap("DAG enumeration", n, get_settings().enumeration_limit(allow_long_runs))


def enumerate_dags(n: int, allow_long_runs: bool = False, plan: PartitionPlan = None) -> PartitionedStream:
    """
    Stream every labeled DAG on `n` nodes exactly once, in increasing edge-mask order.

    Args:
        n (int): The number of nodes.
        allow_long_runs (bool, optional): Use the long-run enumeration cap.
        plan (smallcovers.util.partition.PartitionPlan, optional): Restrict the stream to these candidate ranges,
            defaults to all `2^(n(n-1))` masks in pages.

    Returns:
        `smallcovers.util.partition.PartitionedStream` [ `smallcovers.dags.Digraph` ]

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _enumeration_cap(n, allow_long_runs)
    return PartitionedStream(
        functools.partial(dags_in_range, n), plan or PartitionPlan.paged(dag_candidate_count(n))
    )


def count_labeled_dags(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count labeled DAGs on `n` nodes by exhaustive filtering of edge masks.

    Args:
        n (int): The number of nodes.
        allow_long_runs (bool, optional): Use the long-run enumeration cap.
        plan (smallcovers.util.partition.PartitionPlan, optional): How the candidates are split.
        mapper (callable, optional): An order preserving map used to run the ranges.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _enumeration_cap(n, allow_long_runs)
    plan = plan or PartitionPlan.split(dag_candidate_count(n))
    return sum(map_plan(functools.partial(count_dags_in_range, n), plan, mapper))


def outdegrees(graph: Digraph) -> typing.Tuple[int, ...]:
    """Get the outdegree of every node."""
    return tuple(popcount(successors) for successors in graph.successors())


def relabel(graph: Digraph, perm: Perm) -> Digraph:
    """
    Relabel the nodes of a digraph, mapping each edge `(i, j)` to `(perm(i), perm(j))`.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the sizes differ.
    """
    if len(perm) != graph.n:
        raise DimensionError(f"Cannot relabel {graph.n} node(s) with a permutation of {len(perm)}")

    return Digraph(graph.n, ((perm(i), perm(j)) for i, j in graph.edges))


class Relabeler:
    """
    Computes lexicographically least adjacency serializations over all n! relabelings.

    A relabeled digraph's key is its row-major adjacency matrix read as a binary number, so the least key is
    the least serialization. Each permutation is compiled into a `BitPermuter` from edge masks to keys once.

    Attributes:
        n (int): The number of nodes.
    """

    __slots__ = ("n", "_permuters")

    def __init__(self, n: int) -> None:
        self.n = n
        last = n * n - 1
        self._permuters = tuple(
            BitPermuter([last - (perm(i) * n + perm(j)) for i, j in pairs(n)], chunk=max(n - 1, 1))
            for perm in Perm.all(n)
        )

    def key(self, mask: int) -> int:
        """Get the least serialization key over all relabelings of an edge mask."""
        return min(permuter(mask) for permuter in self._permuters)

    def key_to_string(self, key: int) -> str:
        return format(key, f"0{self.n * self.n}b") if self.n else ""


@functools.lru_cache(maxsize=None)
def get_relabeler(n: int) -> Relabeler:
    return Relabeler(n)


def canonical_form(graph: Digraph, allow_long_runs: bool = False) -> str:
    """
    Get the lexicographically least row-major adjacency serialization over all relabelings of a digraph.

    Two digraphs share a canonical form exactly when they are isomorphic.

    Returns:
        str: `n * n` characters '0'/'1', row by row.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _enumeration_cap(graph.n, allow_long_runs)
    relabeler = get_relabeler(graph.n)
    return relabeler.key_to_string(relabeler.key(graph.mask))


def canonical_keys_in_range(n: int, mask_range: MaskRange) -> typing.FrozenSet[int]:
    """Get the canonical keys of the DAGs whose edge masks lie in a candidate range."""
    relabeler = get_relabeler(n)
    return frozenset(relabeler.key(mask) for mask in acyclic_masks(n, mask_range))


def count_unlabeled_dags(
    n: int, allow_long_runs: bool = False, plan: PartitionPlan = None, mapper: typing.Callable = map
) -> int:
    """
    Count DAGs on `n` unlabeled nodes as the number of distinct canonical forms of labeled DAGs.

    Args:
        n (int): The number of nodes.
        allow_long_runs (bool, optional): Use the long-run enumeration cap.
        plan (smallcovers.util.partition.PartitionPlan, optional): How the candidates are split.
        mapper (callable, optional): An order preserving map used to run the ranges.

    Raises:
        CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
    """
    _enumeration_cap(n, allow_long_runs)
    plan = plan or PartitionPlan.split(dag_candidate_count(n))
    keys: typing.Set[int] = set()
    for partial_keys in map_plan(functools.partial(canonical_keys_in_range, n), plan, mapper):
        keys |= partial_keys

    return len(keys)


__all__ = [
    "pair_index",
    "pairs",
    "successor_masks",
    "Digraph",
    "is_acyclic",
    "topo_order",
    "dag_candidate_count",
    "acyclic_masks",
    "dags_in_range",
    "count_dags_in_range",
    "enumerate_dags",
    "count_labeled_dags",
    "outdegrees",
    "relabel",
    "Relabeler",
    "get_relabeler",
    "canonical_form",
    "canonical_keys_in_range",
    "count_unlabeled_dags",
]

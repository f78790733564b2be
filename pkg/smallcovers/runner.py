"""The main entry point for running counts, enumerations and verifications."""
import pathlib
import time
import typing


from smallcovers import counts, covers, dags
from smallcovers.config import get_settings
from smallcovers.errors import DimensionError
from smallcovers.pool import WorkerPool
from smallcovers.schema.polytopes import Cube, PolytopeSpec, SimplexProduct
from smallcovers.schema.records import CheckResult, CountRecord, DumpManifest, Method, Quantity, VerificationReport
from smallcovers.schema.symmetries import CubeSymmetry
from smallcovers.util import GENERATOR
from smallcovers.util.json import CustomJsonEncoder
from smallcovers.util.logging import LoggingClass
from smallcovers.util.partition import PartitionPlan


class Runner(LoggingClass):
    """
    The facade used by the command line front end, producing records from the library's counters.

    Attributes:
        pool (smallcovers.pool.WorkerPool): The pool every partitioned search is mapped over.
        allow_long_runs (bool): Whether the long-run caps apply.
        verify (bool): Whether count methods also report an independent value next to the computed one.
    """

    def __init__(self, jobs: int = 1, allow_long_runs: bool = False, verify: bool = False) -> None:
        """
        Args:
            jobs (int, optional): The number of worker processes.
            allow_long_runs (bool, optional): Used to raise enumeration and brute force caps to their long-run values.
            verify (bool, optional): Used to add table or brute force values next to computed counts.
        """
        self.pool = WorkerPool(jobs)
        self.allow_long_runs = allow_long_runs
        self.verify = verify

    def __enter__(self) -> "Runner":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.pool.close()

    def plan(self, total: int) -> PartitionPlan:
        """
        Split a candidate count into ranges for the pool.

        Args:
            total (int): The number of candidates.

        Returns:
            `smallcovers.util.partition.PartitionPlan`
        """
        return PartitionPlan.split(total, self.pool.jobs * get_settings().partitions_per_job)

    def _record(
        self, quantity: Quantity, polytope: PolytopeSpec, method: Method, compute: typing.Callable[[], int]
    ) -> CountRecord:
        start = time.perf_counter()
        value = compute()
        runtime_ms = (time.perf_counter() - start) * 1000
        self.log.info("%s over %s by %s: %s (%.1f ms)", quantity.value, polytope, method.value, value, runtime_ms)
        return CountRecord(
            quantity=quantity, polytope=str(polytope), value=value, method=method, runtime_ms=runtime_ms
        )

    def _report(
        self, verification: str, polytope: str, run: typing.Callable[[], typing.List[CheckResult]]
    ) -> VerificationReport:
        start = time.perf_counter()
        checks = run()
        report = VerificationReport.from_checks(verification, polytope, checks, (time.perf_counter() - start) * 1000)
        for check in report.checks:
            if not check.passed:
                self.log.warning("%s: %s expected %s, got %s", verification, check.name, check.expected, check.actual)

        return report

    @staticmethod
    def _table_record(quantity: Quantity, polytope: PolytopeSpec, table: typing.Sequence[int], n: int) -> CountRecord:
        return CountRecord(
            quantity=quantity, polytope=str(polytope), value=table[n], method=Method.TABLE, runtime_ms=0.0
        )

    def count_dj(self, polytope: PolytopeSpec) -> typing.List[CountRecord]:
        """
        Count the D-J classes over a cube (by the R_n recurrence) or a product of simplices (by the DAG sum).

        With `verify` set a cube count is followed by its table value and a product count by its exhaustive count.

        Args:
            polytope (smallcovers.schema.polytopes.PolytopeSpec): The polytope.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If a product has too many factors.
        """
        if isinstance(polytope, Cube):
            n = polytope.dimension
            records = [self._record(Quantity.DJ_CLASSES, polytope, Method.RECURRENCE, lambda: counts.r_labeled(n))]
            if self.verify and n < len(counts.LABELED_DAG_TABLE):
                records.append(self._table_record(Quantity.DJ_CLASSES, polytope, counts.LABELED_DAG_TABLE, n))

            return records

        records = [
            self._record(
                Quantity.DJ_CLASSES,
                polytope,
                Method.FORMULA,
                lambda: counts.dj_product(*polytope.factors, allow_long_runs=self.allow_long_runs),
            )
        ]
        if self.verify:
            plan = self.plan(covers.reduced_candidate_count(polytope))
            records.append(
                self._record(
                    Quantity.DJ_CLASSES,
                    polytope,
                    Method.BRUTEFORCE,
                    lambda: covers.count_reduced_product(polytope, self.allow_long_runs, plan, self.pool.map),
                )
            )

        return records

    def count_equivariant(self, n: int, bruteforce: bool = False) -> typing.List[CountRecord]:
        """
        Count the equivariant homeomorphism classes of small covers over the n-cube.

        Args:
            n (int): The dimension.
            bruteforce (bool, optional): Count orbits of the brute forced cf(I^n) instead of using the closed form.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If a brute force is over the cap.
        """
        polytope = Cube(dimension=n)
        if bruteforce:
            plan = self.plan(covers.cube_candidate_count(n))
            records = [
                self._record(
                    Quantity.EQUIVARIANT_CLASSES,
                    polytope,
                    Method.BRUTEFORCE,
                    lambda: covers.orbit_count_equivariant_bruteforce(n, self.allow_long_runs, plan, self.pool.map),
                )
            ]
        else:
            records = [
                self._record(Quantity.EQUIVARIANT_CLASSES, polytope, Method.FORMULA, lambda: counts.q_equivariant(n))
            ]

        if self.verify and n < len(counts.EQUIVARIANT_CLASS_TABLE):
            records.append(
                self._table_record(Quantity.EQUIVARIANT_CLASSES, polytope, counts.EQUIVARIANT_CLASS_TABLE, n)
            )

        return records

    def _unlabeled_computed(self, n: int, polytope: Cube) -> CountRecord:
        plan = self.plan(dags.dag_candidate_count(n))
        return self._record(
            Quantity.UNLABELED_DAG_BOUND,
            polytope,
            Method.BRUTEFORCE,
            lambda: counts.t_upper_bound(n, True, self.allow_long_runs, plan, self.pool.map),
        )

    def count_unlabeled_bound(self, n: int, compute: bool = False) -> typing.List[CountRecord]:
        """
        Get the number of acyclic digraphs on `n` unlabeled nodes, the upper bound for weakly equivariant classes.

        Args:
            n (int): The dimension.
            compute (bool, optional): Count canonical forms instead of reading the stored table.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If a computation is over the enumeration cap.
            ConsistencyError (smallcovers.errors.ConsistencyError): If a computed value disagrees with the table.
        """
        if n < 0:
            raise DimensionError(f"Can't count digraphs on {n} nodes")

        polytope = Cube(dimension=n)
        in_table = n < len(counts.UNLABELED_DAG_TABLE)
        if compute or not in_table:
            records = [self._unlabeled_computed(n, polytope)]
            if self.verify and in_table:
                records.append(
                    self._table_record(Quantity.UNLABELED_DAG_BOUND, polytope, counts.UNLABELED_DAG_TABLE, n)
                )

            return records

        records = [self._table_record(Quantity.UNLABELED_DAG_BOUND, polytope, counts.UNLABELED_DAG_TABLE, n)]
        if self.verify and n <= get_settings().enumeration_limit(self.allow_long_runs):
            records.append(self._unlabeled_computed(n, polytope))

        return records

    def count_gl(self, n: int) -> typing.List[CountRecord]:
        """
        Get |GL(n, Z_2)|, the group whose free action on cf(I^n) gives the D-J classes.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]
        """
        return [self._record(Quantity.GL_ORDER, Cube(dimension=n), Method.FORMULA, lambda: counts.gl2_order(n))]

    def _fixed_bruteforce(self, n: int, k: int, polytope: Cube) -> CountRecord:
        symmetry = CubeSymmetry.from_reflections(n, range(k))
        plan = self.plan(covers.cube_candidate_count(n))
        return self._record(
            Quantity.FIXED_SET,
            polytope,
            Method.BRUTEFORCE,
            lambda: covers.fixed_set_size(n, symmetry, self.allow_long_runs, plan, self.pool.map),
        )

    def count_fixed(self, n: int, k: int, bruteforce: bool = False) -> typing.List[CountRecord]:
        """
        Count the characteristic matrices over the n-cube fixed by the product of the first `k` reflections.

        Args:
            n (int): The dimension.
            k (int): The number of reflections.
            bruteforce (bool, optional): Count by brute force instead of the closed form.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If `k` isn't in `0..n`.
            CapExceededError (smallcovers.errors.CapExceededError): If a brute force is over the cap.
        """
        if not 0 <= k <= n:
            raise DimensionError(f"Can't take {k} reflection(s) of the {n}-cube")

        polytope = Cube(dimension=n)

        def formula() -> int:
            return counts.fixed_set_formula(n, k)

        if bruteforce:
            records = [self._fixed_bruteforce(n, k, polytope)]
            if self.verify:
                records.append(self._record(Quantity.FIXED_SET, polytope, Method.FORMULA, formula))

            return records

        records = [self._record(Quantity.FIXED_SET, polytope, Method.FORMULA, formula)]
        if self.verify and n <= get_settings().cube_bruteforce_limit(self.allow_long_runs):
            records.append(self._fixed_bruteforce(n, k, polytope))

        return records

    def _dump(self, out: pathlib.Path, polytope: Cube, kind: str, lines: typing.Sequence[str]) -> None:
        manifest = DumpManifest(polytope=str(polytope), kind=kind, count=len(lines), generator=GENERATOR)
        with open(out, "w", encoding="utf-8", newline="\n") as file:
            file.write(f"# {CustomJsonEncoder.dumps(manifest)}\n")
            for line in lines:
                file.write(line + "\n")

        self.log.info("Wrote %s %s record(s) to %s", len(lines), kind, out)

    def enumerate_mn(self, n: int, out: typing.Optional[pathlib.Path] = None) -> typing.List[CountRecord]:
        """
        Enumerate M(n), optionally dumping every member one per line.

        Args:
            n (int): The matrix size.
            out (pathlib.Path, optional): Where the dump is written.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
        """
        polytope = Cube(dimension=n)

        def run() -> int:
            stream = covers.enumerate_mn(n, self.allow_long_runs, self.plan(covers.mn_candidate_count(n)))
            members = stream.collect(self.pool.map)
            if out is not None:
                self._dump(out, polytope, "mn", [matrix.to_string() for matrix in members])

            return len(members)

        return [self._record(Quantity.DJ_CLASSES, polytope, Method.BRUTEFORCE, run)]

    def enumerate_dags(self, n: int, out: typing.Optional[pathlib.Path] = None) -> typing.List[CountRecord]:
        """
        Enumerate the labeled DAGs on `n` nodes, optionally dumping every one per line.

        Args:
            n (int): The number of nodes.
            out (pathlib.Path, optional): Where the dump is written.

        Returns:
            list [ `smallcovers.schema.records.CountRecord` ]

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
        """
        polytope = Cube(dimension=n)

        def run() -> int:
            stream = dags.enumerate_dags(n, self.allow_long_runs, self.plan(dags.dag_candidate_count(n)))
            graphs = stream.collect(self.pool.map)
            if out is not None:
                self._dump(out, polytope, "dags", [graph.to_line() for graph in graphs])

            return len(graphs)

        return [self._record(Quantity.LABELED_DAGS, polytope, Method.BRUTEFORCE, run)]

    def verify_bijection(self, n: int) -> VerificationReport:
        """
        Check that `phi` is a bijection from the labeled DAGs on `n` nodes onto M(n), exhaustively.

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the enumeration cap.
        """

        def run() -> typing.List[CheckResult]:
            expected = counts.r_labeled(n)
            graphs = dags.enumerate_dags(n, self.allow_long_runs, self.plan(dags.dag_candidate_count(n)))
            graphs = graphs.collect(self.pool.map)
            members = covers.enumerate_mn(n, self.allow_long_runs, self.plan(covers.mn_candidate_count(n)))
            members = members.collect(self.pool.map)
            images = [covers.phi(graph) for graph in graphs]
            member_set = set(members)
            return [
                CheckResult.compare("labeled DAGs", expected, len(graphs)),
                CheckResult.compare("members of M(n)", expected, len(members)),
                CheckResult.compare("distinct phi images", len(graphs), len(set(images))),
                CheckResult.compare("phi images in M(n)", len(graphs), sum(image in member_set for image in images)),
                CheckResult.compare(
                    "phi_inv round trips",
                    len(graphs),
                    sum(covers.phi_inv(image) == graph for graph, image in zip(graphs, images)),
                ),
            ]

        return self._report("bijection", str(Cube(dimension=n)), run)

    def verify_burnside(self, n: int) -> VerificationReport:
        """
        Check the equivariant class count over the n-cube against brute force: the per-symmetry fixed sets, the
        Burnside average and the canonical orbit count.

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If `n` is over the cube brute force cap.
        """

        def run() -> typing.List[CheckResult]:
            plan = self.plan(covers.cube_candidate_count(n))
            dj_classes = covers.count_cube_dj_bruteforce(n, self.allow_long_runs, plan, self.pool.map)
            symmetries = list(CubeSymmetry.all(n))
            sizes = [
                covers.fixed_set_size(n, symmetry, self.allow_long_runs, plan, self.pool.map) for symmetry in symmetries
            ]
            closed_form = counts.burnside_fixed_sizes(n)
            expected = counts.q_equivariant(n)
            return [
                CheckResult.compare("D-J classes by brute force", counts.r_labeled(n), dj_classes),
                CheckResult.compare(
                    "fixed sets matching the closed form",
                    len(symmetries),
                    sum(size == closed for size, closed in zip(sizes, closed_form)),
                ),
                CheckResult.compare("Burnside orbit count", expected, counts.burnside(sizes, len(symmetries))),
                CheckResult.compare(
                    "closed form Burnside orbit count", expected, counts.burnside(closed_form, len(symmetries))
                ),
                CheckResult.compare(
                    "canonical orbit count",
                    expected,
                    covers.orbit_count_equivariant_bruteforce(n, self.allow_long_runs, plan, self.pool.map),
                ),
            ]

        return self._report("burnside", str(Cube(dimension=n)), run)

    def verify_product(self, polytope: SimplexProduct) -> VerificationReport:
        """
        Check the D-J class count over a product of simplices: the DAG sum against exhaustive enumeration, the
        fiber sizes of `psi` and the closed forms for two and three factors.

        Raises:
            CapExceededError (smallcovers.errors.CapExceededError): If the enumeration is over the cap.
        """

        def run() -> typing.List[CheckResult]:
            dims = polytope.factors
            formula = counts.dj_product(*dims, allow_long_runs=self.allow_long_runs)
            plan = self.plan(covers.reduced_candidate_count(polytope))
            fibers = covers.psi_fiber_sizes(polytope, self.allow_long_runs, plan, self.pool.map)
            graphs = dags.enumerate_dags(len(dims), self.allow_long_runs).cached_list
            checks = [
                CheckResult.compare("DAG sum against reduced matrices", formula, sum(fibers.values())),
                CheckResult.compare(
                    "psi fibers matching the outdegree weight",
                    len(graphs),
                    sum(fibers.get(graph, 0) == counts.dj_weight(dims, dags.outdegrees(graph)) for graph in graphs),
                ),
            ]
            if len(dims) == 2:
                checks.append(CheckResult.compare("two factor closed form", counts.dj_product_pair(*dims), formula))
            elif len(dims) == 3:
                checks.append(CheckResult.compare("three factor closed form", counts.dj_product_triple(*dims), formula))

            if all(dim == 1 for dim in dims):
                checks.append(CheckResult.compare("labeled DAG count", counts.r_labeled(len(dims)), formula))

            return checks

        return self._report("product", str(polytope), run)

    def verify_tables(self) -> VerificationReport:
        """
        Check the stored tables: R_n and Q_n against their formulas, and the labeled and unlabeled DAG counts
        against enumeration up to the enumeration cap.
        """

        def run() -> typing.List[CheckResult]:
            limit = get_settings().enumeration_limit(self.allow_long_runs)
            checks = [
                CheckResult.compare(f"R_{n}", value, counts.r_labeled(n))
                for n, value in enumerate(counts.LABELED_DAG_TABLE)
            ]
            checks.extend(
                CheckResult.compare(f"Q_{n}", value, counts.q_equivariant(n))
                for n, value in enumerate(counts.EQUIVARIANT_CLASS_TABLE)
            )
            for n in range(min(limit, len(counts.UNLABELED_DAG_TABLE) - 1) + 1):
                plan = self.plan(dags.dag_candidate_count(n))
                checks.append(
                    CheckResult.compare(
                        f"labeled DAGs on {n} nodes",
                        counts.LABELED_DAG_TABLE[n],
                        dags.count_labeled_dags(n, self.allow_long_runs, plan, self.pool.map),
                    )
                )
                checks.append(
                    CheckResult.compare(
                        f"unlabeled DAGs on {n} nodes",
                        counts.UNLABELED_DAG_TABLE[n],
                        dags.count_unlabeled_dags(n, self.allow_long_runs, plan, self.pool.map),
                    )
                )
                mn_plan = self.plan(covers.mn_candidate_count(n)) if n else None
                checks.append(
                    CheckResult.compare(
                        f"conjugation orbits of M({n})",
                        counts.UNLABELED_DAG_TABLE[n],
                        covers.sn_conjugation_orbit_count(n, self.allow_long_runs, mn_plan, self.pool.map),
                    )
                )

            return checks

        return self._report("tables", "cube(n)", run)

    def __repr__(self) -> str:
        return f"<Runner(jobs={self.pool.jobs}, allow_long_runs={self.allow_long_runs}, verify={self.verify})>"


__all__ = ["Runner"]

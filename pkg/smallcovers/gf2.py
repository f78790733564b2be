"""Exact linear algebra over GF(2) and the integers for small dense bit matrices."""
import functools
import itertools
import math
import typing


import sympy


from smallcovers.config import get_settings
from smallcovers.errors import DimensionError, SingularMatrixError
from smallcovers.util.bits import BitPermuter, iter_bits, low_mask, mask_of


class Perm:
    """
    A permutation of `{0, ..., n-1}`.

    Composition follows function composition: `(mu * nu)(i) == mu(nu(i))`.

    Attributes:
        mapping (tuple): `mapping[i]` is the image of `i`.
    """

    __slots__ = ("mapping",)

    def __init__(self, mapping: typing.Iterable[int]) -> None:
        """
        Args:
            mapping (iterable): The image of each index in order.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If the mapping isn't a bijection.
        """
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise DimensionError(f"{mapping} is not a permutation of 0..{len(mapping) - 1}")

        self.mapping = mapping

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def all(cls, n: int) -> typing.Iterator["Perm"]:
        """Iterate over all n! permutations in lexicographic order of their mappings, identity first."""
        return map(cls, itertools.permutations(range(n)))

    def __call__(self, index: int) -> int:
        return self.mapping[index]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(self) != len(other):
            raise DimensionError(f"Cannot compose permutations of sizes {len(self)} and {len(other)}")

        return Perm(self.mapping[index] for index in other.mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def __iter__(self) -> typing.Iterator[int]:
        return iter(self.mapping)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(self.mapping)

    def __repr__(self) -> str:
        return f"Perm({list(self.mapping)})"

    def inverse(self) -> "Perm":
        inverse = [0] * len(self.mapping)
        for index, image in enumerate(self.mapping):
            inverse[image] = index

        return Perm(inverse)

    def is_identity(self) -> bool:
        return all(index == image for index, image in enumerate(self.mapping))


class BitMatrix:
    """
    A dense matrix over GF(2) with each row packed into an integer.

    Bit `j` of `rows[i]` holds `entry(i, j)`. Instances are immutable and hashable.

    Attributes:
        n_rows (int): The number of rows.
        n_cols (int): The number of columns.
        rows (tuple): The packed rows.
    """

    __slots__ = ("n_rows", "n_cols", "rows")

    def __init__(self, rows: typing.Iterable[int], n_cols: int) -> None:
        """
        Args:
            rows (iterable): Packed rows, bit `j` of row `i` being `entry(i, j)`.
            n_cols (int): The number of columns.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If a side is empty or over the dimension cap,
                or if a row has bits past `n_cols`.
        """
        rows = tuple(rows)
        cap = get_settings().dimension_cap
        if not 1 <= len(rows) <= cap or not 1 <= n_cols <= cap:
            raise DimensionError(f"A {len(rows)}x{n_cols} bit matrix is outside the 1..{cap} dimension cap")

        limit = 1 << n_cols
        for row in rows:
            if not 0 <= row < limit:
                raise DimensionError(f"Row {row:#x} doesn't fit in {n_cols} column(s)")

        self.n_rows = len(rows)
        self.n_cols = n_cols
        self.rows = rows

    @classmethod
    def _trusted(cls, rows: typing.Tuple[int, ...], n_cols: int) -> "BitMatrix":
        #  Skips validation, used on enumeration paths where rows are built in range.
        matrix = object.__new__(cls)
        matrix.n_rows = len(rows)
        matrix.n_cols = n_cols
        matrix.rows = rows
        return matrix

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        """Get the n x n identity matrix E_n."""
        return cls((1 << index for index in range(n)), n)

    @classmethod
    def from_lists(cls, entries: typing.Sequence[typing.Sequence[int]]) -> "BitMatrix":
        """
        Build a matrix from nested lists of 0/1 entries.

        Args:
            entries (sequence): Rows of entries, all the same length.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): On ragged rows or entries other than 0 and 1.
        """
        if not entries:
            raise DimensionError("A bit matrix needs at least one row")

        n_cols = len(entries[0])
        rows = []
        for row in entries:
            if len(row) != n_cols or any(entry not in (0, 1) for entry in row):
                raise DimensionError(f"Invalid bit matrix row {list(row)}")

            rows.append(mask_of(index for index, entry in enumerate(row) if entry))

        return cls(rows, n_cols)

    @classmethod
    def from_columns(cls, columns: typing.Sequence[int], n_rows: int) -> "BitMatrix":
        """
        Build a matrix from packed columns, bit `i` of `columns[j]` being `entry(i, j)`.

        Args:
            columns (sequence): The packed columns.
            n_rows (int): The number of rows.
        """
        return cls(_transpose(columns, n_rows), len(columns))

    @classmethod
    def from_string(cls, line: str) -> "BitMatrix":
        """
        Parse the dump serialization: rows joined by commas, each row as '0'/'1' characters.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): On malformed input.
        """
        try:
            return cls.from_lists([[int(char) for char in row] for row in line.strip().split(",")])
        except ValueError as exc:
            raise DimensionError(f"Malformed bit matrix line {line!r}") from exc

    def entry(self, row: int, col: int) -> int:
        if not (0 <= row < self.n_rows and 0 <= col < self.n_cols):
            raise DimensionError(f"Entry ({row}, {col}) is outside a {self.n_rows}x{self.n_cols} matrix")

        return (self.rows[row] >> col) & 1

    def to_lists(self) -> typing.List[typing.List[int]]:
        return [[(row >> col) & 1 for col in range(self.n_cols)] for row in self.rows]

    def to_string(self) -> str:
        """
        Get the dump serialization of this matrix.

        Returns:
            str: Rows joined by commas, character `j` of row `i` being `entry(i, j)`.
        """
        return ",".join("".join("1" if (row >> col) & 1 else "0" for col in range(self.n_cols)) for row in self.rows)

    def columns(self) -> typing.Tuple[int, ...]:
        """Get the packed columns, bit `i` of column `j` being `entry(i, j)`."""
        return _transpose(self.rows, self.n_cols)

    def augment(self, other: "BitMatrix") -> "BitMatrix":
        """
        Get the block matrix `(self | other)`.

        Raises:
            DimensionError (smallcovers.errors.DimensionError): If the row counts differ.
        """
        if self.n_rows != other.n_rows:
            raise DimensionError(f"Cannot augment {self.n_rows} row(s) with {other.n_rows} row(s)")

        return BitMatrix(
            (left | (right << self.n_cols) for left, right in zip(self.rows, other.rows)), self.n_cols + other.n_cols
        )

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitMatrix) and self.n_cols == other.n_cols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n_cols, self.rows))

    def __repr__(self) -> str:
        return f"<BitMatrix({self.n_rows}x{self.n_cols}:{self.to_string()})>"


def _transpose(rows: typing.Sequence[int], width: int) -> typing.Tuple[int, ...]:
    return tuple(
        mask_of(index for index, row in enumerate(rows) if (row >> col) & 1) for col in range(width)
    )


def _require_square(matrix: BitMatrix) -> int:
    if not matrix.is_square:
        raise DimensionError(f"Expected a square matrix, got {matrix.n_rows}x{matrix.n_cols}")

    return matrix.n_rows


def _subset_mask(indices: typing.Iterable[int], n: int) -> int:
    subset = 0
    for index in indices:
        if not 0 <= index < n:
            raise DimensionError(f"Index {index} is outside 0..{n - 1}")

        subset |= 1 << index

    if not subset:
        raise DimensionError("A principal minor needs a non-empty index set")

    return subset


def rows_independent(rows: typing.Iterable[int]) -> bool:
    """
    Check whether packed bit vectors are linearly independent over GF(2).

    Each vector is reduced against the vectors kept so far by clearing their leading bits;
    a vector that reduces to zero is dependent.
    """
    basis: typing.List[int] = []
    for vector in rows:
        for kept in basis:
            vector = min(vector, vector ^ kept)

        if not vector:
            return False

        basis.append(vector)

    return True


def principal_det_rows(rows: typing.Sequence[int], subset: int) -> int:
    """
    Get the GF(2) principal minor on a subset of packed square rows.

    Args:
        rows (sequence): Packed rows of a square matrix.
        subset (int): Bitmask of the row/column indices.

    Returns:
        int: 1 if the principal submatrix is invertible, else 0.
    """
    return int(rows_independent(rows[index] & subset for index in iter_bits(subset)))


@functools.lru_cache(maxsize=None)
def principal_subsets(n: int) -> typing.Tuple[typing.Tuple[int, typing.Tuple[int, ...]], ...]:
    """Get every non-empty subset of `range(n)` as `(mask, indices)`, in increasing mask order."""
    return tuple((subset, tuple(iter_bits(subset))) for subset in range(1, 1 << n))


def all_minors_one_rows(rows: typing.Sequence[int], n: int) -> bool:
    """`all_principal_minors_one` on packed rows, short-circuiting on the first zero minor."""
    for subset, indices in principal_subsets(n):
        basis: typing.List[int] = []
        for index in indices:
            vector = rows[index] & subset
            for kept in basis:
                vector = min(vector, vector ^ kept)

            if not vector:
                return False

            basis.append(vector)

    return True


def det_gf2(matrix: BitMatrix) -> int:
    """
    Get the determinant of a square matrix over GF(2).

    Returns:
        int: 1 if the matrix is invertible over GF(2), else 0.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square.
    """
    _require_square(matrix)
    return int(rows_independent(matrix.rows))


def principal_minor_gf2(matrix: BitMatrix, indices: typing.Iterable[int]) -> int:
    """
    Get the GF(2) determinant of the submatrix on rows and columns `indices`.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square, the index set is empty
            or an index is out of range.
    """
    n = _require_square(matrix)
    return principal_det_rows(matrix.rows, _subset_mask(indices, n))


def all_principal_minors_one(matrix: BitMatrix) -> bool:
    """
    Check whether every principal minor of a square matrix is 1 over GF(2), i.e. membership of M(n).

    Subsets are visited in increasing bitmask order and the check stops at the first zero minor.
    """
    n = _require_square(matrix)
    return all_minors_one_rows(matrix.rows, n)


def inverse_gf2(matrix: BitMatrix) -> BitMatrix:
    """
    Invert a square matrix over GF(2) by Gauss-Jordan elimination.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square.
        SingularMatrixError (smallcovers.errors.SingularMatrixError): If the matrix is singular.
    """
    n = _require_square(matrix)
    work = [row | (1 << (n + index)) for index, row in enumerate(matrix.rows)]
    for col in range(n):
        pivot = next((index for index in range(col, n) if (work[index] >> col) & 1), None)
        if pivot is None:
            raise SingularMatrixError(f"{matrix!r} is singular over GF(2)")

        work[col], work[pivot] = work[pivot], work[col]
        for index in range(n):
            if index != col and (work[index] >> col) & 1:
                work[index] ^= work[col]

    return BitMatrix._trusted(tuple(row >> n for row in work), n)


def mul_gf2(left: BitMatrix, right: BitMatrix) -> BitMatrix:
    """
    Multiply two matrices over GF(2).

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the inner dimensions differ.
    """
    if left.n_cols != right.n_rows:
        raise DimensionError(f"Cannot multiply {left.n_rows}x{left.n_cols} by {right.n_rows}x{right.n_cols}")

    rows = []
    for row in left.rows:
        product = 0
        for index in iter_bits(row):
            product ^= right.rows[index]

        rows.append(product)

    return BitMatrix._trusted(tuple(rows), right.n_cols)


def select_columns(matrix: BitMatrix, indices: typing.Sequence[int]) -> BitMatrix:
    """
    Get the columns `indices` of a matrix, in the given order.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If no index is given or one is out of range.
    """
    if not indices:
        raise DimensionError("Column selection needs at least one index")

    for index in indices:
        if not 0 <= index < matrix.n_cols:
            raise DimensionError(f"Column {index} is outside 0..{matrix.n_cols - 1}")

    return BitMatrix._trusted(
        tuple(mask_of(slot for slot, index in enumerate(indices) if (row >> index) & 1) for row in matrix.rows),
        len(indices),
    )


def conjugate_by_perm(matrix: BitMatrix, perm: Perm) -> BitMatrix:
    """
    Conjugate a square matrix by a permutation matrix: `result(i, j) == matrix(perm(i), perm(j))`.

    This equals `P(perm)^-1 * matrix * P(perm)` where `P(perm)` has units at `(perm(i), i)`, and is a right action:
    `conjugate_by_perm(conjugate_by_perm(m, mu), nu) == conjugate_by_perm(m, mu * nu)`.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the sizes differ.
    """
    n = _require_square(matrix)
    if len(perm) != n:
        raise DimensionError(f"Cannot conjugate a {n}x{n} matrix by a permutation of {len(perm)}")

    mapping = perm.mapping
    rows = []
    for index in range(n):
        source = matrix.rows[mapping[index]]
        rows.append(mask_of(col for col in range(n) if (source >> mapping[col]) & 1))

    return BitMatrix._trusted(tuple(rows), n)


def is_unipotent_upper(matrix: BitMatrix) -> bool:
    """Check for a square matrix with unit diagonal and zeros below it."""
    n = _require_square(matrix)
    return all(matrix.rows[index] & low_mask(index + 1) == 1 << index for index in range(n))


class Conjugator:
    """
    Computes canonical representatives of square bit matrices under conjugation by all n! permutations.

    A matrix's key is its row-major serialization read as a binary number, so comparing keys compares
    serializations lexicographically. Each permutation is compiled into a `BitPermuter` once.

    Attributes:
        n (int): The matrix size.
    """

    __slots__ = ("n", "_permuters")

    def __init__(self, n: int) -> None:
        self.n = n
        last = n * n - 1
        permuters = []
        for perm in Perm.all(n):
            inverse = perm.inverse().mapping
            #  Source entry (a, b) lands at (inverse(a), inverse(b)).
            targets = [last - (inverse[a] * n + inverse[b]) for a in range(n) for b in range(n)]
            permuters.append(BitPermuter(targets, chunk=n))

        self._permuters = tuple(permuters)

    @staticmethod
    def flatten(rows: typing.Sequence[int], n: int) -> int:
        flat = 0
        for index, row in enumerate(rows):
            flat |= row << (index * n)

        return flat

    def orbit_key(self, rows: typing.Sequence[int]) -> int:
        """Get the least serialization key over the conjugation orbit of packed square rows."""
        flat = self.flatten(rows, self.n)
        return min(permuter(flat) for permuter in self._permuters)

    def key_to_string(self, key: int) -> str:
        """Render a key in the dump serialization."""
        bits = format(key, f"0{self.n * self.n}b") if self.n else ""
        return ",".join(bits[start : start + self.n] for start in range(0, len(bits), self.n))


@functools.lru_cache(maxsize=None)
def get_conjugator(n: int) -> Conjugator:
    return Conjugator(n)


def bareiss_det(entries: typing.Sequence[typing.Sequence[int]]) -> int:
    """
    Get the exact determinant of an integer matrix by fraction-free (Bareiss) elimination.

    Every division in the elimination is exact.
    """
    size = len(entries)
    if not size:
        return 1

    work = [list(row) for row in entries]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if not work[k][k]:
            swap = next((index for index in range(k + 1, size) if work[index][k]), None)
            if swap is None:
                return 0

            work[k], work[swap] = work[swap], work[k]
            sign = -sign

        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // previous

        previous = work[k][k]

    return sign * work[-1][-1]


def principal_minor_int(matrix: BitMatrix, indices: typing.Iterable[int]) -> int:
    """
    Get the exact integer principal minor on `indices`, reading entries as the integers 0 and 1.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square, the index set is empty
            or an index is out of range.
    """
    n = _require_square(matrix)
    chosen = tuple(iter_bits(_subset_mask(indices, n)))
    return bareiss_det([[(matrix.rows[row] >> col) & 1 for col in chosen] for row in chosen])


def integer_principal_minors(matrix: BitMatrix) -> typing.Dict[int, int]:
    """
    Get every integer principal minor of a (0,1)-matrix.

    Returns:
        dict: Subset bitmask to exact minor, in increasing mask order.
    """
    n = _require_square(matrix)
    entries = matrix.to_lists()
    return {
        subset: bareiss_det([[entries[row][col] for col in indices] for row in indices])
        for subset, indices in principal_subsets(n)
    }


def all_principal_minors_odd(matrix: BitMatrix) -> bool:
    """Check whether every integer principal minor of a (0,1)-matrix is odd."""
    return all(minor % 2 for minor in integer_principal_minors(matrix).values())


def char_poly_int(matrix: BitMatrix) -> typing.Tuple[int, ...]:
    """
    Get the exact characteristic polynomial `det(xE - M)` of a (0,1)-matrix.

    Returns:
        tuple: Integer coefficients from the leading `x^n` term down to the constant term.

    Raises:
        DimensionError (smallcovers.errors.DimensionError): If the matrix isn't square.
    """
    _require_square(matrix)
    polynomial = sympy.Matrix(matrix.to_lists()).charpoly()
    return tuple(int(coefficient) for coefficient in polynomial.all_coeffs())


def unipotent_char_poly(n: int) -> typing.Tuple[int, ...]:
    """Get the coefficients of `(x - 1)^n`, leading term first."""
    return tuple((-1) ** k * math.comb(n, k) for k in range(n + 1))


def has_positive_spectrum(matrix: BitMatrix) -> bool:
    """
    Check whether every eigenvalue of a (0,1)-matrix equals 1, exactly via its characteristic polynomial.

    For members of M(n) this is the positive-eigenvalue characterisation; it needs no floating point.
    """
    return char_poly_int(matrix) == unipotent_char_poly(matrix.n_rows)


__all__ = [
    "Perm",
    "BitMatrix",
    "Conjugator",
    "get_conjugator",
    "rows_independent",
    "principal_det_rows",
    "principal_subsets",
    "all_minors_one_rows",
    "det_gf2",
    "principal_minor_gf2",
    "all_principal_minors_one",
    "inverse_gf2",
    "mul_gf2",
    "select_columns",
    "conjugate_by_perm",
    "is_unipotent_upper",
    "bareiss_det",
    "principal_minor_int",
    "integer_principal_minors",
    "all_principal_minors_odd",
    "char_poly_int",
    "unipotent_char_poly",
    "has_positive_spectrum",
]

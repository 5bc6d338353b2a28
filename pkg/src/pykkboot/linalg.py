"""
Exact integer matrix algebra

Smith normal form with unimodular witnesses and the kernel/cokernel
presentations that every group computation in the package is built on.
All arithmetic is on Python integers (numpy object arrays where products
are needed), so nothing overflows.

Note that the pivot is always the entry of smallest absolute value in
the remaining block, ties broken by (row, column) order, so results are
reproducible for a given input.

"""

import logging
from dataclasses import dataclass

import numpy as np
from sympy import Matrix

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class IntMatrix:
    """
    Integer matrix stored row-major

    Arguments:
        rows (int) : Number of rows
        cols (int) : Number of columns
        entries (tuple) : rows*cols integers, row-major

    """

    rows    : int
    cols    : int
    entries : tuple = ()

    def __post_init__(self):

        if self.rows < 0 or self.cols < 0:
            raise ValueError( f'Negative matrix shape : {self.rows}x{self.cols}' )
        entries = tuple( int(e) for e in self.entries )
        if len(entries) != self.rows * self.cols:
            raise ValueError(
                f'Expected {self.rows*self.cols} entries for a '
                f'{self.rows}x{self.cols} matrix, got {len(entries)}'
            )
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def from_rows(cls, rows, cols=None):
        """
        Build from a list of rows

        Keyword arguments:
            cols (int) : Column count; required only when rows is empty

        """

        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError( f'Ragged rows; expected {cols} columns : {rows}' )
        return cls(len(rows), cols, tuple(e for row in rows for e in row))

    @classmethod
    def from_array(cls, array):
        """Build from a 2D numpy array (any integer or object dtype)"""

        array = np.asarray(array, dtype=object)
        if array.ndim != 2:
            raise ValueError( f'Expected a 2D array, got shape {array.shape}' )
        return cls(array.shape[0], array.shape[1], tuple(array.ravel()))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n):
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values, rows=None, cols=None):
        """
        Rectangular diagonal matrix

        Arguments:
            values (list) : Diagonal entries

        Keyword arguments:
            rows (int) : Row count, default len(values)
            cols (int) : Column count, default len(values)

        """

        values = list(values)
        rows   = len(values) if rows is None else rows
        cols   = len(values) if cols is None else cols
        if len(values) > min(rows, cols):
            raise ValueError( f'{len(values)} diagonal entries do not fit {rows}x{cols}' )
        out = [[0] * cols for _ in range(rows)]
        for i, val in enumerate(values):
            out[i][i] = val
        return cls.from_rows(out, cols=cols)

    @classmethod
    def hstack(cls, *mats, rows=None):
        """
        Concatenate matrices side by side

        Keyword arguments:
            rows (int) : Row count to use when no matrix is given

        """

        if not mats:
            return cls.zeros(rows or 0, 0)
        nrow = mats[0].rows
        for mat in mats:
            if mat.rows != nrow:
                raise ValueError( f'Row mismatch in hstack : {mat.rows} != {nrow}' )
        out = [
            [e for mat in mats for e in mat.row(i)]
            for i in range(nrow)
        ]
        return cls.from_rows(out, cols=sum(mat.cols for mat in mats))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i):
        return list( self.entries[i * self.cols:(i + 1) * self.cols] )

    def col(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def tolist(self):
        return [self.row(i) for i in range(self.rows)]

    def to_array(self):
        """Numpy object array of Python ints (exact)"""

        out = np.empty(self.shape, dtype=object)
        for i in range(self.rows):
            for j in range(self.cols):
                out[i, j] = self[i, j]
        return out

    def take_rows(self, start, stop):
        """Rows start..stop-1 as a new matrix"""

        return IntMatrix.from_rows(
            [self.row(i) for i in range(start, stop)],
            cols = self.cols,
        )

    def __matmul__(self, other):

        if self.cols != other.rows:
            raise ValueError( f'Shape mismatch : {self.shape} @ {other.shape}' )
        if self.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix.from_array( np.dot(self.to_array(), other.to_array()) )

    def __neg__(self):
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def is_zero(self):
        return not any(self.entries)

    def det(self):
        """Exact determinant of a square matrix (1 for 0x0)"""

        if self.rows != self.cols:
            raise ValueError( f'Determinant of non-square {self.shape} matrix' )
        if self.rows == 0:
            return 1
        return int( Matrix(self.tolist()).det() )

    def is_unimodular(self):
        return self.rows == self.cols and self.det() in (1, -1)

    def __str__(self):
        return str( self.tolist() )

@dataclass(frozen=True)
class SNFResult:
    """
    Smith normal form with witnesses: U @ M @ V == diag(d)

    Attributes:
        d (tuple) : min(rows, cols) nonnegative entries with d_i | d_{i+1};
            zeros come last
        U (IntMatrix) : rows x rows unimodular
        V (IntMatrix) : cols x cols unimodular

    """

    d : tuple
    U : IntMatrix
    V : IntMatrix

    @property
    def rank(self):
        return sum(1 for e in self.d if e != 0)

    def diagonal(self):
        """The diagonal matrix U @ M @ V"""

        return IntMatrix.diagonal(self.d, rows=self.U.rows, cols=self.V.rows)

def _swap_rows(A, U, i, j):

    if i != j:
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

def _swap_cols(A, V, i, j):

    if i != j:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

def _add_row(A, U, dst, src, q):
    """row dst += q * row src, in A and U"""

    A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
    U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

def _add_col(A, V, dst, src, q):
    """col dst += q * col src, in A and V"""

    for row in A:
        row[dst] += q * row[src]
    for row in V:
        row[dst] += q * row[src]

def _min_pivot(A, t):
    """Position of the smallest nonzero |entry| in the block A[t:, t:]"""

    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[i])):
            if A[i][j] != 0 and (best is None or abs(A[i][j]) < best[0]):
                best = (abs(A[i][j]), i, j)
    return None if best is None else best[1:]

def _clear_lines(A, U, V, t):
    """
    Reduce row t and column t against the pivot A[t][t]

    Returns:
        bool : True when both lines are clear; otherwise a smaller
            remainder has been swapped into the pivot position

    """

    nrow, ncol = len(A), len(A[0])
    pivot      = A[t][t]
    for i in range(t + 1, nrow):
        q = A[i][t] // pivot
        if q:
            _add_row(A, U, i, t, -q)
    for j in range(t + 1, ncol):
        q = A[t][j] // pivot
        if q:
            _add_col(A, V, j, t, -q)

    rest = [(abs(A[i][t]), 0, i) for i in range(t + 1, nrow) if A[i][t]]
    rest += [(abs(A[t][j]), 1, j) for j in range(t + 1, ncol) if A[t][j]]
    if not rest:
        return True
    _, kind, k = min(rest)
    if kind == 0:
        _swap_rows(A, U, t, k)
    else:
        _swap_cols(A, V, t, k)
    return False

def _non_divisible(A, t):
    """First row below t holding an entry not divisible by the pivot"""

    pivot = A[t][t]
    for i in range(t + 1, len(A)):
        for j in range(t + 1, len(A[i])):
            if A[i][j] % pivot:
                return i
    return None

def smith_normal_form(M):
    """
    Smith normal form of an integer matrix

    Arguments:
        M (IntMatrix) : Any integer matrix, empty allowed

    Returns:
        SNFResult : Divisor chain d and unimodular U, V with U @ M @ V == diag(d)

    """

    nrow, ncol = M.rows, M.cols
    A = M.tolist()
    U = IntMatrix.identity(nrow).tolist()
    V = IntMatrix.identity(ncol).tolist()

    diag = []
    for t in range(min(nrow, ncol)):
        pivot = _min_pivot(A, t)
        if pivot is None:
            break
        _swap_rows(A, U, t, pivot[0])
        _swap_cols(A, V, t, pivot[1])
        while True:
            if not _clear_lines(A, U, V, t):
                continue
            bad = _non_divisible(A, t)
            if bad is None:
                break
            _add_row(A, U, t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-e for e in A[t]]
            U[t] = [-e for e in U[t]]
        diag.append(A[t][t])

    diag += [0] * (min(nrow, ncol) - len(diag))
    logger.debug('SNF of %dx%d matrix : %s', nrow, ncol, diag)
    return SNFResult(
        d = tuple(diag),
        U = IntMatrix.from_rows(U, cols=nrow),
        V = IntMatrix.from_rows(V, cols=ncol),
    )

def cokernel_invariants(M):
    """
    Canonical form of coker(M : Z^cols -> Z^rows)

    Arguments:
        M (IntMatrix) : Relation matrix; columns are relations

    Returns:
        FGGroup : free rank rows - #{d_i != 0}, factors {d_i : d_i >= 2}

    """

    from .groups import FGGroup

    snf = smith_normal_form(M)
    return FGGroup(
        rank    = M.rows - snf.rank,
        factors = tuple(e for e in snf.d if e >= 2),
    )

def _normalize_sign(column):

    for e in column:
        if e != 0:
            return column if e > 0 else [-x for x in column]
    return column

def kernel_basis(M):
    """
    Basis of the integer kernel lattice {x in Z^cols : M x = 0}

    Arguments:
        M (IntMatrix) : Any integer matrix

    Returns:
        IntMatrix : cols x k matrix whose columns form a basis; each column
            has its first nonzero entry positive

    """

    snf  = smith_normal_form(M)
    cols = [
        _normalize_sign( snf.V.col(j) )
        for j in range(snf.rank, M.cols)
    ]
    return IntMatrix.from_rows(
        [[col[i] for col in cols] for i in range(M.cols)],
        cols = len(cols),
    )

def presented_cokernel(F, target_relations):
    """
    Cokernel of a homomorphism between presented groups

    Arguments:
        F (IntMatrix) : m x n matrix; column j is the image of source generator j
        target_relations (IntMatrix) : m x k relation matrix of the target

    Returns:
        FGGroup : coker(F)

    """

    return cokernel_invariants( IntMatrix.hstack(target_relations, F, rows=F.rows) )

def presented_kernel(F, source_relations, target_relations):
    """
    Kernel of a homomorphism between presented groups

    With A = Z^n/R_A and B = Z^m/R_B, the kernel is L/im(R_A) where L is
    the lattice of x with F x in im(R_B). L is spanned by the columns of P
    (x-part of ker[F | -R_B]); ker(F) is then presented by the relations
    c with P c in im(R_A).

    Arguments:
        F (IntMatrix) : m x n matrix of the homomorphism
        source_relations (IntMatrix) : n x kA relation matrix of the source
        target_relations (IntMatrix) : m x kB relation matrix of the target

    Returns:
        FGGroup : ker(F)

    """

    n     = F.cols
    lift  = kernel_basis( IntMatrix.hstack(F, -target_relations) )
    span  = lift.take_rows(0, n)
    rels  = kernel_basis( IntMatrix.hstack(span, -source_relations, rows=n) )
    return cokernel_invariants( rels.take_rows(0, span.cols) )

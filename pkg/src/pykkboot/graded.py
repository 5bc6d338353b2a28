"""
Z/2-graded groups

Graded versions of Hom, Ext, tensor and Tor with the degree conventions
of the UCT and Künneth sequences: degree-preserving maps sit in degree
0 and degree-exchanging maps in degree 1, and

    (M ⊗ N)_e = sum over i + j = e (mod 2) of M_i ⊗ N_j

and likewise for Tor. The tensor formula is sometimes printed with a
direct sum "M_i ⊕ M_j" in place of M_i ⊗ N_j; that reading is a misprint
and the tensor product of the graded pieces is what is computed here.

"""

from dataclasses import dataclass
from enum import IntEnum

from . import groups
from .groups import ZERO, ZERO_VALUE, GroupExpr, GroupValue

class Degree( IntEnum ):
    """Degree in Z/2"""

    EVEN = 0
    ODD  = 1

    def shift(self, by=1):
        return self + by

    def __add__(self, other):
        return Degree( (int(self) + int(other)) % 2 )

def as_degree(value):
    """Degree from 0/1 (other integers are reduced mod 2)"""

    return Degree( int(value) % 2 )

@dataclass(frozen=True)
class GradedGroup:
    """
    Z/2-graded abelian group

    Arguments:
        deg0 (GroupExpr) : Degree 0 part
        deg1 (GroupExpr) : Degree 1 part

    """

    deg0 : GroupExpr = ZERO
    deg1 : GroupExpr = ZERO

    def __getitem__(self, degree):
        return self.deg1 if as_degree(degree) else self.deg0

    def parts(self):
        return (self.deg0, self.deg1)

    def is_zero(self):
        return self.deg0.is_zero() and self.deg1.is_zero()

    def is_fg(self):
        return self.deg0.is_fg() and self.deg1.is_fg()

    def direct_sum(self, other):
        return GradedGroup(
            groups.direct_sum(self.deg0, other.deg0),
            groups.direct_sum(self.deg1, other.deg1),
        )

    def shift(self, by=1):
        return self if by % 2 == 0 else GradedGroup(self.deg1, self.deg0)

    def to_json(self):
        return {'deg0': str(self.deg0), 'deg1': str(self.deg1)}

    def __str__(self):
        return f'({self.deg0}, {self.deg1})'

ZERO_GRADED = GradedGroup()

@dataclass(frozen=True)
class GradedValue:
    """
    Pair of GroupValues in degrees 0 and 1

    Arguments:
        deg0 (GroupValue) : Degree 0 part
        deg1 (GroupValue) : Degree 1 part

    """

    deg0 : GroupValue = ZERO_VALUE
    deg1 : GroupValue = ZERO_VALUE

    @classmethod
    def exact(cls, graded):
        return cls( GroupValue.exact(graded.deg0), GroupValue.exact(graded.deg1) )

    def __getitem__(self, degree):
        return self.deg1 if as_degree(degree) else self.deg0

    def __add__(self, other):
        return GradedValue(self.deg0 + other.deg0, self.deg1 + other.deg1)

    def is_zero(self):
        return self.deg0.is_zero() and self.deg1.is_zero()

    def is_exact(self):
        return self.deg0.is_exact() and self.deg1.is_exact()

    def tags(self):
        """Unrepresentable tags of both degrees, sorted"""

        return tuple( sorted( set(self.deg0.tags) | set(self.deg1.tags) ) )

    def shift(self, by=1):
        return self if by % 2 == 0 else GradedValue(self.deg1, self.deg0)

    def as_graded(self):
        """The GradedGroup of an exact value"""

        if not self.is_exact():
            raise ValueError( f'Graded value is not representable : {self}' )
        return GradedGroup(self.deg0.group, self.deg1.group)

    def to_json(self):
        return {'deg0': str(self.deg0), 'deg1': str(self.deg1)}

    def __str__(self):
        return f'({self.deg0}, {self.deg1})'

def place(M, degree=Degree.EVEN):
    """
    The graded group M[degree]

    Arguments:
        M (GroupExpr) : Group

    Keyword arguments:
        degree (int) : 0 or 1

    Returns:
        GradedGroup

    """

    if as_degree(degree):
        return GradedGroup(ZERO, M)
    return GradedGroup(M, ZERO)

def suspend(M):
    """Swap the degrees (Bott periodicity: suspending twice is the identity)"""

    return M.shift(1)

def _graded_value(f, M, N):

    return GradedValue(
        f(M.deg0, N.deg0) + f(M.deg1, N.deg1),
        f(M.deg0, N.deg1) + f(M.deg1, N.deg0),
    )

def _graded_group(f, M, N):

    return GradedGroup(
        groups.direct_sum( f(M.deg0, N.deg0), f(M.deg1, N.deg1) ),
        groups.direct_sum( f(M.deg0, N.deg1), f(M.deg1, N.deg0) ),
    )

def graded_hom(M, N):
    """
    Graded Hom: degree-preserving maps in degree 0, degree-exchanging in 1

    Arguments:
        M (GradedGroup) : Source
        N (GradedGroup) : Target

    Returns:
        GradedValue

    """

    return _graded_value(groups.hom, M, N)

def graded_ext(M, N):
    """
    Graded Ext, same conventions as graded_hom

    Returns:
        GradedValue

    """

    return _graded_value(groups.ext, M, N)

def graded_tensor(M, N):
    """(M ⊗ N)_e = sum over i + j = e of M_i ⊗ N_j"""

    return _graded_group(groups.tensor, M, N)

def graded_tor(M, N):
    """Tor(M, N)_e = sum over i + j = e of Tor(M_i, N_j)"""

    return _graded_group(groups.tor, M, N)

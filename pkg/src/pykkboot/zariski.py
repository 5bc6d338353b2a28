"""
Points and subsets of Spec Z

A subset is either all of Spec Z or a finite set of points; these are
the only supports that objects of the modeled algebra can have.
Complements of finite sets are only ever needed for membership tests,
so they are represented by the lazy Cofinite marker instead.

"""

from dataclasses import dataclass

from .utils import check_point, points_up_to

@dataclass(frozen=True, order=True)
class SpecPoint:
    """
    Point of Spec Z

    Arguments:
        p (int) : 0 for the generic point (the zero ideal), else a prime

    """

    p : int

    def __post_init__(self):
        check_point(self.p)

    @classmethod
    def generic(cls):
        return cls(0)

    def is_generic(self):
        return self.p == 0

    def __str__(self):
        return str(self.p)

def as_point(point):
    """Accept an int or a SpecPoint"""

    return point if isinstance(point, SpecPoint) else SpecPoint(point)

@dataclass(frozen=True)
class SpecSubset:
    """
    All of Spec Z, or a finite set of points

    Use the constructors SpecSubset.all() and SpecSubset.of(points).

    Arguments:
        points (tuple) : Sorted, deduplicated SpecPoints (empty for All)
        is_all (bool) : Set when the subset is the whole spectrum

    """

    points : tuple = ()
    is_all : bool  = False

    def __post_init__(self):

        points = tuple( sorted( set( as_point(p) for p in self.points ) ) )
        if self.is_all and points:
            raise ValueError( 'All of Spec Z is never stored as a finite set' )
        object.__setattr__(self, 'points', points)

    @classmethod
    def all(cls):
        return cls(is_all=True)

    @classmethod
    def empty(cls):
        return cls()

    @classmethod
    def of(cls, points):
        return cls(tuple(points))

    @classmethod
    def from_text(cls, text):
        """
        Parse 'all', '' (empty) or a comma separated list such as '0,2,3'

        """

        text = text.strip()
        if text.lower() in ('all', 'spec', 'specz'):
            return cls.all()
        if text in ('', '{}'):
            return cls.empty()
        return cls.of( int(tok) for tok in text.strip('{}').split(',') )

    def __contains__(self, point):
        return self.is_all or as_point(point) in self.points

    def __iter__(self):

        if self.is_all:
            raise ValueError( 'Cannot enumerate all of Spec Z; use points_up_to()' )
        return iter(self.points)

    def __len__(self):

        if self.is_all:
            raise ValueError( 'All of Spec Z is infinite' )
        return len(self.points)

    def is_empty(self):
        return not self.is_all and not self.points

    def __bool__(self):
        return not self.is_empty()

    def contains_generic(self):
        return SpecPoint.generic() in self

    def issubset(self, other):

        if other.is_all:
            return True
        if self.is_all:
            return False
        return set(self.points) <= set(other.points)

    def __le__(self, other):
        return self.issubset(other)

    def __or__(self, other):

        if self.is_all or other.is_all:
            return SpecSubset.all()
        return SpecSubset(self.points + other.points)

    def __and__(self, other):

        if self.is_all:
            return other
        if other.is_all:
            return self
        return SpecSubset( tuple( set(self.points) & set(other.points) ) )

    def points_up_to(self, bound):
        """Points of the subset among 0 and the primes <= bound"""

        return [SpecPoint(p) for p in points_up_to(bound) if p in self]

    def complement(self):
        """Complement, as a SpecSubset (of All) or a Cofinite marker"""

        if self.is_all:
            return SpecSubset.empty()
        return Cofinite(self)

    def to_json(self):
        return 'all' if self.is_all else [pt.p for pt in self.points]

    def __str__(self):

        if self.is_all:
            return 'All'
        return '{' + ', '.join( str(pt) for pt in self.points ) + '}'

@dataclass(frozen=True)
class Cofinite:
    """
    Complement of a finite set of points (membership only)

    Arguments:
        excluded (SpecSubset) : The finite set left out

    """

    excluded : SpecSubset

    def __contains__(self, point):
        return point not in self.excluded

    def is_empty(self):
        return False

    def points_up_to(self, bound):
        return [SpecPoint(p) for p in points_up_to(bound) if p in self]

    def to_json(self):
        return {'complement': self.excluded.to_json()}

    def __str__(self):
        return f'Spec Z \\ {self.excluded}'

"""
Object expression parser

Reads graded groups and bootstrap objects written in the grammar of
object.lark, for example

    Z^2 + Z/12 [0] ; Z/8 [1]
    kappa(2) + S iota(3)
    moore(12)

"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError,
)

from .bootstrap import BootObject
from .exceptions import InvalidPoint, ParseError
from .graded import GradedGroup, place, suspend
from .groups import GroupExpr
from .utils import check_point, check_prime

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class ObjectExpr:
    """
    A parsed object expression

    Arguments:
        text (str) : Source text
        ktheory (GradedGroup) : Parsed K-theory

    """

    text    : str
    ktheory : GradedGroup

    def to_object(self):
        return BootObject( self.ktheory, self.text.strip() )

@lru_cache(maxsize=1)
def get_parser():
    return Lark.open('object.lark', rel_to=__file__, parser='lalr', propagate_positions=True)

class _Invalid( Exception ):
    """Semantic error raised inside the transformer, with a token for position"""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token

def _modulus(token):

    n = int(token)
    if n < 2:
        raise _Invalid( f'Cyclic modulus must be >= 2, got {n}', token )
    return n

def _point(token):

    try:
        return check_point( int(token) )
    except InvalidPoint as err:
        raise _Invalid( str(err), token ) from err

def _prime(token):

    try:
        return check_prime( int(token) )
    except InvalidPoint as err:
        raise _Invalid( str(err), token ) from err

@v_args(inline=True)
class ObjectTransformer( Transformer ):
    """Turns a parse tree into a GradedGroup"""

    def free(self):
        return place( GroupExpr.free() )

    def free_power(self, n):
        return place( GroupExpr.free( int(n) ) )

    def cyclic(self, n):
        return place( GroupExpr.cyclic( _modulus(n) ) )

    def rationals(self):
        return place( GroupExpr.rationals() )

    def prufer(self, p):
        return place( GroupExpr.prufer_group( _prime(p) ) )

    def kappa(self, p):
        p = _point(p)
        return place( GroupExpr.rationals() if p == 0 else GroupExpr.cyclic(p) )

    def iota(self, p):
        p = _point(p)
        return place( GroupExpr.rationals() if p == 0 else GroupExpr.prufer_group(p) )

    def moore(self, n):
        return place( GroupExpr.cyclic( _modulus(n) ) )

    def unit(self):
        return place( GroupExpr.free() )

    def zero(self, n):
        if int(n) != 0:
            raise _Invalid( f'Bare number {n} is not a group; only 0 is', n )
        return GradedGroup()

    def suspend(self, term):
        return suspend(term)

    def group(self, expr):
        return expr

    def sum(self, *terms):

        out = terms[0]
        for term in terms[1:]:
            out = out.direct_sum(term)
        return out

    def degree(self, token):

        value = int(token)
        if value not in (0, 1):
            raise _Invalid( f'Degree must be 0 or 1, got {value}', token )
        return token

    def block(self, graded, degree=None):
        return (graded, degree)

    def expr(self, *blocks):

        if len(blocks) == 1:
            graded, degree = blocks[0]
            return graded if degree is None else graded.shift( int(degree) )
        if len(blocks) > 2:
            raise _Invalid( f'At most two ";" blocks (degree 0 and degree 1), got {len(blocks)}' )

        # a ";" expression places by position; [e] may only restate it
        out = GradedGroup()
        for position, (graded, degree) in enumerate(blocks):
            if degree is not None and int(degree) != position:
                raise _Invalid(
                    f'Block {position + 1} of a ";" expression sits in degree {position}, not [{degree}]',
                    degree,
                )
            out = out.direct_sum( graded.shift(position) )
        return out

def _expected(err):

    if isinstance(err, UnexpectedCharacters):
        return err.allowed or ()
    return getattr(err, 'expected', None) or ()

def _describe(err):

    if isinstance(err, UnexpectedCharacters):
        return f'Unexpected character {err.char!r}'
    if isinstance(err, UnexpectedToken):
        if err.token.type == '$END':
            return 'Unexpected end of input'
        return f'Unexpected token {str(err.token)!r}'
    return 'Unexpected input'

def parse_object(text):
    """
    Parse an object expression

    Arguments:
        text (str) : Expression such as 'Z^2 + Z/12 [0] ; Z/8 [1]'

    Returns:
        ObjectExpr

    """

    try:
        tree = get_parser().parse(text)
    except UnexpectedEOF as err:
        raise ParseError( 'Unexpected end of input', None, None, _expected(err) ) from err
    except UnexpectedInput as err:
        raise ParseError( _describe(err), err.line, err.column, _expected(err) ) from err

    try:
        ktheory = ObjectTransformer().transform(tree)
    except VisitError as err:
        orig = err.orig_exc
        if not isinstance(orig, _Invalid):
            raise
        token = orig.token
        raise ParseError(
            str(orig),
            getattr(token, 'line', None),
            getattr(token, 'column', None),
        ) from orig

    logger.debug('parsed %r as %s', text, ktheory)
    return ObjectExpr(text, ktheory)

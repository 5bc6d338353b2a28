"""
Command line interface

    pykkboot kk "kappa(2)" "kappa(2)"
    pykkboot support "moore(12)"
    pykkboot member "moore(12)" --set 2,3
    pykkboot verify all --seed 0 --json

Results go to stdout (text, or JSON with --json); log messages go to
stderr.

"""

import argparse
import json
import logging
import sys
import time

from . import constants
from .bootstrap import (
    HomPartMorphism, cone, is_isomorphic, kk_groups, tensor_object,
)
from .exceptions import KKBootError
from .graded import place
from .groups import GroupExpr
from .linalg import IntMatrix
from .oracle import oracle_bifunctor
from .parser import parse_object
from .report import RunReport
from .spectrum import (
    LocalizingSubcat, generated_support, in_generated, is_smashing, member,
    smashing_obstruction, supp, supp_injective,
)
from .verify import run_suite
from .zariski import SpecSubset

logger = logging.getLogger(__name__)

def _object(text):
    return parse_object(text).to_object()

def _finite_group(text):
    """A finite group written as an object expression in degree 0"""

    ktheory = parse_object(text).ktheory
    if not ktheory.deg1.is_zero() or not ktheory.deg0.is_finite():
        raise KKBootError( f'Expected a finite group in degree 0 : {text}' )
    return ktheory.deg0.fg

def _subset(text):

    try:
        return SpecSubset.from_text(text)
    except ValueError as err:
        raise KKBootError( f'Bad subset of Spec Z {text!r} : {err}' ) from err

def _matrix(text, source, target):
    """JSON rows for a map source -> target; [] is the zero map of that shape"""

    try:
        rows = json.loads(text)
    except json.JSONDecodeError as err:
        raise KKBootError( f'Matrix must be a JSON list of rows : {text!r}' ) from err
    m = len( target.fg.generator_orders() )
    n = len( source.fg.generator_orders() )
    if not rows:
        return IntMatrix.zeros(m, n)
    try:
        return IntMatrix.from_rows(rows)
    except (TypeError, ValueError) as err:
        raise KKBootError( f'Bad matrix {text!r} : {err}' ) from err

def cmd_kk(args):

    A, B   = _object(args.A), _object(args.B)
    value  = kk_groups(A, B)
    return RunReport(
        'kk', [args.A, args.B],
        result          = value.to_json(),
        unrepresentable = list( value.tags() ),
    )

def cmd_tensor(args):

    obj = tensor_object( _object(args.A), _object(args.B) )
    return RunReport('tensor', [args.A, args.B], result=obj.ktheory.to_json())

def cmd_support(args):
    return RunReport('support', [args.A], result={'set': supp( _object(args.A) ).to_json()})

def cmd_suppz(args):
    return RunReport('suppz', [args.A], result={'set': supp_injective( _object(args.A) ).to_json()})

def cmd_member(args):

    L = LocalizingSubcat( _subset(args.set) )
    return RunReport('member', [args.A, args.set], result={'bool': member( _object(args.A), L )})

def cmd_generates(args):

    family = [_object(text) for text in args.family]
    report = RunReport(
        'generates', [args.A, *args.family],
        result = {'bool': in_generated( _object(args.A), family )},
    )
    report.check('generated-support').record( True, generated_support(family) )
    return report

def cmd_smashing(args):

    L      = LocalizingSubcat( _subset(args.set) )
    report = RunReport('smashing', [args.set], result={'bool': is_smashing(L)})
    obstruction = smashing_obstruction(L)
    if obstruction is not None:
        p, value = obstruction
        report.check('nonzero-map-iota(0)-to-iota(p)').record(
            not value.is_zero(), f'Hom(Q, I({p})) = {value}',
        )
    return report

def cmd_cone(args):

    A, B   = _object(args.A), _object(args.B)
    phi    = HomPartMorphism(
        A, B,
        _matrix(args.f0, A.ktheory.deg0, B.ktheory.deg0),
        _matrix(args.f1, A.ktheory.deg1, B.ktheory.deg1),
    )
    result = cone(phi)
    report = RunReport('cone', [args.A, args.B, args.f0, args.f1], result=result.object.ktheory.to_json())
    report.check('extension-forced').record(
        not result.extension_ambiguous, f'Ext witness {result.ambiguity_witness}',
    )
    if args.expect is not None:
        report.check('expected-cone').record(
            is_isomorphic( result.object, _object(args.expect) ), args.expect,
        )
    return report

def cmd_oracle(args):

    G, H  = _finite_group(args.G), _finite_group(args.H)
    group = oracle_bifunctor(args.which, G, H, args.max_order)
    return RunReport(
        'oracle', [args.which, args.G, args.H],
        result = place( GroupExpr(group) ).to_json(),
    )

def cmd_verify(args):

    kwargs = dict(
        seed        = args.seed,
        max_order   = args.max_order,
        corpus_size = args.corpus_size,
        prime_bound = args.prime_bound,
    )
    for key in ('pairs', 'families', 'morphisms', 'depth', 'residue_prime_bound'):
        value = getattr(args, key)
        if value is not None:
            kwargs[key] = value
    return run_suite(args.suite, **kwargs)

def _common():
    """Flags accepted by every subcommand"""

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='Write the report as JSON')
    common.add_argument('--strict', action='store_true',
                        help='Exit with 3 when a result is unrepresentable')
    common.add_argument('--timing', action='store_true', help='Include timing in the JSON report')
    common.add_argument('--seed', type=int, default=constants.DEFAULT_SEED)
    common.add_argument('--prime-bound', type=int, default=constants.PRIME_BOUND)
    common.add_argument('--max-order', type=int, default=constants.MAX_ORDER)
    common.add_argument('--corpus-size', type=int, default=constants.CORPUS_SIZE)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG logging')
    return common

def get_parser():

    common = _common()
    parser = argparse.ArgumentParser(
        prog        = 'pykkboot',
        description = 'K-theory model of the compact and divisible bootstrap category',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    for name, func, help in (
        ('kk', cmd_kk, 'KK_*(A, B) by the universal coefficient theorem'),
        ('tensor', cmd_tensor, 'K_*(A ⊗ B) by the Künneth theorem'),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help)
        cmd.add_argument('A')
        cmd.add_argument('B')
        cmd.set_defaults(func=func)

    for name, func, help in (
        ('support', cmd_support, 'Points p with K_*(A; F_p) nonzero'),
        ('suppz', cmd_suppz, 'Support of the minimal injective resolution of K_*A'),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help)
        cmd.add_argument('A')
        cmd.set_defaults(func=func)

    cmd = sub.add_parser('member', parents=[common], help='Is A in L_S')
    cmd.add_argument('A')
    cmd.add_argument('--set', required=True, help="'all', or points such as '0,2,3'")
    cmd.set_defaults(func=cmd_member)

    cmd = sub.add_parser('generates', parents=[common], help='Is A in the subcategory generated by a family')
    cmd.add_argument('A')
    cmd.add_argument('family', nargs='*')
    cmd.set_defaults(func=cmd_generates)

    cmd = sub.add_parser('smashing', parents=[common], help='Is L_S smashing')
    cmd.add_argument('--set', required=True)
    cmd.set_defaults(func=cmd_smashing)

    cmd = sub.add_parser('cone', parents=[common], help='Cone of a K-theory morphism A -> B')
    cmd.add_argument('A')
    cmd.add_argument('B')
    cmd.add_argument('--f0', default='[]', help='Degree 0 matrix as JSON rows')
    cmd.add_argument('--f1', default='[]', help='Degree 1 matrix as JSON rows')
    cmd.add_argument('--expect', help='Object the cone should be isomorphic to')
    cmd.set_defaults(func=cmd_cone)

    cmd = sub.add_parser('oracle', parents=[common], help='Brute-force bifunctor of finite groups')
    cmd.add_argument('which', choices=constants.BIFUNCTORS)
    cmd.add_argument('G')
    cmd.add_argument('H')
    cmd.set_defaults(func=cmd_oracle)

    cmd = sub.add_parser('verify', parents=[common], help='Run verification suites')
    cmd.add_argument('suite', help=f'One of {constants.SUITES} or all')
    cmd.add_argument('--pairs', type=int)
    cmd.add_argument('--families', type=int)
    cmd.add_argument('--morphisms', type=int)
    cmd.add_argument('--depth', type=int)
    cmd.add_argument('--residue-bound', dest='residue_prime_bound', type=int)
    cmd.set_defaults(func=cmd_verify)

    return parser

def main(argv=None):
    """
    Run the command line interface

    Keyword arguments:
        argv (list) : Arguments, default sys.argv[1:]

    Returns:
        int : Exit code; 0 success, 1 verification failure, 2 parse or
            usage error, 3 unrepresentable result under --strict

    """

    args = get_parser().parse_args(argv)
    logging.basicConfig(
        format = '%(name)s:%(levelname)s:%(message)s',
        level  = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
        stream = sys.stderr,
    )

    start = time.perf_counter()
    try:
        report = args.func(args)
    except KKBootError as err:
        logger.error('%s', err)
        return constants.EXIT_USAGE
    if report.timing is None:
        report.timing = time.perf_counter() - start

    if args.json:
        print( report.to_json(timing=args.timing) )
    else:
        print( report.to_text() )

    if not report.ok:
        return constants.EXIT_FAILURE
    if args.strict and report.unrepresentable:
        return constants.EXIT_UNREPRESENTABLE
    return constants.EXIT_OK

def run():
    sys.exit( main() )

if __name__ == "__main__":
    run()

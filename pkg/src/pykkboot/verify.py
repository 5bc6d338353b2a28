"""
Seeded verification suites

Each suite draws a corpus from numpy's default_rng(seed), checks a
group of properties over it and returns a RunReport; the same seed and
bounds always give the same report.

    oracle          closed-form bifunctors against brute-force enumeration
    uct             KK-groups: unit law, Hom-only criterion, kappa(p) pairs
    kunneth         tensor objects: unit, symmetry, associativity, suspension
    residue         kappa(p) ⊗ kappa(q) dichotomy and F_p-decomposition
    classification  round trips between subsets of Spec Z and subcategories
    smashing        smashing subcategories are the specialization closed ones
    support-datum   support axioms on compact objects
    cone            cones of multiplication maps and random morphisms
    colimit         Prüfer atoms against their finite-stage probes

"""

import logging
import time
from itertools import combinations
from math import gcd

import numpy as np

from . import constants
from .bootstrap import (
    HomPartMorphism, cone, cone_sequence_check, is_isomorphic, k_with_coefficients,
    kk_groups, kk_is_hom_only, moore_object, multiplication_morphism, realize,
    residue_object, injective_object, suspension, tensor_object, unit, zero_morphism,
)
from .exceptions import UnknownSuite
from .graded import GradedGroup, GradedValue, place
from .groups import (
    FGGroup, DivAtom, GroupExpr, direct_sum, ext, finite_groups, hom,
    localization_vanishes, tensor, tor,
)
from .linalg import IntMatrix
from .oracle import oracle_bifunctor, probe_agrees, prufer_probe
from .report import RunReport
from .spectrum import (
    LocalizingSubcat, canonical_generators, compact_generators, dichotomy_iota,
    generated_support, in_generated, is_smashing, is_specialization_closed,
    is_zero_by_residues, localization_kernel_member, member, member_bootV,
    orthogonal_residues, smashing_obstruction, supp, supp_by_coefficients,
    supp_injective, support_datum_check, thick_classification_demo,
)
from .utils import points_up_to, prime_divisors, primes_up_to
from .zariski import SpecPoint, SpecSubset

logger = logging.getLogger(__name__)

TABLES = {'hom': hom, 'ext': ext, 'tensor': tensor, 'tor': tor}

def random_group(rng, max_rank=constants.MAX_RANK, max_factors=constants.MAX_FACTORS,
                 max_factor=constants.MAX_FACTOR, max_atoms=constants.MAX_ATOMS,
                 prime_bound=constants.PRIME_BOUND, compact=False):
    """
    Random GroupExpr

    Arguments:
        rng (numpy.random.Generator) : Source of randomness

    Keyword arguments:
        max_rank (int) : Largest free rank
        max_factors (int) : Largest number of cyclic summands
        max_factor (int) : Largest cyclic order
        max_atoms (int) : Largest number of divisible atoms
        prime_bound (int) : Largest Prüfer prime
        compact (bool) : Draw finitely generated groups only

    Returns:
        GroupExpr

    """

    rank   = int( rng.integers(0, max_rank + 1) )
    orders = rng.integers(2, max_factor + 1, size=int( rng.integers(0, max_factors + 1) ))
    fg     = FGGroup.from_cyclic_orders( orders.tolist(), rank=rank )
    if compact:
        return GroupExpr(fg)
    points = points_up_to(prime_bound)
    atoms  = rng.choice(points, size=int( rng.integers(0, max_atoms + 1) ))
    atoms  = [int(p) for p in atoms]
    return GroupExpr(fg, atoms.count(0), tuple(p for p in atoms if p))

def random_object(rng, compact=False, **kwargs):
    """Random BootObject with independent degree 0 and degree 1 parts"""

    return realize( GradedGroup(
        random_group(rng, compact=compact, **kwargs),
        random_group(rng, compact=compact, **kwargs),
    ))

def object_corpus(size=constants.CORPUS_SIZE, seed=constants.DEFAULT_SEED, compact=False, **kwargs):
    """List of size random objects"""

    rng = np.random.default_rng(seed)
    return [random_object(rng, compact=compact, **kwargs) for _ in range(size)]

def finite_pairs(count=constants.ORACLE_PAIRS, seed=constants.DEFAULT_SEED,
                 max_order=constants.MAX_ORDER):
    """count random pairs of finite groups of order <= max_order"""

    rng    = np.random.default_rng(seed)
    groups = finite_groups(max_order)
    idx    = rng.integers(0, len(groups), size=(count, 2))
    return [(groups[i], groups[j]) for i, j in idx]

def _exact_equal(value, group):
    """A table result (GroupValue or GroupExpr) equals a finite group"""

    if isinstance(value, GroupExpr):
        return value == GroupExpr(group)
    return value.is_exact() and value.group == GroupExpr(group)

def _value_equal(x, y):
    """Equality of table results, up to the unrepresentable tags"""

    if isinstance(x, GroupExpr):
        return x == y
    if x.is_exact() and y.is_exact():
        return x.group == y.group
    return not x.is_exact() and not y.is_exact()

def suite_oracle(seed=constants.DEFAULT_SEED, max_order=constants.MAX_ORDER,
                 pairs=constants.ORACLE_PAIRS, corpus_size=constants.CORPUS_SIZE, **kwargs):
    """Closed-form tables against the brute-force oracle, plus biadditivity"""

    report = RunReport('verify', ['oracle'])
    for G, H in finite_pairs(pairs, seed, max_order):
        for which, table in TABLES.items():
            report.check(f'oracle-{which}').record(
                _exact_equal( table(GroupExpr(G), GroupExpr(H)), oracle_bifunctor(which, G, H, max_order) ),
                f'{which}({G}, {H})',
            )

    rng    = np.random.default_rng(seed)
    groups = [random_group(rng) for _ in range(corpus_size)]
    for F, G, H in zip(groups, groups[1:], groups[2:]):
        for which, table in TABLES.items():
            left  = table(direct_sum(F, G), H)
            right = table(F, H) + table(G, H) if which in ('hom', 'ext') else direct_sum(table(F, H), table(G, H))
            report.check('biadditive-left').record( _value_equal(left, right), f'{which}({F} + {G}, {H})' )
            left  = table(H, direct_sum(F, G))
            right = table(H, F) + table(H, G) if which in ('hom', 'ext') else direct_sum(table(H, F), table(H, G))
            report.check('biadditive-right').record( _value_equal(left, right), f'{which}({H}, {F} + {G})' )
        report.check('tor-symmetry').record( tor(F, G) == tor(G, F), f'{F}, {G}' )
        divisible = GroupExpr(q_copies=G.q_copies, prufer=G.prufer)
        report.check('divisible-injective').record( ext(F, divisible).is_zero(), f'ext({F}, {divisible})' )

        points = set( points_up_to(constants.PRIME_BOUND) ) | set(F.prufer)
        for d in F.fg.factors:
            points.update( prime_divisors(d) )
        vanishes = all( localization_vanishes(F, SpecPoint(q)) for q in sorted(points) )
        report.check('localization-detects-zero').record( vanishes == F.is_zero(), F )
    return report

def suite_uct(seed=constants.DEFAULT_SEED, corpus_size=constants.CORPUS_SIZE,
              residue_prime_bound=constants.RESIDUE_PRIME_BOUND, **kwargs):
    """Universal coefficient theorem coherence"""

    report = RunReport('verify', ['uct'])
    rng    = np.random.default_rng(seed)
    corpus = object_corpus(corpus_size, seed)
    for B in corpus:
        report.check('uct-unit').record(
            kk_groups(unit(), B) == GradedValue.exact(B.ktheory), B,
        )
        free = realize( GradedGroup(
            GroupExpr.free( int(rng.integers(0, 4)) ),
            GroupExpr.free( int(rng.integers(0, 4)) ),
        ))
        report.check('hom-only-free-source').record( kk_is_hom_only(free, B), f'{free}, {B}' )
        divisible = realize( GradedGroup(*(
            GroupExpr(q_copies=part.q_copies, prufer=part.prufer) for part in B.ktheory.parts()
        )))
        for A in corpus[:5]:
            report.check('hom-only-divisible-target').record(
                kk_is_hom_only(A, divisible), f'{A}, {divisible}',
            )
    for p in primes_up_to(residue_prime_bound):
        kappa = residue_object(p)
        fp    = GroupExpr.cyclic(p)
        report.check('kk-kappa-kappa').record(
            kk_groups(kappa, kappa) == GradedValue.exact( GradedGroup(fp, fp) ), p,
        )
        report.check('kk-kappa-unit').record(
            kk_groups(kappa, unit()) == GradedValue.exact( place(fp, 1) ), p,
        )
    return report

def suite_kunneth(seed=constants.DEFAULT_SEED, corpus_size=constants.CORPUS_SIZE,
                  residue_prime_bound=constants.RESIDUE_PRIME_BOUND, **kwargs):
    """Künneth coherence on a compact corpus"""

    report = RunReport('verify', ['kunneth'])
    corpus = object_corpus(max(corpus_size // 2, 3), seed, compact=True, max_factor=16)
    for A in corpus:
        report.check('tensor-unit').record( is_isomorphic(tensor_object(unit(), A), A), A )
    for A, B, C in zip(corpus, corpus[1:], corpus[2:]):
        AB = tensor_object(A, B)
        report.check('tensor-symmetry').record( is_isomorphic(AB, tensor_object(B, A)), f'{A}, {B}' )
        report.check('tensor-associativity').record(
            is_isomorphic( tensor_object(AB, C), tensor_object(A, tensor_object(B, C)) ),
            f'{A}, {B}, {C}',
        )
        report.check('tensor-suspension').record(
            is_isomorphic( tensor_object(suspension(A), B), suspension(AB) ), f'{A}, {B}',
        )
    for p in primes_up_to(residue_prime_bound):
        fp = GroupExpr.cyclic(p)
        report.check('kappa-tensor-kappa').record(
            tensor_object(residue_object(p), residue_object(p)).ktheory == GradedGroup(fp, fp), p,
        )
    return report

def _is_fp_vector(graded, p):
    """Every degree is a sum of copies of F_p"""

    for G in graded.parts():
        if p == 0:
            if not G.fg.is_zero() or G.prufer:
                return False
        elif G.fg.rank or G.q_copies or G.prufer or any( d != p for d in G.fg.factors ):
            return False
    return True

def suite_residue(seed=constants.DEFAULT_SEED, corpus_size=constants.CORPUS_SIZE,
                  residue_prime_bound=constants.RESIDUE_PRIME_BOUND, **kwargs):
    """Residue object dichotomy and decomposition, detection and supports"""

    report = RunReport('verify', ['residue'])
    points = points_up_to(residue_prime_bound)
    for p in points:
        for q in points:
            zero = tensor_object(residue_object(p), residue_object(q)).is_zero()
            report.check('residue-dichotomy').record( zero == (p != q), f'kappa({p}) ⊗ kappa({q})' )
    for A in object_corpus(corpus_size, seed):
        for p in points:
            report.check('residue-decomposition').record(
                _is_fp_vector( k_with_coefficients(A, p), p ), f'{A}, p = {p}',
            )
        report.check('residue-detection').record( is_zero_by_residues(A, residue_prime_bound) == A.is_zero(), A )
        report.check('support-by-coefficients').record(
            supp_by_coefficients(A, residue_prime_bound) == SpecSubset.of( supp(A).points_up_to(residue_prime_bound) ), A,
        )
    return report

def _all_subsets(prime_bound):
    """Every subset of {0} + primes <= prime_bound, then All"""

    points = points_up_to(prime_bound)
    out    = [
        SpecSubset.of(combo)
        for k in range(len(points) + 1)
        for combo in combinations(points, k)
    ]
    return out + [SpecSubset.all()]

def suite_classification(seed=constants.DEFAULT_SEED, corpus_size=constants.CORPUS_SIZE,
                         prime_bound=constants.PRIME_BOUND, families=constants.FAMILY_COUNT, **kwargs):
    """Subsets of Spec Z against localizing subcategories"""

    report    = RunReport('verify', ['classification'])
    subsets   = _all_subsets(prime_bound)
    points    = points_up_to(prime_bound)
    witnesses = [residue_object(p) for p in points] + [unit()]
    corpus    = object_corpus(corpus_size, seed)

    signatures = {}
    for S in subsets:
        L = LocalizingSubcat(S)
        report.check('round-trip').record( generated_support( canonical_generators(S) ) == S, S )
        signatures[S] = tuple( member(W, L) for W in witnesses )
        if is_specialization_closed(S):
            gens = compact_generators(S)
            report.check('telescope').record(
                generated_support(gens) == S and all( G.ktheory.is_fg() for G in gens ), S,
            )
            for A in corpus:
                report.check('boot-v-localizing').record(
                    member_bootV(A, S) == localization_kernel_member(A, S), f'{A}, V = {S}',
                )
        generators = canonical_generators(S)
        orthogonal = orthogonal_residues(L)
        for p in points:
            kappa = residue_object(p)
            killed = all( kk_groups(G, kappa).is_zero() for G in generators )
            report.check('kappa-dichotomy').record( member(kappa, L) != killed, f'kappa({p}), {S}' )
            report.check('orthogonal-residues').record( (p in orthogonal) == killed, f'kappa({p}), {S}' )
    for S, T in combinations(subsets, 2):
        report.check('distinct-classes').record( signatures[S] != signatures[T], f'{S}, {T}' )

    rng = np.random.default_rng(seed + 1)
    for _ in range(families):
        size   = int( rng.integers(0, 4) )
        family = [corpus[int(i)] for i in rng.integers(0, len(corpus), size=size)]
        L      = LocalizingSubcat( generated_support(family) )
        for A in corpus[:50]:
            report.check('generated-membership').record(
                in_generated(A, family) == member(A, L), f'{A} in <{", ".join(map(str, family))}>',
            )

    for A in corpus:
        report.check('supp-equals-suppz').record( supp(A) == supp_injective(A), A )
    for p in points:
        report.check('iota-kappa-support').record(
            supp(injective_object(p)) == supp(residue_object(p)) == SpecSubset.of([p]), p,
        )
    report.extend( thick_classification_demo( min(prime_bound, constants.THICK_PRIME_BOUND) ) )
    return report

def suite_smashing(prime_bound=constants.PRIME_BOUND, **kwargs):
    """Smashing subcategories are exactly the specialization closed ones"""

    report = RunReport('verify', ['smashing'])
    points = points_up_to(prime_bound)
    for S in _all_subsets(prime_bound):
        L = LocalizingSubcat(S)
        report.check('smashing-iff-closed').record( is_smashing(L) == is_specialization_closed(S), S )
        obstruction = smashing_obstruction(L)
        if S.contains_generic() and not S.is_all:
            report.check('smashing-obstruction').record(
                obstruction is not None and obstruction[0] not in S and not obstruction[1].is_zero(), S,
            )
        if is_smashing(L):
            for p in points:
                report.check('iota-dichotomy').record( dichotomy_iota(L, p) != 'neither', f'iota({p}), {S}' )
    report.check('zero-not-smashing').record( not is_smashing( LocalizingSubcat( SpecSubset.of([0]) ) ) )
    return report

def suite_support_datum(seed=constants.DEFAULT_SEED, corpus_size=constants.CORPUS_SIZE, **kwargs):
    """Support datum axioms on a compact corpus"""

    report = RunReport('verify', ['support-datum'])
    corpus = object_corpus(corpus_size, seed, compact=True, max_factor=16)
    support_datum_check(corpus, report)
    report.check('supp-tensor-moore').record(
        supp( tensor_object(moore_object(12), moore_object(10)) ) == SpecSubset.of([2]),
    )
    return report

def random_morphism(rng, source, target, scale=4):
    """
    Random well-defined HomPartMorphism

    An entry sending a generator of order d to a coordinate of order e
    must be a multiple of e / gcd(d, e), and zero when e = 0 < d.

    """

    mats = []
    for degree in (0, 1):
        src  = source.ktheory[degree].fg.generator_orders()
        tgt  = target.ktheory[degree].fg.generator_orders()
        rows = []
        for e in tgt:
            row = []
            for d in src:
                k = int( rng.integers(-scale, scale + 1) )
                if d == 0:
                    row.append( k )
                elif e == 0:
                    row.append( 0 )
                else:
                    row.append( k * (e // gcd(d, e)) )
            rows.append( row )
        mats.append( IntMatrix.from_rows(rows, cols=len(src)) )
    return HomPartMorphism(source, target, *mats)

def suite_cone(seed=constants.DEFAULT_SEED, max_cone_n=constants.MAX_CONE_N,
               morphisms=constants.MORPHISMS, max_order=constants.MAX_ORDER, **kwargs):
    """Cones of multiplication maps and exactness bookkeeping"""

    report = RunReport('verify', ['cone'])
    for n in range(2, max_cone_n + 1):
        result = cone( multiplication_morphism(unit(), n) )
        report.check('cone-multiplication').record(
            is_isomorphic(result.object, moore_object(n)) and not result.extension_ambiguous, n,
        )

    A = moore_object(4)
    B = moore_object(2)
    surj = HomPartMorphism(A, B, IntMatrix.from_rows([[1]]), IntMatrix.zeros(0, 0))
    report.check('cone-surjection').record(
        cone(surj).object.ktheory == place(GroupExpr.cyclic(2), 1) and not cone(surj).extension_ambiguous,
    )
    zero = cone( zero_morphism(A, B) )
    report.check('cone-zero').record(
        zero.object.ktheory == GradedGroup(GroupExpr.cyclic(2), GroupExpr.cyclic(4))
        and zero.extension_ambiguous == (not zero.ambiguity_witness.is_zero()),
    )

    rng   = np.random.default_rng(seed)
    found = 0
    tries = 0
    while found < morphisms and tries < 20 * morphisms:
        tries += 1
        source = random_object(rng, compact=True, max_rank=1, max_factors=2, max_factor=8)
        target = random_object(rng, compact=True, max_rank=1, max_factors=2, max_factor=8)
        phi    = random_morphism(rng, source, target)
        if cone(phi).extension_ambiguous:
            continue
        found += 1
        report.extend( cone_sequence_check(phi, max_order) )
    report.check('cone-random-count').record( found == morphisms, f'{found} of {morphisms}' )
    return report

def suite_colimit(depth=constants.PROBE_DEPTH, prime_bound=constants.PRIME_BOUND, **kwargs):
    """Prüfer atoms against their finite-stage probes"""

    report = RunReport('verify', ['colimit'])
    primes = primes_up_to(prime_bound)
    for p in primes:
        atom = GroupExpr.prufer_group(p)
        for q in primes:
            for k in range(1, 5):
                H     = FGGroup(factors=(q**k,))
                probe = prufer_probe('tor', p, H, depth=depth)
                report.check('tor-colimit').record(
                    probe_agrees(probe, tor(atom, GroupExpr(H))), f'tor(I({p}), Z/{q}^{k})',
                )

    small = [G for G in finite_groups(32) if not G.is_zero()]
    for p in primes_up_to( min(prime_bound, constants.PROBE_PRIME_BOUND) ):
        atom = GroupExpr.prufer_group(p)
        for H in small:
            expr = GroupExpr(H)
            cases = [
                ('hom', 'left', hom(atom, expr)),
                ('hom', 'right', hom(expr, atom)),
                ('ext', 'left', ext(atom, expr)),
                ('ext', 'right', ext(expr, atom)),
                ('tensor', 'left', tensor(atom, expr)),
                ('tor', 'left', tor(atom, expr)),
            ]
            for which, side, value in cases:
                probe = prufer_probe(which, p, H, side=side, depth=depth)
                report.check(f'probe-{which}-{side}').record(
                    probe_agrees(probe, value), f'{which} {side} I({p}), {H}',
                )
        for q in primes_up_to( min(prime_bound, constants.PROBE_PRIME_BOUND) ):
            other = GroupExpr.prufer_group(q)
            for which, table in (('tor', tor), ('hom', hom)):
                probe = prufer_probe(which, p, DivAtom(q), depth=depth)
                report.check(f'probe-{which}-pair').record(
                    probe_agrees(probe, table(atom, other)), f'{which}(I({p}), I({q}))',
                )
    return report

SUITE_FUNCS = {
    'oracle'         : suite_oracle,
    'uct'            : suite_uct,
    'kunneth'        : suite_kunneth,
    'residue'        : suite_residue,
    'classification' : suite_classification,
    'smashing'       : suite_smashing,
    'support-datum'  : suite_support_datum,
    'cone'           : suite_cone,
    'colimit'        : suite_colimit,
}

def run_suite(name, **kwargs):
    """
    Run a verification suite

    Arguments:
        name (str) : One of constants.SUITES, or 'all'

    Keyword arguments:
        seed, corpus_size, prime_bound, max_order, ... : Passed to the suite

    Returns:
        RunReport

    """

    name = name.lower()
    if name == 'all':
        names = constants.SUITES
    elif name in SUITE_FUNCS:
        names = [name]
    else:
        raise UnknownSuite( f'Unsupported suite : {name}! Must be one of {constants.SUITES + ["all"]}' )

    report = RunReport('verify', [name])
    start  = time.perf_counter()
    for suite in names:
        logger.info('running suite %s', suite)
        report.extend( SUITE_FUNCS[suite](**kwargs) )
    report.timing = time.perf_counter() - start
    passed = sum( prop.ok for prop in report.properties )
    report.result = {'suites': names, 'properties': len(report.properties), 'passed': passed}
    return report

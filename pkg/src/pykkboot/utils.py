"""
Utilities used across modules

Number theoretic helpers shared by the group algebra, the spectrum
lattice and the verification suites.

"""

from sympy import isprime, primefactors, primerange

from .exceptions import InvalidPoint

def check_point(p):
    """
    Validate a point of Spec Z given as an integer

    Arguments:
        p (int) : 0 for the generic point, otherwise a prime number

    Returns:
        int : The validated point

    """

    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidPoint( f'Point of Spec Z must be an integer, got : {p!r}' )
    if p != 0 and not isprime(p):
        raise InvalidPoint( f'Point of Spec Z must be 0 or a prime : {p}' )
    return p

def check_prime(p):
    """
    Validate a prime number (Prüfer atoms take only primes)

    """

    if isinstance(p, bool) or not isinstance(p, int) or not isprime(p):
        raise InvalidPoint( f'Expected a prime number, got : {p!r}' )
    return p

def valuation(n, p):
    """
    p-adic valuation of a nonzero integer

    Arguments:
        n (int) : Nonzero integer
        p (int) : Prime

    Returns:
        int : Largest k with p**k dividing n

    """

    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k

def prime_divisors(n):
    """Sorted list of the primes dividing n (n >= 1)"""

    return list( primefactors(n) )

def primes_up_to(bound):
    """Sorted list of the primes p <= bound"""

    return list( primerange(2, bound + 1) )

def points_up_to(bound):
    """
    Points of Spec Z that can be enumerated up to a bound

    Returns:
        list : The generic point 0 followed by the primes <= bound

    """

    return [0] + primes_up_to(bound)

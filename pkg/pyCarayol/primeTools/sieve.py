import math
import numpy as np

from ..CarayolTools.errors import NotPrimeError

def simple_sieve( limit ) :
    '''
    Primes <= limit, as an int64 array.
    '''

    if limit < 2 :
        return np.array( [], dtype = np.int64 )

    is_prime = np.ones( limit + 1, dtype = bool )
    is_prime[:2] = False

    for p in range( 2, math.isqrt( limit ) + 1 ) :
        if is_prime[p] :
            is_prime[ p*p : limit + 1 : p ] = False

    return np.flatnonzero( is_prime ).astype( np.int64 )

def primes_below( x ) :
    '''
    List of the primes ell < x (python integers).
    '''
    return simple_sieve( x - 1 ).tolist()

def prime_pi( x ) :
    '''
    Number of primes < x.
    '''
    return len( simple_sieve( x - 1 ) )

def is_prime( n ) :

    if n < 2 :
        return False

    for d in ( 2, 3 ) :
        if n % d == 0 :
            return n == d

    d = 5
    while d*d <= n :
        if n % d == 0 or n % ( d + 2 ) == 0 :
            return False
        d += 6

    return True

def check_prime( n, name = 'p', odd = False ) :
    '''
    Raise NotPrimeError unless n is a prime (an odd prime if odd is set).
    '''

    if not is_prime( n ) or ( odd and n == 2 ) :
        raise NotPrimeError( n, name = name )

    return n

def prime_divisors( n ) :
    '''
    Sorted list of the distinct primes dividing n > 0.
    '''

    n = abs( n )
    divisors = []
    d = 2

    while d*d <= n :
        if n % d == 0 :
            divisors += [d]
            while n % d == 0 :
                n //= d
        d += 1 if d == 2 else 2

    if n > 1 :
        divisors += [n]

    return divisors

def valuation( n, p ) :
    '''
    p-adic valuation of a nonzero integer.
    '''

    if n == 0 :
        raise ValueError( 'valuation of 0' )

    v = 0
    while n % p == 0 :
        n //= p
        v += 1

    return v

import random

import pytest

from pyCarayol.FormSpec import FormSpec, ApCache
from pyCarayol.CarayolSets import AnalysisContext
from pyCarayol.localFactors import (
    FactorRole, LocalFactor, LambdaProfile, s_factor, d_factor_good, d_factor_bad, local_factor,
    g_local_factors, f_factor_bounds, check_bad_hypotheses, lambda_transfer, lambda_f_bounds, analytic_rank_parity
    )
from pyCarayol.primeTools.sieve import primes_below, valuation
from pyCarayol.CarayolTools.errors import HypothesisViolation, NegativeLambda, CarayolWarning

def test_s_factor() :

    assert s_factor( 5, 7 ) == 5 # 7^4 - 1 = 2400 = 5^2 96
    assert s_factor( 7, 5 ) == 1
    assert s_factor( 3, 19 ) == 3 # 19^2 - 1 = 360 = 3^2 40
    assert s_factor( 3, 5 ) == 1

    with pytest.raises( ValueError ) :
        s_factor( 5, 5 )

@pytest.mark.parametrize( 'p', [ 3, 5, 7, 11, 13 ] )
def test_s_factor_is_a_power_of_p( p ) :

    for ell in primes_below( 1000 ) :
        if ell != p :
            s = s_factor( p, ell )
            assert s == p**( valuation( ell**( p - 1 ) - 1, p ) - 1 )
            assert s >= 1

def root_multiplicity( coefficients, p ) :
    '''
    Multiplicity of X = 1 as a root mod p of sum c_k X^k, by repeated synthetic division.
    '''

    coefficients = [ c % p for c in coefficients ]
    multiplicity = 0

    while len( coefficients ) > 1 :

        # divide by X - 1, highest degree first
        quotient = [ coefficients[-1] ]
        for c in reversed( coefficients[:-1] ) :
            quotient += [ ( c + quotient[-1] ) % p ]

        remainder = quotient.pop()

        if remainder != 0 :
            break

        multiplicity += 1
        coefficients = list( reversed( quotient ) )

    return multiplicity

@pytest.mark.parametrize( 'p', [ 3, 5, 7, 11, 13 ] )
def test_d_factor_oracle( p ) :

    for ell in primes_below( 100 ) :

        if ell == p :
            continue

        bound = int( 2*ell**.5 ) + 1

        for ap in range( - bound, bound + 1 ) :
            assert d_factor_good( p, ell, ap ) == root_multiplicity( [ ell, - ap, 1 ], p )
            assert d_factor_bad( p, ell, ap ) == root_multiplicity( [ ell, - ap ], p )

def test_d_factor_values() :

    assert d_factor_bad( 7, 11, 1 ) == 0
    assert d_factor_bad( 11, 43, -1 ) == 1
    assert d_factor_good( 7, 29, 2 ) == 2 # 29 = 1 mod 7
    assert d_factor_good( 7, 5, 6 ) == 1
    assert d_factor_good( 7, 5, 0 ) == 0

def test_local_factor() :

    factor = local_factor( 5, 7, 3, FactorRole.NEW_PRIME ) # 1 + 7 - 3 = 5

    assert ( factor.s, factor.d, factor.delta ) == ( 5, 1, 5 )
    assert factor.to_dict()['role'] == 'NewPrime'

    with pytest.raises( ValueError ) :
        LocalFactor( 11, 1, 2, FactorRole.OLD_PRIME )

def test_bad_hypotheses() :

    cache = ApCache()

    E11 = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 100 )
    bad = check_bad_hypotheses( E11, cache )

    assert bad.hyp_bad and not bad.hyp_bad_prime
    assert bad.d_values == { 11 : 0 }

    E43 = AnalysisContext( 11, FormSpec.from_registry( '43a1' ), 100 )
    bad = check_bad_hypotheses( E43, ApCache() )

    assert bad.hyp_bad_prime and not bad.hyp_bad
    assert bad.d_values == { 43 : 1 }

    with pytest.warns( CarayolWarning ) :
        E53 = AnalysisContext( 3, FormSpec.from_registry( '53a1' ), 100 )

    assert check_bad_hypotheses( E53, ApCache() ).d_values == { 53 : 1 }

def test_g_local_factors() :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 100 )
    factors = g_local_factors( ctx, ApCache(), [ 11, 29 ] )

    assert [ factor.role for factor in factors ] == [ FactorRole.OLD_PRIME, FactorRole.NEW_PRIME ]
    assert factors[0].d == 0
    assert factors[1].d == 0 # a_29 = 0

def test_transfer() :

    profile = LambdaProfile( 1 )

    g = [ LocalFactor( 29, 7, 1, FactorRole.NEW_PRIME ) ]
    f = [ LocalFactor( 29, 7, 0, FactorRole.OLD_PRIME ) ]

    result = lambda_transfer( profile, g, f )

    assert result.lambda_f == 8
    assert result.growth

    with pytest.raises( NegativeLambda ) :
        lambda_transfer( LambdaProfile( 0 ), f, g )

    with pytest.raises( ValueError ) :
        lambda_transfer( profile, g, [] )

def test_transfer_round_trip() :

    rng = random.Random( 2024 )
    p = 5

    for _ in range( 1000 ) :

        ells = rng.sample( [ ell for ell in primes_below( 200 ) if ell != p ], rng.randint( 0, 5 ) )

        g = [ LocalFactor( ell, s_factor( p, ell ), rng.choice( ( 0, 1, 2 ) ), FactorRole.NEW_PRIME ) for ell in ells ]
        f = [ LocalFactor( ell, s_factor( p, ell ), rng.choice( ( 0, 1 ) ), FactorRole.OLD_PRIME ) for ell in ells ]

        lam = rng.randint( 0, 10 )

        try :
            forward = lambda_transfer( LambdaProfile( lam ), g, f )
        except NegativeLambda :
            continue

        backward = lambda_transfer( LambdaProfile( forward.lambda_f ), f, g )

        assert backward.lambda_f == lam
        assert forward.growth == ( forward.lambda_f > lam )

def test_mu() :

    with pytest.raises( HypothesisViolation ) :
        LambdaProfile( 0, mu = 1 ).check_mu()

    with pytest.raises( HypothesisViolation ) :
        lambda_transfer( LambdaProfile( 0, mu = 2 ), [], [] )

    with pytest.raises( ValueError ) :
        LambdaProfile( -1 )

def test_bounds() :

    g = [ LocalFactor( 7, 5, 1, FactorRole.NEW_PRIME ), LocalFactor( 3, 1, 0, FactorRole.NEW_PRIME ) ]

    assert f_factor_bounds( 5, 7 ) == ( 0, 5 )
    assert lambda_f_bounds( LambdaProfile( 2 ), g ) == ( 1, 7 )

def test_parity() :

    assert analytic_rank_parity( 2, 1 ) == 1
    assert analytic_rank_parity( 3, 1 ) == 0

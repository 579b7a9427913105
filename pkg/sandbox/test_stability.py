from fractions import Fraction

import pytest

from pyCarayol.FormSpec import FormSpec, ApCache
from pyCarayol.GL2Census import enumerate_census
from pyCarayol.CarayolSets import AnalysisContext, PrimeLabel, classify_all, is_admissible_level
from pyCarayol.localFactors import LambdaProfile
from pyCarayol.stability import (
    r1_density, r2_density, growth_density, delta_zero_density, relative_densities,
    build_R1, build_R2, build_R_growth, stable_levels, growth_levels, trace_distribution_reports, analyze
    )
from pyCarayol.primeTools.sieve import primes_below, prime_divisors, valuation
from pyCarayol.CarayolTools.errors import HypothesisViolation, CarayolWarning

odd_primes = [ p for p in primes_below( 102 ) if p > 2 ]

@pytest.fixture( scope = 'module' )
def cache() :
    return ApCache()

def test_values() :

    assert growth_density( 11 ) == Fraction( 11, 1200 )
    assert growth_density( 3 ) == Fraction( 3, 16 )
    assert r1_density( 7 ) == Fraction( 1, 9 )
    assert r2_density( 7 ) == Fraction( 41, 288 )
    assert delta_zero_density( 7 ) == Fraction( 73, 288 )

@pytest.mark.parametrize( 'p', odd_primes )
def test_identities( p ) :

    assert delta_zero_density( p ) == Fraction( 2*p*p - 3*p - 4, ( p - 1 )**2*( p + 1 ) )
    assert r2_density( p ) + growth_density( p ) == Fraction( 1, p - 1 )

    relative = relative_densities( p )

    assert relative['R2_in_Set3'] + relative['R_in_Set3'] == 1

    if p > 3 :
        assert relative['R1_in_Set1'] == Fraction( 1, 2 )

@pytest.mark.parametrize( 'p', [ 3, 5, 7, 11 ] )
def test_census_cells( p ) :

    census = enumerate_census( p )

    R1 = [ ( m, ( - 1 - m ) % p ) for m in range( 2, p - 1 ) ]
    R2 = [ ( 1, n ) for n in range( p ) if n != 2 ]

    assert census.density_of_cells( R1 ) == r1_density( p )
    assert census.density_of_cells( R2 ) == r2_density( p )
    assert census.density_of_cells( [ ( 1, 2 ) ] ) == growth_density( p )

def test_stable_levels( cache ) :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 30 )
    records = classify_all( ctx, cache ).records

    R1, _ = build_R1( ctx, records )
    R2, _ = build_R2( ctx, records )

    assert R1 == [ 5 ]
    assert R2 == [ 29 ]

    levels = stable_levels( ctx, R1, R2, 10**4, cache )

    assert [ c.M for c in levels ] == [ 55, 319, 1595, 9251 ]

    with pytest.raises( HypothesisViolation ) :
        stable_levels( ctx, R1, R2, 10**4, cache, hyp_min = False )

    with pytest.raises( HypothesisViolation ) :
        growth_levels( ctx, [], 10**4, cache )

def test_stable_levels_admissible( cache ) :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 500 )
    records = classify_all( ctx, cache ).records

    R1, _ = build_R1( ctx, records )
    R2, _ = build_R2( ctx, records )

    levels = list( stable_levels( ctx, R1, R2, 10**6, cache ) )

    assert len( levels ) > 4
    assert all( is_admissible_level( ctx, records, c ) for c in levels )
    assert all( alpha == 1 for c in levels for ell, alpha in c.exponents if ell in R1 )

def test_growth_levels_admissible() :

    cache = ApCache()
    ctx = AnalysisContext( 11, FormSpec.from_registry( '43a1' ), 20000 )
    records = classify_all( ctx, cache ).records

    R, _ = build_R_growth( ctx, records )

    levels = list( growth_levels( ctx, R, 10**9, cache ) )

    assert len( levels ) > 0
    assert all( is_admissible_level( ctx, records, c ) for c in levels )
    assert all( ell in R for c in levels for ell, _ in c.exponents )

def test_analyze_stable( cache ) :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 30 )

    verdict = analyze( ctx, cache, 'stable', LambdaProfile( 0 ), max_M = 10**4 )

    assert verdict.sample_levels == [ 55, 319, 1595, 9251 ]
    assert verdict.primes == [ 5, 29 ]
    assert verdict.hypotheses['Hyp bad']
    assert verdict.hypotheses['Hyp min']
    assert [ report.name for report in verdict.components ] == [ 'R1', 'R2' ]

    with pytest.raises( HypothesisViolation ) :
        analyze( ctx, cache, 'stable', LambdaProfile( 2 ), max_M = 10**4 )

    assert analyze( ctx, cache, 'stable', LambdaProfile( 2 ), max_M = 10**4, hyp_min = True ).sample_levels == [ 55, 319, 1595, 9251 ]

    with pytest.raises( HypothesisViolation ) :
        analyze( ctx, cache, 'stable', LambdaProfile( 0, mu = 1 ) )

    with pytest.raises( ValueError ) :
        analyze( ctx, cache, 'unstable', LambdaProfile( 0 ) )

def test_stable_needs_hyp_bad() :

    ctx = AnalysisContext( 11, FormSpec.from_registry( '43a1' ), 1000 )

    with pytest.raises( HypothesisViolation ) :
        analyze( ctx, ApCache(), 'stable', LambdaProfile( 0 ) )

def test_growth_43a1() :

    cache = ApCache()
    ctx = AnalysisContext( 11, FormSpec.from_registry( '43a1' ), 20000 )

    verdict = analyze( ctx, cache, 'growth', LambdaProfile( 0 ), max_M = 10**9 )

    assert verdict.hypotheses["Hyp bad'"]
    assert verdict.density.theoretical == Fraction( 11, 1200 )
    assert verdict.density.within( 0.01 )
    assert verdict.density.to_dict()['within_tolerance']

    for ell in verdict.primes :
        assert ell % 11 == 1
        assert cache[ell] % 11 == 2

    assert verdict.sample_levels == sorted( verdict.sample_levels )

    for M in verdict.sample_levels :
        q = M//43
        assert M == 43*q and q > 1
        assert all( ell in verdict.primes and valuation( q, ell ) in ( 1, 2 ) for ell in prime_divisors( q ) )

def test_growth_53a1() :

    cache = ApCache()

    with pytest.warns( CarayolWarning ) :
        ctx = AnalysisContext( 3, FormSpec.from_registry( '53a1' ), 5000 )

    verdict = analyze( ctx, cache, 'growth', LambdaProfile( 0 ), max_M = 10**6 )

    assert verdict.hypotheses['d_ell'] == { 53 : 1 }
    assert verdict.density.theoretical == Fraction( 3, 16 )

    for ell in verdict.primes :
        assert ell % 3 == 1
        assert cache[ell] % 3 == 2

def test_trace_distribution( cache ) :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 10**4 )
    records = classify_all( ctx, cache ).records

    reports = trace_distribution_reports( ctx, records )

    assert len( reports ) == 7
    assert sum( report.hits for report in reports ) == len( records ) - 2
    assert sum( report.theoretical for report in reports ) == 1

def test_growth_set_report( cache ) :

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 1000 )
    records = classify_all( ctx, cache ).records

    primes, report = build_R_growth( ctx, records )

    assert all( r.label == PrimeLabel.SET3 for r in records if r.ell in primes )
    assert report.total == len( records )
    assert report.hits == len( primes )

def test_11a1_at_13() :

    ctx = AnalysisContext( 13, FormSpec.from_registry( '11a1' ), 1000 )

    verdict = analyze( ctx, ApCache(), 'stable', LambdaProfile( 0 ), max_M = 10**6 )

    assert verdict.hypotheses['d_ell'] == { 11 : 0 }
    assert verdict.hypotheses['Hyp bad']
    assert all( M % 11 == 0 for M in verdict.sample_levels )

def test_R_densities( cache ) :
    '''
    R1, R2 and R frequencies for 11a1 at p = 7, x = 10^5.
    '''

    ctx = AnalysisContext( 7, FormSpec.from_registry( '11a1' ), 10**5 )
    records = classify_all( ctx, cache ).records

    _, R1 = build_R1( ctx, records )
    _, R2 = build_R2( ctx, records )
    _, R = build_R_growth( ctx, records )

    assert R1.theoretical == Fraction( 1, 9 )
    assert R2.theoretical == Fraction( 41, 288 )
    assert R.theoretical == Fraction( 7, 288 )

    assert R1.within( 0.02 )
    assert R2.within( 0.02 )
    assert R.within( 0.01 )

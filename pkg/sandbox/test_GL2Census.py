from fractions import Fraction

import pytest

from pyCarayol.GL2Census import (
    enumerate_census, census_report, class_size_check, class_size_formulas, unit_sum_check,
    density_trace_zero, density_trace_nonzero, density_trace_pm_one, density_trace_det_linked,
    closed_form_trace_zero, closed_form_trace_nonzero, closed_form_trace_det_linked, check_against_closed_form
    )
from pyCarayol.CarayolIO import write_census_csv, read_census_csv
from pyCarayol.CarayolTools.errors import NotPrimeError, BoundExceededError, CensusMismatch

primes = [ 3, 5, 7, 11, 13 ]

@pytest.fixture( scope = 'module', params = primes )
def census( request ) :
    return enumerate_census( request.param )

def test_group_order( census ) :

    p = census.p

    assert census.total() == p*( p - 1 )**2*( p + 1 )
    assert census.table[0].sum() == 0

def test_identity_cell( census ) :

    p = census.p

    assert census.count( 1, 2 ) == p*p

def test_trace_zero( census ) :

    p = census.p

    assert density_trace_zero( p, census ) == Fraction( p, p*p - 1 )

def test_trace_nonzero( census ) :

    p = census.p

    for a in range( 1, p ) :
        assert density_trace_nonzero( p, a, census ) == closed_form_trace_nonzero( p )

    for sign in ( 1, -1 ) :
        assert density_trace_pm_one( p, sign, census ) == Fraction( p*p - p - 1, ( p - 1 )**2*( p + 1 ) )

    with pytest.raises( ValueError ) :
        density_trace_nonzero( p, p, census )

def test_det_linked( census ) :

    p = census.p

    for sign in ( 1, -1 ) :
        assert density_trace_det_linked( p, sign, census ) == Fraction( p*p - 2, ( p - 1 )**2*( p + 1 ) )

def test_unit_sum( census ) :
    assert unit_sum_check( census.p, census )

def test_class_sizes( census ) :

    report = class_size_check( census.p, census )

    assert all( check['passed'] for check in report.values() )

def test_class_tallies( census ) :

    p = census.p
    tallies = census.class_tallies()

    assert sum( tallies.values() ) == census.group_order

    for kind, ( size, multiplicity ) in class_size_formulas.items() :
        assert tallies[kind] == size( p )*multiplicity( p )
        assert len( census.class_sizes()[kind] ) == multiplicity( p )

    assert tallies['Central'] == p - 1

def test_census_report( census ) :

    report = census_report( census.p, census )

    assert report['passed']
    assert report['count_C_1_2'] == census.p**2

def test_closed_forms_add_up() :
    for p in range( 3, 102, 2 ) :
        assert closed_form_trace_zero( p ) + ( p - 1 )*closed_form_trace_nonzero( p ) == 1

def test_known_values() :

    assert closed_form_trace_zero( 5 ) == Fraction( 5, 24 )
    assert closed_form_trace_nonzero( 5 ) == Fraction( 19, 96 )
    assert closed_form_trace_det_linked( 7 ) == Fraction( 47, 288 )

def test_mismatch() :
    with pytest.raises( CensusMismatch ) :
        check_against_closed_form( 'density_trace_zero', 5, Fraction( 1, 5 ), closed_form_trace_zero( 5 ) )

def test_threads() :

    serial = enumerate_census( 7 )
    parallel = enumerate_census( 7, threads = 2 )

    assert ( serial.table == parallel.table ).all()
    assert ( serial.scalar_table == parallel.scalar_table ).all()

def test_bad_primes() :

    for p in ( 1, 2, 4, 9 ) :
        with pytest.raises( NotPrimeError ) :
            enumerate_census( p )

    with pytest.raises( BoundExceededError ) :
        enumerate_census( 103 )

    with pytest.raises( BoundExceededError ) :
        enumerate_census( 13, bound = 11 )

def test_export( tmp_path ) :

    census = enumerate_census( 5 )
    filename = write_census_csv( tmp_path/'census_5.csv', census )

    p, counts = read_census_csv( filename )

    assert p == 5
    assert len( counts ) == 4*5
    assert counts[ ( 1, 2 ) ] == 25
    assert sum( counts.values() ) == 480

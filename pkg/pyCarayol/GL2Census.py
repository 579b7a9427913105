#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import numpy as np
from fractions import Fraction
from concurrent.futures import ProcessPoolExecutor

from .FpMatrix import cell_type
from .primeTools.sieve import check_prime
from .CarayolTools.errors import BoundExceededError, CensusMismatch
from .CarayolTools.CarayolStatics import default_census_bound

class ClassCount :
    '''
    Census of GL2(Fp) by ( determinant, trace ).

    table[m, n] is #C_{m,n}, the number of invertible matrices with det m and
    trace n. Row m = 0 is always zero. scalar_table[m, n] counts the scalar
    matrices in the same cell.
    '''

    def __init__( self, p, table, scalar_table ) :

        self.p = p
        self.table = np.asarray( table, dtype = np.int64 )
        self.scalar_table = np.asarray( scalar_table, dtype = np.int64 )

    @property
    def group_order( self ) :
        p = self.p
        return p*( p - 1 )**2*( p + 1 )

    def count( self, det, trace ) :
        return int( self.table[ det % self.p, trace % self.p ] )

    def total( self ) :
        return int( self.table.sum() )

    def density_of_cells( self, cells ) :
        '''
        Exact proportion of GL2(Fp) lying in the union of the given ( det, trace ) cells.
        '''

        cells = { ( m % self.p, n % self.p ) for m, n in cells }

        return Fraction( sum( self.count( m, n ) for m, n in cells ), self.group_order )

    def cells( self ) :
        '''
        ( det, trace, count ) for det != 0, det then trace ascending.
        '''
        return [ ( m, n, self.count( m, n ) ) for m in range( 1, self.p ) for n in range( self.p ) ]

    def class_type_of_cell( self, det, trace ) :
        '''
        'split', 'repeated' or 'irreducible', from the discriminant trace^2 - 4 det.
        '''
        return cell_type( det, trace, self.p )

    def class_sizes( self ) :
        '''
        { kind : [ class size per cell ] }. Each cell holds one class of its
        type, except repeated-root cells, which split into a central class
        and a non-diagonal one.
        '''

        sizes = { 'SplitSemisimple' : [], 'NonDiagonalRepeated' : [], 'Central' : [], 'IrreducibleQuadratic' : [] }

        for m, n, count in self.cells() :

            kind = self.class_type_of_cell( m, n )
            scalars = int( self.scalar_table[ m, n ] )

            if kind == 'split' :
                sizes['SplitSemisimple'] += [ count ]

            elif kind == 'irreducible' :
                sizes['IrreducibleQuadratic'] += [ count ]

            else :
                sizes['Central'] += [ scalars ]
                sizes['NonDiagonalRepeated'] += [ count - scalars ]

        return sizes

    def class_tallies( self ) :
        '''
        Number of elements of each class type.
        '''
        return { kind : sum( sizes ) for kind, sizes in self.class_sizes().items() }

def census_chunk( p, a ) :
    '''
    Census of the p^3 matrices [[a, b], [c, d]] with fixed first entry a.

    Returns the flattened ( det, trace ) count table, singular matrices
    included in row 0, and the flattened scalar table.
    '''

    r = np.arange( p, dtype = np.int64 )

    b = r[ :, None, None ]
    c = r[ None, :, None ]
    d = r[ None, None, : ]

    det = ( a*d - b*c ) % p
    trace = np.broadcast_to( ( a + d ) % p, det.shape )

    index = ( det*p + trace ).ravel()
    counts = np.bincount( index, minlength = p*p )

    scalar = ( b == 0 ) & ( c == 0 ) & ( d == a )
    scalar_counts = np.bincount( index[ np.broadcast_to( scalar, det.shape ).ravel() ], minlength = p*p )

    return counts, scalar_counts

def enumerate_census( p, bound = None, threads = None, verbose = False ) :
    '''
    Brute-force census of GL2(Fp) over all p^4 matrices.

    census = enumerate_census( p, bound = None, threads = None, verbose = False )

    Parameters:
        p : odd prime, 3 <= p <= bound
        bound : largest admissible p (default_census_bound)
        threads : number of worker processes; the work is partitioned on the first matrix entry
    '''

    if bound is None :
        bound = default_census_bound

    check_prime( p, odd = True )

    if p > bound :
        raise BoundExceededError( p, bound )

    if verbose :
        print( 'Enumerating the ' + str( p**4 ) + ' 2x2 matrices over F' + str(p) + '...' )

    if threads is None or threads <= 1 :
        chunks = [ census_chunk( p, a ) for a in range( p ) ]

    else :
        with ProcessPoolExecutor( max_workers = threads ) as executor :
            chunks = list( executor.map( census_chunk, [p]*p, range( p ) ) )

    table = sum( counts for counts, _ in chunks ).reshape( p, p )
    scalar_table = sum( scalars for _, scalars in chunks ).reshape( p, p )

    # singular matrices
    table[0, :] = 0
    scalar_table[0, :] = 0

    census = ClassCount( p, table, scalar_table )

    if verbose :
        print( 'Counted ' + str( census.total() ) + ' invertible matrices.' )

    return census

def get_census( p, census = None, **kwargs ) :

    if census is None :
        return enumerate_census( p, **kwargs )

    if census.p != p :
        raise ValueError( 'census is for p = ' + str( census.p ) + ', not ' + str( p ) )

    return census

###################################
#
# CLOSED FORMS
#
###################################

def closed_form_trace_zero( p ) :
    return Fraction( p, p*p - 1 )

def closed_form_trace_nonzero( p ) :
    return Fraction( p*p - p - 1, ( p - 1 )**2*( p + 1 ) )

def closed_form_trace_det_linked( p ) :
    return Fraction( p*p - 2, ( p - 1 )**2*( p + 1 ) )

class_size_formulas = {
    # kind : ( class size, number of classes )
    'SplitSemisimple' : ( lambda p : p*( p + 1 ), lambda p : ( p - 1 )*( p - 2 )//2 ),
    'NonDiagonalRepeated' : ( lambda p : p*p - 1, lambda p : p - 1 ),
    'Central' : ( lambda p : 1, lambda p : p - 1 ),
    'IrreducibleQuadratic' : ( lambda p : p*p - p, lambda p : p*( p - 1 )//2 ),
    }

def check_against_closed_form( name, p, enumerated, closed_form ) :

    if enumerated != closed_form :
        raise CensusMismatch( name, p, closed_form, enumerated )

    return enumerated

###################################
#
# DENSITIES
#
###################################

def density_trace_zero( p, census = None, **kwargs ) :
    '''
    Proportion of GL2(Fp) with trace 0: sum_i #C_{i,0} / #GL2(Fp) = p/(p^2 - 1).
    '''

    census = get_census( p, census, **kwargs )

    enumerated = census.density_of_cells( ( i, 0 ) for i in range( 1, p ) )

    return check_against_closed_form( 'density_trace_zero', p, enumerated, closed_form_trace_zero( p ) )

def density_trace_nonzero( p, a, census = None, **kwargs ) :
    '''
    Proportion of GL2(Fp) with trace a != 0: (p^2 - p - 1)/((p - 1)^2 (p + 1)), whatever a.
    '''

    if a % p == 0 :
        raise ValueError( 'a = 0 mod p: use density_trace_zero' )

    census = get_census( p, census, **kwargs )

    enumerated = census.density_of_cells( ( i, a ) for i in range( 1, p ) )

    return check_against_closed_form( 'density_trace_nonzero(a = ' + str(a) + ')', p, enumerated, closed_form_trace_nonzero( p ) )

def density_trace_pm_one( p, sign, census = None, **kwargs ) :
    '''
    Trace +1 or -1, the quadratic-residue special case of density_trace_nonzero.
    '''
    return density_trace_nonzero( p, sign, census = census, **kwargs )

def density_trace_det_linked( p, sign, census = None, **kwargs ) :
    '''
    sum_i #C_{i, sign*(i+1)} / #GL2(Fp) = (p^2 - 2)/((p - 1)^2 (p + 1)), sign = +1 or -1.
    '''

    if not sign in ( 1, -1 ) :
        raise ValueError( 'sign must be +1 or -1' )

    census = get_census( p, census, **kwargs )

    enumerated = census.density_of_cells( ( i, sign*( i + 1 ) ) for i in range( 1, p ) )

    return check_against_closed_form( 'density_trace_det_linked(sign = ' + str(sign) + ')', p, enumerated, closed_form_trace_det_linked( p ) )

def unit_sum_check( p, census = None, **kwargs ) :
    '''
    The trace densities add up to 1, both as closed forms and from the census.
    '''

    census = get_census( p, census, **kwargs )

    closed = closed_form_trace_zero( p ) + ( p - 1 )*closed_form_trace_nonzero( p )
    enumerated = density_trace_zero( p, census ) + sum( density_trace_nonzero( p, a, census ) for a in range( 1, p ) )

    return closed == 1 and enumerated == 1

def class_size_check( p, census = None, **kwargs ) :
    '''
    Check the four class-size formulas and class multiplicities against the enumeration.

    report = class_size_check( p )

    report[ kind ] = { 'size', 'classes', 'observed_classes', 'elements', 'passed' }
    report['group_order'] = { 'expected', 'enumerated', 'passed' }
    '''

    census = get_census( p, census, **kwargs )

    sizes_seen = census.class_sizes()
    tallies = census.class_tallies()

    report = {}

    for kind, ( size, multiplicity ) in class_size_formulas.items() :

        report[kind] = {
            'size' : size( p ),
            'classes' : multiplicity( p ),
            'observed_classes' : len( sizes_seen[kind] ),
            'elements' : tallies[kind],
            'passed' : len( sizes_seen[kind] ) == multiplicity( p ) and all( s == size( p ) for s in sizes_seen[kind] )
            }

    expected_order = sum( size( p )*multiplicity( p ) for size, multiplicity in class_size_formulas.values() )

    report['group_order'] = {
        'expected' : census.group_order,
        'from_classes' : expected_order,
        'enumerated' : census.total(),
        'passed' : expected_order == census.group_order == census.total()
        }

    return report

def census_report( p, census = None, **kwargs ) :
    '''
    Every closed-form check of the census at p, in one dictionary.

    Raises CensusMismatch on the first density disagreeing with its closed form.
    '''

    census = get_census( p, census, **kwargs )

    report = {
        'p' : p,
        'group_order' : census.group_order,
        'count_C_1_2' : census.count( 1, 2 ),
        'count_C_1_2_passed' : census.count( 1, 2 ) == p*p,
        'density_trace_zero' : density_trace_zero( p, census ),
        'density_trace_nonzero' : { a : density_trace_nonzero( p, a, census ) for a in range( 1, p ) },
        'density_trace_det_linked' : { sign : density_trace_det_linked( p, sign, census ) for sign in ( 1, -1 ) },
        'unit_sum_passed' : unit_sum_check( p, census ),
        'class_sizes' : class_size_check( p, census ),
        }

    report['passed'] = (
        report['count_C_1_2_passed']
        and report['unit_sum_passed']
        and all( check['passed'] for check in report['class_sizes'].values() )
        )

    return report

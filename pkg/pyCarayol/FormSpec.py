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

import warnings
import numpy as np
from dataclasses import dataclass
from enum import Enum
from concurrent.futures import ProcessPoolExecutor

from .primeTools.sieve import primes_below, prime_divisors, is_prime
from .CarayolIO import read_ap_csv, write_ap_csv
from .CarayolTools.errors import MissingCoefficient, ConfigError, NotPrimeError, CarayolWarning
from .CarayolTools.CarayolStatics import curve_registry, provenance_counted, provenance_ingested

FormSpec_structure = '''
FormSpec attributes:

    - source : WeierstrassCurve( a1, a2, a3, a4, a6 ) or CoefficientTable( path )
    - level N
    - label

ApCache attributes:

    - entries { ell : a_ell } (integers, never reduced mod p)
    - provenance { ell : 'counted' or 'ingested' }
'''

###################################
#
# CURVES
#
###################################

class ReductionType( Enum ) :
    GOOD = 'good'
    SPLIT = 'split'
    NONSPLIT = 'nonsplit'
    ADDITIVE = 'additive'

@dataclass( frozen = True )
class WeierstrassCurve :
    '''
    y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, integral model.
    '''

    a1 : int
    a2 : int
    a3 : int
    a4 : int
    a6 : int

    def __post_init__( self ) :
        if self.discriminant == 0 :
            raise ConfigError( 'singular Weierstrass model ' + str( self.coefficients ) )

    @property
    def coefficients( self ) :
        return ( self.a1, self.a2, self.a3, self.a4, self.a6 )

    @property
    def key( self ) :
        '''
        '0_-1_1_-10_-20' for 11a1; names cache files.
        '''
        return '_'.join( str( a ) for a in self.coefficients )

    @property
    def b2( self ) :
        return self.a1**2 + 4*self.a2

    @property
    def b4( self ) :
        return 2*self.a4 + self.a1*self.a3

    @property
    def b6( self ) :
        return self.a3**2 + 4*self.a6

    @property
    def b8( self ) :
        a1, a2, a3, a4, a6 = self.coefficients
        return a1**2*a6 + 4*a2*a6 - a1*a3*a4 + a2*a3**2 - a4**2

    @property
    def discriminant( self ) :
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return - b2**2*b8 - 8*b4**3 - 27*b6**2 + 9*b2*b4*b6

    def has_bad_reduction( self, ell ) :
        return self.discriminant % ell == 0

    def reduction_type( self, ell ) :
        '''
        Reduction type at ell, read from the discriminant and the projective point count.
        Assumes the model is minimal at ell.
        '''

        if not self.has_bad_reduction( ell ) :
            return ReductionType.GOOD

        return { 1 : ReductionType.SPLIT, -1 : ReductionType.NONSPLIT, 0 : ReductionType.ADDITIVE }[ count_ap( self, ell ) ]

@dataclass( frozen = True )
class CoefficientTable :
    path : str

@dataclass( frozen = True )
class FormSpec :
    '''
    A weight-2 newform given by a rational curve or by a table of integer coefficients.
    '''

    source : object
    level : int
    label : str = ''

    def __post_init__( self ) :

        if self.level < 1 :
            raise ConfigError( 'the level N must be a positive integer' )

        if not isinstance( self.source, ( WeierstrassCurve, CoefficientTable ) ) :
            raise ConfigError( 'source must be a WeierstrassCurve or a CoefficientTable' )

    @classmethod
    def from_curve( cls, coefficients, level, label = '' ) :
        return cls( WeierstrassCurve( *coefficients ), level, label )

    @classmethod
    def from_table( cls, path, level, label = '' ) :
        return cls( CoefficientTable( str( path ) ), level, label )

    @classmethod
    def from_registry( cls, name ) :
        '''
        FormSpec.from_registry( '11a1' )
        '''

        try :
            coefficients, level = curve_registry[ name ]
        except KeyError :
            raise ConfigError( 'unknown curve ' + str( name ) + '; known curves: ' + ', '.join( curve_registry ) )

        return cls.from_curve( coefficients, level, label = name )

    @property
    def is_curve( self ) :
        return isinstance( self.source, WeierstrassCurve )

    def bad_primes( self ) :
        return prime_divisors( self.level )

###################################
#
# POINT COUNTING
#
###################################

def naive_ap( curve, ell ) :
    '''
    ell + 1 - #E(F_ell) by a double loop over ( x, y ) on the long Weierstrass model.
    '''

    a1, a2, a3, a4, a6 = ( a % ell for a in curve.coefficients )

    x = np.arange( ell, dtype = np.int64 )[ :, None ]
    y = np.arange( ell, dtype = np.int64 )[ None, : ]

    lhs = ( y*y + a1*x*y + a3*y ) % ell
    rhs = ( ( ( x + a2 )*x + a4 )*x + a6 ) % ell

    affine = int( np.count_nonzero( lhs == rhs ) )

    return ell - affine # point at infinity

def charsum_ap( curve, ell ) :
    '''
    ell + 1 - #E(F_ell) for odd ell, completing the square:

        ( 2y + a1 x + a3 )^2 = 4x^3 + b2 x^2 + 2 b4 x + b6

    so that #affine = sum_x #{ Y : Y^2 = f(x) }, read from a table of square counts.
    '''

    b2, twice_b4, b6 = ( b % ell for b in ( curve.b2, 2*curve.b4, curve.b6 ) )

    x = np.arange( ell, dtype = np.int64 )

    f = ( 4*x + b2 ) % ell
    f = ( f*x + twice_b4 ) % ell
    f = ( f*x + b6 ) % ell

    square_counts = np.bincount( ( x*x ) % ell, minlength = ell )

    affine = int( square_counts[f].sum() )

    return ell - affine

def count_ap( curve, ell ) :
    '''
    a_ell = ell + 1 - N_ell, with N_ell the number of projective points of the
    reduced model (singular point included at bad primes).

    For good ell, the trace of Frobenius; +1 / -1 at split / non-split
    multiplicative reduction; 0 at additive reduction.
    '''

    if not is_prime( ell ) :
        raise NotPrimeError( ell, name = 'ell' )

    if ell < 5 :
        return naive_ap( curve, ell )

    return charsum_ap( curve, ell )

def count_chunk( coefficients, ells ) :
    curve = WeierstrassCurve( *coefficients )
    return [ ( ell, count_ap( curve, ell ) ) for ell in ells ]

###################################
#
# CACHE
#
###################################

class ApCache :
    '''
    Memoized integer coefficients a_ell, one entry per prime.
    Reduction mod p happens downstream, so one cache serves every p.
    '''

    def __init__( self, entries = None, provenance = None ) :

        self.entries = {}
        self.provenance = {}

        if not entries is None :
            for ell, ap in dict( entries ).items() :
                self.insert( ell, ap, ( provenance or {} ).get( ell, provenance_ingested ) )

    def insert( self, ell, ap, provenance = provenance_counted ) :

        ell, ap = int( ell ), int( ap )

        if ell in self.entries and self.entries[ell] != ap :
            raise ConfigError( 'conflicting values for a_' + str( ell ) + ': ' + str( self.entries[ell] ) + ' and ' + str( ap ) )

        self.entries[ell] = ap
        self.provenance[ell] = provenance

    def merge( self, pairs, provenance = provenance_counted ) :
        for ell, ap in sorted( pairs ) :
            self.insert( ell, ap, provenance )
        return self

    def __contains__( self, ell ) :
        return ell in self.entries

    def __getitem__( self, ell ) :
        return self.entries[ell]

    def __len__( self ) :
        return len( self.entries )

    def items( self ) :
        return sorted( self.entries.items() )

    def primes( self ) :
        return sorted( self.entries )

    def hasse_violations( self, level ) :
        '''
        Good primes with a_ell^2 > 4 ell.
        '''
        return [ ell for ell, ap in self.items() if level % ell != 0 and ap*ap > 4*ell ]

    def bad_prime_violations( self, level ) :
        '''
        Primes ell | N with a_ell outside { -1, 0, 1 }.
        '''
        return [ ell for ell, ap in self.items() if level % ell == 0 and not ap in ( -1, 0, 1 ) ]

    def save( self, filename ) :
        return write_ap_csv( filename, self.items() )

    @classmethod
    def load( cls, filename ) :
        cache = cls()
        return cache.merge( read_ap_csv( filename ), provenance = provenance_ingested )

    @classmethod
    def for_form( cls, form, cache_file = None, verbose = False ) :
        '''
        Cache primed with the coefficient table of the form (if any) and a cache file (if it exists).
        '''

        cache = cls()

        if not form.is_curve :
            cache.merge( read_ap_csv( form.source.path ), provenance = provenance_ingested )

            for ell in cache.hasse_violations( form.level ) :
                warnings.warn( 'a_' + str( ell ) + ' = ' + str( cache[ell] ) + ' violates the Hasse bound', CarayolWarning )

            for ell in cache.bad_prime_violations( form.level ) :
                warnings.warn( 'a_' + str( ell ) + ' = ' + str( cache[ell] ) + ' at a prime dividing N is not in {-1, 0, 1}', CarayolWarning )

        if not cache_file is None :
            try :
                cache.merge( read_ap_csv( cache_file ), provenance = provenance_ingested )
                if verbose :
                    print( 'Read ' + str( len( cache ) ) + ' coefficients from ' + str( cache_file ) )
            except FileNotFoundError :
                pass

        return cache

def get_ap( form, ell, cache ) :
    '''
    a_ell of the form, memoized in cache.

    Raises MissingCoefficient when the form is a table without ell.
    '''

    if ell in cache :
        return cache[ell]

    if not form.is_curve :
        raise MissingCoefficient( ell, form.label )

    ap = count_ap( form.source, ell )
    cache.insert( ell, ap, provenance_counted )

    return ap

def bulk_ap( form, x, cache, threads = None, chunk_size = 512, verbose = False ) :
    '''
    Fill cache with a_ell for every prime ell < x. Idempotent.

    cache = bulk_ap( form, x, cache, threads = None )
    '''

    missing = [ ell for ell in primes_below( x ) if not ell in cache ]

    if not missing :
        return cache

    if not form.is_curve :
        raise MissingCoefficient( missing[0], form.label )

    if verbose :
        print( 'Counting points for ' + str( len( missing ) ) + ' primes below ' + str( x ) + '...' )

    coefficients = form.source.coefficients

    if threads is None or threads <= 1 :
        counted = count_chunk( coefficients, missing )

    else :
        chunks = [ missing[ i : i + chunk_size ] for i in range( 0, len( missing ), chunk_size ) ]

        with ProcessPoolExecutor( max_workers = threads ) as executor :
            counted = [ pair for chunk in executor.map( count_chunk, [ coefficients ]*len( chunks ), chunks ) for pair in chunk ]

    cache.merge( counted, provenance = provenance_counted )

    if verbose :
        print( 'Cache holds ' + str( len( cache ) ) + ' coefficients.' )

    return cache

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

import math
import heapq
import warnings
import numpy as np
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from scipy.stats import norm
import matplotlib.pyplot as plt

from .FormSpec import FormSpec, get_ap, bulk_ap
from .primeTools.sieve import check_prime, primes_below
from .CarayolTools.errors import ConfigError, CarayolWarning
from .CarayolTools.export_to_json import rational_dict

CarayolSets_structure = '''
Primes ell < x are split into disjoint sets (p fixed, g of level N):

    Set1      : ell not +-1 mod p, a_ell = +-(1 + ell) mod p    alpha in {0, 1}
    Set1Prime : ell not +-1 mod p, otherwise                    never raised
    Set2      : ell = -1 mod p, a_ell = 0 mod p                 alpha in {0, 1, 2}
    Set2Prime : ell = -1 mod p, a_ell != 0 mod p                never raised
    Set3      : ell = 1 mod p                                   alpha in {0, 1, 2}
    DividesN  : ell | N, never raised
    IsP       : ell = p, levels stay prime to p

Raised levels are M = N prod ell^alpha(ell), M != N.
'''

class PrimeLabel( Enum ) :
    SET1 = 'Set1'
    SET1_PRIME = 'Set1Prime'
    SET2 = 'Set2'
    SET2_PRIME = 'Set2Prime'
    SET3 = 'Set3'
    DIVIDES_N = 'DividesN'
    IS_P = 'IsP'

# admissible nonzero exponents
raising_exponents = {
    PrimeLabel.SET1 : ( 1, ),
    PrimeLabel.SET2 : ( 1, 2 ),
    PrimeLabel.SET3 : ( 1, 2 ),
    }

@dataclass( frozen = True )
class AnalysisContext :
    '''
    Fixed prime p, optimal-level form g and prime bound x.
    '''

    p : int
    form : FormSpec
    x : int

    def __post_init__( self ) :

        check_prime( self.p, odd = True )

        if self.form.level % self.p == 0 :
            raise ConfigError( 'p = ' + str( self.p ) + ' divides the level N = ' + str( self.form.level ) )

        if self.x < 1 :
            raise ConfigError( 'the prime bound x must be positive' )

        if self.p == 3 :
            warnings.warn( 'p = 3: Set1 is empty and several densities vanish', CarayolWarning )

    @property
    def level( self ) :
        return self.form.level

@dataclass( frozen = True )
class PrimeRecord :

    ell : int
    ap : object # int, or None when ell = p is missing from a table
    ell_mod_p : int
    ap_mod_p : object
    label : PrimeLabel

@dataclass( frozen = True )
class LevelCandidate :
    '''
    M = N prod ell^alpha for exponents = ( ( ell, alpha ), ... ), ell ascending.
    '''

    M : int
    exponents : tuple

    @property
    def exponent_map( self ) :
        return dict( self.exponents )

@dataclass
class ClassificationSummary :

    p : int
    x : int
    level : int
    pi_x : int
    counts : dict
    records : list = field( repr = False, default_factory = list )

    @property
    def s1( self ) :
        return self.counts[ PrimeLabel.SET1 ]

    @property
    def s2( self ) :
        return self.counts[ PrimeLabel.SET2 ]

    @property
    def s3( self ) :
        return self.counts[ PrimeLabel.SET3 ]

    @property
    def s1_prime( self ) :
        return self.counts[ PrimeLabel.SET1_PRIME ]

    @property
    def s2_prime( self ) :
        return self.counts[ PrimeLabel.SET2_PRIME ]

    def empirical_density( self, label ) :

        if self.pi_x == 0 :
            return Fraction( 0 )

        return Fraction( self.counts[label], self.pi_x )

    def to_dict( self ) :

        theory = theoretical_set_densities( self.p )
        sets = {}

        for label in theory :
            sets[ label.value ] = {
                'count' : self.counts[label],
                'empirical' : rational_dict( self.empirical_density( label ) ),
                'theoretical' : rational_dict( theory[label] ),
                'deviation' : abs( float( self.empirical_density( label ) - theory[label] ) ),
                }

        return {
            'p' : self.p,
            'x' : self.x,
            'N' : self.level,
            'pi_x' : self.pi_x,
            'counts' : { label.value : count for label, count in self.counts.items() },
            'sets' : sets,
            'set1_statement_value' : rational_dict( set1_statement_density( self.p ) ),
            'set1_discrimination' : discriminate_set1( self ),
            'level_count' : level_count_report( self ),
            }

###################################
#
# THEORETICAL DENSITIES
#
###################################

def theoretical_set_densities( p ) :
    '''
    Chebotarev densities of the five Carayol sets, as exact rationals.

    Set1 uses 2(p - 3)/(p - 1)^2, the value consistent with the census.
    '''

    return {
        PrimeLabel.SET1 : Fraction( 2*( p - 3 ), ( p - 1 )**2 ),
        PrimeLabel.SET1_PRIME : Fraction( p - 3, p - 1 ) - Fraction( 2*( p - 3 ), ( p - 1 )**2 ),
        PrimeLabel.SET2 : Fraction( 1, ( p - 1 )**2 ),
        PrimeLabel.SET2_PRIME : Fraction( 1, p - 1 ) - Fraction( 1, ( p - 1 )**2 ),
        PrimeLabel.SET3 : Fraction( 1, p - 1 ),
        }

def set1_statement_density( p ) :
    '''
    The alternative Set1 limit 2(p - 3)/(p - 1)^3, kept for comparison.
    '''
    return Fraction( 2*( p - 3 ), ( p - 1 )**3 )

def census_set_cells( p ) :
    '''
    ( det, trace ) cells of GL2(Fp) corresponding to each Carayol set.
    '''

    cells = { label : set() for label in theoretical_set_densities( p ) }

    for m in range( 1, p ) :
        for n in range( p ) :

            if m == p - 1 :
                label = PrimeLabel.SET2 if n == 0 else PrimeLabel.SET2_PRIME

            elif m == 1 :
                label = PrimeLabel.SET3

            elif n in ( ( 1 + m ) % p, ( - 1 - m ) % p ) :
                label = PrimeLabel.SET1

            else :
                label = PrimeLabel.SET1_PRIME

            cells[label].add( ( m, n ) )

    return cells

def census_set_densities( census ) :
    '''
    Set densities read off a ClassCount.
    '''
    return { label : census.density_of_cells( cells ) for label, cells in census_set_cells( census.p ).items() }

###################################
#
# CLASSIFICATION
#
###################################

def classify_prime( ctx, ell, ap ) :
    '''
    record = classify_prime( ctx, ell, ap )
    '''

    p = ctx.p

    ell_mod_p = ell % p
    ap_mod_p = None if ap is None else ap % p

    if ell == p :
        label = PrimeLabel.IS_P

    elif ctx.level % ell == 0 :
        label = PrimeLabel.DIVIDES_N

    elif ell_mod_p == p - 1 :
        label = PrimeLabel.SET2 if ap_mod_p == 0 else PrimeLabel.SET2_PRIME

    elif ell_mod_p == 1 :
        label = PrimeLabel.SET3

    elif ap_mod_p in ( ( 1 + ell ) % p, ( - 1 - ell ) % p ) :
        label = PrimeLabel.SET1

    else :
        label = PrimeLabel.SET1_PRIME

    return PrimeRecord( ell, ap, ell_mod_p, ap_mod_p, label )

def classify_all( ctx, cache, threads = None, verbose = False ) :
    '''
    Classify every prime ell < x.

    summary = classify_all( ctx, cache, threads = None )

    Coefficients missing from the cache are counted (curves) or raise
    MissingCoefficient (tables). summary.records holds the PrimeRecords.
    '''

    if ctx.form.is_curve :
        bulk_ap( ctx.form, ctx.x, cache, threads = threads, verbose = verbose )

    records = []

    for ell in primes_below( ctx.x ) :

        if ell == ctx.p and not ctx.form.is_curve and not ell in cache :
            ap = None
        else :
            ap = get_ap( ctx.form, ell, cache )

        records += [ classify_prime( ctx, ell, ap ) ]

    counts = { label : 0 for label in PrimeLabel }

    for record in records :
        counts[ record.label ] += 1

    summary = ClassificationSummary( ctx.p, ctx.x, ctx.level, len( records ), counts, records )

    if verbose :
        print( 'Classified ' + str( summary.pi_x ) + ' primes: s1 = ' + str( summary.s1 ) + ', s2 = ' + str( summary.s2 ) + ', s3 = ' + str( summary.s3 ) )

    return summary

def discriminate_set1( summary, threshold = 5 ) :
    '''
    Distance, in binomial standard errors, between the empirical s1/pi(x) and
    the alternative value 2(p - 3)/(p - 1)^3.
    '''

    alternative = set1_statement_density( summary.p )
    empirical = summary.empirical_density( PrimeLabel.SET1 )

    if summary.pi_x == 0 or not 0 < alternative < 1 :
        return { 'z_score' : None, 'p_value' : None, 'rejects_statement_value' : False }

    standard_error = math.sqrt( float( alternative*( 1 - alternative ) ) / summary.pi_x )
    z_score = float( empirical - alternative )/standard_error

    return {
        'z_score' : z_score,
        'p_value' : float( 2*norm.sf( abs( z_score ) ) ),
        'rejects_statement_value' : abs( z_score ) > threshold,
        }

###################################
#
# LEVELS
#
###################################

def count_levels( summary ) :
    '''
    2^s1 3^(s2 + s3) - 1, the number of raised levels M != N.
    '''
    return 2**summary.s1*3**( summary.s2 + summary.s3 ) - 1

def level_count_report( summary, max_digits = 100 ) :
    '''
    The level count for reports: s1, s2, s3 and log10, with the exact
    count as a string only when it has fewer than max_digits digits.
    '''

    if summary.s1 + summary.s2 + summary.s3 == 0 :
        log10 = None
    else :
        # log10 of 2^s1 3^(s2 + s3); the -1 is below float precision once it matters
        log10 = summary.s1*math.log10( 2 ) + ( summary.s2 + summary.s3 )*math.log10( 3 )

    exact = None

    if log10 is None or log10 < max_digits :
        exact = str( count_levels( summary ) )

    return { 's1' : summary.s1, 's2' : summary.s2, 's3' : summary.s3, 'log10' : log10, 'exact' : exact }

def level_options( records ) :
    '''
    [ ( ell, admissible nonzero exponents ), ... ] sorted by ell.
    '''
    return sorted( ( r.ell, raising_exponents[ r.label ] ) for r in records if r.label in raising_exponents )

def walk_levels( N, options, max_M = None ) :
    '''
    Stream N prod ell^alpha <= max_M in ascending order, M != N.

    options : [ ( ell, nonzero exponents ), ... ], ell ascending, primes not dividing N.
    Each level is reached once, through its largest prime.
    '''

    heap = [ ( N, -1, () ) ]

    while heap :

        M, last, exponents = heapq.heappop( heap )

        if last >= 0 :
            yield LevelCandidate( M, exponents )

        for j in range( last + 1, len( options ) ) :

            ell, allowed = options[j]

            if not max_M is None and M*ell > max_M :
                break

            for alpha in allowed :

                value = M*ell**alpha

                if max_M is None or value <= max_M :
                    heapq.heappush( heap, ( value, j, exponents + ( ( ell, alpha ), ) ) )

def enumerate_levels( ctx, records, max_M = None ) :
    '''
    Stream every admissible raised level M <= max_M (unbounded if None), ascending.
    '''
    return walk_levels( ctx.level, level_options( records ), max_M )

def is_admissible_level( ctx, records, candidate ) :
    '''
    True if candidate.M = N prod ell^alpha with every ( ell, alpha ) allowed by the records.
    '''

    labels = { r.ell : r.label for r in records }

    product = ctx.level

    for ell, alpha in candidate.exponents :

        if not alpha in raising_exponents.get( labels.get( ell ), () ) :
            return False

        product *= ell**alpha

    return (
        product == candidate.M
        and candidate.M != ctx.level
        and candidate.M % ctx.level == 0
        and candidate.M % ctx.p != 0
        )

###################################
#
# PLOTS
#
###################################

def plot_density_convergence( summary, labels = None, ax = None, **kwargs ) :
    '''
    Running proportion s_i(ell)/pi(ell) of each set against ell, with the theoretical densities.

    ax = plot_density_convergence( summary, labels = None, ax = None, **kwargs )
    '''

    if ax is None :
        ax = plt.gca()

    if labels is None :
        labels = [ PrimeLabel.SET1, PrimeLabel.SET2, PrimeLabel.SET3 ]

    theory = theoretical_set_densities( summary.p )

    ells = np.array( [ r.ell for r in summary.records ] )
    rank = np.arange( 1, len( ells ) + 1 )

    for label in labels :

        hits = np.cumsum( [ r.label == label for r in summary.records ] )
        line = ax.plot( ells, hits/rank, label = label.value, **kwargs )[0]
        ax.axhline( float( theory[label] ), color = line.get_color(), linestyle = '--', lw = .8 )

    ax.set_xscale( 'log' )
    ax.set_xlabel( r'$\ell$' )
    ax.set_ylabel( r'$s_i(\ell)/\pi(\ell)$' )
    ax.legend( title = 'p = ' + str( summary.p ) )

    return ax

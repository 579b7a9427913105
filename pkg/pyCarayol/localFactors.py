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

from dataclasses import dataclass, field
from enum import Enum

from .FormSpec import get_ap
from .primeTools.sieve import valuation
from .CarayolTools.errors import HypothesisViolation, NegativeLambda

localFactors_structure = '''
delta( . , ell ) = s_ell d_ell

    s_ell : largest power of p dividing ( ell^(p-1) - 1 )/p, which is also
            the number of primes above ell in the cyclotomic Zp-extension
    d_ell : multiplicity of 1 as a root mod p of P_ell(X)

            P_ell(X) = ell - a_ell X + X^2   for ell not dividing the level
            P_ell(X) = ell - a_ell X         for ell dividing the level

lambda(g) + sum_{ell | M} delta(g, ell) = lambda(f) + sum_{ell | M} delta(f, ell)
'''

class FactorRole( Enum ) :
    OLD_PRIME = 'OldPrime'
    NEW_PRIME = 'NewPrime'

@dataclass( frozen = True )
class LocalFactor :

    ell : int
    s : int
    d : int
    role : FactorRole

    def __post_init__( self ) :
        if not self.d in ( 0, 1, 2 ) or ( self.role == FactorRole.OLD_PRIME and self.d == 2 ) :
            raise ValueError( 'd_ell exceeds the degree of P_ell' )

    @property
    def delta( self ) :
        return self.s*self.d

    def to_dict( self ) :
        return { 'ell' : self.ell, 's' : self.s, 'd' : self.d, 'delta' : self.delta, 'role' : self.role.value }

@dataclass( frozen = True )
class LambdaProfile :
    '''
    Iwasawa invariants supplied by the user. The ordinary / non-ordinary
    distinction and the sign of signed invariants are metadata only.
    '''

    lam : int
    mu : int = 0
    label : str = ''
    ordinary : bool = True
    sign : str = ''

    def __post_init__( self ) :
        if self.lam < 0 or self.mu < 0 :
            raise ValueError( 'Iwasawa invariants are nonnegative' )

    def check_mu( self ) :
        if self.mu != 0 :
            raise HypothesisViolation( 'Hyp mu', 'mu(' + ( self.label or 'g' ) + ') = ' + str( self.mu ) + ' != 0' )

@dataclass
class TransferResult :

    lambda_f : int
    growth : bool
    sum_delta_g : int
    sum_delta_f : int

@dataclass
class BadHypotheses :

    hyp_bad : bool
    hyp_bad_prime : bool
    d_values : dict = field( default_factory = dict )

###################################
#
# LOCAL FACTORS
#
###################################

def s_factor( p, ell ) :
    '''
    p^v, v the p-adic valuation of ( ell^(p-1) - 1 )/p.
    '''

    if ell == p :
        raise ValueError( 'ell = p has no local factor' )

    return p**valuation( ( ell**( p - 1 ) - 1 )//p, p )

def d_factor_good( p, ell, ap ) :
    '''
    Multiplicity of X = 1 in ell - a_ell X + X^2 mod p.
    '''

    if ( 1 + ell - ap ) % p != 0 :
        return 0

    if ell % p != 1 :
        return 1

    return 2

def d_factor_bad( p, ell, ap ) :
    '''
    1 if X = 1 is a root of ell - a_ell X mod p, else 0.
    '''
    return int( ( ap - ell ) % p == 0 )

def local_factor( p, ell, ap, role ) :

    if role == FactorRole.OLD_PRIME :
        d = d_factor_bad( p, ell, ap )
    else :
        d = d_factor_good( p, ell, ap )

    return LocalFactor( ell, s_factor( p, ell ), d, role )

def g_local_factors( ctx, cache, primes ) :
    '''
    LocalFactors of g at the given primes, OldPrime at ell | N.
    '''

    factors = []

    for ell in primes :
        role = FactorRole.OLD_PRIME if ctx.level % ell == 0 else FactorRole.NEW_PRIME
        factors += [ local_factor( ctx.p, ell, get_ap( ctx.form, ell, cache ), role ) ]

    return factors

def f_factor_bounds( p, ell ) :
    '''
    Possible values of delta(f, ell) at a prime dividing the raised level.
    '''
    return ( 0, s_factor( p, ell ) )

def check_bad_hypotheses( ctx, cache ) :
    '''
    Hyp bad (d_ell(g) = 0 for all ell | N) and Hyp bad' (d_ell(g) = 1 for all ell | N).
    '''

    d_values = {}

    for ell in ctx.form.bad_primes() :
        d_values[ell] = d_factor_bad( ctx.p, ell, get_ap( ctx.form, ell, cache ) )

    return BadHypotheses(
        hyp_bad = all( d == 0 for d in d_values.values() ),
        hyp_bad_prime = all( d == 1 for d in d_values.values() ),
        d_values = d_values
        )

###################################
#
# LAMBDA TRANSFER
#
###################################

def lambda_transfer( profile, g_factors, f_factors ) :
    '''
    lambda(f) = lambda(g) + sum delta(g, ell) - sum delta(f, ell)

    result = lambda_transfer( profile, g_factors, f_factors )

    result.growth is the predicate lambda(f) > lambda(g).
    '''

    profile.check_mu()

    if sorted( factor.ell for factor in g_factors ) != sorted( factor.ell for factor in f_factors ) :
        raise ValueError( 'g and f local factors must be indexed by the same primes' )

    sum_g = sum( factor.delta for factor in g_factors )
    sum_f = sum( factor.delta for factor in f_factors )

    lambda_f = profile.lam + sum_g - sum_f

    if lambda_f < 0 :
        raise NegativeLambda( lambda_f )

    return TransferResult( lambda_f, sum_g > sum_f, sum_g, sum_f )

def lambda_f_bounds( profile, g_factors ) :
    '''
    ( lowest, highest ) lambda(f) compatible with the g-side factors when
    every delta(f, ell) is only known to lie in { 0, s_ell }.
    '''

    profile.check_mu()

    sum_g = sum( factor.delta for factor in g_factors )
    sum_s = sum( factor.s for factor in g_factors )

    return ( max( 0, profile.lam + sum_g - sum_s ), profile.lam + sum_g )

def analytic_rank_parity( new_prime_count, delta_f_bad ) :
    '''
    Parity of m + delta(f, ell), m the number of primes dividing M/N and
    delta(f, ell) supplied by the user at the prime of N.
    '''
    return ( new_prime_count + delta_f_bad ) % 2

def local_factor_report( factors ) :
    return [ factor.to_dict() for factor in factors ]

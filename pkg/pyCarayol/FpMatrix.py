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

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .primeTools.sieve import check_prime
from .CarayolTools.errors import SingularMatrixError, BoundExceededError
from .CarayolTools.CarayolStatics import sqrt_search_bound

FpMatrix_structure = '''
Residues are stored canonically in [0, p), with p an odd prime that fits
in a machine word. Square roots are found by exhaustive search, so p must
stay below sqrt_search_bound (10^4): the census only needs small p.

FieldElem : value, modulus
Matrix2 : four FieldElem ( a, b, c, d ) = [[a, b], [c, d]], det != 0
ClassLabel : kind, data

    SplitSemisimple : data = ( a, b ), a < b, the two eigenvalues
    NonDiagonalRepeated : data = ( a, ), the repeated eigenvalue
    Central : data = ( a, ), the scalar
    IrreducibleQuadratic : data = ( c1, c0 ), char. poly X^2 + c1 X + c0
'''

@lru_cache( maxsize = None )
def checked_modulus( p ) :
    return check_prime( p, name = 'modulus', odd = True )

@dataclass( frozen = True )
class FieldElem :
    '''
    Element of the prime field Fp.
    '''

    value : int
    modulus : int

    def __post_init__( self ) :
        checked_modulus( self.modulus )
        object.__setattr__( self, 'value', int( self.value ) % self.modulus )

    def _coerce( self, other ) :

        if isinstance( other, FieldElem ) :
            if other.modulus != self.modulus :
                raise ValueError( 'field elements with different moduli' )
            return other.value

        return int( other )

    def __add__( self, other ) :
        return FieldElem( self.value + self._coerce( other ), self.modulus )

    def __sub__( self, other ) :
        return FieldElem( self.value - self._coerce( other ), self.modulus )

    def __mul__( self, other ) :
        return FieldElem( self.value * self._coerce( other ), self.modulus )

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__( self, other ) :
        return FieldElem( self._coerce( other ) - self.value, self.modulus )

    def __neg__( self ) :
        return FieldElem( - self.value, self.modulus )

    def __int__( self ) :
        return self.value

    def inverse( self ) :

        if self.value == 0 :
            raise ZeroDivisionError( '0 has no inverse in F' + str( self.modulus ) )

        return FieldElem( pow( self.value, -1, self.modulus ), self.modulus )

    def is_zero( self ) :
        return self.value == 0

@dataclass( frozen = True )
class Matrix2 :
    '''
    Invertible 2x2 matrix over Fp.

    Matrix2( ( a, b, c, d ) ) stands for [[a, b], [c, d]].
    '''

    entries : tuple

    def __post_init__( self ) :

        if len( self.entries ) != 4 :
            raise ValueError( 'a 2x2 matrix has four entries' )

        if len( { x.modulus for x in self.entries } ) != 1 :
            raise ValueError( 'matrix entries must share one modulus' )

        object.__setattr__( self, 'entries', tuple( self.entries ) )

        if self.det().is_zero() :
            raise SingularMatrixError( 'singular matrix ' + str( self.rows() ) + ' is not in GL2' )

    @classmethod
    def from_rows( cls, rows, p ) :
        '''
        Matrix2.from_rows( [[a, b], [c, d]], p )
        '''
        ( a, b ), ( c, d ) = rows
        return cls( tuple( FieldElem( x, p ) for x in ( a, b, c, d ) ) )

    @property
    def modulus( self ) :
        return self.entries[0].modulus

    def rows( self ) :
        a, b, c, d = ( x.value for x in self.entries )
        return [ [ a, b ], [ c, d ] ]

    def det( self ) :
        a, b, c, d = self.entries
        return a*d - b*c

    def trace( self ) :
        a, _, _, d = self.entries
        return a + d

    def __matmul__( self, other ) :
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return Matrix2( ( a*e + b*g, a*f + b*h, c*e + d*g, c*f + d*h ) )

    def inverse( self ) :
        a, b, c, d = self.entries
        inv_det = self.det().inverse()
        return Matrix2( ( d*inv_det, -b*inv_det, -c*inv_det, a*inv_det ) )

    def conjugate_by( self, g ) :
        '''
        g m g^-1
        '''
        return g @ self @ g.inverse()

    def is_scalar( self ) :
        a, b, c, d = self.entries
        return b.is_zero() and c.is_zero() and a == d

class ClassKind( Enum ) :
    SPLIT_SEMISIMPLE = 'SplitSemisimple'
    NON_DIAGONAL_REPEATED = 'NonDiagonalRepeated'
    CENTRAL = 'Central'
    IRREDUCIBLE_QUADRATIC = 'IrreducibleQuadratic'

@dataclass( frozen = True )
class ClassLabel :

    kind : ClassKind
    data : tuple

    def __str__( self ) :
        if self.kind == ClassKind.IRREDUCIBLE_QUADRATIC :
            c1, c0 = self.data
            return self.kind.value + '(X^2 + ' + str(c1) + 'X + ' + str(c0) + ')'
        return self.kind.value + str( self.data )

###################################
#
# SQUARE ROOTS
#
###################################

@lru_cache( maxsize = 64 )
def root_table( p ) :
    '''
    root_table( p )[a] is the smallest square root of a mod p, or -1.
    '''

    if p >= sqrt_search_bound :
        raise BoundExceededError( p, sqrt_search_bound, name = 'modulus' )

    table = [-1]*p

    for y in range( p - 1, -1, -1 ) :
        table[ y*y % p ] = y

    return tuple( table )

def sqrt_mod_p( a ) :
    '''
    Smallest square root of the FieldElem a, or None if a is not a square.
    '''

    root = root_table( a.modulus )[ a.value ]

    if root < 0 :
        return None

    return FieldElem( root, a.modulus )

def legendre( a ) :
    '''
    Quadratic character of the FieldElem a: 0, 1 or -1.
    '''

    if a.is_zero() :
        return 0

    if sqrt_mod_p( a ) is None :
        return -1

    return 1

###################################
#
# CONJUGACY CLASSES
#
###################################

def det_trace( m ) :
    '''
    ( det, trace ) of a Matrix2, as FieldElem.
    '''
    return m.det(), m.trace()

def cell_type( det, trace, p ) :
    '''
    Type of the characteristic polynomial X^2 - trace X + det over Fp:
    'split' (two distinct roots), 'repeated' or 'irreducible'.
    '''

    character = legendre( FieldElem( trace*trace - 4*det, p ) )

    return { 1 : 'split', 0 : 'repeated', -1 : 'irreducible' }[ character ]

def classify( m ) :
    '''
    Conjugacy-class label of a Matrix2.

    label = classify( m )
    '''

    p = m.modulus
    det, trace = det_trace( m )
    half = FieldElem( 2, p ).inverse()

    root = sqrt_mod_p( trace*trace - 4*det )

    if root is None :
        return ClassLabel( ClassKind.IRREDUCIBLE_QUADRATIC, ( ( -trace ).value, det.value ) )

    if root.is_zero() :

        eigenvalue = ( trace*half ).value

        if m.is_scalar() :
            return ClassLabel( ClassKind.CENTRAL, ( eigenvalue, ) )

        return ClassLabel( ClassKind.NON_DIAGONAL_REPEATED, ( eigenvalue, ) )

    eigenvalues = sorted( [ ( ( trace + root )*half ).value, ( ( trace - root )*half ).value ] )

    return ClassLabel( ClassKind.SPLIT_SEMISIMPLE, tuple( eigenvalues ) )

def carayol_trace_condition( det, trace, ell, p ) :
    '''
    Carayol's condition  ell*trace^2 = (1 + ell)^2*det  in Fp.

    With det = ell (trivial nebentypus, det = cyclotomic character) and
    ell != 0 mod p, this is trace = +-(1 + ell).
    '''
    return ( ell*trace*trace - ( 1 + ell )**2*det ) % p == 0

from numpy import integer, floating, ndarray
from json import JSONEncoder, dumps
from fractions import Fraction
from enum import Enum
from dataclasses import is_dataclass, asdict

import mpmath

###################################
#
# Export reports to json
#
####################################

decimal_digits = 12

def rational_str( value ) :
    '''
    Fraction -> "num/den"
    '''
    value = Fraction( value )
    return str( value.numerator ) + '/' + str( value.denominator )

def rational_decimal( value, digits = None ) :
    '''
    Decimal approximation of an exact rational, rendered by mpmath.
    '''

    if digits is None :
        digits = decimal_digits

    value = Fraction( value )

    with mpmath.workdps( digits + 5 ) :
        return float( mpmath.nstr( mpmath.mpf( value.numerator ) / value.denominator, digits ) )

def rational_dict( value ) :
    return { 'exact' : rational_str( value ), 'decimal' : rational_decimal( value ) }

class CarayolEncoder( JSONEncoder ):
    '''
    Encoder from numpy objects, exact rationals, enums and dataclasses to json.

    Rationals become "num/den" strings.
    '''

    def default(self, obj):

        if isinstance( obj, integer ):
            return int(obj)

        if isinstance( obj, floating ):
            return float(obj)

        if isinstance( obj, ndarray ):
            return obj.tolist()

        if isinstance( obj, Fraction ):
            return rational_str( obj )

        if isinstance( obj, Enum ):
            return obj.value

        if hasattr( obj, 'to_dict' ) :
            return stringify_keys( obj.to_dict() )

        if is_dataclass( obj ) :
            return stringify_keys( asdict( obj ) )

        return super(CarayolEncoder, self).default(obj)

def stringify_keys( obj ) :
    '''
    json objects can't handle tuple or enum keys.
    '''

    if isinstance( obj, dict ) :
        return { key_str( key ) : stringify_keys( value ) for key, value in obj.items() }

    if isinstance( obj, ( list, tuple ) ) :
        return [ stringify_keys( value ) for value in obj ]

    return obj

def key_str( key ) :

    if isinstance( key, Enum ) :
        return str( key.value )

    return str( key )

def export_to_json( report, indent = 2 ) :
    '''
    Exports a report (dict, dataclass or object with a to_dict method) to a json string.
    '''

    return dumps( stringify_keys( report ), cls = CarayolEncoder, indent = indent, sort_keys = False )

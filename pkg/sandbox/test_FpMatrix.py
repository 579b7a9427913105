import numpy as np
import pytest

from pyCarayol.FpMatrix import FieldElem, Matrix2, ClassKind, classify, sqrt_mod_p, legendre, cell_type, carayol_trace_condition, root_table
from pyCarayol.CarayolTools.errors import SingularMatrixError, NotPrimeError, BoundExceededError

def random_matrix( rng, p ) :

    while True :
        try :
            return Matrix2.from_rows( rng.integers( 0, p, size = ( 2, 2 ) ).tolist(), p )
        except SingularMatrixError :
            pass

def test_field_arithmetic() :

    a = FieldElem( 9, 7 )

    assert a.value == 2
    assert ( a + 6 ).value == 1
    assert ( 3 - a ).value == 1
    assert ( a*a.inverse() ).value == 1
    assert ( -a ).value == 5

    with pytest.raises( ZeroDivisionError ) :
        FieldElem( 0, 7 ).inverse()

    with pytest.raises( NotPrimeError ) :
        FieldElem( 1, 9 )

def test_det_trace() :

    m = Matrix2.from_rows( [ [ 1, 2 ], [ 3, 4 ] ], 5 )

    assert m.det().value == 3 # -2 mod 5
    assert m.trace().value == 0

    with pytest.raises( SingularMatrixError ) :
        Matrix2.from_rows( [ [ 1, 2 ], [ 2, 4 ] ], 5 )

def test_inverse() :

    m = Matrix2.from_rows( [ [ 2, 1 ], [ 1, 1 ] ], 7 )

    assert ( m @ m.inverse() ).rows() == [ [ 1, 0 ], [ 0, 1 ] ]

def test_class_labels() :

    p = 7

    assert classify( Matrix2.from_rows( [ [ 3, 0 ], [ 0, 3 ] ], p ) ).kind == ClassKind.CENTRAL
    assert classify( Matrix2.from_rows( [ [ 1, 1 ], [ 0, 1 ] ], p ) ).kind == ClassKind.NON_DIAGONAL_REPEATED

    split = classify( Matrix2.from_rows( [ [ 5, 0 ], [ 0, 2 ] ], p ) )
    assert split.kind == ClassKind.SPLIT_SEMISIMPLE
    assert split.data == ( 2, 5 )

    # X^2 + 1 is irreducible mod 7
    rotation = classify( Matrix2.from_rows( [ [ 0, -1 ], [ 1, 0 ] ], p ) )
    assert rotation.kind == ClassKind.IRREDUCIBLE_QUADRATIC
    assert rotation.data == ( 0, 1 )

@pytest.mark.parametrize( 'p', [ 3, 5, 7, 11 ] )
def test_conjugation_invariance( p ) :

    rng = np.random.default_rng( p )

    for _ in range( 200 ) :
        m = random_matrix( rng, p )
        g = random_matrix( rng, p )
        assert classify( m.conjugate_by( g ) ) == classify( m )

@pytest.mark.parametrize( 'p', [ 3, 5, 7 ] )
def test_class_partition( p ) :
    '''
    Every invertible matrix gets exactly one label, and the labels count
    the classes of GL2(Fp).
    '''

    labels = {}

    for a in range( p ) :
        for b in range( p ) :
            for c in range( p ) :
                for d in range( p ) :
                    try :
                        m = Matrix2.from_rows( [ [ a, b ], [ c, d ] ], p )
                    except SingularMatrixError :
                        continue
                    label = classify( m )
                    labels[label] = labels.get( label, 0 ) + 1

    assert sum( labels.values() ) == p*( p - 1 )**2*( p + 1 )
    assert len( labels ) == p*p - 1

    sizes = { ClassKind.SPLIT_SEMISIMPLE : p*( p + 1 ), ClassKind.NON_DIAGONAL_REPEATED : p*p - 1, ClassKind.CENTRAL : 1, ClassKind.IRREDUCIBLE_QUADRATIC : p*p - p }

    for label, size in labels.items() :
        assert size == sizes[ label.kind ]

def test_square_roots() :

    p = 11

    squares = { x*x % p for x in range( 1, p ) }

    for a in range( p ) :
        root = sqrt_mod_p( FieldElem( a, p ) )
        if a == 0 or a in squares :
            assert ( root*root ).value == a
            assert legendre( FieldElem( a, p ) ) == ( 0 if a == 0 else 1 )
        else :
            assert root is None
            assert legendre( FieldElem( a, p ) ) == -1

    with pytest.raises( BoundExceededError ) :
        root_table( 10007 )

def test_cell_type() :

    assert cell_type( 1, 2, 5 ) == 'repeated'
    assert cell_type( 6, 5, 7 ) == 'split' # roots 2, 3
    assert cell_type( 1, 0, 7 ) == 'irreducible'

def test_carayol_trace_condition() :

    p, ell = 7, 5

    assert carayol_trace_condition( ell, 1 + ell, ell, p )
    assert carayol_trace_condition( ell, - 1 - ell, ell, p )
    assert not carayol_trace_condition( ell, 0, ell, p )

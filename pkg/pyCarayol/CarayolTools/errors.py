'''
Exceptions and warnings raised by pyCarayol.
'''

class CarayolError( Exception ) :
    '''
    Base class of every pyCarayol error.
    '''

class NotPrimeError( CarayolError, ValueError ) :

    def __init__( self, n, name = 'p' ) :
        self.n = n
        super().__init__( name + ' = ' + str(n) + ' is not prime' )

class BoundExceededError( CarayolError, ValueError ) :

    def __init__( self, n, bound, name = 'p' ) :
        self.n = n
        self.bound = bound
        super().__init__( name + ' = ' + str(n) + ' exceeds the configured bound ' + str(bound) )

class SingularMatrixError( CarayolError, ValueError ) :
    pass

class CensusMismatch( CarayolError ) :
    '''
    A closed-form density disagrees with the enumeration of GL2(Fp).
    '''

    def __init__( self, name, p, closed_form, enumerated ) :
        self.name = name
        self.p = p
        self.closed_form = closed_form
        self.enumerated = enumerated
        super().__init__( '{} at p = {}: closed form {} but enumeration gives {}'.format( name, p, closed_form, enumerated ) )

class MissingCoefficient( CarayolError, LookupError ) :
    '''
    The coefficient table has no entry for ell; the table must be extended.
    '''

    def __init__( self, ell, label = None ) :
        self.ell = ell
        self.label = label
        message = 'missing coefficient a_' + str(ell)
        if not label is None :
            message += ' in table of ' + str(label)
        super().__init__( message )

class HypothesisViolation( CarayolError ) :

    def __init__( self, hypothesis, detail = '' ) :
        self.hypothesis = hypothesis
        message = 'hypothesis ' + hypothesis + ' fails'
        if detail :
            message += ': ' + detail
        super().__init__( message )

class NegativeLambda( CarayolError ) :

    def __init__( self, value ) :
        self.value = value
        super().__init__( 'lambda transfer gives lambda(f) = ' + str(value) + ' < 0; the local factors are inconsistent' )

class ConfigError( CarayolError, ValueError ) :
    pass

class CarayolWarning( UserWarning ) :
    pass

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

from .CarayolSets import PrimeLabel, classify_all, walk_levels, theoretical_set_densities
from .GL2Census import closed_form_trace_zero, closed_form_trace_nonzero
from .localFactors import check_bad_hypotheses
from .CarayolTools.errors import HypothesisViolation
from .CarayolTools.export_to_json import rational_dict, rational_str
from .CarayolTools.CarayolStatics import default_sample_size, default_tolerance, default_growth_tolerance

###################################
#
# CLOSED FORMS
#
###################################

def r1_density( p ) :
    '''
    Set1 primes with a_ell = -(ell + 1) mod p, where delta(g, ell) = 0.
    '''
    return Fraction( p - 3, ( p - 1 )**2 )

def r2_density( p ) :
    '''
    Set3 primes with a_ell != 2 mod p, where delta(g, ell) = 0.
    '''
    return Fraction( p*p - p - 1, ( p - 1 )*( p*p - 1 ) )

def growth_density( p ) :
    '''
    Set3 primes with a_ell = 2 mod p, where d_ell(g) = 2.
    '''
    return Fraction( p, ( p - 1 )*( p*p - 1 ) )

def delta_zero_density( p ) :
    '''
    All raising primes with delta(g, ell) = 0: (2p^2 - 3p - 4)/((p - 1)^2 (p + 1)).
    '''
    return r1_density( p ) + r2_density( p )

def relative_densities( p ) :
    '''
    Proportions of Set1 and Set3 taken by R1, R2 and R.
    '''

    set_densities = theoretical_set_densities( p )

    relative = {
        'R2_in_Set3' : r2_density( p )/set_densities[ PrimeLabel.SET3 ],
        'R_in_Set3' : growth_density( p )/set_densities[ PrimeLabel.SET3 ],
        }

    if p > 3 :
        relative['R1_in_Set1'] = r1_density( p )/set_densities[ PrimeLabel.SET1 ]

    return relative

###################################
#
# REPORTS
#
###################################

@dataclass
class DensityReport :
    '''
    Theoretical density of a prime set against its empirical proportion among the primes < x.
    '''

    name : str
    theoretical : Fraction
    hits : int
    total : int
    x : int
    extras : dict = field( default_factory = dict )

    @property
    def empirical( self ) :

        if self.total == 0 :
            return Fraction( 0 )

        return Fraction( self.hits, self.total )

    @property
    def deviation( self ) :
        return abs( float( self.empirical - self.theoretical ) )

    def within( self, tolerance = None ) :

        if tolerance is None :
            tolerance = default_tolerance

        return self.deviation <= tolerance

    def to_dict( self ) :

        report = {
            'name' : self.name,
            'theoretical' : rational_str( self.theoretical ),
            'theoretical_decimal' : rational_dict( self.theoretical )['decimal'],
            'empirical' : str( self.hits ) + '/' + str( self.total ),
            'empirical_decimal' : rational_dict( self.empirical )['decimal'],
            'deviation' : self.deviation,
            'x' : self.x,
            }

        report.update( self.extras )

        return report

@dataclass
class StabilityVerdict :

    mode : str
    hypotheses : dict
    primes : list
    density : DensityReport
    sample_levels : list
    components : list = field( default_factory = list )

    def to_dict( self ) :
        return {
            'mode' : self.mode,
            'hypotheses' : self.hypotheses,
            'primes' : self.primes,
            'density' : self.density.to_dict(),
            'components' : [ report.to_dict() for report in self.components ],
            'sample_levels' : self.sample_levels,
            }

###################################
#
# PRIME SETS
#
###################################

def select_primes( records, label, condition ) :
    return [ r.ell for r in records if r.label == label and condition( r ) ]

def build_R1( ctx, records ) :
    '''
    primes, report = build_R1( ctx, records )
    '''

    p = ctx.p

    primes = select_primes( records, PrimeLabel.SET1, lambda r : r.ap_mod_p == ( - 1 - r.ell ) % p )

    report = DensityReport( 'R1', r1_density( p ), len( primes ), len( records ), ctx.x )

    if p > 3 :
        set1_count = sum( r.label == PrimeLabel.SET1 for r in records )
        report.extras['relative_to_Set1'] = rational_str( relative_densities( p )['R1_in_Set1'] )
        report.extras['empirical_relative_to_Set1'] = len( primes )/set1_count if set1_count else None

    return primes, report

def build_R2( ctx, records ) :
    '''
    primes, report = build_R2( ctx, records )
    '''

    p = ctx.p

    primes = select_primes( records, PrimeLabel.SET3, lambda r : r.ap_mod_p != 2 % p )

    return primes, DensityReport( 'R2', r2_density( p ), len( primes ), len( records ), ctx.x )

def build_R_growth( ctx, records ) :
    '''
    primes, report = build_R_growth( ctx, records )
    '''

    p = ctx.p

    primes = select_primes( records, PrimeLabel.SET3, lambda r : r.ap_mod_p == 2 % p )

    return primes, DensityReport( 'R', growth_density( p ), len( primes ), len( records ), ctx.x )

def trace_distribution_reports( ctx, records ) :
    '''
    Frequency of a_ell = a mod p among the primes ell not dividing Np, for each residue a.
    '''

    p = ctx.p
    good = [ r for r in records if not r.label in ( PrimeLabel.DIVIDES_N, PrimeLabel.IS_P ) ]

    reports = []

    for a in range( p ) :

        theory = closed_form_trace_zero( p ) if a == 0 else closed_form_trace_nonzero( p )
        hits = sum( r.ap_mod_p == a for r in good )

        reports += [ DensityReport( 'a = ' + str(a) + ' mod ' + str(p), theory, hits, len( good ), ctx.x ) ]

    return reports

###################################
#
# LEVELS
#
###################################

def stable_levels( ctx, R1, R2, max_M, cache, hyp_min = True ) :
    '''
    Levels M = N prod_{R1} ell^(0..1) prod_{R2} ell^(0..2) <= max_M, ascending.
    Each carries a form f with lambda(f) = lambda(g).

    Raises HypothesisViolation unless Hyp bad holds and Hyp min is asserted.
    '''

    bad = check_bad_hypotheses( ctx, cache )

    if not bad.hyp_bad :
        raise HypothesisViolation( 'Hyp bad', 'd_ell(g) = ' + str( bad.d_values ) )

    if not hyp_min :
        raise HypothesisViolation( 'Hyp min', 'lambda(g) is not asserted minimal' )

    options = sorted( [ ( ell, ( 1, ) ) for ell in R1 ] + [ ( ell, ( 1, 2 ) ) for ell in R2 ] )

    return walk_levels( ctx.level, options, max_M )

def growth_levels( ctx, R, max_M, cache, profile = None ) :
    '''
    Levels M = N prod_R ell^(0..2) <= max_M, M != N, ascending.
    Every f at these levels has lambda(f) > lambda(g).

    Raises HypothesisViolation unless Hyp bad' holds (and mu(g) = 0 when a profile is given).
    '''

    if not profile is None :
        profile.check_mu()

    bad = check_bad_hypotheses( ctx, cache )

    if not bad.hyp_bad_prime :
        raise HypothesisViolation( "Hyp bad'", 'd_ell(g) = ' + str( bad.d_values ) )

    return walk_levels( ctx.level, sorted( ( ell, ( 1, 2 ) ) for ell in R ), max_M )

###################################
#
# VERDICT
#
###################################

def analyze( ctx, cache, mode, profile, max_M = None, sample_size = None, hyp_min = None, tolerance = None, threads = None, verbose = False ) :
    '''
    Build the StabilityVerdict of g for mode 'stable' or 'growth'.

    verdict = analyze( ctx, cache, mode, profile, max_M = None, sample_size = None, hyp_min = None )

    hyp_min defaults to lambda(g) = 0.
    '''

    if not mode in ( 'stable', 'growth' ) :
        raise ValueError( "mode must be 'stable' or 'growth'" )

    profile.check_mu()

    if sample_size is None :
        sample_size = default_sample_size

    if hyp_min is None :
        hyp_min = profile.lam == 0

    summary = classify_all( ctx, cache, threads = threads, verbose = verbose )
    records = summary.records

    bad = check_bad_hypotheses( ctx, cache )

    hypotheses = {
        'Hyp optimal' : 'assumed',
        'Hyp mu' : True,
        'Hyp min' : hyp_min,
        'Hyp bad' : bad.hyp_bad,
        "Hyp bad'" : bad.hyp_bad_prime,
        'd_ell' : bad.d_values,
        'ordinary' : profile.ordinary,
        }

    if mode == 'stable' :

        R1, R1_report = build_R1( ctx, records )
        R2, R2_report = build_R2( ctx, records )

        levels = stable_levels( ctx, R1, R2, max_M, cache, hyp_min = hyp_min )

        primes = sorted( R1 + R2 )
        density = DensityReport( 'delta = 0', delta_zero_density( ctx.p ), len( primes ), len( records ), ctx.x )
        components = [ R1_report, R2_report ]

    else :

        primes, density = build_R_growth( ctx, records )

        levels = growth_levels( ctx, primes, max_M, cache, profile = profile )
        components = []

    if tolerance is None :
        tolerance = default_growth_tolerance if mode == 'growth' else default_tolerance

    density.extras['within_tolerance'] = density.within( tolerance )

    sample = [ candidate.M for candidate in islice( levels, sample_size ) ]

    if verbose :
        print( mode + ' verdict: ' + str( len( primes ) ) + ' primes, density ' + rational_str( density.theoretical ) )

    return StabilityVerdict( mode, hypotheses, primes, density, sample, components )

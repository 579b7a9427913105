'''
Command-line interface.

    pycarayol census --p 5
    pycarayol classify --p 7 --curve 11a1 --x 100000
    pycarayol analyze --mode growth --p 11 --curve 43a1
    pycarayol local --p 7 --curve 11a1 --x 100
'''

import os
import sys
import json
import argparse
import warnings
from dataclasses import dataclass, asdict

import matplotlib
matplotlib.use( 'Agg' )
import matplotlib.pyplot as plt

from . import __version__
from .GL2Census import enumerate_census, census_report
from .FormSpec import FormSpec, ApCache
from .CarayolSets import AnalysisContext, classify_all, plot_density_convergence, theoretical_set_densities
from .localFactors import LambdaProfile, g_local_factors, local_factor_report
from .stability import analyze, trace_distribution_reports
from .CarayolIO import write_census_csv, write_classification_csv, classification_csv_str
from .primeTools.sieve import check_prime
from .CarayolTools import errors
from .CarayolTools.export_to_json import export_to_json, rational_str
from .CarayolTools.reportTools import headerFrame, report_lines, status_word
from .CarayolTools.CarayolStatics import (
    curve_registry, default_census_bound, default_prime_bound, default_tolerance, default_sample_size,
    output_formats, cache_dir_variable, exit_success, exit_validation, exit_config
    )

###################################
#
# CONFIGURATION
#
###################################

@dataclass
class RunConfig :

    p : int = None
    curve : object = None # registry name or five integers
    table : str = None
    N : int = None
    label : str = ''
    x : int = default_prime_bound
    max_M : int = None
    format : str = 'json'
    cache : str = None
    tolerance : float = None
    threads : int = None
    bound : int = default_census_bound

    def validate( self ) :

        if self.p is None :
            raise errors.ConfigError( '--p is required' )

        check_prime( self.p, odd = True )

        for name in ( 'N', 'x', 'max_M', 'threads', 'bound' ) :
            value = getattr( self, name )
            if not value is None and value < 1 :
                raise errors.ConfigError( '--' + name + ' must be positive' )

        if not self.tolerance is None and self.tolerance <= 0 :
            raise errors.ConfigError( '--tolerance must be positive' )

        if not self.format in output_formats :
            raise errors.ConfigError( 'unknown format ' + str( self.format ) )

        if not self.N is None and self.N % self.p == 0 :
            raise errors.ConfigError( 'p = ' + str( self.p ) + ' divides N = ' + str( self.N ) )

        return self

    def to_dict( self ) :
        return asdict( self )

def parse_curve( text ) :
    '''
    '11a1' or '0,-1,1,-10,-20'
    '''

    if text is None or text in curve_registry :
        return text

    try :
        coefficients = [ int( word ) for word in text.split( ',' ) ]
    except ValueError :
        raise errors.ConfigError( 'unknown curve ' + text + '; use a registry name (' + ', '.join( curve_registry ) + ') or five integers a1,a2,a3,a4,a6' )

    if len( coefficients ) != 5 :
        raise errors.ConfigError( 'a Weierstrass curve needs five coefficients a1,a2,a3,a4,a6' )

    return coefficients

config_file_types = {
    'p' : int, 'N' : int, 'x' : int, 'max_M' : int, 'threads' : int, 'bound' : int,
    'tolerance' : ( int, float ),
    'label' : str, 'format' : str, 'cache' : str, 'table' : str,
    }

def check_config_value( filename, name, value ) :

    if value is None :
        return

    if name == 'curve' :
        if isinstance( value, str ) :
            return
        if isinstance( value, list ) and len( value ) == 5 and all( isinstance( a, int ) and not isinstance( a, bool ) for a in value ) :
            return
        raise errors.ConfigError( filename + ': curve must be a registry name or a list of five integers' )

    expected = config_file_types[name]

    if isinstance( value, bool ) or not isinstance( value, expected ) :
        type_names = ' or '.join( kind.__name__ for kind in ( expected if isinstance( expected, tuple ) else ( expected, ) ) )
        raise errors.ConfigError( filename + ': ' + name + ' must be ' + type_names + ', got ' + json.dumps( value ) )

def read_config_file( filename ) :

    try :
        with open( filename, 'r', encoding = 'utf-8' ) as the_file :
            config = json.load( the_file )
    except json.JSONDecodeError as error :
        raise errors.ConfigError( filename + ': ' + str( error ) )

    if not isinstance( config, dict ) :
        raise errors.ConfigError( filename + ': expected a JSON object' )

    unknown = set( config ) - set( RunConfig.__dataclass_fields__ )

    if unknown :
        raise errors.ConfigError( filename + ': unknown keys ' + ', '.join( sorted( unknown ) ) )

    for name, value in config.items() :
        check_config_value( filename, name, value )

    return config

def make_config( args ) :
    '''
    Config file first, then command-line flags.
    '''

    values = {}

    if getattr( args, 'config', None ) :
        values.update( read_config_file( args.config ) )

    for name in RunConfig.__dataclass_fields__ :
        value = getattr( args, name, None )
        if not value is None :
            values[name] = value

    if isinstance( values.get( 'curve' ), str ) :
        values['curve'] = parse_curve( values['curve'] )

    if values.get( 'threads' ) is None :
        values['threads'] = os.cpu_count() or 1

    return RunConfig( **values ).validate()

def make_form( config ) :

    if not config.table is None :

        if config.N is None :
            raise errors.ConfigError( '--N is required with --table' )

        return FormSpec.from_table( config.table, config.N, label = config.label or os.path.splitext( os.path.basename( config.table ) )[0] )

    if config.curve is None :
        raise errors.ConfigError( 'one of --curve or --table is required' )

    if isinstance( config.curve, str ) :

        form = FormSpec.from_registry( config.curve )

        if not config.N is None and config.N != form.level :
            warnings.warn( 'using N = ' + str( config.N ) + ' instead of the conductor ' + str( form.level ) + ' of ' + config.curve, errors.CarayolWarning )
            form = FormSpec( form.source, config.N, form.label )

        return form

    if config.N is None :
        raise errors.ConfigError( '--N is required with explicit curve coefficients' )

    return FormSpec.from_curve( config.curve, config.N, label = config.label or 'curve' )

def cache_path( config, form ) :
    '''
    --cache, or $PYCARAYOL_CACHE_DIR/<coefficients>.csv for curves.
    Tables carry their own coefficients and never share the directory.
    '''

    if not config.cache is None :
        return config.cache

    directory = os.environ.get( cache_dir_variable )

    if not directory or not form.is_curve :
        return None

    os.makedirs( directory, exist_ok = True )

    return os.path.join( directory, form.source.key + '.csv' )

def load_cache( config, form, verbose = False ) :

    filename = cache_path( config, form )

    return ApCache.for_form( form, cache_file = filename, verbose = verbose ), filename

def save_cache( cache, filename, form, verbose = False ) :

    if filename is None or not form.is_curve :
        return

    cache.save( filename )

    if verbose :
        print( 'Saved ' + str( len( cache ) ) + ' coefficients to ' + filename )

###################################
#
# OUTPUT
#
###################################

def envelope( command, config, result ) :
    return { 'tool' : 'pyCarayol', 'version' : __version__, 'command' : command, 'config' : config.to_dict(), 'result' : result }

def emit( text ) :
    sys.stdout.write( text if text.endswith( '\n' ) else text + '\n' )

###################################
#
# COMMANDS
#
###################################

def cmd_census( args ) :

    config = make_config( args )
    p = config.p

    census = enumerate_census( p, bound = config.bound, threads = config.threads, verbose = args.verbose )

    try :
        report = census_report( p, census )

    finally :
        if not args.export is None :
            write_census_csv( args.export, census )

    if config.format == 'json' :
        emit( export_to_json( envelope( 'census', config, report ) ) )

    elif config.format == 'csv' :
        emit( 'name,value,status\n' + '\n'.join( ','.join( str( word ) for word in row ) for row in census_rows( report ) ) )

    else :
        emit( headerFrame( 'census of GL2 F' + str(p) ) + report_lines( ( name, str( value ) + '  ' + status ) for name, value, status in census_rows( report ) ) )

    return exit_success if report['passed'] else exit_validation

def census_rows( report ) :

    rows = [ ( 'count_C_1_2', report['count_C_1_2'], status_word( report['count_C_1_2_passed'] ) ) ]

    rows += [ ( 'density_trace_zero', rational_str( report['density_trace_zero'] ), 'PASS' ) ]

    for a, value in report['density_trace_nonzero'].items() :
        rows += [ ( 'density_trace_nonzero(' + str(a) + ')', rational_str( value ), 'PASS' ) ]

    for sign, value in report['density_trace_det_linked'].items() :
        rows += [ ( 'density_trace_det_linked(' + '{:+d}'.format( sign ) + ')', rational_str( value ), 'PASS' ) ]

    rows += [ ( 'unit_sum', 1, status_word( report['unit_sum_passed'] ) ) ]

    for kind, check in report['class_sizes'].items() :
        rows += [ ( 'class_size(' + kind + ')', check.get( 'size', check.get( 'enumerated' ) ), status_word( check['passed'] ) ) ]

    return rows

def prepare( args ) :

    config = make_config( args )
    form = make_form( config )
    ctx = AnalysisContext( config.p, form, config.x )
    cache, filename = load_cache( config, form, verbose = args.verbose )

    return config, form, ctx, cache, filename

def cmd_classify( args ) :

    config, form, ctx, cache, filename = prepare( args )

    try :
        summary = classify_all( ctx, cache, threads = config.threads, verbose = args.verbose )
    finally :
        save_cache( cache, filename, form, verbose = args.verbose )

    if not args.plot is None :
        figure = plt.figure()
        plot_density_convergence( summary, ax = figure.gca() )
        figure.savefig( args.plot )
        plt.close( figure )

    if not args.export is None :
        write_classification_csv( args.export, summary.records )

    result = summary.to_dict()

    for label in theoretical_set_densities( config.p ) :
        result['sets'][ label.value ]['within_tolerance'] = result['sets'][ label.value ]['deviation'] <= ( config.tolerance or default_tolerance )

    result['trace_distribution'] = [ report.to_dict() for report in trace_distribution_reports( ctx, summary.records ) ]

    if config.format == 'json' :
        emit( export_to_json( envelope( 'classify', config, result ) ) )

    elif config.format == 'csv' :
        emit( classification_csv_str( summary.records ) )

    else :
        lines = [ ( name, str( values['count'] ) + '  ' + values['empirical']['exact'] + ' vs ' + values['theoretical']['exact'] ) for name, values in result['sets'].items() ]
        level_count = result['level_count']
        levels = level_count['exact'] or '10^' + '%.2f' % level_count['log10']
        lines += [ ( 'pi(x)', summary.pi_x ), ( 'levels', levels ) ]
        emit( headerFrame( 'Carayol sets' ) + report_lines( lines ) )

    return exit_success

def cmd_analyze( args ) :

    try :
        profile = LambdaProfile( args.lambda_g, args.mu_g, label = args.label or '', ordinary = not args.supersingular )
    except ValueError as error :
        raise errors.ConfigError( str( error ) )

    profile.check_mu()

    config, form, ctx, cache, filename = prepare( args )

    try :
        verdict = analyze(
            ctx, cache, args.mode, profile,
            max_M = config.max_M,
            sample_size = args.sample_size,
            hyp_min = args.hyp_min,
            tolerance = config.tolerance,
            threads = config.threads,
            verbose = args.verbose
            )
    finally :
        save_cache( cache, filename, form, verbose = args.verbose )

    result = verdict.to_dict()

    if config.format == 'json' :
        emit( export_to_json( envelope( 'analyze', config, result ) ) )

    elif config.format == 'csv' :
        emit( 'M\n' + '\n'.join( str( M ) for M in verdict.sample_levels ) )

    else :
        lines = [ ( name, value ) for name, value in verdict.hypotheses.items() ]
        lines += [ ( 'density', result['density']['theoretical'] + ' (empirical ' + result['density']['empirical'] + ')' ) ]
        lines += [ ( 'primes', len( verdict.primes ) ), ( 'levels', ' '.join( str( M ) for M in verdict.sample_levels ) ) ]
        emit( headerFrame( verdict.mode + ' verdict' ) + report_lines( lines ) )

    return exit_success

def cmd_local( args ) :

    config, form, ctx, cache, filename = prepare( args )

    try :
        summary = classify_all( ctx, cache, threads = config.threads, verbose = args.verbose )
        raising = [ r.ell for r in summary.records if r.label.value in ( 'Set1', 'Set2', 'Set3' ) ]
        factors = g_local_factors( ctx, cache, form.bad_primes() + raising )
    finally :
        save_cache( cache, filename, form, verbose = args.verbose )

    result = local_factor_report( factors )

    if config.format == 'json' :
        emit( export_to_json( envelope( 'local', config, result ) ) )

    elif config.format == 'csv' :
        emit( 'ell,s,d,delta,role\n' + '\n'.join( ','.join( str( row[key] ) for key in ( 'ell', 's', 'd', 'delta', 'role' ) ) for row in result ) )

    else :
        emit( headerFrame( 'local factors' ) + report_lines( ( row['ell'], 's = {s}  d = {d}  delta = {delta}  {role}'.format( **row ) ) for row in result ) )

    return exit_success

###################################
#
# PARSER
#
###################################

def add_common_arguments( parser ) :

    parser.add_argument( '--p', type = int, help = 'odd prime p' )
    parser.add_argument( '--config', type = str, help = 'json file with default settings' )
    parser.add_argument( '--format', type = str, choices = output_formats, default = None )
    parser.add_argument( '--threads', type = int, default = None, help = 'worker processes (default: available cores)' )
    parser.add_argument( '--verbose', action = 'store_true' )

def add_form_arguments( parser ) :

    parser.add_argument( '--curve', type = str, help = 'registry name (11a1, 43a1, 53a1) or a1,a2,a3,a4,a6' )
    parser.add_argument( '--table', type = str, help = 'coefficient table, `ell,ap` csv' )
    parser.add_argument( '--N', type = int, help = 'level of the form' )
    parser.add_argument( '--label', type = str, default = None )
    parser.add_argument( '--x', type = int, default = None, help = 'prime bound (default: ' + str( default_prime_bound ) + ')' )
    parser.add_argument( '--max-M', dest = 'max_M', type = int, default = None )
    parser.add_argument( '--cache', type = str, default = None, help = 'coefficient cache file (default for curves: $' + cache_dir_variable + '/<a1_a2_a3_a4_a6>.csv)' )
    parser.add_argument( '--tolerance', type = float, default = None )

def build_parser() :

    parser = argparse.ArgumentParser( prog = 'pycarayol', description = 'Densities of lambda-invariant stability and growth in congruence families' )
    parser.add_argument( '--version', action = 'version', version = '%(prog)s ' + __version__ )

    subparsers = parser.add_subparsers( dest = 'command', required = True )

    census = subparsers.add_parser( 'census', help = 'enumerate GL2(Fp) and check the closed-form densities' )
    add_common_arguments( census )
    census.add_argument( '--export', type = str, default = None, help = 'write the census as csv' )
    census.add_argument( '--bound', type = int, default = None )
    census.set_defaults( func = cmd_census )

    classify = subparsers.add_parser( 'classify', help = 'classify primes into Carayol sets' )
    add_common_arguments( classify )
    add_form_arguments( classify )
    classify.add_argument( '--plot', type = str, default = None, help = 'save a convergence plot' )
    classify.add_argument( '--export', type = str, default = None, help = 'write the per-prime classification as csv' )
    classify.set_defaults( func = cmd_classify )

    analyze_parser = subparsers.add_parser( 'analyze', help = 'lambda stability or growth verdict' )
    add_common_arguments( analyze_parser )
    add_form_arguments( analyze_parser )
    analyze_parser.add_argument( '--mode', choices = [ 'stable', 'growth' ], required = True )
    analyze_parser.add_argument( '--lambda-g', dest = 'lambda_g', type = int, default = 0 )
    analyze_parser.add_argument( '--mu-g', dest = 'mu_g', type = int, default = 0 )
    analyze_parser.add_argument( '--hyp-min', dest = 'hyp_min', action = argparse.BooleanOptionalAction, default = None, help = 'assert that lambda(g) is minimal (default: lambda(g) = 0)' )
    analyze_parser.add_argument( '--supersingular', action = 'store_true', help = 'non-ordinary g; signed invariants' )
    analyze_parser.add_argument( '--sample-size', dest = 'sample_size', type = int, default = default_sample_size )
    analyze_parser.set_defaults( func = cmd_analyze )

    local = subparsers.add_parser( 'local', help = 'local factors s, d, delta of g' )
    add_common_arguments( local )
    add_form_arguments( local )
    local.set_defaults( func = cmd_local )

    return parser

def main( argv = None ) :

    args = build_parser().parse_args( argv )

    try :
        return args.func( args )

    except ( errors.HypothesisViolation, errors.CensusMismatch, errors.NegativeLambda ) as error :
        print( 'Error: ' + str( error ), file = sys.stderr )
        return exit_validation

    except ( errors.ConfigError, errors.NotPrimeError, errors.BoundExceededError, errors.MissingCoefficient, OSError ) as error :
        print( 'Error: ' + str( error ), file = sys.stderr )
        return exit_config

if __name__ == '__main__' :
    sys.exit( main() )

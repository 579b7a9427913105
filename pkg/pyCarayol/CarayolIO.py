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

import csv
import warnings

from .CarayolTools.CarayolStatics import ap_csv_header, census_csv_header, classification_csv_header
from .CarayolTools.errors import ConfigError, CarayolWarning

###################################
#
# COEFFICIENT TABLES
#
###################################

def read_ap_csv( filename ) :
    '''
    Reads an `ell,ap` table. Returns a list of ( ell, ap ) integer pairs.

    Duplicated primes are an error; unsorted rows are accepted with a warning.
    '''

    filename = str( filename )
    rows = []

    with open( filename, 'r', encoding = 'utf-8', newline = '' ) as the_file :

        reader = csv.reader( the_file )

        try :
            header = next( reader )
        except StopIteration :
            return rows # empty file

        if [ word.strip() for word in header ] != ap_csv_header :
            raise ConfigError( filename + ': expected header ' + ','.join( ap_csv_header ) + ', found ' + ','.join( header ) )

        for line_number, row in enumerate( reader, start = 2 ) :

            if not row :
                continue

            try :
                ell, ap = ( int( word ) for word in row )
            except ValueError :
                raise ConfigError( filename + ', line ' + str( line_number ) + ': cannot parse ' + ','.join( row ) )

            rows += [ ( ell, ap ) ]

    ells = [ ell for ell, _ in rows ]

    if len( set( ells ) ) != len( ells ) :
        raise ConfigError( filename + ': a prime appears twice' )

    if ells != sorted( ells ) :
        warnings.warn( filename + ': rows are not sorted by ell', CarayolWarning )

    return rows

def write_ap_csv( filename, rows ) :
    '''
    Writes ( ell, ap ) pairs as an `ell,ap` table, sorted by ell.
    '''

    with open( filename, 'w', encoding = 'utf-8', newline = '' ) as the_file :

        writer = csv.writer( the_file, lineterminator = '\n' )
        writer.writerow( ap_csv_header )

        for ell, ap in sorted( rows ) :
            writer.writerow( [ int( ell ), int( ap ) ] )

    return filename

###################################
#
# CENSUS
#
###################################

def write_census_csv( filename, census ) :
    '''
    Writes a ClassCount as `p,det,trace,count` rows, det then trace ascending.
    '''

    with open( filename, 'w', encoding = 'utf-8', newline = '' ) as the_file :

        writer = csv.writer( the_file, lineterminator = '\n' )
        writer.writerow( census_csv_header )

        for det, trace, count in census.cells() :
            writer.writerow( [ census.p, det, trace, count ] )

    return filename

def read_census_csv( filename ) :
    '''
    Reads a census file back into { ( det, trace ) : count } and p.
    '''

    counts = {}
    p = None

    with open( filename, 'r', encoding = 'utf-8', newline = '' ) as the_file :

        reader = csv.DictReader( the_file )

        for row in reader :
            p = int( row['p'] )
            counts[ ( int( row['det'] ), int( row['trace'] ) ) ] = int( row['count'] )

    return p, counts

###################################
#
# CLASSIFICATION
#
###################################

def classification_rows( records ) :
    return [ [ r.ell, r.ap, r.ell_mod_p, r.ap_mod_p, r.label.value ] for r in records ]

def write_classification_csv( filename, records ) :
    '''
    Writes PrimeRecords as `ell,ap,ell_mod_p,ap_mod_p,label` rows.
    '''

    with open( filename, 'w', encoding = 'utf-8', newline = '' ) as the_file :

        writer = csv.writer( the_file, lineterminator = '\n' )
        writer.writerow( classification_csv_header )
        writer.writerows( classification_rows( records ) )

    return filename

def classification_csv_str( records ) :

    lines = [ ','.join( classification_csv_header ) ]
    lines += [ ','.join( str( word ) for word in row ) for row in classification_rows( records ) ]

    return '\n'.join( lines ) + '\n'

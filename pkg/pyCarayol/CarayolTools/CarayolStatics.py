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

###################################
#
# BOUNDS
#
###################################

# p^4 matrices are enumerated; 101^4 is about 1e8
default_census_bound = 101

# residues and square roots are found by exhaustive search
sqrt_search_bound = 10**4

default_tolerance = 0.02
default_growth_tolerance = 0.01

default_sample_size = 20

###################################
#
# CURVE REGISTRY
#
###################################

# Cremona label : ( [ a1, a2, a3, a4, a6 ], conductor )
curve_registry = {
    '11a1' : ( ( 0, -1, 1, -10, -20 ), 11 ),
    '43a1' : ( ( 0, 1, 1, 0, 0 ), 43 ),
    '53a1' : ( ( 1, -1, 1, 0, 0 ), 53 ),
    }

###################################
#
# FILE FORMATS
#
###################################

ap_csv_header = [ 'ell', 'ap' ]
census_csv_header = [ 'p', 'det', 'trace', 'count' ]
classification_csv_header = [ 'ell', 'ap', 'ell_mod_p', 'ap_mod_p', 'label' ]

provenance_counted = 'counted'
provenance_ingested = 'ingested'

cache_dir_variable = 'PYCARAYOL_CACHE_DIR'

###################################
#
# EXIT CODES
#
###################################

exit_success = 0
exit_validation = 1
exit_config = 2

###################################
#
# COMMAND LINE DEFAULTS
#
###################################

default_prime_bound = 10**5
output_formats = [ 'json', 'csv', 'text' ]

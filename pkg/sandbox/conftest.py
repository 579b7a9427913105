import os
import sys

sys.path.insert( 0, os.path.join( os.path.dirname( os.path.abspath( __file__ ) ), '..' ) )

import matplotlib
matplotlib.use( 'Agg' )

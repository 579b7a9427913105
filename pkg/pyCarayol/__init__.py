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

"""
pyCarayol
"""

__copyright__ = "Copyright 2026"
__license__ = "GPL"
__version__ = "0.1"

__all__ = ['FpMatrix', 'GL2Census', 'FormSpec', 'CarayolIO', 'CarayolSets', 'localFactors', 'stability', 'CarayolTools.CarayolStatics', 'CarayolTools.errors']

from pyCarayol.CarayolTools.CarayolStatics import *
from pyCarayol.CarayolTools.errors import *
from pyCarayol.FpMatrix import *
from pyCarayol.GL2Census import *
from pyCarayol.CarayolIO import *
from pyCarayol.FormSpec import *
from pyCarayol.CarayolSets import *
from pyCarayol.localFactors import *
from pyCarayol.stability import *

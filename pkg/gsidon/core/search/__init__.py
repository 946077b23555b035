"""
The exhaustive searches are pure python; every engine is re-exported from here.
"""
from .branch_bound import *

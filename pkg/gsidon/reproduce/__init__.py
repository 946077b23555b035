from .result_structures import *
from .reproduce import *

__version__ = "1.0.0"

from .core import *
from .reproduce.result_structures import *
from .reproduce.reproduce import *

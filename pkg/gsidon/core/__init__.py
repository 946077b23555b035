from .table import *
from .model import *
from .util import *
from .load import *
from .finite_field import *
from .convolution import *
from .constructions import *
from .bounds import *
from .search import *

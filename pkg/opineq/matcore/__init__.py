
from .tolerances import *
from .matrix import *
from .functions import *
from .spectral import *

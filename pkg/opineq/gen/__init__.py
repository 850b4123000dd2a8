
from .spec import *
from .ensembles import *
from .exponents import *

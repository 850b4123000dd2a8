
from .interval import *
from .numerical_radius import *

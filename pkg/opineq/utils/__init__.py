
from .logger import *
from .utils import *
from .change_case import *

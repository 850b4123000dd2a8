
from .params import *
from .records import *
from .terms import *
from .registry import *
from .evaluate import *
from .chain import *

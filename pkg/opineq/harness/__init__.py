
from .config import *
from .instances import *
from .report import *
from .campaign import *
from .shrinker import *
from .search import *
from .single import *

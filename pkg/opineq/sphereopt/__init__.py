
from .forms import *
from .closed_form import *
from .sweep import *
from .oracle import *

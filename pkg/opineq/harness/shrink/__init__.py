
from . import principal_submatrix
from . import round_entries

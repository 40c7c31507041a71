from .base import *
from .forms import *
from .frobenius import *
from .lehmer import *
from .run_config import *
from .table import *
from .verify import *

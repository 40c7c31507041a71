import os
from typing import Sequence, Union

PathOrStr = Union[os.PathLike, str]

Coefficients = Sequence[int]
"""
Polynomial or series coefficients in ascending degree.
"""

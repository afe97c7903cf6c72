from __future__ import annotations

from .recollement import *  # noqa: F401,F403
from .decomposition import *  # noqa: F401,F403
from .gd_bounds import *  # noqa: F401,F403
from .defect import *  # noqa: F401,F403
from .ct_a import *  # noqa: F401,F403

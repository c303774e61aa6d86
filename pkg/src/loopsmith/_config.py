import math
import os
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import OrderTooLarge

DEFAULT_MAX_ORDER = 7


def max_order():
    """Enumeration cap for n!-scale searches; LOOPSMITH_MAX_ORDER overrides the default."""
    value = os.environ.get("LOOPSMITH_MAX_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


def check_cap(n):
    cap = max_order()
    if n > cap:
        raise OrderTooLarge(n, cap)


@lru_cache(maxsize=None)
def all_perms(n):
    """Every permutation of range(n) as rows of a read-only (n!, n) array, in lexicographic order."""
    arr = np.array(list(permutations(range(n))), dtype=np.intp).reshape(math.factorial(n), n)
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=None)
def perms_fixing(n, point):
    arr = all_perms(n)
    out = arr[arr[:, point] == point] if n else arr
    out.flags.writeable = False
    return out

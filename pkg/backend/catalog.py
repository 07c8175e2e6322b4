"""
Catalog of quadratic fields grouped the way the reference pictures group them.

Class numbers are recorded as data for labelling only; nothing here computes them.
"""
from typing import Dict, List, Optional, Tuple

# Complex fields whose ring of integers has unique factorization
COMPLEX_UFD: Tuple[int, ...] = (-1, -2, -3, -7, -11, -19, -43, -67, -163)

# Real fields with unique factorization, 0 < r < 100, keyed by r mod 4
REAL_UFD_BELOW_100: Dict[int, Tuple[int, ...]] = {
    1: (5, 13, 17, 21, 29, 33, 37, 41, 53, 57, 61, 69, 73, 77, 89, 93, 97),
    2: (2, 6, 14, 22, 38, 46, 62, 86, 94),
    3: (3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 83),
}

# Stated class numbers of the non-UFD fields that appear in the picture groups
CLASS_NUMBERS: Dict[int, int] = {
    -5: 2, -6: 2, -10: 2, -13: 2, -14: 4, -17: 4, -21: 4, -22: 2, -26: 6, -29: 6,
    -15: 2, -23: 3, -31: 3, -35: 2, -39: 4, -51: 2, -91: 2, -115: 2, -123: 2,
    -187: 2, -235: 2, -59: 3, -83: 3, -107: 3, -139: 3, -211: 3, -283: 3,
    -307: 3, -331: 3,
    10: 2, 15: 2, 26: 2, 30: 2, 34: 2, 35: 2, 39: 2, 79: 3, 82: 4, 65: 2, 85: 2,
    105: 2, 145: 4, 229: 3, 257: 3, 142: 3, 223: 3, 254: 3, 326: 3, 359: 3, 321: 3,
}

CATALOG: Dict[str, Tuple[int, ...]] = {
    "complex-ufd": COMPLEX_UFD,
    "real-ufd": (2, 3, 6, 7, 11, 14, 19, 22, 23, 31, 5, 13, 17, 21, 29),
    "complex-non-ufd": (-5, -6, -10, -13, -14, -17, -21, -22, -26, -29, -15, -23, -31, -35, -39),
    "real-non-ufd": (10, 15, 26, 30, 34, 35, 39, 79, 82, 65, 85, 105, 145, 229, 257),
    "complex-class-2": (-5, -6, -10, -13, -22, -15, -35, -51, -91, -115, -123, -187, -235),
    "real-class-2": (10, 15, 26, 30, 34, 35, 39, 65, 85, 105),
    "complex-class-3": (-23, -31, -59, -83, -107, -139, -211, -283, -307, -331),
    "real-class-3": (79, 142, 223, 254, 326, 359, 229, 257, 321),
}

# Groups whose pictures also show non-principal prime ideals
IDEAL_GROUPS = ("complex-class-2", "real-class-2", "complex-class-3", "real-class-3")


def real_ufd_below_100() -> List[int]:
    return sorted(r for group in REAL_UFD_BELOW_100.values() for r in group)


def class_number_hint(r: int) -> Optional[int]:
    """Recorded class number of Q(√r), when the catalog lists it."""
    if r in COMPLEX_UFD or r in real_ufd_below_100():
        return 1
    return CLASS_NUMBERS.get(r)

from typing import Tuple

Edge = Tuple[int, int]

# Bitset over vertex indices, bit v set iff v is a member
Mask = int

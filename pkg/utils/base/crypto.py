import json
from hashlib import md5
from typing import Any


def hash_digest(val: Any):
    """Convert python datatype to md5 hash"""
    if isinstance(val, (dict, list, tuple)):
        val = json.dumps(val, sort_keys=True, separators=(',', ':'))
    return md5(str(val).encode()).hexdigest()

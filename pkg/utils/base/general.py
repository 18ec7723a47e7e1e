"""
Utilities shared by the apps and the console commands
"""

from typing import Any, List, Tuple


def flatten_errors(detail: Any, prefix: str = '') -> List[Tuple[str, str]]:
    """
    Flatten nested serializer errors into (field path, message) pairs,
    e.g. ``{'edges': {1: ['bad']}}`` gives ``[('edges[1]', 'bad')]``
    """
    if isinstance(detail, dict):
        pairs = []
        for key, value in detail.items():
            if key == 'non_field_errors':
                path = prefix
            elif isinstance(key, int) or str(key).isdigit():
                path = f"{prefix}[{key}]"
            else:
                path = f"{prefix}.{key}" if prefix else str(key)
            pairs.extend(flatten_errors(value, path))
        return pairs
    if isinstance(detail, (list, tuple)):
        if all(isinstance(item, str) for item in detail):
            return [(prefix, str(item)) for item in detail]
        pairs = []
        for index, value in enumerate(detail):
            if value in ({}, [], None):
                continue
            pairs.extend(flatten_errors(value, f"{prefix}[{index}]"))
        return pairs
    return [(prefix, str(detail))]


def first_error(detail: Any) -> Tuple[str, str]:
    """First (field path, message) pair of a serializer error tree"""
    pairs = flatten_errors(detail)
    return pairs[0] if pairs else ('', 'invalid document')

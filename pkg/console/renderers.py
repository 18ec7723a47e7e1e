"""
DOT and plain-text renderings of command reports. DOT output is meant
for figures: vertices are filled by color class and transversal
vertices get a bold outline.
"""

from typing import Any, List

from graphs.models import Graph
from kempe.models import ColoredInstance

PALETTE = (
    'lightblue', 'salmon', 'palegreen', 'gold', 'plum', 'lightgray',
    'orange', 'cyan', 'pink', 'khaki', 'lavender', 'tan',
    'aquamarine', 'wheat', 'thistle', 'lightcoral',
)


def graph_dot(g: Graph, name: str = 'G') -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append('}')
    return '\n'.join(lines)


def instance_dot(inst: ColoredInstance, name: str = 'G') -> str:
    reps = set(inst.reps)
    lines = [f"graph {name} {{", '  node [style=filled];']
    for v in range(inst.graph.n):
        cls = inst.class_of(v)
        attrs = [f'fillcolor="{PALETTE[cls % len(PALETTE)]}"', f'xlabel="c{cls}"']
        if v in reps:
            attrs.append('penwidth=3')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    lines += [f"  {u} -- {v};" for u, v in inst.graph.edges]
    lines.append('}')
    return '\n'.join(lines)


def _scalar(value: Any) -> str:
    if value is None:
        return 'none'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)):
        return ' '.join(_scalar(x) for x in value)
    return str(value)


def _flat(value: Any) -> bool:
    if isinstance(value, dict):
        return False
    if isinstance(value, (list, tuple)):
        return not any(isinstance(x, (dict, list, tuple)) for x in value)
    return True


def render_text(data: Any, depth: int = 0) -> str:
    """Indented ``key: value`` lines for a serialized report"""
    pad = '  ' * depth
    lines: List[str] = []
    if isinstance(data, dict):
        for key, value in data.items():
            if _flat(value):
                lines.append(f"{pad}{key}: {_scalar(value)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, depth + 1))
    elif isinstance(data, (list, tuple)):
        for item in data:
            if _flat(item):
                lines.append(f"{pad}- {_scalar(item)}")
            else:
                lines.append(f"{pad}-")
                lines.append(render_text(item, depth + 1))
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return '\n'.join(line for line in lines if line)

"""
Certificate verifier. It is the single oracle every builder and the
solver are checked against; failures are returned as data.
"""

from typing import List

from graphs.bits import iter_bits, mask_components, mask_of, neighborhood
from kempe.models import ColoredInstance

from .models import RootedCertificate, TargetPattern, Violation


def verify(inst: ColoredInstance, pat: TargetPattern,
           cert: RootedCertificate) -> List[Violation]:
    """Every violated certificate condition with its witness; empty means ok"""
    violations = []
    g = inst.graph

    if pat.k != inst.k:
        violations.append(Violation(
            'pattern', f"pattern has {pat.k} vertices, instance has {inst.k} classes"))
        return violations

    reps = set(inst.reps)
    for t in sorted(cert.bags):
        if t not in reps:
            violations.append(Violation(
                'unknown-root', f"{t} is not a transversal vertex", (t,)))

    masks = {}
    for t in inst.reps:
        if t not in cert.bags:
            violations.append(Violation('missing-bag', f"no bag for {t}", (t,)))
            continue
        bag = cert.bags[t]
        outside = sorted(v for v in bag if not 0 <= v < g.n)
        if outside:
            violations.append(Violation(
                'out-of-range', f"bag of {t} has vertices outside the graph", tuple(outside)))
        inside = [v for v in bag if 0 <= v < g.n]
        if not inside:
            violations.append(Violation('empty', f"bag of {t} is empty", (t,)))
            continue
        if t not in bag:
            violations.append(Violation(
                'root-missing', f"bag of {t} does not contain {t}", (t,)))
        masks[t] = mask_of(inside)

    owners = {}
    for t, mask in masks.items():
        for v in iter_bits(mask):
            owners.setdefault(v, []).append(t)
    for v in sorted(owners):
        if len(owners[v]) > 1:
            violations.append(Violation(
                'overlap', f"vertex {v} lies in the bags of {sorted(owners[v])}",
                (v,) + tuple(sorted(owners[v]))))

    for t, mask in masks.items():
        parts = mask_components(g.masks, mask)
        if len(parts) > 1:
            violations.append(Violation(
                'disconnected', f"bag of {t} has {len(parts)} components",
                tuple(tuple(iter_bits(p)) for p in parts)))

    for i, j in pat.edges:
        s, t = inst.reps[i], inst.reps[j]
        if s in masks and t in masks and not neighborhood(g.masks, masks[s]) & masks[t]:
            violations.append(Violation(
                'uncovered', f"no edge joins the bags of {s} and {t}", (s, t)))
    return violations


def is_valid(inst: ColoredInstance, pat: TargetPattern, cert: RootedCertificate) -> bool:
    return not verify(inst, pat, cert)

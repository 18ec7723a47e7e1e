from typing import List, Tuple

from graphs.bits import bit, is_connected_mask, iter_bits, mask_components, reach
from graphs.models import Graph
from utils.base._types import Mask
from utils.base.logger import logger

from .models import ColoredInstance, HGraph, KempeChain


def kempe_chains(inst: ColoredInstance, include_trivial: bool = False) -> List[KempeChain]:
    """
    Components of G[A ∪ B] for every class pair a < b, ordered by
    (a, b, smallest vertex). Edgeless components are skipped unless
    `include_trivial` is set.
    """
    chains = []
    masks = inst.class_masks
    for a in range(inst.k):
        for b in range(a + 1, inst.k):
            for comp in mask_components(inst.graph.masks, masks[a] | masks[b]):
                if comp & (comp - 1) or include_trivial:
                    chains.append(KempeChain(a, b, frozenset(iter_bits(comp))))
    return chains


def chain_mask(inst: ColoredInstance, i: int, j: int) -> Mask:
    """Kempe chain of classes i, j that contains the representative of i"""
    within = inst.class_masks[i] | inst.class_masks[j]
    return reach(inst.graph.masks, bit(inst.reps[i]), within)


def shares_chain(inst: ColoredInstance, i: int, j: int) -> bool:
    return bool(chain_mask(inst, i, j) >> inst.reps[j] & 1)


def h_graph(inst: ColoredInstance) -> HGraph:
    rows = [0] * inst.k
    for i in range(inst.k):
        for j in range(i + 1, inst.k):
            if shares_chain(inst, i, j):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    h = HGraph(Graph.from_masks(rows), inst.reps)
    logger.debug(f"H graph: {h.k} vertices, {h.graph.edge_count} edges")
    return h


def is_kempe_coloring(inst: ColoredInstance) -> Tuple[bool, int]:
    """Whether every pair of classes induces a connected subgraph,
    and how many pairs do"""
    masks = inst.class_masks
    connected = 0
    for a in range(inst.k):
        for b in range(a + 1, inst.k):
            if is_connected_mask(inst.graph.masks, masks[a] | masks[b]):
                connected += 1
    total = inst.k * (inst.k - 1) // 2
    return connected == total, connected

"""Exact minimum dominating sets.

Everything here runs one depth-first search: pick the undominated vertex
with the fewest admissible dominators, branch over its closed neighbourhood
in ascending order, and forbid each branch vertex once its branch is done.
Forbidding makes the branches disjoint, so the same routine both decides
"is there a dominating set of size <= k" and enumerates every minimum
dominating set exactly once.

Disconnected graphs are handled one component at a time; direct products of
paths are never connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, List, Optional, Tuple

from .graph import Graph, GraphError, bits, component_masks, to_mask
from .oracle import canonical_path_gamma_sets

DEFAULT_CAP = 100_000


class EnumerationIncomplete(RuntimeError):
    """A γ-set enumeration hit its cap where a complete family is required."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GammaSetFamily:
    gamma: int
    sets: Tuple[frozenset, ...]
    truncated: bool

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _check_members(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} outside [0, {g.order})")
        mask |= 1 << v
    return mask


def dominated_by(g: Graph, mask: int) -> int:
    """Bitmask of N[X] for the vertex bitmask X."""
    cover = 0
    for v in bits(mask):
        cover |= g.closed[v]
    return cover


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    return dominated_by(g, _check_members(g, s)) == g.full_mask


def _dfs(closed, undom: int, budget: int, forbidden: int, chosen: int,
         emit: Callable[[int], bool]) -> bool:
    """Search dominating completions of ``chosen``; ``emit`` returns True to stop."""
    if not undom:
        return emit(chosen)
    if budget <= 0:
        return False
    best = 0
    best_count = 1 << 30
    used = 0
    packing = 0
    union = 0
    for u in bits(undom):
        cands = closed[u] & ~forbidden
        if not cands:
            return False
        c = cands.bit_count()
        if c < best_count:
            best, best_count = cands, c
        # Vertices with disjoint dominator sets need distinct dominators.
        if not cands & used:
            used |= cands
            packing += 1
        union |= cands
    if packing > budget:
        return False
    gain = max((closed[v] & undom).bit_count() for v in bits(union))
    if budget * gain < undom.bit_count():
        return False
    for v in bits(best):
        if _dfs(closed, undom & ~closed[v], budget - 1, forbidden, chosen | (1 << v), emit):
            return True
        forbidden |= 1 << v
    return False


def _component_lower_bound(g: Graph, comp: int) -> int:
    size = comp.bit_count()
    delta = max(g.adj[v].bit_count() for v in bits(comp))
    return -(-size // (delta + 1))


def _find(g: Graph, comp: int, k: int) -> Optional[int]:
    found = []

    def emit(chosen):
        found.append(chosen)
        return True

    _dfs(g.closed, comp, k, 0, 0, emit)
    return found[0] if found else None


def _component_gamma(g: Graph, comp: int, limit: Optional[int] = None):
    """(γ, witness mask) of one component, or None if γ exceeds ``limit``."""
    k = _component_lower_bound(g, comp)
    while limit is None or k <= limit:
        s = _find(g, comp, k)
        if s is not None:
            return k, s
        k += 1
    return None


def exists_dominating_set(g: Graph, k: int) -> Optional[frozenset]:
    """Some dominating set of size <= k, or None when γ(g) > k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    comps = component_masks(g)
    lows = [_component_lower_bound(g, c) for c in comps]
    slack = k - sum(lows)
    if slack < 0:
        return None
    chosen = 0
    for comp, low in zip(comps, lows):
        res = _component_gamma(g, comp, low + slack)
        if res is None:
            return None
        gamma, s = res
        slack -= gamma - low
        chosen |= s
    return frozenset(bits(chosen))


def minimum_dominating_set(g: Graph) -> frozenset:
    chosen = 0
    for comp in component_masks(g):
        chosen |= _component_gamma(g, comp)[1]
    return frozenset(bits(chosen))


def domination_number(g: Graph) -> int:
    return sum(_component_gamma(g, comp)[0] for comp in component_masks(g))


def _enumerate_component(g: Graph, comp: int, gamma: int, cap: int):
    out: List[int] = []

    # One set past the cap tells truncation apart from an exact fit.
    def emit(chosen):
        out.append(chosen)
        return len(out) > cap

    _dfs(g.closed, comp, gamma, 0, 0, emit)
    return out[:cap], len(out) > cap


def enumerate_gamma_sets(g: Graph, cap: int = DEFAULT_CAP) -> GammaSetFamily:
    """All minimum dominating sets, at most ``cap`` of them, in sorted order.

    For disconnected graphs the family is the product of the per-component
    families, and ``cap`` bounds that product.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    masks = [0]
    gamma = 0
    truncated = False
    for comp in component_masks(g):
        cg, _ = _component_gamma(g, comp)
        gamma += cg
        part, cut = _enumerate_component(g, comp, cg, cap)
        truncated |= cut
        combined = []
        for a in masks:
            for b in part:
                combined.append(a | b)
                if len(combined) >= cap:
                    break
            if len(combined) >= cap:
                break
        if len(masks) * len(part) > cap:
            truncated = True
        masks = combined
    sets = sorted((tuple(bits(s)) for s in masks))
    return GammaSetFamily(gamma, tuple(frozenset(s) for s in sets), truncated)


def _pairwise_disjoint_closed(g: Graph, s) -> bool:
    seen = 0
    for v in s:
        if g.closed[v] & seen:
            return False
        seen |= g.closed[v]
    return True


def satisfies_property_P(g: Graph, s: Iterable[int], gamma: Optional[int] = None) -> bool:
    """True iff the γ-set ``s`` has pairwise disjoint closed neighbourhoods."""
    s = sorted(set(s))
    _check_members(g, s)
    if gamma is None:
        gamma = domination_number(g)
    if len(s) != gamma or not is_dominating(g, s):
        raise PreconditionError(f"{s} is not a minimum dominating set (γ = {gamma})")
    return _pairwise_disjoint_closed(g, s)


def property_P_gamma_sets(g: Graph, cap: int = DEFAULT_CAP) -> GammaSetFamily:
    fam = enumerate_gamma_sets(g, cap)
    keep = tuple(s for s in fam.sets if _pairwise_disjoint_closed(g, sorted(s)))
    return GammaSetFamily(fam.gamma, keep, fam.truncated)


def _complete_family(g: Graph, cap: int) -> GammaSetFamily:
    fam = enumerate_gamma_sets(g, cap)
    if fam.truncated:
        raise EnumerationIncomplete(f"more than {cap} minimum dominating sets")
    return fam


def vertices_in_some_gamma_set(g: Graph, cap: int = DEFAULT_CAP) -> frozenset:
    union = frozenset()
    for s in _complete_family(g, cap):
        union |= s
    return union


def max_set_packing(masks: List[int], set_size: int) -> int:
    """Largest number of pairwise disjoint sets among ``masks`` (all of ``set_size``)."""
    best = 0

    def rec(avail: List[int], count: int):
        nonlocal best
        if not avail:
            best = max(best, count)
            return
        union = 0
        for s in avail:
            union |= s
        if count + min(len(avail), union.bit_count() // set_size) <= best:
            return
        low = union & -union
        with_v = [s for s in avail if s & low]
        without_v = [s for s in avail if not s & low]
        for s in with_v:
            rec([t for t in without_v if not t & s], count + 1)
        rec(without_v, count)

    if set_size <= 0:
        return 0
    rec(sorted(set(masks)), 0)
    return best


def max_disjoint_gamma_sets(g: Graph, cap: int = DEFAULT_CAP) -> int:
    fam = _complete_family(g, cap)
    if fam.gamma == 0:
        return 0
    return max_set_packing([to_mask(s) for s in fam.sets], fam.gamma)


def canonical_gamma_set_strong(n: int, m: int) -> frozenset:
    """First canonical γ-set of P_n times that of P_m, as flat grid indices."""
    if n < 2 or m < 2:
        raise GraphError(f"path orders must be >= 2, got n={n}, m={m}")
    rows = canonical_path_gamma_sets(n)[0]
    cols = canonical_path_gamma_sets(m)[0]
    return frozenset(i * m + j for i in rows for j in cols)

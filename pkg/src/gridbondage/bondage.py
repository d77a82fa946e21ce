"""Bondage numbers by staged edge-subset search.

``b(G)`` is the fewest edges whose removal raises γ. Removing edges never
helps a vertex set dominate, so a set of size γ(G) that dominates G - E' is
a γ-set of G. The search therefore keeps a cache of γ-sets of G and, for
each candidate E', first asks whether some cached set survives the removal.
Only when none does is the exact solver called on G - E'; a set it finds
goes into the cache.

A cached set S is killed by E' exactly when some vertex outside S loses
every edge to S. The cache stores, per set, those per-vertex edge masks
(over edge indices) small enough to be covered by a subset of size k_max,
so the survival test is a handful of integer ANDs.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Tuple

from .domination import domination_number, exists_dominating_set, minimum_dominating_set
from .graph import Edge, Graph, GraphError, InvalidEdgeError, bits, remove_edges, to_mask, within_two

DEFAULT_CACHE_SIZE = 4096
_CLOCK_EVERY = 512


class NoEdgesError(GraphError):
    pass


def lemma1_bound(g: Graph) -> int:
    """min over edges uv of d(u) + d(v) - 1 - |N(u) & N(v)|."""
    if not g.edges:
        raise NoEdgesError("graph has no edges")
    adj = g.adj
    return min(adj[u].bit_count() + adj[v].bit_count() - 1 - (adj[u] & adj[v]).bit_count()
               for u, v in g.edges)


def lemma2_bound(g: Graph) -> int:
    """min over distinct u, v with d(u, v) <= 2 of d(u) + d(v) - 1."""
    deg = g.degrees()
    best = None
    for u in range(g.order):
        reach = within_two(g, u) >> (u + 1) << (u + 1)
        for v in bits(reach):
            val = deg[u] + deg[v] - 1
            if best is None or val < best:
                best = val
    if best is None:
        raise NoEdgesError("no pair of vertices at distance <= 2")
    return best


def default_k_max(g: Graph) -> int:
    return min(lemma1_bound(g), lemma2_bound(g))


@dataclass
class BondageResult:
    """``value`` is b(G) when found; otherwise every set of size <= ``ruled_out`` failed."""

    value: Optional[int]
    ruled_out: int
    witness: Optional[Tuple[Edge, ...]] = None
    evaluated_subsets: int = 0
    cache_hits: int = 0
    solver_calls: int = 0
    timed_out: bool = False
    elapsed: float = 0.0

    @property
    def exact(self) -> bool:
        return self.value is not None

    def __str__(self):
        return str(self.value) if self.exact else f"> {self.ruled_out}"


def _grid_edge_orbit_reps(g: Graph) -> list:
    """Edge indices that are lexicographically least in their symmetry orbit."""
    spec = g.grid
    n, m = spec.n, spec.m
    maps = [lambda i, j: (i, j), lambda i, j: (n + 1 - i, j),
            lambda i, j: (i, m + 1 - j), lambda i, j: (n + 1 - i, m + 1 - j)]
    if n == m:
        maps += [lambda i, j, f=f: f(j, i) for f in list(maps)]
    reps = []
    for idx, (u, v) in enumerate(g.edges):
        cu, cv = spec.coords(u), spec.coords(v)
        images = []
        for f in maps:
            a, b = spec.index(*f(*cu)), spec.index(*f(*cv))
            images.append((a, b) if a < b else (b, a))
        if (u, v) == min(images):
            reps.append(idx)
    return reps


class _Scanner:
    """Checks candidate edge subsets of one graph against a bounded γ-set cache."""

    def __init__(self, g: Graph, gamma: int, k_max: int, cache_size: int = DEFAULT_CACHE_SIZE,
                 use_cache: bool = True, seed: Optional[frozenset] = None):
        self.g = g
        self.gamma = gamma
        self.k_max = k_max
        self.edges = g.edges
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.use_cache = use_cache
        self.cache: deque = deque(maxlen=max(1, cache_size))
        self.evaluated = 0
        self.hits = 0
        self.solver_calls = 0
        if seed is not None and use_cache:
            self.add(to_mask(seed))

    def kill_masks(self, s: int) -> Tuple[int, ...]:
        g = self.g
        masks = []
        for v in bits(g.full_mask & ~s):
            km = 0
            for w in bits(g.adj[v] & s):
                km |= 1 << self.edge_index[(v, w) if v < w else (w, v)]
            if km.bit_count() <= self.k_max:
                masks.append(km)
        masks.sort(key=int.bit_count)
        return tuple(masks)

    def add(self, s: int) -> None:
        self.cache.append(self.kill_masks(s))

    def is_witness(self, removed: int) -> bool:
        """True iff no dominating set of size γ survives removing ``removed``."""
        self.evaluated += 1
        if self.use_cache:
            cache = self.cache
            for pos, masks in enumerate(cache):
                for km in masks:
                    if not km & ~removed:
                        break
                else:
                    self.hits += 1
                    if pos:
                        # Recent survivors are the likeliest to survive the next subset.
                        del cache[pos]
                        cache.appendleft(masks)
                    return False
        self.solver_calls += 1
        es = [self.edges[i] for i in bits(removed)]
        s = exists_dominating_set(remove_edges(self.g, es), self.gamma)
        if s is None:
            return True
        if self.use_cache:
            self.cache.appendleft(self.kill_masks(to_mask(s)))
        return False

    def scan(self, k: int, firsts: Sequence[int], deadline: Optional[float]):
        """Least witness of size k whose first edge index is in ``firsts``.

        Returns (mask or None, timed_out).
        """
        n_edges = len(self.edges)
        counter = 0
        for first in firsts:
            head = 1 << first
            for rest in combinations(range(first + 1, n_edges), k - 1):
                removed = head
                for i in rest:
                    removed |= 1 << i
                if self.is_witness(removed):
                    return removed, False
                counter += 1
                if deadline is not None and counter % _CLOCK_EVERY == 0 \
                        and time.monotonic() > deadline:
                    return None, True
        return None, False


# Per-process state for the parallel mode.
_worker: dict = {}


def _init_worker(g, gamma, k_max, cache_size, use_cache, seed, deadline):
    _worker["scanner"] = _Scanner(g, gamma, k_max, cache_size, use_cache, seed)
    _worker["deadline"] = deadline


def _scan_partition(k: int, first: int):
    sc = _worker["scanner"]
    before = (sc.evaluated, sc.hits, sc.solver_calls)
    found, timed_out = sc.scan(k, [first], _worker["deadline"])
    stats = (sc.evaluated - before[0], sc.hits - before[1], sc.solver_calls - before[2])
    return found, timed_out, stats


def bondage_number(g: Graph, k_max: Optional[int] = None, workers: int = 1,
                   deterministic: bool = True, cache_size: int = DEFAULT_CACHE_SIZE,
                   use_cache: bool = True, symmetry: bool = True,
                   time_budget: Optional[float] = None) -> BondageResult:
    """Exact bondage number, searching edge subsets of size 1..k_max in order.

    ``k_max`` defaults to the smaller lemma bound, which always contains
    b(G). Returned witnesses are the lexicographically least at the minimal
    size. With ``workers > 1`` (and ``deterministic=False``) each size is
    split across processes by first edge index; value and witness agree
    with the sequential scan. ``time_budget`` is in seconds; on expiry the
    result carries only the largest fully excluded size.
    """
    if not g.edges:
        raise NoEdgesError("graph has no edges")
    if k_max is None:
        k_max = default_k_max(g)
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    start = time.monotonic()
    deadline = start + time_budget if time_budget is not None else None
    seed = minimum_dominating_set(g)
    gamma = len(seed)
    sc = _Scanner(g, gamma, k_max, cache_size, use_cache, seed)
    n_edges = len(g.edges)
    result = BondageResult(None, 0)
    parallel = workers > 1 and not deterministic
    pool = None
    try:
        for k in range(1, min(k_max, n_edges) + 1):
            if k == 1 and symmetry and g.grid is not None:
                firsts = _grid_edge_orbit_reps(g)
            else:
                firsts = list(range(n_edges - k + 1))
            if parallel and len(firsts) > 1:
                if pool is None:
                    pool = ProcessPoolExecutor(
                        max_workers=workers, initializer=_init_worker,
                        initargs=(g, gamma, k_max, cache_size, use_cache, seed, deadline))
                found, timed_out = None, False
                futures = [pool.submit(_scan_partition, k, f) for f in firsts]
                for fut in futures:
                    w, t_out, (ev, hits, calls) = fut.result()
                    sc.evaluated += ev
                    sc.hits += hits
                    sc.solver_calls += calls
                    timed_out |= t_out
                    if w is not None:
                        found = w
                        for rest in futures:
                            rest.cancel()
                        break
            else:
                found, timed_out = sc.scan(k, firsts, deadline)
            if found is not None:
                result.value = k
                result.ruled_out = k - 1
                result.witness = tuple(g.edges[i] for i in bits(found))
                break
            if timed_out:
                result.timed_out = True
                break
            result.ruled_out = k
    finally:
        if pool is not None:
            pool.shutdown(wait=True, cancel_futures=True)
    result.evaluated_subsets = sc.evaluated
    result.cache_hits = sc.hits
    result.solver_calls = sc.solver_calls
    result.elapsed = time.monotonic() - start
    return result


def is_bondage_set(g: Graph, es) -> bool:
    """True iff removing ``es`` raises the domination number."""
    h = remove_edges(g, es)
    return exists_dominating_set(h, domination_number(g)) is None


__all__ = [
    "BondageResult", "NoEdgesError", "InvalidEdgeError", "bondage_number", "default_k_max",
    "is_bondage_set", "lemma1_bound", "lemma2_bound",
]

"""Closed-form values and per-residue-class predictions for products of paths.

The bondage number of ``P_n`` strong ``P_m`` depends on the unordered pair
``(n mod 3, m mod 3)``:

    ======  ==========================
    class   b(P_n strong P_m)
    ======  ==========================
    (0, 0)  1
    (0, 2)  1
    (0, 1)  2
    (1, 2)  3
    (2, 2)  2
    (1, 1)  between 2 and 5, conjectured 5
    ======  ==========================

For the direct product the value is 1 when either path has order <= 4 and
at most 2 otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .graph import Edge, GraphError, GridSpec


@dataclass(frozen=True)
class Prediction:
    kind: str  # "exact" or "interval"
    low: int
    high: int
    conjecture: Optional[int] = None
    source: str = ""

    def __post_init__(self):
        if self.kind not in ("exact", "interval"):
            raise ValueError(f"unknown prediction kind {self.kind!r}")
        if self.low > self.high:
            raise ValueError("interval with low > high")
        if self.kind == "exact" and self.low != self.high:
            raise ValueError("exact prediction needs low == high")
        if self.conjecture is not None and not self.low <= self.conjecture <= self.high:
            raise ValueError("conjecture outside the interval")

    @classmethod
    def exact(cls, value: int, source: str) -> "Prediction":
        return cls("exact", value, value, None, source)

    @classmethod
    def interval(cls, low: int, high: int, source: str, conjecture: Optional[int] = None):
        return cls("interval", low, high, conjecture, source)

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def value(self) -> Optional[int]:
        return self.low if self.is_exact else None

    def contains(self, b: int) -> bool:
        return self.low <= b <= self.high

    def to_dict(self) -> dict:
        return {"kind": self.kind, "value": self.value, "low": self.low, "high": self.high,
                "conjecture": self.conjecture, "source": self.source}


@dataclass(frozen=True)
class ResidueClass:
    rn: int
    rm: int

    @classmethod
    def of(cls, n: int, m: int) -> "ResidueClass":
        a, b = sorted((n % 3, m % 3))
        return cls(a, b)

    def __str__(self):
        return f"({self.rn},{self.rm})"


def _check_orders(n: int, m: int) -> None:
    if n < 2 or m < 2:
        raise GraphError(f"path orders must be >= 2, got n={n}, m={m}")


def gamma_path(n: int) -> int:
    if n < 1:
        raise GraphError(f"path order must be >= 1, got {n}")
    return -(-n // 3)


def gamma_strong(n: int, m: int) -> int:
    _check_orders(n, m)
    return gamma_path(n) * gamma_path(m)


_STRONG_TABLE = {
    (0, 0): Prediction.exact(1, "thm:strong-b1"),
    (0, 2): Prediction.exact(1, "thm:strong-b1"),
    (0, 1): Prediction.exact(2, "thm:strong-b2-0-1"),
    (1, 2): Prediction.exact(3, "thm:strong-b3"),
    (2, 2): Prediction.exact(2, "thm:strong-b2-2-2"),
    (1, 1): Prediction.interval(2, 5, "thm:strong-1-1-interval", conjecture=5),
}


def predict_bondage_strong(n: int, m: int) -> Prediction:
    _check_orders(n, m)
    rc = ResidueClass.of(n, m)
    return _STRONG_TABLE[(rc.rn, rc.rm)]


def predict_bondage_direct(n: int, m: int) -> Prediction:
    _check_orders(n, m)
    if n <= 4 or m <= 4:
        return Prediction.exact(1, "thm:direct-b1")
    return Prediction.interval(1, 2, "thm:direct-le2")


# Value reported for P6 x P5 alongside the direct-product theorem.
KNOWN_DIRECT_VALUES = {(6, 5): 2, (5, 6): 2}


def is_degenerate(n: int, m: int) -> bool:
    """Parameters where some path has order 2, i.e. t = 0 or r = 0 in n = 3t + 2."""
    return n == 2 or m == 2


def canonical_path_gamma_sets(n: int) -> List[frozenset]:
    """The γ-sets of P_n with disjoint closed neighbourhoods, 0-based.

    Residue 2 yields two sets; the one containing the last vertex comes first.
    """
    if n < 1:
        raise GraphError(f"path order must be >= 1, got {n}")
    r = n % 3
    if r == 0:
        return [frozenset(range(1, n, 3))]
    if r == 1:
        return [frozenset(range(0, n, 3))]
    return [frozenset(range(1, n, 3)), frozenset(range(0, n - 1, 3))]


def _orient(n: int, m: int, first: int) -> bool:
    """Whether to transpose so the first factor carries residue ``first``."""
    return n % 3 != first


def witness_bondage_set_strong(n: int, m: int) -> Optional[Tuple[Edge, ...]]:
    """Edge set the residue-class proofs delete, as flat indices of P_n strong P_m.

    Class (1,1) has no construction and returns None.
    """
    _check_orders(n, m)
    rc = ResidueClass.of(n, m)
    key = (rc.rn, rc.rm)
    if key == (1, 1):
        return None
    first = {(0, 0): 0, (0, 2): 0, (0, 1): 0, (1, 2): 1, (2, 2): 2}[key]
    swap = _orient(n, m, first)
    a, b = (m, n) if swap else (n, m)

    # Coordinates below are (i, j) on the oriented a x b grid, 1-based.
    if key == (0, 0):
        pairs = [((2, 2), (1, 1))]
    elif key == (0, 2):
        pairs = [((2, 1), (2, 2))]
    elif key == (0, 1):
        pairs = [((2, 1), (1, 1)), ((2, 2), (1, 1))]
    elif key == (1, 2):
        pairs = [((1, 1), (1, 2)), ((1, 1), (2, 1)), ((1, 1), (2, 2))]
    else:
        pairs = [((a - 1, b - 1), (a, b)), ((a, b - 1), (a - 1, b))]

    spec = GridSpec("strong", n, m)
    out = []
    for p, q in pairs:
        if swap:
            p, q = p[::-1], q[::-1]
        out.append(spec.grid_edge(p, q))
    return tuple(sorted(out))

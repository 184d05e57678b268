"""NEPS of graphs and the four named two-factor products.

All named products are thin wrappers over the single NEPS kernel.
Product vertex order is factor-major mixed radix (the first factor is
most significant), matching the group-product element order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class NepsBasis:
    """Non-empty set of non-zero 0/1 tuples covering every coordinate."""

    arity: int
    tuples: frozenset[tuple[int, ...]]

    def __post_init__(self):
        tups = frozenset(tuple(int(b) for b in t) for t in self.tuples)
        object.__setattr__(self, "tuples", tups)
        if not tups:
            raise GraphError("NEPS basis must be non-empty")
        for t in tups:
            if len(t) != self.arity or any(b not in (0, 1) for b in t):
                raise GraphError(f"bad basis tuple {t}")
            if not any(t):
                raise GraphError("NEPS basis tuples must be non-zero")
        for i in range(self.arity):
            if not any(t[i] for t in tups):
                raise GraphError(f"coordinate {i} never appears in the basis")


CARTESIAN = "cartesian"
DIRECT = "direct"
STRONG = "strong"
STRONG_SUM = "strong_sum"

_NAMED_BASES = {
    CARTESIAN: {(1, 0), (0, 1)},
    DIRECT: {(1, 1)},
    STRONG: {(1, 0), (0, 1), (1, 1)},
    STRONG_SUM: {(1, 0), (1, 1)},
}


def neps(factors: list[Graph], basis: NepsBasis) -> Graph:
    if basis.arity != len(factors):
        raise GraphError(
            f"basis arity {basis.arity} != number of factors {len(factors)}"
        )
    terms = []
    for beta in sorted(basis.tuples):
        mats = [
            f.adjacency.astype(np.int64) if b else np.eye(f.n, dtype=np.int64)
            for f, b in zip(factors, beta)
        ]
        terms.append(reduce(np.kron, mats))
    adj = (sum(terms) > 0).astype(np.uint8)
    labels = reduce(
        lambda acc, f: tuple(f"{a},{b}" for a in acc for b in f.vertex_labels),
        factors[1:],
        tuple(factors[0].vertex_labels),
    )
    labels = tuple(f"({lab})" for lab in labels)
    return Graph(adj, labels)


def named_product(g1: Graph, g2: Graph, kind: str) -> Graph:
    if kind not in _NAMED_BASES:
        raise GraphError(f"unknown product kind {kind!r}")
    return neps([g1, g2], NepsBasis(2, frozenset(_NAMED_BASES[kind])))


def path2(looped: bool = False) -> Graph:
    adj = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    if looped:
        adj = adj | np.eye(2, dtype=np.uint8)
    return Graph(adj, ("0", "1"))

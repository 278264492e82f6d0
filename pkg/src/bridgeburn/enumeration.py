"""Exhaustive small-graph corpora for oracle-style verification.

Labeled trees come from Prüfer sequences; arbitrary connected graphs from
edge subsets of K_n.  Both enumerations deduplicate up to isomorphism
first (AHU codes for trees, minimum over vertex permutations for general
graphs) so the expensive game solves run once per unlabeled class.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graph import Graph, build_graph, is_connected


def tree_edges_from_prufer(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence over vertices 0..n-1 (length n-2)."""
    if n < 2:
        raise ValueError("Prüfer decoding needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x) if leaf < x else (x, leaf))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v) if u < v else (v, u))
    return edges


def labeled_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """Edge lists of all n^(n-2) labeled trees on n vertices."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(0, 1)]
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield tree_edges_from_prufer(seq, n)


def tree_canonical_key(n: int, edges: list[tuple[int, int]]) -> str:
    """AHU code rooted at the tree center(s); equal iff trees isomorphic."""
    if n == 1:
        return "()"
    adj: list[list[int]] = [[] for _ in range(n)]
    for (u, v) in edges:
        adj[u].append(v)
        adj[v].append(u)
    centers = _tree_centers(n, adj)
    return min(_ahu(root, n, adj) for root in centers)


def _tree_centers(n: int, adj: list[list[int]]) -> list[int]:
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    removed = len(layer)
    while removed < n:
        nxt = []
        for v in layer:
            for u in adj[v]:
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        removed += len(nxt)
        layer = nxt if nxt else layer
    return layer


def _ahu(root: int, n: int, adj: list[list[int]]) -> str:
    # Iterative post-order; children codes sorted for canonicity.
    code: dict[int, str] = {}
    stack: list[tuple[int, int, bool]] = [(root, -1, False)]
    while stack:
        v, par, done = stack.pop()
        if done:
            children = sorted(code[u] for u in adj[v] if u != par)
            code[v] = "(" + "".join(children) + ")"
        else:
            stack.append((v, par, True))
            for u in adj[v]:
                if u != par:
                    stack.append((u, v, False))
    return code[root]


def unlabeled_trees(n: int) -> list[Graph]:
    """One representative per isomorphism class of n-vertex trees."""
    seen: dict[str, Graph] = {}
    for edges in labeled_trees(n):
        key = tree_canonical_key(n, edges)
        if key not in seen:
            seen[key] = build_graph(n, edges)
    return list(seen.values())


# --- general connected graphs up to isomorphism -------------------------------


def _edge_index_table(n: int) -> dict[tuple[int, int], int]:
    pairs = list(itertools.combinations(range(n), 2))
    return {pair: i for i, pair in enumerate(pairs)}


def _permutation_bit_tables(n: int) -> list[tuple[list[int], list[int]]]:
    """Per permutation: split lookup tables mapping edge-mask halves."""
    idx = _edge_index_table(n)
    nbits = len(idx)
    lo_bits = min(8, nbits)
    tables = []
    for perm in itertools.permutations(range(n)):
        single = [0] * nbits
        for (u, v), i in idx.items():
            pu, pv = perm[u], perm[v]
            single[i] = 1 << idx[(pu, pv) if pu < pv else (pv, pu)]
        lo = [0] * (1 << lo_bits)
        for m in range(1, 1 << lo_bits):
            low = m & -m
            lo[m] = lo[m ^ low] | single[low.bit_length() - 1]
        hi = [0] * (1 << (nbits - lo_bits))
        for m in range(1, 1 << (nbits - lo_bits)):
            low = m & -m
            hi[m] = hi[m ^ low] | single[low.bit_length() - 1 + lo_bits]
        tables.append((lo, hi))
    return tables


def connected_graph_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected n-vertex graphs."""
    if n == 1:
        return [build_graph(1, [])]
    pairs = list(itertools.combinations(range(n), 2))
    nbits = len(pairs)
    lo_bits = min(8, nbits)
    lo_mask = (1 << lo_bits) - 1
    tables = _permutation_bit_tables(n)
    seen: set[int] = set()
    out: list[Graph] = []
    for mask in range(1 << nbits):
        if bin(mask).count("1") < n - 1:
            continue
        if not _mask_connected(n, pairs, mask):
            continue
        canon = min(lo[mask & lo_mask] | hi[mask >> lo_bits] for (lo, hi) in tables)
        if canon in seen:
            continue
        seen.add(canon)
        out.append(build_graph(n, [pairs[i] for i in range(nbits) if mask >> i & 1]))
    return out


def _mask_connected(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    nbr = [0] * n
    m = mask
    while m:
        low = m & -m
        u, v = pairs[low.bit_length() - 1]
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
        m ^= low
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= nbr[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1

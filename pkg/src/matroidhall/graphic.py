"""Graph realizations of small matroids.

A matroid of rank ``r`` is graphic exactly when it is the cycle matroid of a
connected graph on ``r + 1`` vertices in which a chosen basis is a spanning
tree.  For every edge-labelled tree we place each remaining element on the
unique vertex pair whose tree path is its fundamental circuit, then compare
flats.
"""

from __future__ import annotations

from .bits import bits
from .matroid import closure, from_graph, is_loop


def _trees(edges):
    """Edge-labelled trees with the given edge names, vertices numbered on creation."""

    def grow(i, ends, comp, nverts):
        if i == len(edges):
            if len(set(comp)) <= 1:
                yield dict(ends)
            return
        e = edges[i]
        # both ends new
        yield from grow(i + 1, {**ends, e: (nverts, nverts + 1)}, comp + [nverts, nverts], nverts + 2)
        for u in range(nverts):
            yield from grow(i + 1, {**ends, e: (u, nverts)}, comp + [comp[u]], nverts + 1)
        for u in range(nverts):
            for v in range(u + 1, nverts):
                cu, cv = comp[u], comp[v]
                if cu == cv:
                    continue
                merged = [cu if c == cv else c for c in comp]
                yield from grow(i + 1, {**ends, e: (u, v)}, merged, nverts)

    if not edges:
        yield {}
        return
    yield from grow(0, {}, [], 0)


def _tree_path(ends, u, v):
    adj = {}
    for e, (x, y) in ends.items():
        adj.setdefault(x, []).append((y, e))
        adj.setdefault(y, []).append((x, e))
    stack = [(u, frozenset())]
    seen = {u}
    while stack:
        x, path = stack.pop()
        if x == v:
            return path
        for y, e in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append((y, path | {e}))
    return None


def graph_realization(M):
    """``(vertices, edges)`` whose cycle matroid is ``M`` (basepoint as a loop), or ``None``."""
    labels = M.labels
    basis = min(M.bases) if M.bases else 0
    B = [labels[i] for i in bits(basis)]
    circuits = {}
    for i in bits(M.ground.tilde & ~basis):
        x = labels[i]
        if is_loop(M, x):
            circuits[x] = frozenset()
            continue
        circuits[x] = frozenset(
            labels[j] for j in bits(basis) if not closure(M, basis & ~(1 << j)) >> i & 1
        )
    for ends in _trees(B):
        vertices = sorted({v for pair in ends.values() for v in pair}) or [0]
        placed = dict(ends)
        ok = True
        for x, circuit in circuits.items():
            if not circuit:
                placed[x] = (vertices[0], vertices[0])
                continue
            spot = None
            for u in vertices:
                for v in vertices:
                    if u < v and _tree_path(ends, u, v) == circuit:
                        spot = (u, v)
                        break
                if spot:
                    break
            if spot is None:
                ok = False
                break
            placed[x] = spot
        if not ok:
            continue
        edges = [(labels[0], vertices[0], vertices[0])]
        edges += [(x, *placed[x]) for x in labels[1:]]
        G = from_graph(vertices, edges, loop=labels[0])
        if G.flats == M.flats and G.labels == M.labels:
            return vertices, edges
    return None


def is_graphic(M):
    return graph_realization(M) is not None

"""Discrete Morse matchings built from sequences of element matchings.

An element matching at a vertex ``a`` pairs every still-unmatched face σ not
containing ``a`` with σ ∪ {a}, whenever that is also a still-unmatched face.
Faces here include the empty face, so a matching with no critical faces at
all witnesses a contractible complex in the reduced sense.

Within one element matching no two candidate pairs can share a face (the
pairing σ -> σ ∪ {a} is an involution on faces not containing a), so the
greedy pass in increasing bitmask order is just a deterministic way of
taking all of them.

Acyclicity is never assumed: ``verify_acyclic_and_critical`` runs cycle
detection on the Hasse diagram with matched edges reversed upward. This
module only reports critical-cell censuses; homotopy conclusions are left to
callers pairing them with homology.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import bits, to_tuple
from .complexes import SimplicialComplex
from .cuts import cut_complex
from .graphs import Graph, from_edge_list, has_triangle


@dataclass(frozen=True)
class MorseMatching:
    complex: SimplicialComplex
    pairs: tuple[tuple[int, int], ...]

    def matched_faces(self) -> frozenset:
        out = set()
        for s, t in self.pairs:
            out.add(s)
            out.add(t)
        return frozenset(out)

    def critical_faces(self) -> frozenset:
        return self.complex.face_set() - self.matched_faces()

    def critical_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for f in self.critical_faces():
            d = f.bit_count() - 1
            census[d] = census.get(d, 0) + 1
        return census

    def to_json_obj(self):
        return {
            "pairs": [[list(to_tuple(s)), list(to_tuple(t))] for s, t in self.pairs],
            "critical_census": {str(d): c for d, c in sorted(self.critical_census().items())},
        }


def element_matching_sequence(cx: SimplicialComplex, vertex_order) -> MorseMatching:
    """Apply element matchings at the given vertices, in order."""
    order = list(vertex_order)
    if len(set(order)) != len(order):
        raise ValueError("vertex order contains a repeat")
    faces = sorted(cx.face_set())
    face_set = set(faces)
    matched = set()
    pairs = []
    for a in order:
        bit = 1 << a
        for sigma in faces:
            if sigma & bit or sigma in matched:
                continue
            tau = sigma | bit
            if tau in face_set and tau not in matched:
                matched.add(sigma)
                matched.add(tau)
                pairs.append((sigma, tau))
    return MorseMatching(cx, tuple(pairs))


def verify_acyclic_and_critical(m: MorseMatching) -> tuple[bool, dict[int, int]]:
    """Validate the pairing structurally, then test acyclicity of the
    modified Hasse diagram (matched covers point up, the rest point down)."""
    face_set = m.complex.face_set()
    seen = set()
    up = {}
    for s, t in m.pairs:
        if s not in face_set or t not in face_set:
            raise ValueError("matched pair involves a non-face")
        diff = s ^ t
        if s & ~t or diff.bit_count() != 1:
            raise ValueError("matched pair does not differ by one vertex")
        if s in seen or t in seen:
            raise ValueError("face appears in more than one pair")
        seen.add(s)
        seen.add(t)
        up[s] = t

    # successors: σ -> σ ∪ a when matched upward, τ -> its unmatched facets
    succ: dict[int, list[int]] = {}
    indeg: dict[int, int] = {f: 0 for f in face_set}
    for f in face_set:
        targets = []
        for v in bits(f):
            sub = f & ~(1 << v)
            if up.get(sub) != f:
                targets.append(sub)
        if f in up:
            targets.append(up[f])
        succ[f] = targets
        for t in targets:
            indeg[t] += 1

    queue = [f for f, d in indeg.items() if d == 0]
    visited = 0
    while queue:
        f = queue.pop()
        visited += 1
        for t in succ[f]:
            indeg[t] -= 1
            if indeg[t] == 0:
                queue.append(t)
    acyclic = visited == len(face_set)
    return acyclic, m.critical_census()


def tree_matching_order(tree: Graph, root: int = 0) -> tuple[int, ...]:
    """Parents-before-children vertex order; feeding it to
    element_matching_sequence on the 2-cut complex of the tree matches every
    face (zero critical cells)."""
    n = tree.n
    if not (0 <= root < n):
        raise ValueError("root out of range")
    if tree.edge_count != n - 1 or not tree.is_connected():
        raise ValueError("input graph is not a tree")
    order = [root]
    seen = 1 << root
    qi = 0
    while qi < len(order):
        v = order[qi]
        qi += 1
        for u in bits(tree.adj[v] & ~seen):
            seen |= 1 << u
            order.append(u)
    return tuple(order)


def spanning_tree(g: Graph, root: int = 0) -> Graph:
    """Breadth-first spanning tree with the same vertex numbering."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    edges = []
    seen = 1 << root
    queue = [root]
    qi = 0
    while qi < len(queue):
        v = queue[qi]
        qi += 1
        for u in bits(g.adj[v] & ~seen):
            seen |= 1 << u
            edges.append((v, u))
            queue.append(u)
    return from_edge_list(g.n, edges)


def restricted_matching(g: Graph) -> MorseMatching:
    """Perfect matching on the 2-cut complex of a spanning tree, restricted to
    the 2-cut complex of the graph itself.

    Needs a connected triangle-free non-tree; the result has exactly
    e - n + 1 critical cells, all in dimension n - 4.
    """
    if has_triangle(g):
        raise ValueError("graph has a triangle")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if g.edge_count == g.n - 1:
        raise ValueError("graph is a tree; use tree_matching_order instead")
    tree = spanning_tree(g, 0)
    on_tree = element_matching_sequence(cut_complex(tree, 2), tree_matching_order(tree, 0))
    target = cut_complex(g, 2)
    keep = target.face_set()
    pairs = tuple((s, t) for s, t in on_tree.pairs if s in keep and t in keep)
    return MorseMatching(target, pairs)


def prism_matching_order(n: int, k: int) -> tuple[int, ...]:
    """Vertex order 1⁺, 1⁻, 2⁺, 3⁺, ..., n⁺ for the prism over an n-clique
    (vertex i⁺ is index i-1, vertex i⁻ is index n+i-1).

    On the k-cut complex of the prism the resulting matching is acyclic with
    exactly C(n-1, k-1) critical cells, all in dimension 2n-k-2.
    """
    if not (n >= k >= 2):
        raise ValueError("prism order needs n >= k >= 2")
    return (0, n) + tuple(range(1, n))

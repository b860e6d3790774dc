"""Simple undirected graphs on dense integer vertices.

Adjacency is stored as one bitmask per vertex. Graphs are immutable after
construction; every operation returns a new graph. Vertex labels are display
strings only (the prism generator labels vertices ``1⁺``, ``1⁻``, ...); all
algorithms work on the integer indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitsets import bits, mask_of, to_tuple


class FamilySpecError(ValueError):
    """Unknown family name or invalid family parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> str:
        """Display label; defaults to the 1-based index."""
        if self.labels is not None:
            return self.labels[v]
        return str(v + 1)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return is_connected_subset(self, self.full_mask)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_edge_list(n: int, edges, labels=None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Raises ValueError for out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    lab = tuple(labels) if labels is not None else None
    if lab is not None and len(lab) != n:
        raise ValueError("labels length must equal vertex count")
    return Graph(n, tuple(adj), lab)


# ---------------------------------------------------------------------------
# graph families


def _path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n):
    if n < 3:
        raise FamilySpecError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def _complete(n):
    return from_edge_list(n, list(combinations(range(n), 2)))


def _edgeless(n):
    return from_edge_list(n, [])


def _complete_multipartite(parts):
    if not parts or any(p < 1 for p in parts):
        raise FamilySpecError("multipartite parts must be positive")
    n = sum(parts)
    block = []
    for i, p in enumerate(parts):
        block.extend([i] * p)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]]
    return from_edge_list(n, edges)


def _star(m):
    if m < 1:
        raise FamilySpecError("star needs m >= 1")
    return from_edge_list(m + 1, [(0, i) for i in range(1, m + 1)])


def _prism(n):
    """K_n x K_2: vertices i (labelled (i+1)⁺) and n+i (labelled (i+1)⁻)."""
    if n < 2:
        raise FamilySpecError("prism needs n >= 2")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            edges.append((i, j))
            edges.append((n + i, n + j))
        edges.append((i, n + i))
    labels = [f"{i + 1}⁺" for i in range(n)] + [f"{i + 1}⁻" for i in range(n)]
    return from_edge_list(2 * n, edges, labels)


def _squared_cycle(n):
    if n < 3:
        raise FamilySpecError("squared_cycle needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, (i + 2) % n) for i in range(n)]
    return from_edge_list(n, [(u, v) for u, v in edges if u != v])


def _kneser(m, r):
    if not (m >= r >= 1):
        raise FamilySpecError("kneser needs m >= r >= 1")
    verts = list(combinations(range(m), r))
    index = {s: i for i, s in enumerate(verts)}
    edges = []
    for a, b in combinations(verts, 2):
        if not set(a) & set(b):
            edges.append((index[a], index[b]))
    labels = ["".join(str(x + 1) for x in s) if m <= 9 else ",".join(str(x + 1) for x in s) for s in verts]
    return from_edge_list(len(verts), edges, labels)


def _threshold(pattern):
    """Single vertex, then one vertex per character: '1' dominating, '0' isolated."""
    if any(c not in "01" for c in pattern):
        raise FamilySpecError("threshold pattern must be a string over {0,1}")
    n = 1 + len(pattern)
    edges = []
    for i, c in enumerate(pattern):
        v = i + 1
        if c == "1":
            edges.extend((u, v) for u in range(v))
    return from_edge_list(n, edges)


def _tree_from_edges(arg):
    if not arg:
        return from_edge_list(1, [])
    edges = []
    for part in arg.split(","):
        a, _, b = part.partition("-")
        edges.append((int(a), int(b)))
    n = max(max(e) for e in edges) + 1
    g = from_edge_list(n, edges)
    if g.edge_count != n - 1 or not g.is_connected():
        raise FamilySpecError("edge list is not a tree")
    return g


def _kayak(k):
    """Chordal graph on k+2 vertices whose k-cut complex is two disjoint edges.

    A ladder of overlapping 4-cliques on 1..2m (m = floor(k/2); the ladder
    extends to 2m+2 when k is odd), with a pendant triangle at each end.
    """
    if k < 4:
        raise FamilySpecError("kayak needs k >= 4")
    m = k // 2
    edges = []
    if k % 2 == 0:
        rungs = 2 * m  # vertices 0..2m-1 are the ladder, then a, b
        a, b = 2 * m, 2 * m + 1
        quads = range(1, m)
        edges += [(a, 0), (a, 1), (b, 2 * m - 2), (b, 2 * m - 1)]
        labels = [str(i + 1) for i in range(rungs)] + ["a", "b"]
    else:
        rungs = 2 * m + 2
        a = rungs
        quads = range(1, m + 1)
        edges += [(a, 0), (a, 1)]
        labels = [str(i + 1) for i in range(rungs)] + ["a"]
    for i in quads:
        quad = [2 * i - 2, 2 * i - 1, 2 * i, 2 * i + 1]
        edges += list(combinations(quad, 2))
    # rung pairs {2i-1, 2i} are edges even when no quad covers them
    edges += [(2 * i, 2 * i + 1) for i in range(rungs // 2)]
    return from_edge_list(rungs + (2 if k % 2 == 0 else 1), edges, labels)


def _balloon(n1, n2):
    """Cycle C_{n1} wedged with path P_{n2} at a leaf of the path."""
    if n2 < 2:
        raise FamilySpecError("balloon needs a path with n2 >= 2")
    return wedge(_cycle(n1), _path(n2), 0, 0)


def _figure_eight(n1, n2):
    return wedge(_cycle(n1), _cycle(n2), 0, 0)


def _parse_ints(arg, name, count=None):
    try:
        vals = [int(x) for x in arg.split(",")] if arg else []
    except ValueError:
        raise FamilySpecError(f"{name}: expected integer parameters, got {arg!r}") from None
    if count is not None and len(vals) != count:
        raise FamilySpecError(f"{name}: expected {count} parameter(s), got {len(vals)}")
    return vals


def family(spec: str) -> Graph:
    """Build a named graph from a DSL string such as ``cycle:7``,
    ``complete_multipartite:2,2,3``, ``kayak:5`` or ``tree:0-1,1-2``."""
    name, _, arg = spec.partition(":")
    name = name.strip().lower().replace("-", "_")
    if name == "path":
        (n,) = _parse_ints(arg, name, 1)
        return _path(n)
    if name == "cycle":
        (n,) = _parse_ints(arg, name, 1)
        return _cycle(n)
    if name == "complete":
        (n,) = _parse_ints(arg, name, 1)
        return _complete(n)
    if name == "edgeless":
        (n,) = _parse_ints(arg, name, 1)
        return _edgeless(n)
    if name == "complete_multipartite":
        return _complete_multipartite(_parse_ints(arg, name))
    if name == "star":
        (m,) = _parse_ints(arg, name, 1)
        return _star(m)
    if name == "prism":
        (n,) = _parse_ints(arg, name, 1)
        return _prism(n)
    if name == "squared_cycle":
        (n,) = _parse_ints(arg, name, 1)
        return _squared_cycle(n)
    if name == "kneser":
        m, r = _parse_ints(arg, name, 2)
        return _kneser(m, r)
    if name == "petersen":
        return _kneser(5, 2)
    if name == "threshold":
        return _threshold(arg.strip())
    if name == "tree":
        return _tree_from_edges(arg.strip())
    if name == "kayak":
        (k,) = _parse_ints(arg, name, 1)
        return _kayak(k)
    if name == "balloon":
        n1, n2 = _parse_ints(arg, name, 2)
        return _balloon(n1, n2)
    if name == "figure_eight":
        n1, n2 = _parse_ints(arg, name, 2)
        return _figure_eight(n1, n2)
    raise FamilySpecError(f"unknown family {name!r}")


# ---------------------------------------------------------------------------
# graph operations


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [a << g1.n for a in g2.adj]
    return Graph(g1.n + g2.n, tuple(adj))


def graph_join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = g1.n, g2.n
    right = ((1 << n2) - 1) << n1
    left = (1 << n1) - 1
    adj = [g1.adj[v] | right for v in range(n1)]
    adj += [(g2.adj[v] << n1) | left for v in range(n2)]
    return Graph(n1 + n2, tuple(adj))


def wedge(g1: Graph, g2: Graph, v1: int, v2: int) -> Graph:
    """Identify vertex v1 of g1 with vertex v2 of g2; n1 + n2 - 1 vertices."""
    if not (0 <= v1 < g1.n and 0 <= v2 < g2.n):
        raise ValueError("wedge vertex out of range")
    remap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == v2:
            remap[v] = v1
        else:
            remap[v] = nxt
            nxt += 1
    edges = g1.edges() + [(remap[u], remap[v]) for u, v in g2.edges()]
    return from_edge_list(g1.n + g2.n - 1, edges)


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Vertex (u, v) becomes index u + v * n1, so layer v is a copy of g1."""
    n1, n2 = g1.n, g2.n
    edges = []
    for v in range(n2):
        off = v * n1
        edges += [(a + off, b + off) for a, b in g1.edges()]
    for a, b in g2.edges():
        edges += [(u + a * n1, u + b * n1) for u in range(n1)]
    return from_edge_list(n1 * n2, edges)


def combine(op: str, g1: Graph, g2: Graph, v1: int | None = None, v2: int | None = None) -> Graph:
    if op == "union":
        return disjoint_union(g1, g2)
    if op == "join":
        return graph_join(g1, g2)
    if op == "wedge":
        if v1 is None or v2 is None:
            raise ValueError("wedge requires the two vertices to identify")
        return wedge(g1, g2, v1, v2)
    if op == "cartesian":
        return cartesian_product(g1, g2)
    raise ValueError(f"unknown combine op {op!r}")


def _as_mask(g: Graph, S) -> int:
    m = S if isinstance(S, int) else mask_of(S)
    if m & ~g.full_mask:
        raise ValueError("vertex out of range")
    return m


def induced_subgraph(g: Graph, S) -> Graph:
    """Subgraph on S with vertices relabelled densely, preserving order."""
    m = _as_mask(g, S)
    verts = to_tuple(m)
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if (m >> u) & 1 and (m >> v) & 1]
    labels = tuple(g.label(v) for v in verts) if g.labels is not None else None
    return from_edge_list(len(verts), edges, labels)


def is_connected_subset(g: Graph, S) -> bool:
    """True iff the induced subgraph on S is connected. S must be nonempty."""
    m = _as_mask(g, S)
    if m == 0:
        raise ValueError("connectivity of the empty set is undefined")
    seen = m & -m
    frontier = seen
    while frontier:
        grow = 0
        rest = frontier
        while rest:
            low = rest & -rest
            grow |= g.adj[low.bit_length() - 1]
            rest ^= low
        frontier = grow & m & ~seen
        seen |= frontier
    return seen == m


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Maximum cardinality search plus a perfect-elimination check.

    Returns (True, elimination order) or (False, None). In the witness order,
    each vertex's neighbors among later vertices form a clique.
    """
    n = g.n
    if n == 0:
        return True, ()
    weight = [0] * n
    unnumbered = set(range(n))
    visit = []
    for _ in range(n):
        z = max(unnumbered, key=lambda v: (weight[v], -v))
        unnumbered.remove(z)
        visit.append(z)
        for y in bits(g.adj[z]):
            if y in unnumbered:
                weight[y] += 1
    peo = visit[::-1]
    pos = {v: i for i, v in enumerate(peo)}
    for v in peo:
        later = [u for u in bits(g.adj[v]) if pos[u] > pos[v]]
        if not later:
            continue
        u = min(later, key=pos.__getitem__)
        rest = mask_of(x for x in later if x != u)
        if rest & ~g.adj[u]:
            return False, None
    return True, tuple(peo)


def shortest_cycle_length(g: Graph) -> int | None:
    """Girth of the graph, or None if acyclic."""
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            if best is not None and dist[v] * 2 >= best:
                break
            for u in bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u and parent[u] != v:
                    cand = dist[u] + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def has_triangle(g: Graph) -> bool:
    return any(g.adj[u] & g.adj[v] for u, v in g.edges())


# ---------------------------------------------------------------------------
# text exchange format: first line "n m", then one "u v" line per edge


def write_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    rows = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty graph file")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return from_edge_list(n, edges)

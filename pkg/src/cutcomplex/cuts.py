"""Cut complexes of graphs.

The k-cut complex of a graph G on n vertices is generated by the complements
of the k-subsets that induce disconnected subgraphs; its facets are the
separating (n-k)-sets. This module holds everything specific to that
construction: enumeration of disconnected k-sets, the connected-subset
census, the complete-skeleton condition with its antichain Euler formula,
ridge recursion between consecutive k, realization of arbitrary pure
complexes as cut complexes of chordal graphs, and the closed-form Betti
predictions for the graph families with known answers.

The Betti predictions are pure dispatchers over closed forms: they never
compute homology, so they can serve as the oracle the homology engine is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bitsets import bits, ksubset_masks, mask_of, to_tuple
from .complexes import SimplicialComplex
from .graphs import (
    Graph,
    family,
    from_edge_list,
    has_triangle,
    is_connected_subset,
    shortest_cycle_length,
)


def disconnected_ksets(g: Graph, k: int) -> list[int]:
    """All k-subsets inducing disconnected subgraphs, as ascending bitmasks.

    k = 1 gives the empty list by definition; k > n gives the empty list.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1 or k > g.n:
        return []
    return [m for m in ksubset_masks(g.n, k) if not is_connected_subset(g, m)]


def cut_complex(g: Graph, k: int) -> SimplicialComplex:
    """Complex whose facets are complements of disconnected k-sets."""
    full = g.full_mask
    return SimplicialComplex(
        [full ^ m for m in disconnected_ksets(g, k)], ambient=g.n
    )


@dataclass(frozen=True)
class ConnectedSetCensus:
    """Count of connected k-subsets, optionally also those through an anchor."""

    k: int
    count: int
    anchor: int | None = None
    anchored_count: int | None = None


def connected_kset_census(g: Graph, k: int, anchor: int | None = None) -> ConnectedSetCensus:
    if not (1 <= k <= g.n):
        raise ValueError("census needs 1 <= k <= n")
    if anchor is not None and not (0 <= anchor < g.n):
        raise ValueError("anchor out of range")
    count = 0
    anchored = 0
    abit = 1 << anchor if anchor is not None else 0
    for m in ksubset_masks(g.n, k):
        if is_connected_subset(g, m):
            count += 1
            if abit and m & abit:
                anchored += 1
    return ConnectedSetCensus(k, count, anchor, anchored if anchor is not None else None)


def facets_via_ridges(cx: SimplicialComplex, k: int) -> list[int]:
    """Ridges of a k-cut complex lying in at least k facets; these are exactly
    the facets of the (k+1)-cut complex of the same graph."""
    if k < 2:
        raise ValueError("ridge recursion needs k >= 2")
    if cx.is_void or cx.is_empty_complex:
        return []
    facets = cx.facets
    ridges = {f & ~(1 << v) for f in facets for v in bits(f)}
    out = [r for r in ridges if sum(r & ~f == 0 for f in facets) >= k]
    out.sort()
    return out


def no_short_cycle_guarantee(g: Graph, k: int) -> bool:
    """Fast sufficient condition for the complete-skeleton property: no cycle
    of length <= k+1."""
    girth = shortest_cycle_length(g)
    return girth is None or girth > k + 1


def skeleton_condition_euler(g: Graph, k: int) -> tuple[bool, int | None]:
    """Check whether the k-cut complex contains a complete skeleton one
    dimension below its ridges; when it does, return the reduced Euler
    characteristic from the census formula.

    The condition: for every connected k-subset A and every x outside A there
    is a y in A with (A - y) + x disconnected. When it holds,
    (-1)^(n-k-1) * mu = C(n-1, k-1) - #(connected k-subsets).
    """
    n = g.n
    if not (2 <= k <= n - 1):
        raise ValueError("condition needs 2 <= k <= n-1")
    disconnected = set(disconnected_ksets(g, k))
    if not disconnected:
        raise ValueError("void cut complex: the condition does not apply")
    z = comb(n, k) - len(disconnected)
    mu = (comb(n - 1, k - 1) - z) * (-1 if (n - k - 1) % 2 else 1)
    if no_short_cycle_guarantee(g, k):
        return True, mu
    full = g.full_mask
    for m in ksubset_masks(n, k):
        if m in disconnected:
            continue
        for x in bits(full & ~m):
            xbit = 1 << x
            if not any((m ^ (1 << y)) | xbit in disconnected for y in bits(m)):
                return False, None
    return True, mu


# ---------------------------------------------------------------------------
# universal realization


def realize_as_cut_complex(cx: SimplicialComplex) -> tuple[Graph, int]:
    """Produce a chordal graph G and k with cut_complex(G, k) equal to the
    input. Complex vertices come first in G, one apex per facet after them.

    The input must be pure, nonvoid, and have at least one vertex; its vertex
    set is relabelled densely if it is not already 0..nv-1.
    """
    if cx.is_void or cx.is_empty_complex:
        raise ValueError("realization needs a complex with at least one vertex")
    if not cx.is_pure:
        raise ValueError("realization needs a pure complex")
    verts = cx.vertices()
    pos = {v: i for i, v in enumerate(verts)}
    facets = sorted(mask_of(pos[v] for v in to_tuple(f)) for f in cx.facets)
    nv = len(verts)
    t = len(facets)
    d = cx.dim
    if t > 1:
        edges = list(combinations(range(nv), 2))
        for j, f in enumerate(facets):
            apex = nv + j
            edges.extend((u, apex) for u in bits(f))
        return from_edge_list(nv + t, edges), nv + t - (d + 1)
    if nv == 1:
        # a single vertex is the 2-cut complex of the 3-vertex star
        return from_edge_list(3, [(0, 1), (0, 2)]), 2
    # a full simplex: clique plus one apex per clique vertex
    edges = list(combinations(range(nv), 2))
    edges += [(u, nv + j) for j in range(nv) for u in range(nv)]
    return from_edge_list(2 * nv, edges), nv


# ---------------------------------------------------------------------------
# closed-form Betti predictions


class NotCoveredError(LookupError):
    """No closed-form answer is available for the requested parameters."""


@dataclass(frozen=True)
class BettiPrediction:
    """Expected homotopy type: a wedge of ``count`` spheres in dimension
    ``dim``, or one of the degenerate flags."""

    status: str  # "wedge" | "contractible" | "point" | "void"
    dim: int | None = None
    count: int | None = None

    @staticmethod
    def wedge(dim: int, count: int) -> BettiPrediction:
        if count < 0:
            raise ValueError("sphere count must be >= 0")
        if count == 0:
            return BettiPrediction("contractible")
        return BettiPrediction("wedge", dim, count)

    @staticmethod
    def void() -> BettiPrediction:
        return BettiPrediction("void")

    @staticmethod
    def contractible() -> BettiPrediction:
        return BettiPrediction("contractible")

    def matches(self, cx: SimplicialComplex, report) -> bool:
        """Compare against a computed complex and its homology report (the
        report may be None when the complex is void)."""
        if self.status == "void":
            return cx.is_void
        if cx.is_void or report is None:
            return False
        if self.status in ("contractible", "point"):
            return report.is_free() and all(r == 0 for r in report.ranks.values())
        return report.free_concentrated(self.dim, self.count)

    def to_json_obj(self):
        return {"status": self.status, "dim": self.dim, "count": self.count}


def forest_betti(g: Graph, k: int) -> BettiPrediction:
    """Wedge of C(n-1, k-1) - #(connected k-subsets) spheres in dimension
    n-k-1, for any forest."""
    if shortest_cycle_length(g) is not None:
        raise ValueError("not a forest")
    n = g.n
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1 or k > n:
        return BettiPrediction.void()
    if k == n:
        if g.is_connected():
            return BettiPrediction.void()
        return BettiPrediction.wedge(-1, 1)
    count = comb(n - 1, k - 1) - connected_kset_census(g, k).count
    return BettiPrediction.wedge(n - k - 1, count)


def triangle_free_delta2_betti(g: Graph) -> BettiPrediction:
    """Wedge of e-n+1 spheres in dimension n-4, for a connected triangle-free
    graph that is not a tree (k = 2 only)."""
    if has_triangle(g):
        raise ValueError("graph has a triangle")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    if g.edge_count == g.n - 1:
        raise ValueError("graph is a tree; its 2-cut complex is contractible")
    return BettiPrediction.wedge(g.n - 4, g.edge_count - g.n + 1)


def wedge_anchor_count(g1: Graph, w1: int, g2: Graph, w2: int, k: int, min_size: int = 1) -> int:
    """Number of ways to glue a connected a-subset of g1 through w1 to a
    connected (k+1-a)-subset of g2 through w2; sizes at least ``min_size``.

    With min_size 1 this is the count subtracted from C(n1+n2-2, k-1) in the
    wedge Euler-characteristic formulas; min_size 2 gives the variant that
    excludes subsets lying entirely in one side.
    """
    total = 0
    for a in range(min_size, k + 2 - min_size):
        b = k + 1 - a
        if not (1 <= a <= g1.n and 1 <= b <= g2.n):
            continue
        c1 = connected_kset_census(g1, a, anchor=w1).anchored_count
        c2 = connected_kset_census(g2, b, anchor=w2).anchored_count
        total += c1 * c2
    return total


def _multipartite_betti(parts, k):
    parts = sorted(parts)
    r = len(parts)
    if r == 1:
        return _edgeless_betti(parts[0], k)
    if k == 1 or k > parts[-1]:
        return BettiPrediction.void()
    if k > parts[-2]:
        return BettiPrediction.contractible()
    if k <= parts[0]:
        count = 1
        for m in parts:
            count *= comb(m - 1, k - 1)
        dim = sum(m - k for m in parts) + r - 2
        return BettiPrediction.wedge(dim, count)
    return BettiPrediction.contractible()


def _edgeless_betti(n, k):
    if k == 1 or k > n:
        return BettiPrediction.void()
    return BettiPrediction.wedge(n - k - 1, comb(n - 1, k - 1))


def _cycle_betti(n, k):
    if n <= 3:
        return BettiPrediction.void()
    if k == 1 or k >= n - 1:
        return BettiPrediction.void()
    if k == 2:
        return BettiPrediction.wedge(n - 4, 1)
    return BettiPrediction.wedge(n - k - 1, comb(n - 1, k - 1) - n)


def _prism_betti(n, k):
    if k == 1 or k > n:
        return BettiPrediction.void()
    return BettiPrediction.wedge(2 * n - k - 2, comb(n - 1, k - 1))


def _squared_cycle_betti(n, k):
    if n <= 5 and k >= 1:
        return BettiPrediction.void()  # complete graph
    if k == 1 or n <= k + 3:
        return BettiPrediction.void()
    if k == 2:
        return BettiPrediction.wedge(1 if n == 6 else n - 4, 1)
    if n == k + 4:
        return BettiPrediction.wedge(1, 1)
    raise NotCoveredError(f"squared_cycle:{n} with k={k} is only conjectural")


def _balloon_betti(n1, n2, k):
    # the k = n1-1 caveat: the cycle side fails the skeleton condition there,
    # so the count formula is not guaranteed and we decline to answer
    n = n1 + n2 - 1
    if not (3 <= k <= n - 2) or k == n1 - 1:
        raise NotCoveredError(f"balloon:{n1},{n2} with k={k} not covered")
    g = family(f"balloon:{n1},{n2}")
    count = comb(n - 1, k - 1) - connected_kset_census(g, k).count
    return BettiPrediction.wedge(n - 1 - k, count)


def _figure_eight_betti(n1, n2, k):
    n = n1 + n2 - 1
    if not (3 <= k <= n - 2) or k in (n1 - 1, n2 - 1):
        raise NotCoveredError(f"figure_eight:{n1},{n2} with k={k} not covered")
    g = family(f"figure_eight:{n1},{n2}")
    count = comb(n - 1, k - 1) - connected_kset_census(g, k).count
    return BettiPrediction.wedge(n - 1 - k, count)


def predicted_betti(family_spec: str, k: int) -> BettiPrediction:
    """Closed-form homotopy prediction for a family DSL string, or raise
    NotCoveredError when no formula applies."""
    if k < 1:
        raise ValueError("k must be >= 1")
    name, _, arg = family_spec.partition(":")
    name = name.strip().lower().replace("-", "_")
    ints = []
    if name not in ("tree", "threshold", "petersen"):
        try:
            ints = [int(x) for x in arg.split(",")] if arg else []
        except ValueError:
            ints = []
    if name == "edgeless":
        return _edgeless_betti(ints[0], k)
    if name == "complete":
        return BettiPrediction.void()
    if name == "complete_multipartite":
        return _multipartite_betti(ints, k)
    if name == "star":
        return _multipartite_betti([1, ints[0]], k)
    if name in ("path", "tree"):
        return forest_betti(family(family_spec), k)
    if name == "cycle":
        return _cycle_betti(ints[0], k)
    if name == "prism":
        return _prism_betti(ints[0], k)
    if name == "squared_cycle":
        return _squared_cycle_betti(ints[0], k)
    if name in ("kneser", "petersen"):
        m, r = (5, 2) if name == "petersen" else (ints[0], ints[1])
        if k != 2 or m >= 3 * r:
            raise NotCoveredError(f"{family_spec} with k={k} not covered")
        return triangle_free_delta2_betti(family(family_spec))
    if name == "balloon":
        return _balloon_betti(ints[0], ints[1], k)
    if name == "figure_eight":
        return _figure_eight_betti(ints[0], ints[1], k)
    raise NotCoveredError(f"no closed form known for {family_spec!r}")

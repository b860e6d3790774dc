"""Shelling verification and search for pure simplicial complexes.

A facet order F_1..F_t is a shelling when for every i < j some earlier F_k
meets F_j in exactly |F_j| - 1 vertices with F_i ∩ F_j inside F_k ∩ F_j.
``verify_shelling_order`` checks that pairwise criterion directly;
``find_shelling`` searches facet orders exhaustively with certificates: an
accepted order, a proof-of-exhaustion, or a budget-exceeded marker.

Key soundness point: whether an order can be extended depends only on the
*set* of facets placed so far, so failed prefix sets are memoized. A
"not shellable" verdict is issued only after the full search tree is
exhausted within budget. No symmetry reduction is applied by default: an
unsound reduction would invalidate exhaustion certificates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import mask_of, to_tuple
from .complexes import SimplicialComplex
from .graphs import family
from .cuts import disconnected_ksets

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class ShellingCertificate:
    verdict: str  # "shellable" | "not_shellable" | "unknown"
    order: tuple[tuple[int, ...], ...] | None
    nodes: int
    void_input: bool = False

    @property
    def is_shellable(self) -> bool:
        return self.verdict == "shellable"

    def to_json_obj(self):
        return {
            "verdict": self.verdict,
            "order": [list(f) for f in self.order] if self.order is not None else None,
            "nodes": self.nodes,
            "void_input": self.void_input,
        }


def _facet_permutation(cx: SimplicialComplex, order):
    masks = [f if isinstance(f, int) else mask_of(f) for f in order]
    if sorted(masks) != sorted(cx.facets):
        raise ValueError("order is not a permutation of the facets")
    return masks


def verify_shelling_order(cx: SimplicialComplex, order) -> tuple[bool, tuple[int, int] | None]:
    """Check the pairwise criterion; on rejection also return the first
    failing (i, j) pair of positions."""
    if cx.is_void or cx.is_empty_complex:
        _facet_permutation(cx, order)
        return True, None
    if not cx.is_pure:
        raise ValueError("shelling is only defined here for pure complexes")
    masks = _facet_permutation(cx, order)
    size = masks[0].bit_count()
    for j in range(1, len(masks)):
        fj = masks[j]
        covers = [masks[k] & fj for k in range(j) if (masks[k] & fj).bit_count() == size - 1]
        for i in range(j):
            inter = masks[i] & fj
            if not any(inter & ~c == 0 for c in covers):
                return False, (i, j)
    return True, None


class _Budget(Exception):
    pass


def find_shelling(cx: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> ShellingCertificate:
    """Backtracking search over facet prefixes maintaining the pairwise
    criterion incrementally. Equivalent prefixes are detected by facet set."""
    if cx.is_void:
        return ShellingCertificate("shellable", (), 0, void_input=True)
    if cx.is_empty_complex:
        return ShellingCertificate("shellable", ((),), 0)
    if not cx.is_pure:
        raise ValueError("shelling search requires a pure complex")
    facets = cx.facets
    t = len(facets)
    if t == 1:
        return ShellingCertificate("shellable", (to_tuple(facets[0]),), 0)

    # cheap first attempt: ascending-mask order is often already a shelling
    ok, _ = verify_shelling_order(cx, facets)
    if ok:
        return ShellingCertificate("shellable", tuple(to_tuple(f) for f in facets), 0)

    size = facets[0].bit_count()
    inter = [[facets[i] & facets[j] for j in range(t)] for i in range(t)]
    # cover[i][j]: bitmask over facet indices k that could witness pair (i, j)
    cover = [[0] * t for _ in range(t)]
    for j in range(t):
        ridge_k = [k for k in range(t) if k != j and inter[k][j].bit_count() == size - 1]
        for i in range(t):
            if i == j:
                continue
            m = 0
            for k in ridge_k:
                if inter[i][j] & ~inter[k][j] == 0:
                    m |= 1 << k
            cover[i][j] = m

    failed: set[int] = set()
    nodes = 0

    def extend(prefix_mask: int, order: list[int]) -> list[int] | None:
        nonlocal nodes
        if len(order) == t:
            return order
        for j in range(t):
            jbit = 1 << j
            if prefix_mask & jbit:
                continue
            nxt = prefix_mask | jbit
            if nxt in failed:
                continue
            ok = True
            rest = prefix_mask
            while rest:
                low = rest & -rest
                if not cover[low.bit_length() - 1][j] & prefix_mask:
                    ok = False
                    break
                rest ^= low
            if not ok:
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            order.append(j)
            result = extend(nxt, order)
            if result is not None:
                return result
            order.pop()
            failed.add(nxt)
        return None

    try:
        found = extend(0, [])
    except _Budget:
        return ShellingCertificate("unknown", None, nodes)
    if found is None:
        return ShellingCertificate("not_shellable", None, nodes)
    return ShellingCertificate(
        "shellable", tuple(to_tuple(facets[j]) for j in found), nodes
    )


def cycle_lex_order(n: int, k: int) -> list[tuple[int, ...]]:
    """Separating (n-k)-sets of the n-cycle as increasing vertex sequences in
    lexicographic order; this order is a shelling for k >= 3.

    k = 2 is rejected: the 2-cut complex of a cycle is never shellable for
    n >= 4. k = n-1 gives the void complex (empty order).
    """
    if n < 4:
        raise ValueError("cycle shelling order needs n >= 4")
    if k == 2:
        raise ValueError("the lexicographic order only shells k >= 3")
    if not (3 <= k <= n - 1):
        raise ValueError("need 3 <= k <= n-1")
    g = family(f"cycle:{n}")
    full = g.full_mask
    facets = [to_tuple(full ^ m) for m in disconnected_ksets(g, k)]
    facets.sort()
    return facets

"""Facet-based simplicial complexes.

A complex is explicitly one of three things: the void complex (no faces at
all, dimension -inf), the (-1)-dimensional complex whose only face is the
empty set, or a complex generated by nonempty facets. Faces are bitmasks over
the ambient vertex range 0..ambient-1; the vertex set of the complex (the
union of its facets) may be a proper subset of the ambient range.

Face enumeration is on demand and memoized: cut complexes have few facets but
exponentially many faces, so nothing below the facet list is stored eagerly.
The lazy caches are write-once and idempotent, so complexes stay safe to share
across threads.
"""

from __future__ import annotations

from itertools import combinations

from .bitsets import bits, ksubset_masks, mask_of, submasks, to_tuple

NEG_INF = float("-inf")


def _normalize(face_masks):
    """Deduplicate and drop non-maximal faces; returns sorted facet tuple."""
    masks = sorted(set(face_masks), key=lambda m: (-m.bit_count(), m))
    keep: list[int] = []
    for m in masks:
        if not any(m & ~f == 0 for f in keep):
            keep.append(m)
    keep.sort()
    return tuple(keep)


class SimplicialComplex:
    __slots__ = ("_facets", "ambient", "_faces", "_fvec")

    def __init__(self, faces, ambient: int | None = None):
        """Build the complex generated by ``faces`` (bitmasks or vertex
        iterables). An empty list gives the void complex; ``[()]`` gives the
        complex whose only face is the empty set."""
        masks = [f if isinstance(f, int) else mask_of(f) for f in faces]
        if any(m < 0 for m in masks):
            raise ValueError("faces must be nonnegative bitmasks")
        self._facets = _normalize(masks)
        used = 0
        for m in self._facets:
            used |= m
        top = used.bit_length()
        if ambient is None:
            ambient = top
        elif ambient < top:
            raise ValueError("ambient vertex count smaller than the facets")
        self.ambient = ambient
        self._faces = None
        self._fvec = None

    # -- state ------------------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_empty_complex(self) -> bool:
        """True for the (-1)-dimensional complex whose only face is ∅."""
        return self._facets == (0,)

    @property
    def facets(self) -> tuple[int, ...]:
        return self._facets

    def facet_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(to_tuple(f) for f in self._facets)

    @property
    def dim(self):
        if self.is_void:
            return NEG_INF
        return max(f.bit_count() for f in self._facets) - 1

    @property
    def is_pure(self) -> bool:
        """All facets share one dimension (vacuously true for the void complex)."""
        if self.is_void:
            return True
        sizes = {f.bit_count() for f in self._facets}
        return len(sizes) == 1

    def vertices(self) -> tuple[int, ...]:
        used = 0
        for f in self._facets:
            used |= f
        return to_tuple(used)

    # -- faces ------------------------------------------------------------

    def face_set(self) -> frozenset:
        """Every face, the empty face included. Memoized."""
        if self._faces is None:
            out = set()
            for f in self._facets:
                out.update(submasks(f))
            self._faces = frozenset(out)
        return self._faces

    def has_face(self, sigma) -> bool:
        m = sigma if isinstance(sigma, int) else mask_of(sigma)
        if self._faces is not None:
            return m in self._faces
        return any(m & ~f == 0 for f in self._facets)

    def faces_by_dim(self) -> dict[int, list[int]]:
        """Faces grouped by dimension, each list sorted by vertex tuple."""
        grouped: dict[int, list[int]] = {}
        for m in self.face_set():
            grouped.setdefault(m.bit_count() - 1, []).append(m)
        for lst in grouped.values():
            lst.sort(key=to_tuple)
        return grouped

    def f_vector(self) -> tuple[int, ...]:
        """(f_{-1}, f_0, ..., f_d); errors on the void complex."""
        if self.is_void:
            raise ValueError("the void complex has no f-vector")
        if self._fvec is None:
            counts = [0] * (self.dim + 2)
            for m in self.face_set():
                counts[m.bit_count()] += 1
            self._fvec = tuple(counts)
        return self._fvec

    def reduced_euler(self) -> int:
        """Alternating face-count sum including the empty face."""
        mu = 0
        for size, count in enumerate(self.f_vector()):
            mu += count if size % 2 else -count
        return mu

    # -- local constructions ----------------------------------------------

    def _require_nonvoid(self):
        if self.is_void:
            raise ValueError("operation undefined on the void complex")

    def link(self, sigma) -> SimplicialComplex:
        """Link of a face; the link of a non-face is the void complex."""
        self._require_nonvoid()
        m = sigma if isinstance(sigma, int) else mask_of(sigma)
        if not self.has_face(m):
            return SimplicialComplex([], ambient=self.ambient)
        return SimplicialComplex(
            [f & ~m for f in self._facets if m & ~f == 0], ambient=self.ambient
        )

    def star(self, sigma) -> SimplicialComplex:
        self._require_nonvoid()
        m = sigma if isinstance(sigma, int) else mask_of(sigma)
        return SimplicialComplex(
            [f for f in self._facets if m & ~f == 0], ambient=self.ambient
        )

    def deletion(self, sigma) -> SimplicialComplex:
        """Faces not containing sigma; deleting ∅ leaves the void complex."""
        self._require_nonvoid()
        m = sigma if isinstance(sigma, int) else mask_of(sigma)
        if m == 0:
            return SimplicialComplex([], ambient=self.ambient)
        out = []
        for f in self._facets:
            if m & ~f:
                out.append(f)
            else:
                out.extend(f & ~(1 << x) for x in bits(m))
        return SimplicialComplex(out, ambient=self.ambient)

    # -- skeleta and joins --------------------------------------------------

    def skeleton(self, d: int) -> SimplicialComplex:
        """Faces of dimension at most d (d >= -1)."""
        if d < -1:
            raise ValueError("skeleton dimension must be >= -1")
        if self.is_void or d >= self.dim:
            return self
        out = []
        for f in self._facets:
            if f.bit_count() <= d + 1:
                out.append(f)
            else:
                out.extend(mask_of(c) for c in combinations(to_tuple(f), d + 1))
        return SimplicialComplex(out, ambient=self.ambient)

    def join(self, other: SimplicialComplex) -> SimplicialComplex:
        """Join, with the other complex's vertices shifted past this ambient."""
        shift = self.ambient
        ambient = self.ambient + other.ambient
        if self.is_void or other.is_void:
            return SimplicialComplex([], ambient=ambient)
        return SimplicialComplex(
            [f | (g << shift) for f in self._facets for g in other._facets],
            ambient=ambient,
        )

    def cone(self) -> SimplicialComplex:
        return self.join(SimplicialComplex([(0,)], ambient=1))

    def suspension(self) -> SimplicialComplex:
        return self.join(SimplicialComplex([(0,), (1,)], ambient=2))

    # -- global properties ---------------------------------------------------

    def complete_skeleton_dim(self) -> int:
        """Largest d such that every subset of the ambient vertex set of size
        <= d+1 is a face; -1 for any nonvoid complex, -2 for the void one."""
        if self.is_void:
            return -2
        d = -1
        max_size = self.dim + 1
        for s in range(1, max_size + 1):
            if all(self.has_face(m) for m in ksubset_masks(self.ambient, s)):
                d = s - 1
            else:
                break
        return d

    # -- serialization, equality ----------------------------------------------

    def to_json_obj(self):
        if self.is_void:
            return {"state": "void"}
        return {
            "facets": [list(to_tuple(f)) for f in self._facets],
            "ambient": self.ambient,
        }

    @staticmethod
    def from_json_obj(obj) -> SimplicialComplex:
        if obj.get("state") == "void":
            return SimplicialComplex([], ambient=obj.get("ambient", 0))
        return SimplicialComplex(obj["facets"], ambient=obj["ambient"])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self):
        return hash(self._facets)

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex({len(self._facets)} facets, dim {self.dim})"


def from_facets(faces, ambient: int | None = None) -> SimplicialComplex:
    """Primary constructor; see SimplicialComplex.__init__."""
    return SimplicialComplex(faces, ambient=ambient)


def full_simplex(n: int) -> SimplicialComplex:
    """The (n-1)-dimensional simplex on n vertices."""
    if n < 1:
        raise ValueError("full_simplex needs n >= 1")
    return SimplicialComplex([(1 << n) - 1], ambient=n)

"""Reduced simplicial homology over the integers.

Boundary matrices are assembled from the face lists of a complex (including
the empty face, so homology is reduced), and diagonalized by Smith normal
form. Free ranks come from the ranks of consecutive boundary maps; torsion
coefficients are the diagonal entries greater than one.

Everything is exact. The Smith reduction runs on machine int64 via numpy as
long as a conservative growth bound guarantees no overflow; the moment the
bound trips, the matrix is redone from scratch with unbounded Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .bitsets import to_tuple
from .complexes import SimplicialComplex


@dataclass(frozen=True)
class IntMatrix:
    """Sparse exact-integer matrix; entries maps (row, col) -> nonzero int."""

    nrows: int
    ncols: int
    entries: dict

    @staticmethod
    def from_rows(rows) -> IntMatrix:
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = int(v)
        ncols = len(rows[0]) if rows else 0
        return IntMatrix(len(rows), ncols, entries)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def multiply(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        by_row: dict[int, dict[int, int]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, {})[c] = v
        prod: dict[tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, {}).items():
                key = (r, c)
                prod[key] = prod.get(key, 0) + v * w
        prod = {k: v for k, v in prod.items() if v}
        return IntMatrix(self.nrows, other.ncols, prod)

    def is_zero(self) -> bool:
        return not self.entries


# ---------------------------------------------------------------------------
# Smith normal form

_INT64_SAFE = 1 << 61


class _Escalate(Exception):
    pass


def _snf_numpy(nrows, ncols, entries):
    """int64 diagonalization; raises _Escalate if entries might overflow.

    Active region is A[:ar, :ac]; finished pivot rows/columns are swapped out
    to the end instead of deleted.
    """
    A = np.zeros((nrows, ncols), dtype=np.int64)
    for (r, c), v in entries.items():
        if abs(v) >= _INT64_SAFE:
            raise _Escalate
        A[r, c] = v
    diag = []
    ar, ac = nrows, ncols
    while ar and ac:
        act = A[:ar, :ac]
        nz = np.nonzero(act)
        if len(nz[0]) == 0:
            break
        vals = np.abs(act[nz])
        vmin = vals.min()
        # prefer a lowest-fill pivot among the smallest-magnitude entries
        cand = np.flatnonzero(vals == vmin)
        if len(cand) > 1:
            row_nnz = np.count_nonzero(act, axis=1)
            col_nnz = np.count_nonzero(act, axis=0)
            fill = (row_nnz[nz[0][cand]] - 1) * (col_nnz[nz[1][cand]] - 1)
            cand = cand[np.argmin(fill)]
        else:
            cand = cand[0]
        r, c = int(nz[0][cand]), int(nz[1][cand])
        v = int(act[r, c])
        bound = int(vals.max())
        if bound + (bound // abs(v) + 1) * bound >= _INT64_SAFE:
            raise _Escalate
        rows = np.flatnonzero(act[:, c])
        rows = rows[rows != r]
        if len(rows):
            q = act[rows, c] // v
            act[rows, :] -= q[:, None] * act[r, :]
            if np.any(act[rows, c]):
                continue  # remainders became new, smaller candidates
        cols = np.flatnonzero(act[r, :])
        cols = cols[cols != c]
        if len(cols):
            # column c is now zero outside the pivot, so these column
            # operations only change row r
            q = act[r, cols] // v
            act[r, cols] -= q * v
            if np.any(act[r, cols]):
                continue
        diag.append(abs(v))
        ar -= 1
        ac -= 1
        A[[r, ar], :] = A[[ar, r], :]
        A[:, [c, ac]] = A[:, [ac, c]]
    return diag


def _snf_sparse(nrows, ncols, entries):
    """Exact reference reduction on dict-of-dicts rows with Python ints."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set] = {}
    for (r, c), v in entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)

    def row_sub(r2, r1, q):
        row1 = rows[r1]
        row2 = rows.setdefault(r2, {})
        for c, v in row1.items():
            nv = row2.get(c, 0) - q * v
            if nv:
                row2[c] = nv
                cols.setdefault(c, set()).add(r2)
            elif c in row2:
                del row2[c]
                cols[c].discard(r2)
        if not row2:
            del rows[r2]

    diag = []
    while rows:
        best = None
        for r, row in rows.items():
            for c, v in row.items():
                a = abs(v)
                fill = (len(row) - 1) * (len(cols[c]) - 1)
                key = (a, fill, r, c)
                if best is None or key < best[0]:
                    best = (key, r, c, v)
        _, r, c, v = best
        dirty = False
        for r2 in list(cols[c]):
            if r2 == r:
                continue
            q = rows[r2][c] // v
            if q:
                row_sub(r2, r, q)
            if rows.get(r2, {}).get(c):
                dirty = True
        if dirty:
            continue
        row = rows[r]
        for c2 in list(row):
            if c2 == c:
                continue
            # column c holds only the pivot now, so this column operation
            # only touches row r
            q = row[c2] // v
            nv = row[c2] - q * v
            if nv:
                row[c2] = nv
                dirty = True
            else:
                del row[c2]
                cols[c2].discard(r)
        if dirty:
            continue
        diag.append(abs(v))
        del rows[r]
        cols[c].discard(r)
    return diag


def _divisibility_chain(diag):
    """Rearrange a diagonal into the unique d1 | d2 | ... normal form."""
    work = sorted(d for d in diag if d not in (0, 1))
    ones = sum(1 for d in diag if d == 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                if work[j] % work[i]:
                    g = gcd(work[i], work[j])
                    work[i], work[j] = g, work[i] // g * work[j]
                    changed = True
        work.sort()
    return [1] * ones + work


def smith_normal_form(m: IntMatrix) -> tuple[tuple[int, ...], int]:
    """Diagonal of the Smith normal form (padded with zeros to min(rows, cols))
    and the rank."""
    try:
        diag = _snf_numpy(m.nrows, m.ncols, m.entries)
    except _Escalate:
        diag = _snf_sparse(m.nrows, m.ncols, m.entries)
    diag = _divisibility_chain(diag)
    rank = len(diag)
    diag += [0] * (min(m.nrows, m.ncols) - rank)
    return tuple(diag), rank


# ---------------------------------------------------------------------------
# boundary matrices and homology


def boundary_matrices(cx: SimplicialComplex) -> list[IntMatrix]:
    """[∂_0, ..., ∂_dim] with ∂_i: C_i -> C_{i-1}; ∂_0 maps onto the empty
    face, so the homology computed from these is reduced."""
    if cx.is_void:
        raise ValueError("the void complex has no chain complex")
    by_dim = cx.faces_by_dim()
    top = cx.dim
    index = {d: {f: i for i, f in enumerate(by_dim[d])} for d in by_dim}
    mats = []
    for d in range(0, top + 1):
        rows_idx = index.get(d - 1, {})
        entries = {}
        for col, face in enumerate(by_dim.get(d, [])):
            verts = to_tuple(face)
            for j, v in enumerate(verts):
                sub = face & ~(1 << v)
                entries[(rows_idx[sub], col)] = -1 if j % 2 else 1
        mats.append(IntMatrix(len(rows_idx), len(by_dim.get(d, [])), entries))
    return mats


@dataclass(frozen=True)
class HomologyReport:
    """Free rank and torsion coefficients per dimension, -1 through dim."""

    ranks: dict
    torsion: dict

    def betti(self, i: int) -> int:
        return self.ranks.get(i, 0)

    def torsion_at(self, i: int) -> tuple[int, ...]:
        return self.torsion.get(i, ())

    def is_free(self) -> bool:
        return all(not t for t in self.torsion.values())

    def euler(self) -> int:
        return sum(r if i % 2 == 0 else -r for i, r in self.ranks.items())

    def nonzero_dims(self) -> list[int]:
        out = [i for i, r in self.ranks.items() if r]
        out += [i for i, t in self.torsion.items() if t and i not in out]
        return sorted(set(out))

    def free_concentrated(self, dim: int, rank: int) -> bool:
        """True iff homology is torsion-free, rank ``rank`` in ``dim`` and
        zero elsewhere. rank 0 means contractible-like (all zero)."""
        if not self.is_free():
            return False
        for i, r in self.ranks.items():
            expect = rank if i == dim else 0
            if r != expect:
                return False
        return True

    def to_json_obj(self):
        return [
            {"dim": i, "rank": self.ranks[i], "torsion": list(self.torsion.get(i, ()))}
            for i in sorted(self.ranks)
        ]


def reduced_homology(cx: SimplicialComplex) -> HomologyReport:
    if cx.is_void:
        raise ValueError("the void complex has no homology")
    mats = boundary_matrices(cx)
    top = cx.dim
    by_dim = cx.faces_by_dim()
    snfs = [smith_normal_form(m) for m in mats]
    rank = [s[1] for s in snfs]
    ranks = {}
    torsion = {}
    for i in range(-1, top + 1):
        ci = 1 if i == -1 else len(by_dim.get(i, []))
        r_in = rank[i] if 0 <= i < len(mats) else 0
        r_out = rank[i + 1] if 0 <= i + 1 < len(mats) else 0
        ranks[i] = ci - r_in - r_out
        if 0 <= i + 1 < len(mats):
            tors = tuple(d for d in snfs[i + 1][0] if d > 1)
        else:
            tors = ()
        torsion[i] = tors
    return HomologyReport(ranks, torsion)

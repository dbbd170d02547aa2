"""Sparse exact linear algebra and homology of bigraded chain complexes.

All differentials are integer matrices stored sparsely; homology is
computed per (i, j) block via Smith normal form, so free ranks and
torsion invariant factors come out exactly.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Mapping

from .polyalg import LaurentPoly

__all__ = [
    "SparseIntMatrix",
    "smith_normal_form",
    "matrix_rank",
    "GradedComplex",
    "HomologyTable",
    "graded_homology",
    "euler_characteristic",
    "poincare_polynomial",
]


class SparseIntMatrix:
    """Integer matrix with only the nonzero entries stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[tuple[int, int], int] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], int] = {}
        if entries:
            for (r, c), v in entries.items():
                if not 0 <= r < rows or not 0 <= c < cols:
                    raise ValueError(f"index ({r},{c}) out of range for {rows}x{cols}")
                if v:
                    self.entries[(r, c)] = int(v)

    def add_at(self, r: int, c: int, v: int):
        if not 0 <= r < self.rows or not 0 <= c < self.cols:
            raise ValueError(f"index ({r},{c}) out of range")
        cur = self.entries.get((r, c), 0) + v
        if cur:
            self.entries[(r, c)] = cur
        else:
            self.entries.pop((r, c), None)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def by_columns(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            out.setdefault(c, {})[r] = v
        return out

    def compose_is_zero(self, first: "SparseIntMatrix") -> bool:
        """True iff self @ first == 0 (self applied after first)."""
        if first.cols and self.rows and first.rows != self.cols:
            raise ValueError("shape mismatch in composition")
        rows_of_self: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            rows_of_self.setdefault(c, {})[r] = v
        for col_entries in first.by_columns().values():
            acc: dict[int, int] = {}
            for mid, v in col_entries.items():
                for r, w in rows_of_self.get(mid, {}).items():
                    acc[r] = acc.get(r, 0) + v * w
            if any(acc.values()):
                return False
        return True

    def permuted(self, row_perm: list[int], col_perm: list[int]) -> "SparseIntMatrix":
        out = SparseIntMatrix(self.rows, self.cols)
        for (r, c), v in self.entries.items():
            out.entries[(row_perm[r], col_perm[c])] = v
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SparseIntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def _snf_diagonal(m: SparseIntMatrix) -> list[int]:
    """Diagonalize by integer row/column operations; returns the diagonal."""
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    diag: list[int] = []

    def row_op(r2: int, r1: int, q: int):
        # row r2 -= q * row r1
        row1 = rows[r1]
        row2 = rows.setdefault(r2, {})
        for c, v in row1.items():
            nv = row2.get(c, 0) - q * v
            if nv:
                if c not in row2:
                    cols[c].add(r2)
                row2[c] = nv
            else:
                if c in row2:
                    del row2[c]
                    cols[c].discard(r2)
        if not row2:
            rows.pop(r2, None)

    while rows:
        # Markowitz-style pivot choice: scan the shortest rows, prefer
        # low fill then small |entry|.
        min_len = min(len(rw) for rw in rows.values())
        best = None
        scanned = 0
        for r, rw in rows.items():
            if len(rw) != min_len:
                continue
            for c, v in rw.items():
                cost = (min_len - 1) * (len(cols[c]) - 1)
                key = (cost, abs(v) != 1, abs(v))
                if best is None or key < best[0]:
                    best = (key, r, c)
            scanned += 1
            if scanned >= 32 and best is not None:
                break
        _, pr, pc = best

        while True:
            pv = rows[pr][pc]
            if pv < 0:
                for c in list(rows[pr]):
                    rows[pr][c] = -rows[pr][c]
                pv = -pv
            # clear the pivot column
            moved = False
            for r2 in list(cols[pc]):
                if r2 == pr:
                    continue
                v = rows[r2][pc]
                q = v // pv
                if q:
                    row_op(r2, pr, q)
                if pc in rows.get(r2, {}):  # nonzero remainder, smaller than pivot
                    pr = r2
                    moved = True
                    break
            if moved:
                continue
            # column is clear; clear the pivot row via column operations,
            # which now only touch row pr
            prow = rows[pr]
            other = [c for c in prow if c != pc]
            done = True
            for c2 in other:
                v = prow[c2]
                q = v // prow[pc]
                nv = v - q * prow[pc]
                if nv:
                    prow[c2] = nv
                else:
                    del prow[c2]
                    cols[c2].discard(pr)
            leftover = [c for c in prow if c != pc]
            if leftover:
                # some remainder is smaller than the pivot: switch pivot column
                pc = min(leftover, key=lambda c: abs(prow[c]))
                done = False
            if done:
                break

        diag.append(abs(rows[pr][pc]))
        del rows[pr][pc]
        cols[pc].discard(pr)
        if not rows[pr]:
            del rows[pr]
        if not cols[pc]:
            del cols[pc]
    return diag


def smith_normal_form(m: SparseIntMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors (divisibility-chained) and the rank."""
    diag = _snf_diagonal(m)
    # pairwise gcd/lcm passes turn an arbitrary diagonal into the chain
    d = sorted(diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a // g * b
                    changed = True
        d.sort()
    return tuple(d), len(d)


def matrix_rank(m: SparseIntMatrix) -> int:
    return len(_snf_diagonal(m))


@dataclass
class GradedComplex:
    """Bigraded chain complex with degree-preserving differentials.

    ``dims[(i, j)]`` is the rank of the (i, j) chain group and
    ``diff[(i, j)]`` the block mapping it into (i+1, j).  The shift pair
    (s, l) is applied to output indices when homology is computed.
    """

    dims: dict[tuple[int, int], int] = field(default_factory=dict)
    diff: dict[tuple[int, int], SparseIntMatrix] = field(default_factory=dict)
    shift: tuple[int, int] = (0, 0)
    source: str = ""

    def dim(self, i: int, j: int) -> int:
        return self.dims.get((i, j), 0)

    def block(self, i: int, j: int) -> SparseIntMatrix:
        blk = self.diff.get((i, j))
        if blk is None:
            blk = SparseIntMatrix(self.dim(i + 1, j), self.dim(i, j))
        return blk

    def verify_d_squared(self) -> list[tuple[int, int]]:
        bad = []
        for (i, j), first in self.diff.items():
            second = self.diff.get((i + 1, j))
            if second is None or second.is_zero() or first.is_zero():
                continue
            if not second.compose_is_zero(first):
                bad.append((i, j))
        return sorted(bad)

    def total_dim(self) -> int:
        return sum(self.dims.values())


@dataclass
class HomologyTable:
    """Free rank plus torsion invariant factors per bidegree (i, j)."""

    entries: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = field(default_factory=dict)
    shift: tuple[int, int] = (0, 0)
    source: str = ""

    def rank(self, i: int, j: int) -> int:
        return self.entries.get((i, j), (0, ()))[0]

    def torsion(self, i: int, j: int) -> tuple[int, ...]:
        return self.entries.get((i, j), (0, ()))[1]

    def group(self, i: int, j: int) -> tuple[int, tuple[int, ...]]:
        return self.entries.get((i, j), (0, ()))

    def is_empty(self) -> bool:
        return not self.entries

    def bidegrees(self) -> list[tuple[int, int]]:
        return sorted(self.entries)

    def restrict_i(self, lo: int, hi: int) -> "HomologyTable":
        sel = {k: v for k, v in self.entries.items() if lo <= k[0] <= hi}
        return HomologyTable(sel, self.shift, self.source)

    def shifted(self, di: int, dj: int) -> "HomologyTable":
        sel = {(i + di, j + dj): v for (i, j), v in self.entries.items()}
        return HomologyTable(sel, self.shift, self.source)

    def __eq__(self, other) -> bool:
        return isinstance(other, HomologyTable) and self.entries == other.entries

    def to_json(self) -> str:
        rows = [
            {"i": i, "j": j, "rank": r, "torsion": list(t)}
            for (i, j), (r, t) in sorted(self.entries.items())
        ]
        return json.dumps(rows, separators=(",", ":"))

    def to_csv(self) -> str:
        lines = ["i,j,rank,torsion"]
        for (i, j), (r, t) in sorted(self.entries.items()):
            lines.append(f"{i},{j},{r},{';'.join(str(x) for x in t)}")
        return "\n".join(lines) + "\n"

    def pretty(self) -> str:
        if not self.entries:
            return "(empty homology table)\n"
        lines = [f"{'i':>4} {'j':>4}  group"]
        for (i, j), (r, t) in sorted(self.entries.items()):
            parts = []
            if r == 1:
                parts.append("Z")
            elif r > 1:
                parts.append(f"Z^{r}")
            parts.extend(f"Z_{x}" for x in t)
            lines.append(f"{i:>4} {j:>4}  {' + '.join(parts)}")
        return "\n".join(lines) + "\n"


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("LINKHOM_THREADS", "1")))
    except ValueError:
        return 1


def graded_homology(c: GradedComplex, check: bool = True) -> HomologyTable:
    """Homology per (i, j) block: free rank and torsion from Smith forms."""
    if check:
        bad = c.verify_d_squared()
        if bad:
            raise ValueError(f"d^2 != 0 at blocks {bad} of {c.source or 'complex'}")
    keys = sorted(set(c.dims) | set(c.diff))
    snf_cache: dict[tuple[int, int], tuple[tuple[int, ...], int]] = {}

    def snf_at(i: int, j: int) -> tuple[tuple[int, ...], int]:
        key = (i, j)
        if key not in snf_cache:
            blk = c.diff.get(key)
            snf_cache[key] = ((), 0) if blk is None or blk.is_zero() else smith_normal_form(blk)
        return snf_cache[key]

    nthreads = _thread_count()
    if nthreads > 1:
        todo = sorted(set(c.diff))
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            results = list(pool.map(lambda k: (k, smith_normal_form(c.diff[k])), todo))
        snf_cache.update({k: v for k, v in results})

    s, l = c.shift
    entries: dict[tuple[int, int], tuple[int, tuple[int, ...]]] = {}
    for (i, j) in keys:
        dim = c.dim(i, j)
        if dim == 0:
            continue
        _, rank_out = snf_at(i, j)
        factors_in, rank_in = snf_at(i - 1, j)
        free = dim - rank_out - rank_in
        torsion = tuple(f for f in factors_in if f > 1)
        if free < 0:
            raise ArithmeticError(f"negative free rank at ({i},{j})")
        if free or torsion:
            entries[(i + s, j + l)] = (free, torsion)
    return HomologyTable(entries, shift=c.shift, source=c.source)


def euler_characteristic(obj) -> LaurentPoly:
    """Graded Euler characteristic, as a one-variable Laurent polynomial.

    Accepts a GradedComplex (alternating sum of chain ranks) or a
    HomologyTable (alternating sum of free ranks); shifts are applied.
    """
    out: dict[int, int] = {}
    if isinstance(obj, GradedComplex):
        s, l = obj.shift
        for (i, j), dim in obj.dims.items():
            if dim:
                e = j + l
                out[e] = out.get(e, 0) + (dim if (i + s) % 2 == 0 else -dim)
    elif isinstance(obj, HomologyTable):
        for (i, j), (rank, _) in obj.entries.items():
            if rank:
                out[j] = out.get(j, 0) + (rank if i % 2 == 0 else -rank)
    else:
        raise TypeError(f"expected GradedComplex or HomologyTable, got {type(obj)!r}")
    return LaurentPoly.from_terms(("q",), out)


def poincare_polynomial(t: HomologyTable) -> LaurentPoly:
    """Two-variable Poincare polynomial: sum of t^i q^j free ranks."""
    return LaurentPoly.from_terms(
        ("t", "q"), {(i, j): rank for (i, j), (rank, _) in t.entries.items() if rank}
    )

"""Kauffman bracket, Jones polynomial, and integral Khovanov homology.

The cube of resolutions is built per (i, j) block: bases are enumerated
on demand (circles sorted by minimal arc label, tensor labelings in
lexicographic order with 1 < X), and the merge/split differentials are
assembled with the usual alternating signs so every square of the cube
anticommutes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .homcore import (
    GradedComplex,
    HomologyTable,
    SparseIntMatrix,
    graded_homology,
    poincare_polynomial,
)
from .linkdiag import BraidWord, Diagram, braid_closure, resolve_crossing
from .polyalg import LaurentPoly

__all__ = [
    "kauffman_bracket",
    "kauffman_bracket_recursive",
    "jones_unnormalized",
    "jones_normalized",
    "jones_skein_check",
    "build_khovanov_complex",
    "khovanov_homology",
    "unnormalized_homology",
    "WidthReport",
    "width_report",
    "LesReport",
    "les_check",
    "torus_diagram",
    "StabilityReport",
    "stability_check",
    "stable_poincare",
]

Q = ("q",)


class _StateTable:
    """Per-diagram cache of circle data for every total resolution."""

    def __init__(self, d: Diagram):
        self.diagram = d
        self.n = d.n_crossings
        elements = sorted(set(d.arc_labels()) | set(d.loops))
        self.size = len(elements)
        index = {label: k for k, label in enumerate(elements)}
        self.joins0 = []
        self.joins1 = []
        for x in d.crossings:
            (a0, b0), (c0, d0) = x.joins(0)
            (a1, b1), (c1, d1) = x.joins(1)
            self.joins0.append((index[a0], index[b0], index[c0], index[d0]))
            self.joins1.append((index[a1], index[b1], index[c1], index[d1]))
        self._cache: dict[int, tuple[int, tuple[int, ...], tuple[int, ...]]] = {}

    def state(self, mask: int) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        """(circle count, element -> circle index, circle -> min element)."""
        cached = self._cache.get(mask)
        if cached is not None:
            return cached
        parent = list(range(self.size))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for pos in range(self.n):
            j = self.joins1[pos] if (mask >> pos) & 1 else self.joins0[pos]
            for a, b in ((j[0], j[1]), (j[2], j[3])):
                ra, rb = find(a), find(b)
                if ra != rb:
                    if ra > rb:
                        ra, rb = rb, ra
                    parent[rb] = ra
        cidx = [0] * self.size
        mins: list[int] = []
        root_to_circle: dict[int, int] = {}
        for x in range(self.size):
            r = find(x)
            c = root_to_circle.get(r)
            if c is None:
                c = len(mins)
                root_to_circle[r] = c
                mins.append(x)
            cidx[x] = c
        out = (len(mins), tuple(cidx), tuple(mins))
        self._cache[mask] = out
        return out


def kauffman_bracket(d: Diagram) -> LaurentPoly:
    """State sum: sum over resolutions of (-1)^|e| q^|e| (q+q^-1)^c."""
    st = _StateTable(d)
    n = d.n_crossings
    acc: dict[int, int] = {}
    for mask in range(1 << n):
        i = mask.bit_count()
        c = st.state(mask)[0]
        sign = -1 if i & 1 else 1
        for k in range(c + 1):
            e = i + c - 2 * k
            v = acc.get(e, 0) + sign * comb(c, k)
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    return LaurentPoly.from_terms(Q, acc)


def kauffman_bracket_recursive(d: Diagram) -> LaurentPoly:
    """Independent route: <D> = <D_0> - q <D_1>, <U_k> = (q+q^-1)^k."""
    if d.n_crossings == 0:
        return LaurentPoly.from_terms(Q, {1: 1, -1: 1}) ** len(d.loops)
    d0 = resolve_crossing(d, 0, 0)
    d1 = resolve_crossing(d, 0, 1)
    q = LaurentPoly.monomial(Q, 1)
    return kauffman_bracket_recursive(d0) - q * kauffman_bracket_recursive(d1)


def jones_unnormalized(d: Diagram) -> LaurentPoly:
    """(-1)^(n-) q^(n+ - 2n-) <D>."""
    sign = -1 if d.n_minus & 1 else 1
    shift = d.n_plus - 2 * d.n_minus
    return kauffman_bracket(d).shift(shift).scale(sign)


def jones_normalized(d: Diagram) -> LaurentPoly:
    """Unnormalized Jones divided by the unknot value q + q^-1."""
    circle = LaurentPoly.from_terms(Q, {1: 1, -1: 1})
    return jones_unnormalized(d).divide_exact(circle)


def jones_skein_check(l_plus: Diagram, l_minus: Diagram, l_zero: Diagram) -> bool:
    """q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0), exactly."""
    if not (
        l_plus.n_crossings == l_minus.n_crossings == l_zero.n_crossings + 1
        and l_plus.n_plus == l_zero.n_plus + 1
        and l_plus.n_minus == l_zero.n_minus
        and l_minus.n_plus == l_zero.n_plus
        and l_minus.n_minus == l_zero.n_minus + 1
    ):
        raise ValueError("diagrams do not form a skein triple at one crossing")
    jp, jm, j0 = (jones_unnormalized(x) for x in (l_plus, l_minus, l_zero))
    lhs = jp.shift(-2) - jm.shift(2)
    rhs = LaurentPoly.from_terms(Q, {-1: 1, 1: -1}) * j0
    return lhs == rhs


def _columns(n: int) -> list[list[int]]:
    by_pop: list[list[int]] = [[] for _ in range(n + 1)]
    for mask in range(1 << n):
        by_pop[mask.bit_count()].append(mask)
    return by_pop


def build_khovanov_complex(
    d: Diagram,
    jwindow: tuple[int, int] | None = None,
    irange: tuple[int, int] | None = None,
    normalized: bool = False,
) -> GradedComplex:
    """Cube-of-resolutions complex with merge map m and split map Delta.

    ``jwindow`` and ``irange`` are in the complex's own (unnormalized)
    indices; when ``normalized`` the output shift (-n_minus, n_plus - 2
    n_minus) is recorded for homology reporting.
    """
    st = _StateTable(d)
    n = d.n_crossings
    if irange is None:
        col_lo, col_hi = 0, n
    else:
        col_lo, col_hi = max(0, irange[0] - 1), min(n, irange[1] + 1)
    by_pop = _columns(n)

    basis: dict[tuple[int, int], list[tuple[int, int]]] = {}
    pos: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    for i in range(col_lo, col_hi + 1):
        for mask in by_pop[i]:
            count = st.state(mask)[0]
            for lmask in range(1 << count):
                j = i + count - 2 * lmask.bit_count()
                if jwindow is not None and not (jwindow[0] <= j <= jwindow[1]):
                    continue
                key = (i, j)
                lst = basis.setdefault(key, [])
                pos.setdefault(key, {})[(mask, lmask)] = len(lst)
                lst.append((mask, lmask))

    cplx = GradedComplex(source=f"khovanov:{d.provenance}:{n}cr")
    cplx.dims = {k: len(v) for k, v in basis.items()}
    if normalized:
        cplx.shift = (-d.n_minus, d.n_plus - 2 * d.n_minus)

    blocks: dict[tuple[int, int], SparseIntMatrix] = {}

    def block(i: int, j: int) -> SparseIntMatrix:
        key = (i, j)
        blk = blocks.get(key)
        if blk is None:
            blk = SparseIntMatrix(cplx.dims.get((i + 1, j), 0), cplx.dims.get((i, j), 0))
            blocks[key] = blk
        return blk

    for i in range(col_lo, min(col_hi - 1, n - 1) + 1):
        for mask in by_pop[i]:
            count, cidx, mins = st.state(mask)
            for nu in range(n):
                if (mask >> nu) & 1:
                    continue
                tmask = mask | (1 << nu)
                tcount, tcidx, tmins = st.state(tmask)
                sign = -1 if (mask & ((1 << nu) - 1)).bit_count() & 1 else 1
                image = [tcidx[mins[s]] for s in range(count)]
                if tcount == count - 1:
                    seen: dict[int, int] = {}
                    pair = None
                    for s, t in enumerate(image):
                        if t in seen:
                            pair = (seen[t], s)
                            break
                        seen[t] = s
                    s1, s2 = pair
                    tm = image[s1]
                    for lmask in range(1 << count):
                        x1 = (lmask >> (count - 1 - s1)) & 1
                        x2 = (lmask >> (count - 1 - s2)) & 1
                        if x1 and x2:
                            continue  # m(X (x) X) = 0
                        tl = 0
                        for s in range(count):
                            if s == s2:
                                continue
                            bit = x1 | x2 if s == s1 else (lmask >> (count - 1 - s)) & 1
                            if bit:
                                tl |= 1 << (tcount - 1 - image[s])
                        j = i + count - 2 * lmask.bit_count()
                        src_pos = pos.get((i, j), {}).get((mask, lmask))
                        dst_pos = pos.get((i + 1, j), {}).get((tmask, tl))
                        if src_pos is None or dst_pos is None:
                            continue
                        block(i, j).add_at(dst_pos, src_pos, sign)
                else:
                    src_of = [cidx[tmins[t]] for t in range(tcount)]
                    seen2: dict[int, int] = {}
                    tpair = None
                    for t, s in enumerate(src_of):
                        if s in seen2:
                            tpair = (seen2[s], t)
                            break
                        seen2[s] = t
                    t1, t2 = tpair
                    s_star = src_of[t1]
                    for lmask in range(1 << count):
                        x = (lmask >> (count - 1 - s_star)) & 1
                        base = 0
                        for s in range(count):
                            if s == s_star:
                                continue
                            if (lmask >> (count - 1 - s)) & 1:
                                base |= 1 << (tcount - 1 - image[s])
                        terms = [(1, 1)] if x else [(0, 1), (1, 0)]
                        j = i + count - 2 * lmask.bit_count()
                        src_pos = pos.get((i, j), {}).get((mask, lmask))
                        if src_pos is None:
                            continue
                        for xa, xb in terms:
                            tl = base
                            if xa:
                                tl |= 1 << (tcount - 1 - t1)
                            if xb:
                                tl |= 1 << (tcount - 1 - t2)
                            dst_pos = pos.get((i + 1, j), {}).get((tmask, tl))
                            if dst_pos is None:
                                continue
                            block(i, j).add_at(dst_pos, src_pos, sign)

    cplx.diff = {k: b for k, b in blocks.items() if not b.is_zero()}
    cplx._basis = basis  # kept for structural checks
    return cplx


def khovanov_homology(
    d: Diagram,
    jwindow: tuple[int, int] | None = None,
    irange: tuple[int, int] | None = None,
) -> HomologyTable:
    """Normalized integral Khovanov homology, torsion included.

    ``jwindow`` and ``irange`` select normalized bidegrees.
    """
    l_shift = d.n_plus - 2 * d.n_minus
    jw = None if jwindow is None else (jwindow[0] - l_shift, jwindow[1] - l_shift)
    ir = None if irange is None else (irange[0] + d.n_minus, irange[1] + d.n_minus)
    cplx = build_khovanov_complex(d, jwindow=jw, irange=ir, normalized=True)
    table = graded_homology(cplx)
    if irange is not None or jwindow is not None:
        sel = {}
        for (i, j), v in table.entries.items():
            if irange is not None and not (irange[0] <= i <= irange[1]):
                continue
            if jwindow is not None and not (jwindow[0] <= j <= jwindow[1]):
                continue
            sel[(i, j)] = v
        table = HomologyTable(sel, table.shift, table.source)
    return table


def unnormalized_homology(
    d: Diagram,
    irange: tuple[int, int] | None = None,
) -> HomologyTable:
    cplx = build_khovanov_complex(d, irange=irange, normalized=False)
    table = graded_homology(cplx)
    if irange is not None:
        table = table.restrict_i(*irange)
    return table


@dataclass(frozen=True)
class WidthReport:
    diagonals: tuple[int, ...]
    a_min: int
    a_max: int
    width: int
    thin: bool


def width_report(t: HomologyTable) -> WidthReport:
    diags = sorted({j - 2 * i for (i, j), (rank, _) in t.entries.items() if rank > 0})
    if not diags:
        raise ValueError("empty homology table")
    a_min, a_max = diags[0], diags[-1]
    width = (a_max - a_min) // 2 + 1
    return WidthReport(tuple(diags), a_min, a_max, width, thin=(width == 2))


@dataclass
class LesReport:
    bracket_ok: bool
    rank_ok: bool
    cone_ok: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bracket_ok and self.rank_ok and self.cone_ok


def les_check(d: Diagram, crossing: int) -> LesReport:
    """Single-crossing resolution checks: bracket additivity, the rank
    bound from the long exact sequence, and the mapping-cone structure."""
    if not 0 <= crossing < d.n_crossings:
        raise ValueError(f"unknown crossing {crossing}")
    d0 = resolve_crossing(d, crossing, 0)
    d1 = resolve_crossing(d, crossing, 1)
    violations: list[str] = []

    q = LaurentPoly.monomial(Q, 1)
    bracket_ok = kauffman_bracket(d) == kauffman_bracket(d0) - q * kauffman_bracket(d1)
    if not bracket_ok:
        violations.append("bracket additivity failed")

    t = unnormalized_homology(d)
    t0 = unnormalized_homology(d0)
    t1 = unnormalized_homology(d1)
    rank_ok = True
    for (i, j) in t.entries:
        if t.rank(i, j) > t0.rank(i, j) + t1.rank(i - 1, j - 1):
            rank_ok = False
            violations.append(f"rank bound violated at ({i},{j})")

    cone_ok = _cone_structure_ok(d, d0, d1, crossing, violations)
    return LesReport(bracket_ok, rank_ok, cone_ok, violations)


def _cone_structure_ok(d, d0, d1, nu: int, violations: list[str]) -> bool:
    cx = build_khovanov_complex(d)
    c0 = build_khovanov_complex(d0)
    c1 = build_khovanov_complex(d1)
    basis = cx._basis
    basis0 = c0._basis
    basis1 = c1._basis

    def compress(mask: int) -> int:
        low = mask & ((1 << nu) - 1)
        high = mask >> (nu + 1)
        return low | (high << nu)

    def sfix(mask: int) -> int:
        return -1 if (mask >> (nu + 1)).bit_count() & 1 else 1

    pos0 = {key: {bc: k for k, bc in enumerate(lst)} for key, lst in basis0.items()}
    pos1 = {key: {bc: k for k, bc in enumerate(lst)} for key, lst in basis1.items()}

    ok = True
    for (i, j), blk in cx.diff.items():
        rows = basis.get((i + 1, j), [])
        cols = basis.get((i, j), [])
        sub00: dict[tuple[int, int], int] = {}
        sub11: dict[tuple[int, int], int] = {}
        for (r, c), v in blk.entries.items():
            tmask, tl = rows[r]
            smask, sl = cols[c]
            sbit = (smask >> nu) & 1
            tbit = (tmask >> nu) & 1
            if sbit == 0 and tbit == 0:
                rr = pos0[(i + 1, j)][(compress(tmask), tl)]
                cc = pos0[(i, j)][(compress(smask), sl)]
                sub00[(rr, cc)] = v
            elif sbit == 1 and tbit == 1:
                rr = pos1[(i, j - 1)][(compress(tmask), tl)]
                cc = pos1[(i - 1, j - 1)][(compress(smask), sl)]
                sub11[(rr, cc)] = v * sfix(tmask) * sfix(smask)
            elif sbit == 1 and tbit == 0:
                ok = False
                violations.append(f"upward cone entry at ({i},{j})")
        ref0 = c0.diff.get((i, j))
        ref1 = c1.diff.get((i - 1, j - 1))
        if sub00 != (ref0.entries if ref0 else {}):
            ok = False
            violations.append(f"0-face differs from resolved complex at ({i},{j})")
        if sub11 != (ref1.entries if ref1 else {}):
            ok = False
            violations.append(f"1-face differs from shifted complex at ({i},{j})")
    return ok


def torus_diagram(p: int, q: int) -> Diagram:
    """Closure of (sigma_1 ... sigma_(p-1))^q on p strands."""
    if p < 1 or q < 0:
        raise ValueError("torus parameters need p >= 1, q >= 0")
    word = tuple(range(1, p)) * q
    return braid_closure(BraidWord(p, word))


@dataclass
class StabilityReport:
    drop_one_twist: list[tuple[int, int, bool]] = field(default_factory=list)  # (q, i_bound, ok)
    shared_window: list[tuple[int, int, int, bool]] = field(default_factory=list)  # (q1, q2, i_bound, ok)
    strand_reduction: tuple[int, bool] | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            all(x[2] for x in self.drop_one_twist)
            and all(x[3] for x in self.shared_window)
            and (self.strand_reduction is None or self.strand_reduction[1])
        )


def _tables_equal_below(a: HomologyTable, b: HomologyTable, i_bound: int, mismatches, tag: str, dj: int = 0) -> bool:
    """Equality of free rank and torsion for all i < i_bound; b read at j+dj."""
    keys = {k for k in a.entries if k[0] < i_bound}
    keys |= {(i, j - dj) for (i, j) in b.entries if i < i_bound}
    ok = True
    for (i, j) in sorted(keys):
        if a.group(i, j) != b.group(i, j + dj):
            ok = False
            mismatches.append(f"{tag}: ({i},{j}) {a.group(i, j)} != {b.group(i, j + dj)}")
    return ok


def stability_check(p: int, q_range, i_max: int | None = None) -> StabilityReport:
    """Twist-stability of unnormalized torus homology.

    Checks, for consecutive q in ``q_range``, equality of H^(i,j) between
    the q and q-1 twist diagrams for i < p+q-3; the shared stable window
    i < 2p-1 across all listed q; and the strand-reduction identity
    H^(i,j)(D_(p,p)) = H^(i,j+1)(D_(p-1,p)) for i < 2p-3.
    """
    qs = sorted(q_range)
    if p < 2 or not qs or p >= qs[0]:
        raise ValueError("need 2 <= p < min(q_range)")
    report = StabilityReport()
    cache: dict[tuple[int, int], HomologyTable] = {}

    def table(pp: int, qq: int, bound: int) -> HomologyTable:
        key = (pp, qq)
        if key not in cache:
            cache[key] = unnormalized_homology(torus_diagram(pp, qq), irange=(0, bound))
        return cache[key]

    for q in qs:
        bound = p + q - 3
        if i_max is not None:
            bound = min(bound, i_max + 1)
        ta = table(p, q, bound)
        tb = table(p, q - 1, bound)
        ok = _tables_equal_below(ta, tb, bound, report.mismatches, f"(p,q)=({p},{q}) vs ({p},{q-1})")
        report.drop_one_twist.append((q, bound, ok))

    window = 2 * p - 1
    if i_max is not None:
        window = min(window, i_max + 1)
    for q1, q2 in zip(qs, qs[1:]):
        ta = table(p, q1, window)
        tb = table(p, q2, window)
        ok = _tables_equal_below(ta, tb, window, report.mismatches, f"window ({p},{q1}) vs ({p},{q2})")
        report.shared_window.append((q1, q2, window, ok))

    bound = 2 * p - 3
    if i_max is not None:
        bound = min(bound, i_max + 1)
    tp = unnormalized_homology(torus_diagram(p, p), irange=(0, bound))
    tq = unnormalized_homology(torus_diagram(p - 1, p), irange=(0, bound))
    ok = _tables_equal_below(tp, tq, bound, report.mismatches, f"({p},{p}) vs ({p-1},{p}) shifted", dj=1)
    report.strand_reduction = (bound, ok)
    return report


def stable_poincare(m: int, n_values) -> tuple[list[tuple[int, LaurentPoly]], list[tuple[int, int, int, bool]]]:
    """Normalized Poincare polynomials q^(-(m-1)n) P(T_(m,n)) plus the
    stable-agreement report for consecutive n (t-powers below m+n-3)."""
    if m < 2:
        raise ValueError("need m >= 2")
    ns = sorted(n_values)
    polys = []
    for n in ns:
        t = khovanov_homology(torus_diagram(m, n))
        p = poincare_polynomial(t).shift((0, -(m - 1) * n))
        polys.append((n, p))
    agreements = []
    for (n1, p1), (n2, p2) in zip(polys, polys[1:]):
        bound = m + n1 - 3
        ok = _t_coeffs_agree(p1, p2, bound)
        agreements.append((n1, n2, bound, ok))
    return polys, agreements


def _t_coeffs_agree(p1: LaurentPoly, p2: LaurentPoly, bound_exclusive: int) -> bool:
    def slice_poly(p):
        return {k: v for k, v in p.terms.items() if k[0] // 2 < bound_exclusive}

    return slice_poly(p1) == slice_poly(p2)

"""Link presentations: braid words and planar diagram codes.

A crossing is stored in PD slot order (a, b, c, d): slot a is the
incoming under-strand and the slots are listed counterclockwise.  With
that normalization the smoothing rule is uniform for both signs:

    0-smoothing joins a-b and c-d,    1-smoothing joins a-d and b-c.

For a positive braid letter this makes the 0-smoothing the vertical
(identity) smoothing and the 1-smoothing the horizontal plat; for a
negative letter the roles swap.  Crossing-free circles are tracked
separately as loops.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "Crossing",
    "Diagram",
    "ResolutionState",
    "EdgeEvent",
    "parse_braid",
    "braid_closure",
    "parse_pd",
    "resolve_all",
    "edge_event",
    "resolve_crossing",
    "mirror",
    "conjugate",
    "stabilize",
    "diagram_to_json",
    "diagram_from_json",
]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for w in self.letters:
            if w == 0 or abs(w) >= self.strands:
                raise ValueError(f"letter {w} out of range for {self.strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """One-line permutation of strand positions induced by the braid."""
        perm = list(range(1, self.strands + 1))
        for w in self.letters:
            i = abs(w) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def component_count(self) -> int:
        perm = self.permutation()
        seen = [False] * self.strands
        count = 0
        for i in range(self.strands):
            if seen[i]:
                continue
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
        return count

    def is_knot(self) -> bool:
        return self.component_count() == 1

    def text(self) -> str:
        return f"{self.strands}: {' '.join(str(w) for w in self.letters)}".rstrip()


def parse_braid(text: str) -> BraidWord:
    """Parse "<p>: w1 w2 ... wm" into a braid word."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError(f"malformed braid text {text!r}: missing ':'")
    try:
        strands = int(head.strip())
    except ValueError:
        raise ValueError(f"malformed strand count {head.strip()!r}") from None
    letters = []
    for tok in tail.split():
        try:
            letters.append(int(tok))
        except ValueError:
            raise ValueError(f"malformed letter {tok!r}") from None
    return BraidWord(strands, tuple(letters))


def conjugate(b: BraidWord, k: int) -> BraidWord:
    """Prepend k^-1 and append k."""
    if k == 0 or abs(k) >= b.strands:
        raise ValueError(f"conjugating letter {k} out of range")
    return BraidWord(b.strands, (-k,) + b.letters + (k,))


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    """Markov stabilization: one more strand, sigma_p^(+-1) appended."""
    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


@dataclass(frozen=True)
class Crossing:
    sign: int
    arcs: tuple[int, int, int, int]  # PD slots (a, b, c, d)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("crossing sign must be +1 or -1")

    def joins(self, bit: int) -> tuple[tuple[int, int], tuple[int, int]]:
        a, b, c, d = self.arcs
        if bit == 0:
            return (a, b), (c, d)
        return (a, d), (b, c)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    loops: tuple[int, ...] = ()
    provenance: str = "pd-code"

    def __post_init__(self):
        counts: dict[int, int] = {}
        for x in self.crossings:
            for arc in x.arcs:
                counts[arc] = counts.get(arc, 0) + 1
        for arc, n in counts.items():
            if n != 2:
                raise ValueError(f"arc {arc} occupies {n} slots, expected 2")
        for lp in self.loops:
            if lp in counts:
                raise ValueError(f"loop label {lp} collides with an arc label")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_plus(self) -> int:
        return sum(1 for x in self.crossings if x.sign > 0)

    @property
    def n_minus(self) -> int:
        return sum(1 for x in self.crossings if x.sign < 0)

    @property
    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    def arc_labels(self) -> tuple[int, ...]:
        out = set()
        for x in self.crossings:
            out.update(x.arcs)
        return tuple(sorted(out))


def braid_closure(b: BraidWord) -> Diagram:
    """Closure of a braid word; crossings carry the (type, occurrence) order."""
    p = b.strands
    cur = list(range(p))  # arc id currently at each strand position
    next_arc = p
    raw = []  # (type index, occurrence, sign, slots)
    occ: dict[int, int] = {}
    for w in b.letters:
        i = abs(w) - 1
        x, y = cur[i], cur[i + 1]
        u, v = next_arc, next_arc + 1
        next_arc += 2
        if w > 0:
            slots = (y, v, u, x)
        else:
            slots = (x, y, v, u)
        occ[abs(w)] = occ.get(abs(w), 0) + 1
        raw.append((abs(w), occ[abs(w)], 1 if w > 0 else -1, slots))
        cur[i], cur[i + 1] = u, v

    # closure: identify the top arc at each position with the bottom arc
    parent = list(range(next_arc))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(p):
        ra, rb = find(cur[i]), find(i)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    used = set()
    for _, _, _, slots in raw:
        used.update(find(a) for a in slots)
    relabel = {root: idx for idx, root in enumerate(sorted(used))}
    loops = tuple(range(len(used), len(used) + sum(1 for i in range(p) if find(i) not in used and find(i) == i)))

    raw.sort(key=lambda r: (r[0], r[1]))
    crossings = tuple(
        Crossing(sign, tuple(relabel[find(a)] for a in slots)) for _, _, sign, slots in raw
    )
    return Diagram(crossings, loops, provenance="braid-closure")


def parse_pd(text: str) -> Diagram:
    """Parse PD lines "X a b c d"; slot a is the incoming under-strand.

    Orientations are inferred: the under-strand runs a -> c, and each arc
    label must be incoming at one of its two slots and outgoing at the
    other.  Components threaded only through over-slots fall back to the
    consecutive-numbering convention.
    """
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty PD input")
    quads = []
    for ln in lines:
        toks = ln.replace(",", " ").split()
        if toks[0].upper() != "X" or len(toks) != 5:
            raise ValueError(f"malformed PD line {ln!r}")
        quads.append(tuple(int(t) for t in toks[1:]))

    counts: dict[int, int] = {}
    for q in quads:
        for arc in q:
            counts[arc] = counts.get(arc, 0) + 1
    for arc, n in counts.items():
        if n != 2:
            raise ValueError(f"arc {arc} appears {n} times, expected 2")

    # direction[h] for slot handles (crossing index, slot index): +1 out, -1 in
    direction: dict[tuple[int, int], int] = {}
    slots_of_arc: dict[int, list[tuple[int, int]]] = {}
    for ci, q in enumerate(quads):
        for si, arc in enumerate(q):
            slots_of_arc.setdefault(arc, []).append((ci, si))
    for ci, q in enumerate(quads):
        direction[(ci, 0)] = -1  # incoming under
        direction[(ci, 2)] = +1  # outgoing under

    changed = True
    while changed:
        changed = False
        for arc, handles in slots_of_arc.items():
            if len(handles) == 2:
                h1, h2 = handles
                d1, d2 = direction.get(h1), direction.get(h2)
                if d1 is not None and d2 is None:
                    direction[h2] = -d1
                    changed = True
                elif d2 is not None and d1 is None:
                    direction[h1] = -d2
                    changed = True
                elif d1 is not None and d2 is not None and d1 == d2:
                    raise ValueError(f"inconsistent orientation at arc {arc}")
        for ci, q in enumerate(quads):
            db, dd = direction.get((ci, 1)), direction.get((ci, 3))
            if db is not None and dd is None:
                direction[(ci, 3)] = -db
                changed = True
            elif dd is not None and db is None:
                direction[(ci, 1)] = -dd
                changed = True
            elif db is not None and dd is not None and db == dd:
                raise ValueError(f"inconsistent over-strand orientation at crossing {ci}")

    total = 2 * len(quads)
    for ci, q in enumerate(quads):
        if (ci, 1) not in direction:
            # all-over component: orient by consecutive numbering
            b, d = q[1], q[3]
            if (b - d) % total == 1:
                direction[(ci, 1)] = +1
                direction[(ci, 3)] = -1
            elif (d - b) % total == 1:
                direction[(ci, 1)] = -1
                direction[(ci, 3)] = +1
            else:
                raise ValueError(f"cannot infer over-strand orientation at crossing {ci}")

    crossings = []
    for ci, q in enumerate(quads):
        # positive crossing: over-strand enters at slot d and exits at slot b
        sign = 1 if direction[(ci, 3)] == -1 else -1
        crossings.append(Crossing(sign, q))
    return Diagram(tuple(crossings), (), provenance="pd-code")


@dataclass(frozen=True)
class ResolutionState:
    eps: tuple[int, ...]
    circles: tuple[tuple[int, ...], ...]

    @property
    def circle_count(self) -> int:
        return len(self.circles)


class _UF:
    __slots__ = ("parent",)

    def __init__(self, labels: Iterable[int]):
        self.parent = {x: x for x in labels}

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra


def _circles(d: Diagram, eps: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    uf = _UF(d.arc_labels())
    for x, bit in zip(d.crossings, eps):
        for s1, s2 in x.joins(bit):
            uf.union(s1, s2)
    groups: dict[int, list[int]] = {}
    for arc in d.arc_labels():
        groups.setdefault(uf.find(arc), []).append(arc)
    circles = [tuple(sorted(g)) for g in groups.values()]
    circles.extend((lp,) for lp in d.loops)
    circles.sort(key=lambda c: c[0])
    return tuple(circles)


def resolve_all(d: Diagram, eps: Sequence[int]) -> ResolutionState:
    eps = tuple(int(e) for e in eps)
    if len(eps) != d.n_crossings:
        raise ValueError(f"resolution length {len(eps)} != {d.n_crossings} crossings")
    if any(e not in (0, 1) for e in eps):
        raise ValueError("resolution bits must be 0 or 1")
    return ResolutionState(eps, _circles(d, eps))


@dataclass(frozen=True)
class EdgeEvent:
    eps: tuple[int, ...]
    changed: int
    kind: str  # "merge" or "split"
    # circle indices into the source/target ResolutionState circle tuples
    merged: tuple[int, int] | None
    merged_into: int | None
    split: int | None
    split_into: tuple[int, int] | None
    mapping: dict[int, int]  # unchanged source circle index -> target circle index
    sign_exponent: int

    @property
    def sign(self) -> int:
        return -1 if self.sign_exponent % 2 else 1


def edge_event(d: Diagram, eps: Sequence[int], changed: int) -> EdgeEvent:
    eps = tuple(int(e) for e in eps)
    if eps[changed] != 0:
        raise ValueError(f"bit {changed} already resolved to 1")
    src = resolve_all(d, eps)
    tgt_eps = eps[:changed] + (1,) + eps[changed + 1:]
    tgt = resolve_all(d, tgt_eps)

    tgt_index: dict[int, int] = {}
    for idx, circle in enumerate(tgt.circles):
        for arc in circle:
            tgt_index[arc] = idx

    image: list[int] = [tgt_index[c[0]] for c in src.circles]
    mapping = {}
    if tgt.circle_count == src.circle_count - 1:
        kind = "merge"
        seen: dict[int, int] = {}
        pair = None
        for s_idx, t_idx in enumerate(image):
            if t_idx in seen:
                pair = (seen[t_idx], s_idx)
            seen[t_idx] = s_idx
        merged, merged_into = pair, image[pair[0]]
        split = split_into = None
        for s_idx, t_idx in enumerate(image):
            if s_idx not in pair:
                mapping[s_idx] = t_idx
    elif tgt.circle_count == src.circle_count + 1:
        kind = "split"
        src_of: dict[int, int] = {}
        for idx, circle in enumerate(src.circles):
            for arc in circle:
                src_of[arc] = idx
        preimage = [src_of[c[0]] for c in tgt.circles]
        seen2: dict[int, int] = {}
        tpair = None
        for t_idx, s_idx in enumerate(preimage):
            if s_idx in seen2:
                tpair = (seen2[s_idx], t_idx)
            seen2[s_idx] = t_idx
        split, split_into = preimage[tpair[0]], tpair
        merged = merged_into = None
        for s_idx, t_idx in enumerate(image):
            if s_idx != split:
                mapping[s_idx] = t_idx
    else:
        raise AssertionError("adjacent resolutions must differ by one circle")

    return EdgeEvent(
        eps=eps,
        changed=changed,
        kind=kind,
        merged=merged,
        merged_into=merged_into,
        split=split,
        split_into=split_into,
        mapping=mapping,
        sign_exponent=sum(eps[:changed]),
    )


def resolve_crossing(d: Diagram, crossing: int, bit: int) -> Diagram:
    """Replace one crossing by its 0- or 1-smoothing; fresh diagram."""
    if not 0 <= crossing < d.n_crossings:
        raise ValueError(f"unknown crossing {crossing}")
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    target = d.crossings[crossing]
    joins = target.joins(bit)

    members: dict[int, set[int]] = {}
    edge_count: dict[int, int] = {}
    uf = _UF(set(a for pair in joins for a in pair))
    for s1, s2 in joins:
        uf.union(s1, s2)
    for s1, s2 in joins:
        root = uf.find(s1)
        members.setdefault(root, set()).update((s1, s2))
        edge_count[root] = edge_count.get(root, 0) + 1

    relabel: dict[int, int] = {}
    new_loops = list(d.loops)
    remaining_arcs = set()
    for i, x in enumerate(d.crossings):
        if i != crossing:
            remaining_arcs.update(x.arcs)
    for root, mem in members.items():
        canon = min(mem)
        for arc in mem:
            relabel[arc] = canon
        if edge_count[root] == len(mem) and not (mem & remaining_arcs):
            new_loops.append(canon)

    crossings = tuple(
        Crossing(x.sign, tuple(relabel.get(a, a) for a in x.arcs))
        for i, x in enumerate(d.crossings)
        if i != crossing
    )
    return Diagram(crossings, tuple(sorted(new_loops)), provenance=d.provenance)


def mirror(d: Diagram) -> Diagram:
    """Swap over/under at every crossing (flips all signs)."""
    out = []
    for x in d.crossings:
        a, b, c, cd = x.arcs
        if x.sign > 0:
            out.append(Crossing(-1, (cd, a, b, c)))
        else:
            out.append(Crossing(1, (b, c, cd, a)))
    return Diagram(tuple(out), d.loops, provenance=d.provenance)


def diagram_to_json(d: Diagram) -> str:
    return json.dumps(
        {
            "crossings": [{"sign": x.sign, "arcs": list(x.arcs)} for x in d.crossings],
            "loops": list(d.loops),
            "provenance": d.provenance,
        },
        separators=(",", ":"),
        sort_keys=True,
    )


def diagram_from_json(text: str) -> Diagram:
    data = json.loads(text)
    crossings = tuple(Crossing(x["sign"], tuple(x["arcs"])) for x in data["crossings"])
    return Diagram(crossings, tuple(data["loops"]), provenance=data["provenance"])

"""Structural deciders built on straight and round orderings.

The edge method answers yes/no by bipartiteness of the edge-constraint graph.
This module answers the same question by classification: connected straight
graphs decompose at cutvertices into segments whose canonical clique covers
fall into a small set of boundary patterns, each with a closed-form
colouring; round graphs decompose at pseudo-cutvertices into weak blocks
with an alternating composition. The two routes must always agree, and the
code treats any divergence as an internal error rather than an input error.

Conventions: all positions are 0-based indices into an ordering; covers list
cliques as position intervals [s[i], t[i]].
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import (
    Graph,
    TwinReduction,
    complement,
    components,
    cutvertices,
    is_connected,
    twin_reduce,
)
from .orderings import (
    RoundOrdering,
    ScaleError,
    StraightOrdering,
    find_round,
    find_straight,
    straight_from_order,
    verify_round,
    verify_straight,
)
from .patterns import F1, F2, F3, find_induced, find_induced_cycle
from .recognize import (
    Colourable,
    EdgeColouring,
    NotColourable,
    RecognitionResult,
    build_aux,
    recognize,
    switch_colours,
    verify_locally_complete,
)

CLIQUE = "Clique"
NOT_TYPED = "NotTyped"
TYPE_NAMES = ("Type1", "Type2", "Type3", "Type4")

PERFECTION_LIMIT = 30
EXACT_COVER_LIMIT = 40
ROUND_SEARCH_LIMIT = 32


class SelfCheckError(RuntimeError):
    """A structural invariant failed at runtime.

    Raised when the classification machinery contradicts the edge method or
    its own composition rules; always a bug, never a property of the input.
    """


def _is_reduced(g: Graph) -> bool:
    """True when no two vertices share a closed neighbourhood."""
    seen = set()
    for v in range(g.n):
        c = g.adj[v] | {v}
        if c in seen:
            return False
        seen.add(c)
    return True


def _bipartition(g: Graph) -> list[int] | None:
    """BFS 2-colouring of the vertices, or None if an odd cycle exists."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side


def _sub_on(g: Graph, verts) -> tuple[Graph, tuple[int, ...], dict[int, int]]:
    """Induced subgraph touching only the edges at the chosen vertices.

    Same relabelling contract as graphs.induced (sorted order), returned
    with the back map because callers always need it.
    """
    vs = sorted(set(verts))
    back = {v: i for i, v in enumerate(vs)}
    edges = []
    for v in vs:
        bv = back[v]
        for w in g.adj[v]:
            if w > v and w in back:
                edges.append((bv, back[w]))
    return Graph(len(vs), edges), tuple(vs), back


# ---------------------------------------------------------------------------
# Canonical clique covers and their boundary patterns


@dataclass(frozen=True)
class CanonicalCliqueCover:
    """Greedy cover of a connected straight ordering by maximal cliques.

    Clique i occupies positions s[i]..t[i]; the clique count k equals the
    clique cover number of the graph. t[0] is the reach of the first vertex
    and each later clique is the maximal one ending at the reach of the
    first position not yet covered.
    """

    ordering: StraightOrdering
    s: tuple[int, ...]
    t: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.s)


def canonical_cover(g: Graph, o: StraightOrdering) -> CanonicalCliqueCover:
    ok, why = verify_straight(g, o)
    if not ok:
        raise ValueError(f"ordering is not straight: {why}")
    if not is_connected(g):
        raise ValueError("canonical cover needs a connected graph")
    t = [o.gamma[0]]
    while t[-1] < g.n - 1:
        t.append(o.gamma[t[-1] + 1])
    s = [o.ell[p] for p in t]
    cover = CanonicalCliqueCover(o, tuple(s), tuple(t))
    if s[0] != 0 or t[-1] != g.n - 1:
        raise SelfCheckError("cover does not span the ordering")
    for i in range(cover.k):
        if o.gamma[s[i]] != t[i]:
            raise SelfCheckError(f"clique {i} of the cover is not maximal")
    for i in range(1, cover.k):
        if s[i] <= s[i - 1] or t[i] <= t[i - 1]:
            raise SelfCheckError("cover boundaries are not strictly increasing")
        if s[i] > t[i - 1] + 1:
            raise SelfCheckError(f"cover leaves a gap after clique {i - 1}")
    return cover


@dataclass(frozen=True)
class PigClass:
    """Boundary pattern of a cover: Clique, Type1..Type4, or NotTyped."""

    kind: str
    reason: str | None = None


def classify_type(g: Graph, cover: CanonicalCliqueCover) -> PigClass:
    """Sort a cover with at least two cliques into a boundary pattern.

    Consecutive cliques may overlap in one vertex only at the first and
    last boundary; the presence pattern of those two overlaps picks the
    type (both = Type1, first = Type2, last = Type3, neither = Type4).
    Covers with deeper overlaps, inner overlaps, or a clique whose two
    neighbours reach past each other are NotTyped and admit no colouring.
    """
    k = cover.k
    if k < 2:
        raise ValueError("classification needs at least two cliques")
    s, t = cover.s, cover.t
    o = cover.ordering
    overlap = []
    for j in range(k - 1):
        if s[j + 1] == t[j] + 1:
            overlap.append(False)
        elif s[j + 1] == t[j]:
            overlap.append(True)
        else:
            shared = t[j] - s[j + 1] + 1
            return PigClass(NOT_TYPED, f"cliques {j} and {j + 1} share {shared} vertices")
    for j in range(1, k - 2):
        if overlap[j]:
            return PigClass(NOT_TYPED, f"cliques {j} and {j + 1} overlap away from the ends")
    for j in range(1, k - 1):
        a = o.gamma[s[j] - 1]
        b = o.ell[t[j] + 1]
        if a >= b:
            return PigClass(NOT_TYPED, f"neighbourhoods straddle clique {j} from both sides")
    first, last = overlap[0], overlap[-1]
    if first and last:
        return PigClass("Type1")
    if first:
        return PigClass("Type2")
    if last:
        return PigClass("Type3")
    return PigClass("Type4")


# ---------------------------------------------------------------------------
# Closed-form colourings


def _positions(o: StraightOrdering | RoundOrdering, n: int) -> list[int]:
    pos = [0] * n
    for p, v in enumerate(o.order):
        pos[v] = p
    return pos


def _formula_colouring(g: Graph, cover: CanonicalCliqueCover, kind: str) -> EdgeColouring:
    """Colour 1 inside the listed cliques (with outer slack for Types 1-3)."""
    s, t, k = cover.s, cover.t, cover.k
    pos = _positions(cover.ordering, g.n)
    if kind == "Type1":
        lo, hi, rng = t[0], s[k - 1], range(1, k - 1)
    elif kind == "Type2":
        lo, hi, rng = t[0], None, range(1, k)
    elif kind == "Type3":
        lo, hi, rng = None, s[k - 1], range(0, k - 1)
    elif kind == "Type4":
        lo, hi, rng = None, None, range(0, k)
    else:
        raise ValueError(f"no formula for {kind}")
    colour = []
    for u, v in g.edges:
        p, q = sorted((pos[u], pos[v]))
        one = (
            (lo is not None and q < lo)
            or (hi is not None and p > hi)
            or any(s[j] <= p and q <= t[j] for j in rng)
        )
        colour.append(1 if one else 2)
    return EdgeColouring(tuple(colour))


def _aux_component_labels(aux) -> list[int]:
    comp = [-1] * aux.node_count
    label = 0
    for root in range(aux.node_count):
        if comp[root] >= 0:
            continue
        comp[root] = label
        stack = [root]
        while stack:
            e = stack.pop()
            for f in aux.adj[e]:
                if comp[f] < 0:
                    comp[f] = label
                    stack.append(f)
        label += 1
    return comp


def _end_forced_colouring(g: Graph, v: int, wanted: int) -> EdgeColouring | None:
    """Recolour by the edge method so every edge at v takes the wanted colour.

    The edge method pins colours only up to one flip bit per constraint
    component, so forcing succeeds exactly when no component holds two
    edges at v with different colours.
    """
    aux = build_aux(g)
    res = recognize(g, aux)
    if isinstance(res, NotColourable):
        return None
    base = res.colouring.colour
    comp = _aux_component_labels(aux)
    flip: dict[int, bool] = {}
    for w in g.adj[v]:
        e = g.edge_id(v, w)
        need = base[e] != wanted
        prev = flip.get(comp[e])
        if prev is None:
            flip[comp[e]] = need
        elif prev != need:
            return None
    colour = tuple(3 - c if flip.get(comp[e], False) else c for e, c in enumerate(base))
    return EdgeColouring(colour)


def _mono_colour_at(g: Graph, col: EdgeColouring, v: int) -> int | None:
    """The single colour on the edges at v, or None if both appear."""
    seen = {col.colour[g.edge_id(v, w)] for w in g.adj[v]}
    if len(seen) == 1:
        return seen.pop()
    return None


def type_colouring(
    g: Graph, cover: CanonicalCliqueCover, cls: PigClass | None = None
) -> EdgeColouring:
    """Colouring for a clique or typed cover, verified before returning.

    Cliques take colour 1 throughout. The formula handles every type except
    Type1 with two cliques, whose shared vertex would see a single colour
    on a non-complete neighbourhood; that case instead forces the last
    ordered vertex onto colour 1 via the edge method.
    """
    if cls is None:
        cls = PigClass(CLIQUE) if cover.k == 1 else classify_type(g, cover)
    if cls.kind == NOT_TYPED:
        raise ValueError(f"cover is not typed: {cls.reason}")
    if cls.kind == CLIQUE:
        col = EdgeColouring((1,) * g.m)
    elif cls.kind == "Type1" and cover.k == 2:
        forced = _end_forced_colouring(g, cover.ordering.order[-1], 1)
        if forced is None:
            raise SelfCheckError("cannot pin the last vertex of a two-clique overlap to one colour")
        col = forced
    else:
        col = _formula_colouring(g, cover, cls.kind)
    ok, witness = verify_locally_complete(g, col)
    if not ok:
        raise SelfCheckError(f"type colouring is not locally complete at {witness}")
    return col


# ---------------------------------------------------------------------------
# Induced path families pinned to the cover


PATH_LENGTH_PARITY = {
    "Type1": (1, 1, 1, 1, 0, 1, 0),
    "Type2": (1, 0, 0, 1, 0, 1),
    "Type3": (1, 0, 1, 0, 0, 0),
    "Type4": (0, 0, 1, 0),
}


def typed_paths(
    g: Graph, cover: CanonicalCliqueCover, cls: PigClass | None = None
) -> tuple[tuple[int, ...], ...]:
    """Induced paths between cover boundaries, one per catalogue row.

    Rows are given as position sequences walking the clique boundaries;
    repeated positions collapse (a boundary vertex shared by two cliques
    appears once). Each path is checked to be induced with the catalogued
    length parity and returned as a vertex-id tuple.
    """
    if cls is None:
        cls = classify_type(g, cover)
    if cls.kind not in PATH_LENGTH_PARITY:
        raise ValueError(f"no path family for {cls.kind}")
    if cover.k < 3:
        raise ValueError("path families need at least three cliques")
    s, t, k = cover.s, cover.t, cover.k

    def flat(a: int, b: int) -> list[int]:
        # Boundary walk over cliques a..b, 1-based inclusive.
        out: list[int] = []
        for j in range(a - 1, b):
            out.extend((s[j], t[j]))
        return out

    if cls.kind == "Type1":
        core = flat(2, k - 1)
        tail = [t[1]] + flat(3, k - 1) + [s[k - 1], t[k - 1]]
        rows = [
            core,
            tail,
            [s[1] + 1] + core[1:],
            [s[1] - 1, s[1] + 1] + core[1:] + [t[k - 1]],
            [s[0], s[1]] + core[1:],
            [s[0], s[1]] + core[1:] + [t[k - 1]],
            [t[0]] + tail,
        ]
    elif cls.kind == "Type2":
        rows = [
            [t[1]] + flat(3, k - 1) + [s[k - 1]],
            [t[1]] + flat(3, k - 1) + [s[k - 1], t[k - 1]],
            [s[1] + 1, t[1]] + flat(3, k - 1) + [s[k - 1]],
            [s[0]] + flat(2, k - 1) + [s[k - 1]],
            [s[0]] + flat(2, k - 1) + [s[k - 1], t[k - 1]],
            [s[1] + 1, t[1]] + flat(3, k - 1) + [s[k - 1], t[k - 1]],
        ]
    elif cls.kind == "Type3":
        rows = [
            flat(2, k - 1),
            flat(2, k - 1) + [s[k - 1] + 1],
            flat(1, k - 1),
            flat(1, k - 1) + [t[k - 1]],
            flat(1, k - 2) + [s[k - 2]],
            [t[0]] + flat(2, k - 2) + [s[k - 2], s[k - 1] - 1, s[k - 1] + 1, t[k - 1]],
        ]
    else:
        rows = [
            flat(2, k - 1) + [s[k - 1]],
            flat(1, k - 1) + [s[k - 1]],
            flat(1, k),
            [t[0]] + flat(2, k - 1) + [s[k - 1], t[k - 1]],
        ]

    order = cover.ordering.order
    paths = []
    for row, parity in zip(rows, PATH_LENGTH_PARITY[cls.kind]):
        seq = [row[0]]
        for p in row[1:]:
            if p != seq[-1]:
                seq.append(p)
        if len(set(seq)) != len(seq):
            raise SelfCheckError(f"{cls.kind} path row revisits a position: {seq}")
        if (len(seq) - 1) % 2 != parity:
            raise SelfCheckError(f"{cls.kind} path row has the wrong length parity: {seq}")
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                adjacent = g.has_edge(order[seq[i]], order[seq[j]])
                if j == i + 1 and not adjacent:
                    raise SelfCheckError(f"{cls.kind} path row breaks at {seq[i]},{seq[j]}")
                if j > i + 1 and adjacent:
                    raise SelfCheckError(f"{cls.kind} path row has a chord {seq[i]},{seq[j]}")
        paths.append(tuple(order[p] for p in seq))
    return tuple(paths)


# ---------------------------------------------------------------------------
# Straight graphs: segment composition at cutvertices


def pig_decide(g: Graph, o: StraightOrdering) -> RecognitionResult:
    """Decide a connected reduced straight graph by segment classification."""
    return _pig_decide(g, o)[0]


def _segment_records(g: Graph, o: StraightOrdering, bounds: list[int]):
    records = []
    for i in range(len(bounds) - 1):
        a, b = bounds[i], bounds[i + 1]
        verts = [o.order[p] for p in range(a, b + 1)]
        sub, vmap, back = _sub_on(g, verts)
        so = straight_from_order(sub, [back[v] for v in verts])
        if so is None:
            raise SelfCheckError("segment of a straight ordering lost straightness")
        cover = canonical_cover(sub, so)
        cls = PigClass(CLIQUE) if cover.k == 1 else classify_type(sub, cover)
        records.append((a, b, sub, vmap, so, cover, cls))
    return records


def _segment_colouring(sub, so, cover, cls, forced) -> EdgeColouring:
    """Colour one segment so the listed (vertex, colour) ends come out mono."""
    if cls.kind == CLIQUE:
        want = forced[0][1]
        if any(w != want for _, w in forced):
            raise SelfCheckError("clique segment asked for two different colours")
        return EdgeColouring((want,) * sub.m)
    if cls.kind == "Type1":
        v, want = forced[0]
        col = _end_forced_colouring(sub, v, want)
        if col is None:
            raise SelfCheckError("two-clique overlap segment cannot pin its cut end")
        return col
    col = _formula_colouring(sub, cover, cls.kind)
    v, want = forced[0]
    have = _mono_colour_at(sub, col, v)
    if have is None:
        raise SelfCheckError(f"segment end {v} is not monochromatic under the formula")
    if have != want:
        col = switch_colours(col)
    for v2, want2 in forced[1:]:
        if _mono_colour_at(sub, col, v2) != want2:
            raise SelfCheckError(f"segment end {v2} missed its required colour")
    return col


def _pig_decide(g: Graph, o: StraightOrdering) -> tuple[RecognitionResult, dict]:
    ok, why = verify_straight(g, o)
    if not ok:
        raise ValueError(f"ordering is not straight: {why}")
    if not is_connected(g):
        raise ValueError("decider needs a connected graph")
    if not _is_reduced(g):
        raise ValueError("decider needs a reduced graph")
    n = g.n
    pos = _positions(o, n)
    cut_pos = sorted(pos[v] for v in cutvertices(g))
    if cut_pos and not (0 < cut_pos[0] and cut_pos[-1] < n - 1):
        raise SelfCheckError("cutvertex at the boundary of a straight ordering")
    bounds = [0] + cut_pos + [n - 1]
    segments = _segment_records(g, o, bounds)
    c = len(cut_pos)

    whole = canonical_cover(g, o)
    info = {
        "cover": tuple(zip(whole.s, whole.t)),
        "type": segments[0][6].kind if c == 0 else None,
        "cutvertices": tuple(o.order[p] for p in cut_pos),
        "segments": tuple(
            (a, b, cover.k, cls.kind) for a, b, _, _, _, cover, cls in segments
        ),
    }

    problem = None
    for i, (a, b, sub, vmap, so, cover, cls) in enumerate(segments):
        kind = cls.kind
        if kind == NOT_TYPED:
            problem = f"segment at positions {a}..{b} is not typed: {cls.reason}"
            break
        if c == 0:
            continue
        if i == 0:
            allowed = kind in (CLIQUE, "Type2", "Type4") or (kind == "Type1" and cover.k == 2)
        elif i == len(segments) - 1:
            allowed = kind in (CLIQUE, "Type3", "Type4") or (kind == "Type1" and cover.k == 2)
        else:
            allowed = kind in (CLIQUE, "Type4")
        if not allowed:
            place = "first" if i == 0 else ("last" if i == len(segments) - 1 else "middle")
            problem = (
                f"segment at positions {a}..{b} is {kind} with {cover.k} cliques,"
                f" which cannot sit at the {place} of the cutvertex chain"
            )
            break

    if problem is not None:
        check = recognize(g)
        if isinstance(check, Colourable):
            raise SelfCheckError(f"edge method disagrees with rejection: {problem}")
        return NotColourable(check.odd_cycle, problem), info

    colour = [0] * g.m

    def paint(sub: Graph, vmap, col: EdgeColouring) -> None:
        for e, (x, y) in enumerate(sub.edges):
            ge = g.edge_id(vmap[x], vmap[y])
            if colour[ge]:
                raise SelfCheckError("segment composition painted an edge twice")
            colour[ge] = col.colour[e]

    if c == 0:
        a, b, sub, vmap, so, cover, cls = segments[0]
        paint(sub, vmap, type_colouring(sub, cover, cls))
    else:
        for i, (a, b, sub, vmap, so, cover, cls) in enumerate(segments):
            if i == 0:
                forced = [(so.order[-1], 2)]
            elif i == len(segments) - 1:
                forced = [(so.order[0], 1 if c % 2 == 1 else 2)]
            else:
                want = 1 if i % 2 == 1 else 2
                forced = [(so.order[0], want), (so.order[-1], want)]
            paint(sub, vmap, _segment_colouring(sub, so, cover, cls, forced))

    if any(x == 0 for x in colour):
        raise SelfCheckError("segment composition missed an edge")
    col = EdgeColouring(tuple(colour))
    ok, witness = verify_locally_complete(g, col)
    if not ok:
        raise SelfCheckError(f"composed colouring is not locally complete at {witness}")
    return Colourable(col), info


# ---------------------------------------------------------------------------
# Round graphs: weak blocks at pseudo-cutvertices


@dataclass(frozen=True)
class WeakBlock:
    """A circular stretch between consecutive pseudo-cutvertices."""

    start: int
    end: int
    vertices: tuple[int, ...]
    cliques: int
    kind: str


@dataclass(frozen=True)
class WeakBlockDecomposition:
    positions: tuple[int, ...]
    vertices: tuple[int, ...]
    blocks: tuple[WeakBlock, ...]


def _pseudo_cut_positions(g: Graph, o: RoundOrdering) -> list[int]:
    n = g.n
    order = o.order
    for p in range(n):
        if not g.has_edge(order[p], order[(p + 1) % n]):
            raise ValueError("round ordering has non-adjacent consecutive vertices")
    return [
        p for p in range(n) if not g.has_edge(order[(p - 1) % n], order[(p + 1) % n])
    ]


def _weak_block_records(g: Graph, o: RoundOrdering, cuts: list[int]):
    n = g.n
    order = o.order
    records = []
    for i, a in enumerate(cuts):
        b = cuts[(i + 1) % len(cuts)]
        span = (b - a) % n + 1
        positions = [(a + j) % n for j in range(span)]
        verts = [order[p] for p in positions]
        sub, vmap, back = _sub_on(g, verts)
        so = straight_from_order(sub, [back[v] for v in verts])
        if so is None:
            records.append((a, b, verts, sub, vmap, None, None, None))
            continue
        cover = canonical_cover(sub, so)
        cls = PigClass(CLIQUE) if cover.k == 1 else classify_type(sub, cover)
        records.append((a, b, verts, sub, vmap, so, cover, cls))
    return records


def pseudo_cutvertices(g: Graph, o: RoundOrdering) -> WeakBlockDecomposition:
    """Positions whose circular neighbours are non-adjacent, with weak blocks.

    The blocks (present once there are at least two such positions) are the
    circular stretches between consecutive pseudo-cutvertices, classified
    like straight segments. Graphs that admit a straight ordering belong to
    the straight decider and are refused here.
    """
    ok, why = verify_round(g, o)
    if not ok:
        raise ValueError(f"ordering is not round: {why}")
    if not is_connected(g):
        raise ValueError("decomposition needs a connected graph")
    if find_straight(g) is not None:
        raise ValueError("graph has a straight ordering; use the straight decider")
    cuts = _pseudo_cut_positions(g, o)
    blocks = []
    if len(cuts) >= 2:
        for a, b, verts, sub, vmap, so, cover, cls in _weak_block_records(g, o, cuts):
            if cover is None:
                blocks.append(WeakBlock(a, b, tuple(verts), 0, "irregular"))
            else:
                blocks.append(WeakBlock(a, b, tuple(verts), cover.k, cls.kind))
    return WeakBlockDecomposition(
        tuple(cuts), tuple(o.order[p] for p in cuts), tuple(blocks)
    )


def is_perfect(g: Graph) -> bool:
    """No induced odd hole of length five or more in the graph or its complement."""
    if g.n > PERFECTION_LIMIT:
        raise ScaleError(f"perfection test capped at {PERFECTION_LIMIT} vertices, got {g.n}")
    if find_induced_cycle(g, min_len=5, parity=1) is not None:
        return False
    return find_induced_cycle(complement(g), min_len=5, parity=1) is None


def pca_decide(g: Graph, o: RoundOrdering) -> RecognitionResult:
    """Decide a connected reduced round (but not straight) graph."""
    return _pca_decide(g, o)[0]


def _reject(g: Graph, reason: str, info: dict) -> tuple[RecognitionResult, dict]:
    check = recognize(g)
    if isinstance(check, Colourable):
        raise SelfCheckError(f"edge method disagrees with rejection: {reason}")
    return NotColourable(check.odd_cycle, reason), info


def _pca_decide(g: Graph, o: RoundOrdering) -> tuple[RecognitionResult, dict]:
    ok, why = verify_round(g, o)
    if not ok:
        raise ValueError(f"ordering is not round: {why}")
    if not is_connected(g):
        raise ValueError("decider needs a connected graph")
    if not _is_reduced(g):
        raise ValueError("decider needs a reduced graph")
    if find_straight(g) is not None:
        raise ValueError("graph has a straight ordering; use the straight decider")
    if _bipartition(complement(g)) is not None:
        raise ValueError("complement is bipartite; use the two-clique colouring")

    cuts = _pseudo_cut_positions(g, o)
    p = len(cuts)
    info: dict = {
        "cover": None,
        "type": None,
        "pseudo_cutvertices": tuple(o.order[q] for q in cuts),
        "segments": (),
        "route": "weak-blocks" if p else "perfection",
    }

    if p == 0:
        hole = find_induced_cycle(g, min_len=5, parity=1)
        if hole is not None:
            return _reject(g, f"induced odd hole {hole}", info)
        antihole = find_induced_cycle(complement(g), min_len=5, parity=1)
        if antihole is not None:
            return _reject(g, f"induced odd antihole on vertices {antihole}", info)
        for pat in (F1, F2, F3):
            occ = find_induced(g, pat)
            if occ is not None:
                return _reject(g, f"induced {pat.name} on vertices {occ.vertices}", info)
        res = recognize(g)
        if isinstance(res, NotColourable):
            raise SelfCheckError(
                "perfect graph without the three obstructions rejected by the edge method"
            )
        return res, info

    if p % 2 == 1:
        return _reject(g, f"odd number of pseudo-cutvertices ({p})", info)

    if p == 2 and g.has_edge(o.order[cuts[0]], o.order[cuts[1]]):
        # The two weak blocks overlap in this edge, so they cannot be
        # coloured independently: one block is a clique stretch and the
        # other wraps far enough around the circle that it need not be an
        # interval graph at all. No block-by-block rule decides these, so
        # the edge method settles them directly.
        info["route"] = "adjacent-cuts-fallback"
        res = recognize(g)
        if isinstance(res, NotColourable):
            res = NotColourable(
                res.odd_cycle,
                "the two pseudo-cutvertices are adjacent and the edge method"
                " finds an odd constraint cycle",
            )
        return res, info

    records = _weak_block_records(g, o, cuts)
    info["segments"] = tuple(
        (a, b, cover.k if cover else 0, cls.kind if cls else "irregular")
        for a, b, _, _, _, _, cover, cls in records
    )
    for a, b, verts, sub, vmap, so, cover, cls in records:
        if cover is None:
            raise SelfCheckError(f"weak block at positions {a}..{b} is not straight")
        if cls.kind not in (CLIQUE, "Type4"):
            return _reject(
                g,
                f"weak block at positions {a}..{b} is {cls.kind} with {cover.k} cliques",
                info,
            )

    colour = [0] * g.m
    for i, (a, b, verts, sub, vmap, so, cover, cls) in enumerate(records):
        want = 1 if i % 2 == 0 else 2
        if cls.kind == CLIQUE:
            col = EdgeColouring((want,) * sub.m)
        else:
            col = _formula_colouring(sub, cover, "Type4")
            ends = (so.order[0], so.order[-1])
            have = {_mono_colour_at(sub, col, v) for v in ends}
            if have != {1}:
                raise SelfCheckError("block formula left an end bichromatic")
            if want == 2:
                col = switch_colours(col)
        for e, (x, y) in enumerate(sub.edges):
            ge = g.edge_id(vmap[x], vmap[y])
            if colour[ge]:
                raise SelfCheckError("weak blocks share an edge")
            colour[ge] = col.colour[e]
    if any(x == 0 for x in colour):
        raise SelfCheckError("weak block composition missed an edge")
    col = EdgeColouring(tuple(colour))
    ok, witness = verify_locally_complete(g, col)
    if not ok:
        raise SelfCheckError(f"block composition is not locally complete at {witness}")
    return Colourable(col), info


# ---------------------------------------------------------------------------
# Complement-bipartite graphs and cover numbers


def cc2_colouring(g: Graph) -> EdgeColouring:
    """Colouring from a bipartition of the complement.

    The two sides are cliques here, so edges inside a side take colour 1
    and edges across take colour 2; every vertex then sees each colour on
    a clique. Fails with ValueError when the complement has an odd cycle.
    """
    side = _bipartition(complement(g))
    if side is None:
        raise ValueError("complement is not bipartite")
    col = EdgeColouring(tuple(1 if side[u] == side[v] else 2 for u, v in g.edges))
    ok, witness = verify_locally_complete(g, col)
    if not ok:
        raise SelfCheckError(f"two-clique colouring is not locally complete at {witness}")
    return col


def _chromatic_number(h: Graph) -> int:
    """Exact chromatic number by branch and bound; small inputs only."""
    if h.n == 0:
        return 0
    if h.m == 0:
        return 1
    order = sorted(range(h.n), key=lambda v: -len(h.adj[v]))
    assign: dict[int, int] = {}
    for v in order:
        used = {assign[w] for w in h.adj[v] if w in assign}
        c = 1
        while c in used:
            c += 1
        assign[v] = c
    best = max(assign.values())
    colour = [0] * h.n

    def descend(i: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if i == len(order):
            best = used
            return
        v = order[i]
        seen = {colour[w] for w in h.adj[v] if colour[w]}
        for c in range(1, used + 2):
            if c in seen:
                continue
            colour[v] = c
            descend(i + 1, max(used, c))
            colour[v] = 0
            if c > used:
                break

    descend(0, 0)
    return best


def clique_cover_number(g: Graph) -> int:
    """Exact clique cover number, summed over components.

    Straight components use the greedy cover; anything else falls back to
    an exact search on the complement, capped to keep runtimes sane.
    """
    total = 0
    for verts in components(g):
        sub, _, _ = _sub_on(g, verts)
        o = find_straight(sub)
        if o is not None:
            total += canonical_cover(sub, o).k
        else:
            if sub.n > EXACT_COVER_LIMIT:
                raise ScaleError(
                    f"exact cover search capped at {EXACT_COVER_LIMIT} vertices, got {sub.n}"
                )
            total += _chromatic_number(complement(sub))
    return total


# ---------------------------------------------------------------------------
# The full structural recognizer


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    klass: str
    reduced_n: int
    cover: tuple[tuple[int, int], ...] | None
    type_name: str | None
    cutvertices: tuple[int, ...]
    pseudo_cutvertices: tuple[int, ...]
    segments: tuple[tuple[int, int, int, str], ...]
    decision: str
    reason: str | None


@dataclass(frozen=True)
class StructuralReport:
    colourable: bool
    colouring: EdgeColouring | None
    reason: str | None
    odd_cycle: tuple[int, ...] | None
    components: tuple[ComponentReport, ...]
    notes: tuple[str, ...]


def _universal_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if len(g.adj[v]) == g.n - 1)


def _route(rg: Graph) -> tuple[str, RecognitionResult, dict, list[str]]:
    """Decide one reduced connected graph, reporting the route taken."""
    notes: list[str] = []
    empty = {"cover": None, "type": None, "pseudo_cutvertices": (), "segments": ()}
    if rg.n == 1:
        return "PIG", Colourable(EdgeColouring(())), dict(empty), notes
    o = find_straight(rg)
    if o is not None:
        result, info = _pig_decide(rg, o)
        info.setdefault("pseudo_cutvertices", ())
        return "PIG", result, info, notes
    if _bipartition(complement(rg)) is not None:
        if _universal_count(rg) > 1:
            raise SelfCheckError("reduced graph with two universal vertices")
        klass = "other"
        if rg.n <= ROUND_SEARCH_LIMIT:
            try:
                if find_round(rg) is not None:
                    klass = "PCA"
            except ScaleError as exc:
                notes.append(f"round-ordering search abandoned: {exc}")
        return klass, Colourable(cc2_colouring(rg)), dict(empty), notes
    ro = None
    if rg.n <= ROUND_SEARCH_LIMIT:
        try:
            ro = find_round(rg)
        except ScaleError as exc:
            notes.append(f"round-ordering search abandoned: {exc}")
    else:
        notes.append(f"round-ordering search skipped on {rg.n} vertices")
    if ro is not None:
        try:
            result, info = _pca_decide(rg, ro)
            info.setdefault("cutvertices", ())
            if info.get("route") == "adjacent-cuts-fallback":
                notes.append(
                    "two adjacent pseudo-cutvertices; the block decomposition"
                    " does not apply, so the edge method decided this component"
                )
            return "PCA", result, info, notes
        except ScaleError as exc:
            notes.append(f"structural round decision unavailable: {exc}")
            klass = "PCA"
    else:
        klass = "other"
    res = recognize(rg)
    if isinstance(res, NotColourable):
        res = NotColourable(res.odd_cycle, "edge method found an odd constraint cycle")
    return klass, res, dict(empty), notes


def structural_recognize(g: Graph) -> StructuralReport:
    """Decide colourability by classification instead of the edge method.

    Each component is twin-reduced and routed: complement-bipartite graphs
    get the two-clique colouring, straight graphs the cutvertex composition,
    round graphs the weak-block composition, and everything else falls back
    to the edge method. Positive answers are lifted through the twin classes
    (class-mates copy their representative, edges inside a class take
    colour 1) and verified against the input graph. Negative certificates
    are mapped back to edge ids of the input graph.
    """
    colour = [0] * g.m
    reports = []
    notes: list[str] = []
    fail_reason = None
    fail_cycle = None
    for verts in components(g):
        sub, vmap, _ = _sub_on(g, verts)
        if _is_reduced(sub):
            ident = tuple(range(sub.n))
            red = TwinReduction(sub, ident, (), ident)
        else:
            red = twin_reduce(sub)
        rg = red.reduced
        klass, result, info, route_notes = _route(rg)
        notes.extend(route_notes)

        def orig(rv: int) -> int:
            return vmap[red.vmap[rv]]

        if isinstance(result, NotColourable):
            lifted = tuple(
                g.edge_id(orig(rg.edges[e][0]), orig(rg.edges[e][1]))
                for e in result.odd_cycle
            )
            if fail_reason is None:
                fail_reason = result.reason or "component is not colourable"
                fail_cycle = lifted
            decision = "not-colourable"
            reason = result.reason
        else:
            rcol = result.colouring.colour
            for e, (x, y) in enumerate(sub.edges):
                cx, cy = red.class_of[x], red.class_of[y]
                c = 1 if cx == cy else rcol[rg.edge_id(cx, cy)]
                colour[g.edge_id(vmap[x], vmap[y])] = c
            decision = "colourable"
            reason = None
        reports.append(
            ComponentReport(
                vertices=vmap,
                klass=klass,
                reduced_n=rg.n,
                cover=info.get("cover"),
                type_name=info.get("type"),
                cutvertices=tuple(orig(v) for v in info.get("cutvertices", ())),
                pseudo_cutvertices=tuple(orig(v) for v in info.get("pseudo_cutvertices", ())),
                segments=tuple(info.get("segments", ())),
                decision=decision,
                reason=reason,
            )
        )
    if fail_reason is not None:
        return StructuralReport(False, None, fail_reason, fail_cycle, tuple(reports), tuple(notes))
    if any(x == 0 for x in colour):
        raise SelfCheckError("component colourings missed an edge")
    col = EdgeColouring(tuple(colour))
    ok, witness = verify_locally_complete(g, col)
    if not ok:
        raise SelfCheckError(f"lifted colouring is not locally complete at {witness}")
    return StructuralReport(True, col, None, None, tuple(reports), tuple(notes))


def report_to_json(report: StructuralReport) -> dict:
    """Flatten a report into the documented JSON shape.

    Single-component graphs mirror their component's classification at the
    top level; the per-component list is always present.
    """
    comps = []
    for cr in report.components:
        comps.append(
            {
                "vertices": list(cr.vertices),
                "class": cr.klass,
                "reduced_n": cr.reduced_n,
                "cover": [list(pair) for pair in cr.cover] if cr.cover is not None else None,
                "type": cr.type_name,
                "cutvertices": list(cr.cutvertices),
                "pseudo_cutvertices": list(cr.pseudo_cutvertices),
                "segments": [list(seg) for seg in cr.segments],
                "decision": cr.decision,
                "reason": cr.reason,
            }
        )
    out = {
        "decision": "colourable" if report.colourable else "not-colourable",
        "colouring": list(report.colouring.colour) if report.colouring else None,
        "reason": report.reason,
        "odd_cycle": list(report.odd_cycle) if report.odd_cycle else None,
        "components": comps,
        "notes": list(report.notes),
    }
    if len(comps) == 1:
        for key in ("class", "reduced_n", "cover", "type", "pseudo_cutvertices"):
            out[key] = comps[0][key]
    return out

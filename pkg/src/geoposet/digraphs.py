"""Permutation digraphs, exact isomorphism, embeddings, and orientations.

D(pi) is the digraph on vertices 1..n whose arcs are the inversions of pi.
Isomorphism testing goes through an exact canonical key: the key is the
lexicographically least adjacency encoding over vertex orderings compatible
with an iterated degree refinement, so equal keys hold exactly for
isomorphic digraphs.  Interchangeable vertices (transposition automorphisms)
are collapsed during the search, which keeps highly symmetric inputs such as
arcless digraphs cheap.

The module also hosts the brute-force transitive-orientation enumerator and
the construction that reads a permutation off a pair of transitive
orientations of complementary graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graphs import Graph, bits
from .perms import (
    Pair,
    PairSet,
    Permutation,
    inversion_set,
    perm_from_inversion_set,
)

CanonicalKey = bytes


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices 1..n without self-loops."""

    n: int
    arcs: frozenset[Pair]

    def __post_init__(self) -> None:
        arcs = frozenset(tuple(a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.n < 1:
            raise ValueError("n must be positive")
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc {(u, v)} out of range for n={self.n}")

    def sorted_arcs(self) -> list[Pair]:
        return sorted(self.arcs)

    def out_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u - 1] |= 1 << (v - 1)
        return masks

    def in_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v - 1] |= 1 << (u - 1)
        return masks

    def underlying_graph(self) -> Graph:
        return Graph.from_edges(self.n, self.arcs)

    def to_json_obj(self) -> dict:
        return {"n": self.n, "arcs": [[u, v] for u, v in self.sorted_arcs()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Digraph":
        return cls(int(obj["n"]), frozenset((int(u), int(v)) for u, v in obj["arcs"]))


def from_perm(p: Permutation) -> Digraph:
    """The permutation digraph D(p): arcs are exactly the inversions."""
    return Digraph(p.n, inversion_set(p).pairs)


def reverse(d: Digraph) -> Digraph:
    """Flip every arc.  For permutation digraphs -D(p) is isomorphic to
    D(p inverse)."""
    return Digraph(d.n, frozenset((v, u) for u, v in d.arcs))


# ---------------------------------------------------------------------------
# canonical labeling


def _refine_colors(n: int, out: list[int], inn: list[int]) -> list[int]:
    """Iterated color refinement; the returned color ids order the cells
    canonically (they are ranks of label-invariant signatures)."""
    colors = [0] * n
    ncolors = 1
    while True:
        sigs = []
        for v in range(n):
            osig = sorted(colors[w] for w in bits(out[v]))
            isig = sorted(colors[w] for w in bits(inn[v]))
            sigs.append((colors[v], tuple(osig), tuple(isig)))
        ranking = {s: r for r, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def _twin_predecessors(n: int, out: list[int], inn: list[int]) -> list[Optional[int]]:
    """prev[v] = largest u < v whose transposition with v is an automorphism.

    Constraining search orders to place u before v never loses the minimum,
    because applying the automorphism re-sorts twins without changing the
    adjacency encoding.
    """
    prev: list[Optional[int]] = [None] * n
    for v in range(n):
        for u in range(v - 1, -1, -1):
            strip = ~((1 << u) | (1 << v))
            if (
                out[u] & strip == out[v] & strip
                and inn[u] & strip == inn[v] & strip
                and (out[u] >> v) & 1 == (out[v] >> u) & 1
            ):
                prev[v] = u
                break
    return prev


def _min_label_chunks(n: int, out: list[int], inn: list[int]) -> list[int]:
    """Minimal adjacency encoding over admissible vertex orderings.

    Orderings list all vertices of the first refinement cell, then the
    second, and so on.  Placing the vertex at position k determines 2k new
    adjacency bits against the already placed vertices; those bits form
    chunk k, and the search keeps the lexicographically least chunk stream,
    pruning any branch that exceeds the best known prefix.
    """
    colors = _refine_colors(n, out, inn)
    prev_twin = _twin_predecessors(n, out, inn)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_list = [sorted(cells[c]) for c in sorted(cells)]
    cell_at_depth = []
    for idx, cell in enumerate(cell_list):
        cell_at_depth.extend([idx] * len(cell))

    best: list[int] = []
    placed: list[int] = []
    placed_mask = 0

    def extend(depth: int) -> None:
        nonlocal placed_mask
        if depth == n:
            return
        for v in cell_list[cell_at_depth[depth]]:
            if placed_mask >> v & 1:
                continue
            pt = prev_twin[v]
            if pt is not None and not placed_mask >> pt & 1:
                continue
            ov = out[v]
            chunk = 0
            for u in placed:
                chunk = (chunk << 2) | (((out[u] >> v) & 1) << 1) | ((ov >> u) & 1)
            if depth < len(best):
                if chunk > best[depth]:
                    continue
                if chunk < best[depth]:
                    del best[depth:]
                    best.append(chunk)
            else:
                best.append(chunk)
            placed.append(v)
            placed_mask |= 1 << v
            extend(depth + 1)
            placed.pop()
            placed_mask &= ~(1 << v)

    extend(0)
    assert len(best) == n
    return best


def _key_from_masks(n: int, out: list[int], inn: list[int]) -> CanonicalKey:
    chunks = _min_label_chunks(n, out, inn)
    acc = 0
    for k, c in enumerate(chunks):
        acc = (acc << (2 * k)) | c
    nbytes = (n * (n - 1) + 7) // 8
    return bytes([n]) + acc.to_bytes(nbytes, "big")


def canonical_key(d: Digraph) -> CanonicalKey:
    """A byte string equal for two digraphs exactly when they are isomorphic.

    The leading byte is the vertex count, so digraphs of different sizes
    never collide.  Intended for n <= 16.
    """
    if d.n > 16:
        raise ValueError("canonical keys are supported for n <= 16")
    return _key_from_masks(d.n, d.out_masks(), d.in_masks())


def canonical_key_hex(d: Digraph) -> str:
    return canonical_key(d).hex()


def is_isomorphic(d1: Digraph, d2: Digraph) -> bool:
    if d1.n != d2.n or len(d1.arcs) != len(d2.arcs):
        return False
    return canonical_key(d1) == canonical_key(d2)


def related(d1: Digraph, d2: Digraph) -> bool:
    """Isomorphic directly or after reversing all arcs of one of them."""
    return is_isomorphic(d1, d2) or is_isomorphic(d1, reverse(d2))


# ---------------------------------------------------------------------------
# spanning embeddings


def spanning_embeds(dsmall: Digraph, dbig: Digraph) -> Optional[dict[int, int]]:
    """A vertex bijection mapping every arc of dsmall onto an arc of dbig.

    Returns the mapping (1-based) or None.  Backtracking over vertices in
    decreasing degree order; a vertex may only map to one with at least its
    out- and in-degree, and every decision is checked against the arcs
    already pinned down.
    """
    if dsmall.n != dbig.n:
        raise ValueError("spanning embeddings need equal vertex counts")
    if len(dsmall.arcs) > len(dbig.arcs):
        return None
    n = dsmall.n
    s_out, s_in = dsmall.out_masks(), dsmall.in_masks()
    b_out, b_in = dbig.out_masks(), dbig.in_masks()
    s_odeg = [m.bit_count() for m in s_out]
    s_ideg = [m.bit_count() for m in s_in]
    b_odeg = [m.bit_count() for m in b_out]
    b_ideg = [m.bit_count() for m in b_in]

    order = sorted(range(n), key=lambda v: (-(s_odeg[v] + s_ideg[v]), v))
    mapping = [-1] * n
    used = 0

    def place(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used >> w & 1:
                continue
            if b_odeg[w] < s_odeg[v] or b_ideg[w] < s_ideg[v]:
                continue
            ok = True
            for u in order[:idx]:
                mu = mapping[u]
                if s_out[v] >> u & 1 and not b_out[w] >> mu & 1:
                    ok = False
                    break
                if s_in[v] >> u & 1 and not b_in[w] >> mu & 1:
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if place(idx + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    if place(0):
        return {v + 1: mapping[v] + 1 for v in range(n)}
    return None


# ---------------------------------------------------------------------------
# transitive orientations


def is_transitive(d: Digraph) -> bool:
    """(u, v) and (v, w) present forces (u, w) present.

    A two-step walk back to u itself would demand a self-loop, so digraphs
    containing a 2-cycle are never transitive.
    """
    out = d.out_masks()
    for u in range(d.n):
        reach = 0
        for v in bits(out[u]):
            reach |= out[v]
        if reach & ~out[u]:
            return False
    return True


@dataclass(frozen=True)
class Orientation:
    """An arc assignment for the edges of some undirected graph."""

    digraph: Digraph
    transitive: bool

    @classmethod
    def of(cls, d: Digraph) -> "Orientation":
        return cls(d, is_transitive(d))


def enumerate_transitive_orientations(g: Graph) -> list[Orientation]:
    """All transitive orientations of g by direct search over edge
    directions, with early transitivity cuts.

    A brute-force oracle, deliberately independent of the counting formula
    derived from the modular decomposition; bounded to n <= 10.
    """
    if g.n > 10:
        raise ValueError("orientation enumeration is a small-graph oracle (n <= 10)")
    n = g.n
    edges = sorted(g.edges)
    adjacency = g.adjacency_masks()
    out = [0] * n
    inn = [0] * n
    results: list[Orientation] = []

    def consistent(u: int, v: int) -> bool:
        # adding arc u -> v (0-based); every 2-path through the new arc must
        # close with a correctly oriented existing edge
        for x in bits(inn[u]):
            if x == v:
                continue
            if not adjacency[x] >> v & 1:
                return False
            if out[v] >> x & 1:
                return False
        for y in bits(out[v]):
            if y == u:
                continue
            if not adjacency[u] >> y & 1:
                return False
            if out[y] >> u & 1:
                return False
        return True

    def assign(i: int) -> None:
        if i == len(edges):
            arcs = frozenset(
                (u + 1, v + 1) for u in range(n) for v in bits(out[u])
            )
            d = Digraph(n, arcs)
            results.append(Orientation(d, True))
            return
        a, b = edges[i][0] - 1, edges[i][1] - 1
        for u, v in ((a, b), (b, a)):
            if consistent(u, v):
                out[u] |= 1 << v
                inn[v] |= 1 << u
                assign(i + 1)
                out[u] &= ~(1 << v)
                inn[v] &= ~(1 << u)

    assign(0)
    return results


def _as_digraph(f: "Digraph | Orientation") -> Digraph:
    return f.digraph if isinstance(f, Orientation) else f


def induced_permutation(f: "Digraph | Orientation", f1: "Digraph | Orientation") -> Permutation:
    """Read a permutation off transitive orientations of complementary graphs.

    The union of the two orientations must be a transitive tournament; its
    unique rank labeling L (sources first) sends the arcs of ``f`` to the
    inversion set of the returned permutation.
    """
    df, df1 = _as_digraph(f), _as_digraph(f1)
    if df.n != df1.n:
        raise ValueError("orientations live on different vertex counts")
    n = df.n
    if not is_transitive(df) or not is_transitive(df1):
        raise ValueError("both orientations must be transitive")
    union_arcs = df.arcs | df1.arcs
    union = Digraph(n, union_arcs)
    expected = n * (n - 1) // 2
    if len(union_arcs) != expected or any((v, u) in union_arcs for u, v in union_arcs):
        raise ValueError("orientations do not assemble into a tournament")
    if not is_transitive(union):
        raise ValueError("assembled tournament is not transitive")
    out = union.out_masks()
    label = [n - out[v].bit_count() for v in range(n)]  # rank in the tournament
    pairs = frozenset((label[u - 1], label[v - 1]) for u, v in df.arcs)
    return perm_from_inversion_set(PairSet(n, pairs))

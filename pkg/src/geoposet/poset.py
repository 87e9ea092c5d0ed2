"""The order on geo-equivalence classes, Hasse diagrams, and Bruhat covers.

One class strictly precedes another when the crossing pattern of the first
embeds into that of the second: the digraph of any representative must map,
arcs onto arcs, into the digraph of the target representative or of its
inverse.  A proper embedding forces strictly fewer inversions, so classes
with equal counts are never comparable, which is also what makes the
relation antisymmetric.

The weak Bruhat orders (containment of inversion sets, either of the word
or of its inverse) induce a suborder: every Bruhat containment yields
precedence, but not conversely, and ``bruhat_extension_check`` verifies the
containment direction exhaustively for small n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Literal, Optional

from .digraphs import from_perm, spanning_embeds
from .geoequiv import ClassTable, GeoClass, enumerate_classes
from .perms import Permutation, inverse, inversion_set


def precedes(c_sigma: GeoClass, c_pi: GeoClass) -> bool:
    """Non-strict order on classes: equal, or properly embeddable.

    Representatives decide; the outcome is independent of the choice of
    members.  Classes with the same inversion count but different keys are
    incomparable, since a proper sub-digraph has strictly fewer arcs.
    """
    if c_sigma.key == c_pi.key:
        return True
    if c_sigma.inversions >= c_pi.inversions:
        return False
    d_sigma = from_perm(c_sigma.representative)
    if spanning_embeds(d_sigma, from_perm(c_pi.representative)) is not None:
        return True
    return (
        spanning_embeds(d_sigma, from_perm(inverse(c_pi.representative))) is not None
    )


@dataclass(frozen=True)
class Poset:
    """The full order relation over a class table.

    ``leq`` holds one bitmask per class index: bit j of row i says class i
    precedes class j.
    """

    table: ClassTable
    leq: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def size(self) -> int:
        return self.table.count

    def is_leq(self, i: int, j: int) -> bool:
        return bool(self.leq[i] >> j & 1)

    def bounds(self) -> tuple[Optional[GeoClass], Optional[GeoClass]]:
        """The first and last elements, when they exist."""
        size = self.size
        full = (1 << size) - 1
        least = [i for i in range(size) if self.leq[i] == full]
        greatest = [
            j for j in range(size) if all(self.leq[i] >> j & 1 for i in range(size))
        ]
        first = self.table.classes[least[0]] if len(least) == 1 else None
        last = self.table.classes[greatest[0]] if len(greatest) == 1 else None
        return first, last

    def is_bounded(self) -> bool:
        first, last = self.bounds()
        return first is not None and last is not None

    def to_json_obj(self) -> dict:
        size = self.size
        return {
            "schema_version": 1,
            "n": self.n,
            "labels": list(self.table.labels),
            "leq": [
                [1 if self.leq[i] >> j & 1 else 0 for j in range(size)]
                for i in range(size)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def build_poset(source: "int | ClassTable", workers: int = 1) -> Poset:
    """Assemble the order over all classes of S_n.

    Accepts either n or a prebuilt class table.  The pairwise embedding
    phase parallelizes over target classes when ``workers`` > 1; the result
    never depends on the worker count.  Transitivity and antisymmetry of
    the computed relation are verified before returning.
    """
    table = enumerate_classes(source) if isinstance(source, int) else source
    classes = table.classes
    size = len(classes)
    if workers > 1 and size >= 16:
        import multiprocessing as mp

        ctx = mp.get_context("fork")
        with ctx.Pool(workers, initializer=_init_worker, initargs=(table,)) as pool:
            rows = pool.map(_poset_row_global, range(size), chunksize=8)
    else:
        _init_worker(table)
        rows = [_poset_row_global(i) for i in range(size)]
    leq = tuple(rows)

    for i in range(size):
        for j in range(size):
            if leq[i] >> j & 1 and leq[j] >> i & 1 and i != j:
                raise AssertionError("relation is not antisymmetric")
    for i in range(size):
        reach = leq[i]
        combined = reach
        j = reach
        while j:
            low = j & -j
            combined |= leq[low.bit_length() - 1]
            j ^= low
        if combined != reach:
            raise AssertionError("relation is not transitive")
    return Poset(table, leq)


_WORKER_TABLE: Optional[ClassTable] = None


def _init_worker(table: ClassTable) -> None:
    global _WORKER_TABLE
    _WORKER_TABLE = table


def _poset_row_global(i: int) -> int:
    classes = _WORKER_TABLE.classes
    row = 0
    for j, target in enumerate(classes):
        if precedes(classes[i], target):
            row |= 1 << j
    return row


@dataclass(frozen=True)
class HasseDiagram:
    """Cover edges of a poset: the transitive reduction of the strict order."""

    labels: tuple[str, ...]
    representatives: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]  # (lower index, upper index)

    def to_json_obj(self) -> dict:
        return {
            "schema_version": 1,
            "nodes": list(self.labels),
            "edges": [[self.labels[i], self.labels[j]] for i, j in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)

    def to_dot(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
        for k, label in enumerate(self.labels):
            lines.append(f'  "{label}" [label="{label} ({self.representatives[k]})"];')
        for i, j in self.edges:
            lines.append(f'  "{self.labels[i]}" -> "{self.labels[j]}";')
        lines.append("}")
        return "\n".join(lines)


def hasse(poset: Poset) -> HasseDiagram:
    """Transitive reduction with deterministic edge order."""
    size = poset.size
    strict = [poset.leq[i] & ~(1 << i) for i in range(size)]
    pred = [0] * size
    for i in range(size):
        row = strict[i]
        while row:
            low = row & -row
            pred[low.bit_length() - 1] |= 1 << i
            row ^= low
    edges = []
    for i in range(size):
        row = strict[i]
        while row:
            low = row & -row
            j = low.bit_length() - 1
            row ^= low
            if not strict[i] & pred[j]:
                edges.append((i, j))
    edges.sort()
    return HasseDiagram(
        labels=poset.table.labels,
        representatives=tuple(str(c.representative) for c in poset.table.classes),
        edges=tuple(edges),
    )


def is_graded(poset: Poset) -> tuple[bool, tuple[tuple[str, str, int, int], ...]]:
    """Do all cover edges raise the inversion count by exactly one?

    Returns the verdict and the offending covers as
    (lower label, upper label, lower count, upper count).
    """
    witnesses = []
    classes = poset.table.classes
    for i, j in hasse(poset).edges:
        lo, hi = classes[i], classes[j]
        if hi.inversions != lo.inversions + 1:
            witnesses.append((lo.label, hi.label, lo.inversions, hi.inversions))
    return not witnesses, tuple(witnesses)


# ---------------------------------------------------------------------------
# weak Bruhat orders

Side = Literal["left", "right"]


def bruhat_covers(p: Permutation, side: Side) -> tuple[Permutation, ...]:
    """Covers of p in the chosen weak Bruhat order.

    Left covers swap an ascending adjacent pair of positions (one new
    inversion appears in E); right covers swap the values i, i+1 when i
    sits before i+1 (one new inversion appears in E of the inverse).
    """
    n = p.n
    word = p.word
    covers = []
    if side == "left":
        for i in range(n - 1):
            if word[i] < word[i + 1]:
                swapped = list(word)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                covers.append(Permutation(tuple(swapped)))
    elif side == "right":
        pos = p.positions()
        for v in range(1, n):
            if pos[v - 1] < pos[v]:
                swapped = list(word)
                swapped[pos[v - 1] - 1] = v + 1
                swapped[pos[v] - 1] = v
                covers.append(Permutation(tuple(swapped)))
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return tuple(covers)


def bruhat_below(sigma: Permutation, pi: Permutation) -> bool:
    """Containment in either weak order: E(sigma) within E(pi), or the same
    for the inverses."""
    if inversion_set(sigma).pairs <= inversion_set(pi).pairs:
        return True
    return inversion_set(inverse(sigma)).pairs <= inversion_set(inverse(pi)).pairs


def bruhat_extension_check(
    n: int, poset: Optional[Poset] = None
) -> tuple[bool, tuple[tuple[str, str], ...]]:
    """Precedence must extend the order the weak Bruhat containments induce.

    For every ordered pair with E(sigma) properly inside E(pi), or the
    analogous containment of the inverses, the classes must compare.
    Returns the verdict and any counterexample word pairs; exhaustive and
    bounded to n <= 6.
    """
    if n > 6:
        raise ValueError("the exhaustive Bruhat comparison is bounded to n <= 6")
    poset = poset if poset is not None else build_poset(n)
    table = poset.table
    index = {}
    for k, c in enumerate(table.classes):
        for m in c.members:
            index[m.word] = k
    inv_sets = {}
    inv_of = {}
    from .perms import all_permutations

    for p in all_permutations(n):
        inv_sets[p.word] = inversion_set(p).pairs
        inv_of[p.word] = inverse(p).word
    words = list(inv_sets)
    failures = []
    for w_sigma in words:
        for w_pi in words:
            if w_sigma == w_pi:
                continue
            if (
                inv_sets[w_sigma] <= inv_sets[w_pi]
                or inv_sets[inv_of[w_sigma]] <= inv_sets[inv_of[w_pi]]
            ):
                if not poset.is_leq(index[w_sigma], index[w_pi]):
                    failures.append(
                        (
                            str(Permutation(w_sigma)),
                            str(Permutation(w_pi)),
                        )
                    )
    return not failures, tuple(failures)

"""Chord diagrams, their interlacement graphs, and realizability over GF(2).

A chord diagram is a cyclic double-occurrence word: walking around the circle
we read each chord label twice.  Two chords interlace when their endpoints
alternate around the circle.

A diagram is realizable when some diagonal 0/1 matrix ``D`` makes ``M + D``
idempotent, ``M`` being the interlacement matrix.  Expanding ``(M + D)^2`` turns
this into three conditions: every row of ``M`` has even weight, non-adjacent
chords have an even number of common neighbours, and the parities ``X_i + X_j =
<m_i, m_j> + 1`` over the edges are consistent.  :func:`is_realizable` checks the
last one by propagating values along a spanning forest.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Sequence

from . import gf2mat
from .errors import ValidationError
from .gf2mat import Gf2Matrix
from .permcore import Permutation, co_inversion_set


def _rotations(word: tuple) -> list[tuple]:
    return [word[k:] + word[:k] for k in range(len(word))]


def _relabel_by_first_occurrence(word: tuple) -> tuple[int, ...]:
    names: dict = {}
    return tuple(names.setdefault(x, len(names)) for x in word)


@dataclass(frozen=True, eq=False)
class ChordDiagram:
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if len(word) % 2:
            raise ValidationError(f"odd word length {len(word)}: every chord needs two endpoints")
        counts = Counter(word)
        bad = sorted((label, c) for label, c in counts.items() if c != 2)
        if bad:
            label, c = bad[0]
            raise ValidationError(f"label {label!r} occurs {c} time(s); every label must occur exactly twice")

    @property
    def labels(self) -> tuple:
        return tuple(sorted(set(self.word)))

    @property
    def order(self) -> int:
        return len(self.word) // 2

    def endpoints(self) -> dict[Hashable, tuple[int, int]]:
        pos: dict = {}
        for p, label in enumerate(self.word):
            pos.setdefault(label, []).append(p)
        return {label: (a, b) for label, (a, b) in pos.items()}

    def canonical(self, labeled: bool = True) -> tuple:
        """Lexicographically least reading over every rotation and both directions.

        With ``labeled=False`` each reading is first renamed ``0, 1, ...`` by first
        occurrence, so diagrams that differ only by chord names compare equal.
        """
        readings = _rotations(self.word) + _rotations(self.word[::-1])
        if not labeled:
            readings = [_relabel_by_first_occurrence(r) for r in readings]
        return min(readings)

    def equivalent(self, other: ChordDiagram, labeled: bool = True) -> bool:
        return self.canonical(labeled) == other.canonical(labeled)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChordDiagram):
            return NotImplemented
        return self.equivalent(other, labeled=True)

    def __hash__(self) -> int:
        return hash(self.canonical(labeled=True))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.word)) + ")"

    def to_json(self) -> str:
        return json.dumps(list(self.word))

    @classmethod
    def from_json(cls, text: str) -> ChordDiagram:
        return cls(tuple(json.loads(text)))


def make_chord_diagram(word: Sequence) -> ChordDiagram:
    return ChordDiagram(tuple(word))


@dataclass(frozen=True)
class InterlacementGraph:
    vertices: tuple
    adjacency: Gf2Matrix

    def __post_init__(self):
        if len(self.vertices) != self.adjacency.n:
            raise ValidationError("vertex count does not match the adjacency dimension")
        if not self.adjacency.is_symmetric() or not self.adjacency.is_hollow():
            raise ValidationError("adjacency must be symmetric with a zero diagonal")

    def index(self, v) -> int:
        return self.vertices.index(v)

    def adjacent(self, u, v) -> bool:
        return bool(self.adjacency[self.index(u), self.index(v)])

    def neighbors(self, v) -> frozenset:
        row = self.adjacency.rows[self.index(v)]
        return frozenset(u for k, u in enumerate(self.vertices) if row >> k & 1)

    def degree(self, v) -> int:
        return self.adjacency.rows[self.index(v)].bit_count()

    def edges(self) -> list[tuple]:
        out = []
        for i, row in enumerate(self.adjacency.rows):
            for j in range(i + 1, len(self.vertices)):
                if row >> j & 1:
                    out.append((self.vertices[i], self.vertices[j]))
        return out

    def without(self, v) -> InterlacementGraph:
        """The induced subgraph on every vertex except ``v``."""
        k = self.index(v)
        low = (1 << k) - 1
        rows = []
        for i, row in enumerate(self.adjacency.rows):
            if i != k:
                rows.append((row & low) | (row >> (k + 1) << k))
        verts = self.vertices[:k] + self.vertices[k + 1:]
        return InterlacementGraph(verts, Gf2Matrix(len(verts), tuple(rows)))

    @classmethod
    def from_edges(cls, vertices: Sequence, edges) -> InterlacementGraph:
        vertices = tuple(sorted(vertices))
        idx = {v: k for k, v in enumerate(vertices)}
        return cls(vertices, gf2mat.adjacency(len(vertices), ((idx[u], idx[v]) for u, v in edges)))


def interlacement(cd: ChordDiagram) -> InterlacementGraph:
    verts = cd.labels
    idx = {v: k for k, v in enumerate(verts)}
    ends = cd.endpoints()
    # chord b interlaces chord a iff exactly one endpoint of b sits strictly inside a
    rows = [0] * len(verts)
    for a in verts:
        pa, qa = ends[a]
        for b in verts:
            if b == a:
                continue
            pb, qb = ends[b]
            if (pa < pb < qa) != (pa < qb < qa):
                rows[idx[a]] |= 1 << idx[b]
    return InterlacementGraph(verts, Gf2Matrix(len(verts), tuple(rows)))


def diagram_of_permutation(pi: Permutation) -> ChordDiagram:
    """The word ``(0, 1, ..., n, 0, pi(1), ..., pi(n))``; chord 0 crosses every other chord."""
    n = pi.n
    return ChordDiagram((0,) + tuple(range(1, n + 1)) + (0,) + pi.word)


def meandric_graph_of(pi: Permutation) -> InterlacementGraph:
    """Vertex 0 joined to all of ``1..n``, plus the edges ``i < j`` with ``pi(i) < pi(j)``."""
    inner = gf2mat.from_pairset(co_inversion_set(pi))
    return InterlacementGraph(tuple(range(pi.n + 1)), gf2mat.border_with_ones(inner))


@dataclass(frozen=True)
class RealizabilityVerdict:
    realizable: bool
    vertices: tuple
    witness: tuple[int, ...] | None = None
    violation: str | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "realizable": self.realizable,
                "vertices": list(self.vertices),
                "witness": None if self.witness is None else list(self.witness),
                "violation": self.violation,
            }
        )


def realizability_of_matrix(m: Gf2Matrix, vertices: Sequence | None = None) -> RealizabilityVerdict:
    """Decide whether some diagonal ``D`` makes ``m + D`` idempotent, with a witness."""
    vertices = tuple(range(m.n)) if vertices is None else tuple(vertices)
    n = m.n
    rows = m.rows
    for i in range(n):
        if rows[i].bit_count() & 1:
            return RealizabilityVerdict(
                False, vertices, violation=f"chord {vertices[i]!r} crosses an odd number of chords"
            )
    for i in range(n):
        for j in range(i + 1, n):
            if not rows[i] >> j & 1 and m.inner(i, j):
                return RealizabilityVerdict(
                    False,
                    vertices,
                    violation=(
                        f"non-interlaced chords {vertices[i]!r}, {vertices[j]!r} "
                        "share an odd number of crossing chords"
                    ),
                )
    # X_i + X_j = <m_i, m_j> + 1 on every edge; root of each component gets 0
    x: list[int | None] = [None] * n
    for root in range(n):
        if x[root] is not None:
            continue
        x[root] = 0
        stack = [root]
        while stack:
            i = stack.pop()
            row = rows[i]
            j = 0
            while row:
                if row & 1:
                    want = x[i] ^ m.inner(i, j) ^ 1
                    if x[j] is None:
                        x[j] = want
                        stack.append(j)
                    elif x[j] != want:
                        return RealizabilityVerdict(
                            False,
                            vertices,
                            violation=(
                                f"inconsistent parity cycle through edge "
                                f"({vertices[i]!r}, {vertices[j]!r})"
                            ),
                        )
                row >>= 1
                j += 1
    return RealizabilityVerdict(True, vertices, witness=tuple(x))


def is_realizable(cd: ChordDiagram) -> RealizabilityVerdict:
    g = interlacement(cd)
    return realizability_of_matrix(g.adjacency, g.vertices)

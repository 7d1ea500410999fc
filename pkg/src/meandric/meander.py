"""Meandric permutations.

A closed meander of order ``2n`` is a simple closed curve crossing a horizontal
line at the points ``1..2n``.  Walking the curve from point 1, heading downward
first, lists the points as a one-line word ``mu`` with ``mu(1) == 1``.  Between
consecutive crossings the curve traces arcs that alternate below and above the
line; the word is meandric exactly when both arc families are noncrossing.
That test is the geometric oracle here.  Everything else in this module
(the GF(2) matrix criterion, the graph criteria, the parity lemmas) is checked
against it.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from . import gf2mat
from .errors import OrderCapError, ValidationError
from .gaussdiag import InterlacementGraph, meandric_graph_of
from .gf2mat import Gf2Matrix
from .permcore import Permutation

MODES = ("corrected", "strict_paper")
DEFAULT_COMPARE_CAP = 10
DEFAULT_COUNT_CAP = 16
# rough single-process cost of one criterion + oracle evaluation, seconds
_SCAN_COST_PER_PERM = 2.5e-5


def max_order(default: int) -> int:
    raw = os.environ.get("MEANDER_MAX_ORDER")
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValidationError(f"MEANDER_MAX_ORDER={raw!r} is not an integer") from None


def _check_order(order: int):
    if order < 2 or order % 2:
        raise ValidationError(f"order must be a positive even number, got {order}")


@dataclass(frozen=True)
class ArcSystem:
    order: int
    lower: tuple[tuple[int, int], ...]
    upper: tuple[tuple[int, int], ...]

    def lower_noncrossing(self) -> bool:
        return is_noncrossing(self.lower, self.order)

    def upper_noncrossing(self) -> bool:
        return is_noncrossing(self.upper, self.order)


def _arc(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def arc_system_of(mu: Permutation) -> ArcSystem:
    """Lower arcs ``{mu(2k-1), mu(2k)}`` and upper arcs ``{mu(2k), mu(2k+1)}``, cyclically."""
    m = mu.n
    if m % 2:
        raise ValidationError(f"a meander has an even number of crossings, got {m}")
    w = mu.word
    lower = tuple(_arc(w[k], w[k + 1]) for k in range(0, m, 2))
    upper = tuple(_arc(w[k], w[(k + 1) % m]) for k in range(1, m, 2))
    return ArcSystem(m, lower, upper)


def is_noncrossing(arcs, order: int) -> bool:
    """Whether a perfect matching of ``1..order`` has no two arcs ``a < c < b < d``."""
    partner = [0] * (order + 1)
    for a, b in arcs:
        partner[a], partner[b] = b, a
    stack = []
    for p in range(1, order + 1):
        q = partner[p]
        if q > p:
            stack.append(p)
        elif not stack or stack.pop() != q:
            return False
    return not stack


def oracle_is_meandric(mu: Permutation) -> bool:
    if mu.n % 2 or mu.word[0] != 1:
        return False
    arcs = arc_system_of(mu)
    return arcs.lower_noncrossing() and arcs.upper_noncrossing()


def meander_matrix(mu: Permutation) -> Gf2Matrix:
    """``m[i][j] = 1`` iff ``i != j`` and positions ``i, j`` are in increasing order under ``mu``.

    This is the adjacency matrix of ``co_inversion_set(mu)``, built straight from the word.
    """
    w = mu.word
    n = len(w)
    rows = [0] * n
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi < w[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return gf2mat.symmetric_from_rows(n, rows)


def criterion_is_meandric(mu: Permutation, mode: str = "corrected") -> bool:
    """The GF(2) matrix test on ``M = meander_matrix(mu)``.

    ``corrected``: ``M^2 == M + J`` (``J`` all ones).  This is the same as the
    bordered matrix ``meandric_graph_of(mu)`` being idempotent.
    ``strict_paper``: ``M^2 == M + J - I``, ones off the diagonal only.  It cannot
    hold for any meander (their rows have odd weight) and exists to document that.
    """
    if mu.n % 2:
        raise ValidationError(f"the criterion is defined for even sizes, got {mu.n}")
    if mode == "corrected":
        target = "all_ones"
    elif mode == "strict_paper":
        target = "hollow_ones"
    else:
        raise ValidationError(f"unknown mode {mode!r}; expected one of {MODES}")
    m = meander_matrix(mu)
    return gf2mat.mul(m, m) == m + gf2mat.special(m.n, target)


def bordered_matrix(mu: Permutation) -> Gf2Matrix:
    return meandric_graph_of(mu).adjacency


def _check_meandric_vertex_set(g: InterlacementGraph) -> int:
    top = len(g.vertices) - 1
    if top < 2 or top % 2 or g.vertices != tuple(range(top + 1)):
        raise ValidationError(
            f"expected vertices 0..2n for some n > 0, got {g.vertices[:6]}{'...' if top > 5 else ''}"
        )
    return top


def meandric_graph_conditions(g: InterlacementGraph) -> dict[str, bool]:
    """The four graph conditions, each evaluated on its own.

    ``hub``: vertex 0 is adjacent to every other vertex.
    ``betweenness``: for an edge ``(i, j)``, ``i < j``, every ``i < k < j`` is joined
    to ``i`` or to ``j``.
    ``transitivity``: ``(i, j), (j, k)`` edges with ``i < j < k`` force ``(i, k)``.
    ``idempotent``: the adjacency matrix squares to itself over GF(2).
    """
    top = _check_meandric_vertex_set(g)
    rows = g.adjacency.rows
    hub = rows[0] == ((1 << (top + 1)) - 1) ^ 1
    between = True
    trans = True
    for i in range(1, top + 1):
        for j in range(i + 1, top + 1):
            ij = rows[i] >> j & 1
            for k in range(i + 1, j):
                if ij and not (rows[i] >> k & 1 or rows[k] >> j & 1):
                    between = False
            for k in range(j + 1, top + 1):
                if ij and rows[j] >> k & 1 and not rows[i] >> k & 1:
                    trans = False
    return {
        "hub": hub,
        "betweenness": between,
        "transitivity": trans,
        "idempotent": gf2mat.is_idempotent(g.adjacency),
    }


def graph_is_meandric(g: InterlacementGraph) -> bool:
    return all(meandric_graph_conditions(g).values())


def neighbor_parity_ok(g: InterlacementGraph, omit_zero: bool = False) -> bool:
    """Neighbourhood parities of a meandric graph.

    With vertex 0 present every degree is even, non-adjacent pairs share an even
    number of neighbours and adjacent pairs an odd number.  Dropping the universal
    vertex 0 flips all three parities.
    """
    if omit_zero:
        g = g.without(0)
        want_deg, want_apart, want_adj = 1, 1, 0
    else:
        want_deg, want_apart, want_adj = 0, 0, 1
    rows = g.adjacency.rows
    n = len(rows)
    for i in range(n):
        if rows[i].bit_count() & 1 != want_deg:
            return False
        for j in range(i + 1, n):
            common = (rows[i] & rows[j]).bit_count() & 1
            if common != (want_adj if rows[i] >> j & 1 else want_apart):
                return False
    return True


def noncrossing_matchings(order: int) -> Iterator[tuple[int, ...]]:
    """Every noncrossing perfect matching of ``1..order`` as a partner table.

    ``partner[p]`` is the point matched with ``p``; index 0 is unused.
    """
    def build(points: list[int]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first = points[0]
        for k in range(1, len(points), 2):
            for inside in build(points[1:k]):
                for outside in build(points[k + 1:]):
                    yield [(first, points[k])] + inside + outside

    for arcs in build(list(range(1, order + 1))):
        partner = [0] * (order + 1)
        for a, b in arcs:
            partner[a], partner[b] = b, a
        yield tuple(partner)


def _walk(lower: tuple[int, ...], upper: tuple[int, ...], order: int) -> tuple[int, ...] | None:
    word = [1]
    p = 1
    below = True
    while True:
        p = lower[p] if below else upper[p]
        below = not below
        if p == 1:
            return tuple(word) if len(word) == order else None
        word.append(p)


def _enumerate_catalan(order: int) -> list[Permutation]:
    matchings = list(noncrossing_matchings(order))
    found = []
    for lower in matchings:
        for upper in matchings:
            word = _walk(lower, upper, order)
            if word is not None:
                found.append(word)
    found.sort()
    return [Permutation(w) for w in found]


def _enumerate_scan(order: int) -> list[Permutation]:
    found = []
    for rest in itertools.permutations(range(2, order + 1)):
        mu = Permutation((1,) + rest)
        if oracle_is_meandric(mu):
            found.append(mu)
    return found


def enumerate_meanders(order: int, strategy: str = "catalan") -> list[Permutation]:
    """All meandric permutations of the given order, lexicographically sorted.

    ``catalan`` pairs every noncrossing lower matching with every noncrossing
    upper matching and keeps the pairs that close into one cycle.  ``scan`` tests
    each permutation fixing 1 with the oracle; it is only practical for small orders.
    """
    _check_order(order)
    if strategy == "catalan":
        return _enumerate_catalan(order)
    if strategy == "scan":
        return _enumerate_scan(order)
    raise ValidationError(f"unknown strategy {strategy!r}")


def count_meanders(order: int, cap: int | None = None) -> int:
    _check_order(order)
    cap = max_order(DEFAULT_COUNT_CAP) if cap is None else cap
    if order > cap:
        n = order // 2
        cat = math.comb(2 * n, n) // (n + 1)
        raise OrderCapError(
            f"order {order} exceeds the cap {cap}: the Catalan-pair search walks "
            f"{cat * cat:,} matching pairs (raise MEANDER_MAX_ORDER to allow it)"
        )
    return len(_enumerate_catalan(order))


@dataclass(frozen=True)
class DivergenceReport:
    order: int
    oracle_count: int
    criterion_count: int
    missed: tuple[Permutation, ...] = field(default=())
    extra: tuple[Permutation, ...] = field(default=())

    def __post_init__(self):
        if set(self.missed) & set(self.extra):
            raise ValidationError("a permutation cannot be both missed and extra")

    @property
    def diverged(self) -> bool:
        return bool(self.missed or self.extra)

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "oracle_count": self.oracle_count,
            "criterion_count": self.criterion_count,
            "missed": [str(p) for p in self.missed],
            "extra": [str(p) for p in self.extra],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> DivergenceReport:
        data = json.loads(text)
        return cls(
            data["order"],
            data["oracle_count"],
            data["criterion_count"],
            tuple(Permutation.parse(w) for w in data["missed"]),
            tuple(Permutation.parse(w) for w in data["extra"]),
        )


def _scan_first_value(order: int, first: int) -> tuple[int, int, list, list]:
    others = [v for v in range(1, order + 1) if v != first]
    oracle_count = criterion_count = 0
    missed, extra = [], []
    for rest in itertools.permutations(others):
        mu = Permutation((first,) + rest)
        a = oracle_is_meandric(mu)
        b = criterion_is_meandric(mu, "corrected")
        oracle_count += a
        criterion_count += b
        if a and not b:
            missed.append(mu.word)
        elif b and not a:
            extra.append(mu.word)
    return oracle_count, criterion_count, missed, extra


def compare_criterion_oracle(order: int, cap: int | None = None, workers: int = 1) -> DivergenceReport:
    """Run the corrected criterion and the oracle on every permutation of ``1..order``.

    The scan is split by the value of ``mu(1)``; with ``workers > 1`` the parts run
    in separate processes.  The merged lists are sorted, so the report does not
    depend on the worker count.
    """
    _check_order(order)
    cap = max_order(DEFAULT_COMPARE_CAP) if cap is None else cap
    if order > cap:
        total = math.factorial(order)
        est = total * _SCAN_COST_PER_PERM / max(1, workers)
        raise OrderCapError(
            f"order {order} exceeds the cap {cap}: scanning {total:,} permutations "
            f"would take roughly {est:,.0f} s (raise MEANDER_MAX_ORDER to allow it)"
        )
    firsts = range(1, order + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_first_value, [order] * order, firsts))
    else:
        parts = [_scan_first_value(order, f) for f in firsts]
    missed = sorted(w for part in parts for w in part[2])
    extra = sorted(w for part in parts for w in part[3])
    return DivergenceReport(
        order,
        sum(p[0] for p in parts),
        sum(p[1] for p in parts),
        tuple(Permutation(w) for w in missed),
        tuple(Permutation(w) for w in extra),
    )

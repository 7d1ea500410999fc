"""Backtracking construction of meandric permutations from graph parities.

The search builds a sequence ``S = (1, s_2, ..., s_N)`` whose entries alternate
between odd and even values.  Placing ``v`` joins it to every larger value not
placed yet, so in the finished graph ``a < b`` are adjacent iff ``a`` comes
before ``b`` in ``S``.  A vertex's neighbourhood is therefore final the moment
it is placed, and the candidate is kept only if, with the universal vertex 0
left out,

* ``|N(v)|`` is odd,
* ``|N(v) & N(u)|`` is odd for every placed ``u`` not adjacent to ``v``,
* ``|N(v) & N(w)|`` is even for every placed ``w`` adjacent to ``v``.

Every finished sequence is then checked against the geometric oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator

from .errors import ValidationError
from .meander import enumerate_meanders, oracle_is_meandric
from .permcore import Permutation


@dataclass(frozen=True)
class Check:
    other: int
    adjacent: bool
    common: tuple[int, ...]
    ok: bool


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # accept, reject, emit, oracle_reject, backtrack
    prefix: tuple[int, ...]
    candidate: int | None = None
    neighbors: tuple[int, ...] = ()
    checks: tuple[Check, ...] = field(default=())
    emitted: int = 0

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _fmt(seq) -> str:
    return "(" + ",".join(map(str, seq)) + ")"


def format_event(e: TraceEvent) -> str:
    if e.kind in ("emit", "oracle_reject"):
        verdict = "emit" if e.kind == "emit" else "rejected by oracle"
        return f"{_fmt(e.prefix)}: {verdict}"
    if e.kind == "backtrack":
        return f"{_fmt(e.prefix)}: subtree exhausted, {e.emitted} sequence(s) emitted"
    v = e.candidate
    deg = len(e.neighbors)
    parts = [f"|N({v})|={deg} ({'odd' if deg % 2 else 'even, need odd'})"]
    for c in e.checks:
        need = "even" if c.adjacent else "odd"
        rel = "adjacent" if c.adjacent else "non-adjacent"
        mark = "ok" if c.ok else "FAIL"
        parts.append(
            f"N({v})&N({c.other})={{{','.join(map(str, c.common))}}} |{len(c.common)}| {rel}, need {need}: {mark}"
        )
    return f"{_fmt(e.prefix)} + {v}: {e.kind}; " + "; ".join(parts)


def algorithm1_generate(
    N: int, exhaustive: bool = False, trace: list[TraceEvent] | None = None
) -> Iterator[Permutation]:
    """Yield the sequences found by the search, in lexicographic order.

    With ``exhaustive=False`` the generator stops after the first sequence that
    passes the oracle.  If ``trace`` is a list, every decision is appended to it.
    """
    if N < 2 or N % 2:
        raise ValidationError(f"N must be a positive even number, got {N}")
    full = ((1 << (N + 1)) - 1) ^ 1  # bits 1..N
    nbr = [0] * (N + 1)
    seq = [1]
    placed = 1 << 1
    nbr[1] = full ^ (1 << 1)
    record = trace.append if trace is not None else None

    def neighborhood(v: int) -> int:
        below = (1 << v) - 2
        above = full & ~((1 << (v + 1)) - 1)
        return (placed & below) | (above & ~placed)

    def search() -> Iterator[Permutation]:
        nonlocal placed
        if len(seq) == N:
            mu = Permutation(tuple(seq))
            ok = oracle_is_meandric(mu)
            if record:
                record(TraceEvent("emit" if ok else "oracle_reject", tuple(seq)))
            if ok:
                yield mu
            return
        parity = 0 if len(seq) % 2 else 1  # next position's value parity
        for v in range(2 - parity, N + 1, 2):
            if placed >> v & 1:
                continue
            nv = neighborhood(v)
            accepted = nv.bit_count() % 2 == 1
            checks = []
            for u in seq:
                adjacent = u < v
                common = nbr[u] & nv
                ok = (common.bit_count() % 2) == (0 if adjacent else 1)
                accepted = accepted and ok
                if record:
                    checks.append(Check(u, adjacent, _bits(common), ok))
            prefix = tuple(seq)
            if record:
                record(TraceEvent("accept" if accepted else "reject", prefix, v, _bits(nv), tuple(checks)))
            if not accepted:
                continue
            nbr[v] = nv
            seq.append(v)
            placed |= 1 << v
            count = 0
            for mu in search():
                count += 1
                yield mu
            seq.pop()
            placed &= ~(1 << v)
            if record:
                record(TraceEvent("backtrack", prefix + (v,), v, emitted=count))

    if exhaustive:
        yield from search()
    else:
        for mu in search():
            yield mu
            return


def compare_with_enumeration(N: int) -> dict:
    """Containment of the searched set and the enumerated meanders, both directions."""
    trace: list[TraceEvent] = []
    emitted = list(algorithm1_generate(N, exhaustive=True, trace=trace))
    meanders = enumerate_meanders(N)
    got = {p.word for p in emitted}
    want = {p.word for p in meanders}
    return {
        "N": N,
        "emitted_count": len(emitted),
        "meander_count": len(meanders),
        "oracle_rejections": sum(e.kind == "oracle_reject" for e in trace),
        "emitted_not_meander": [_fmt(w)[1:-1] for w in sorted(got - want)],
        "meander_not_emitted": [_fmt(w)[1:-1] for w in sorted(want - got)],
        "complete": want <= got,
        "sound": got <= want,
    }


def comparison_json(N: int) -> str:
    return json.dumps(compare_with_enumeration(N), indent=2)

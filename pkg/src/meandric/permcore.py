"""Permutations in one-line notation and their inversion-set algebra.

Permutations are 1-indexed one-line words: ``Permutation((1, 4, 3, 2, 5, 6))``
sends 2 to 4.  Composition is right-to-left, ``compose(s, t)(i) == s(t(i))``.

A :class:`PairSet` is a set of pairs ``(i, j)`` with ``1 <= i < j <= n``.  It is
stored as a packed upper-triangular table: ``rows[i - 1]`` has bit ``j - 1`` set
iff ``(i, j)`` is a member, so symmetric difference is a row-wise XOR.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ValidationError


@dataclass(frozen=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word:
            raise ValidationError("empty word: a permutation needs at least one value")
        n = len(word)
        seen: dict[int, int] = {}
        for pos, value in enumerate(word, start=1):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ValidationError(f"position {pos}: {value!r} is not an integer")
            if not 1 <= value <= n:
                raise ValidationError(f"position {pos}: value {value} is outside 1..{n}")
            if value in seen:
                raise ValidationError(
                    f"position {pos}: duplicate value {value} (already at position {seen[value]})"
                )
            seen[value] = pos

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __lt__(self, other: Permutation) -> bool:
        return self.word < other.word

    def __str__(self) -> str:
        return ",".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation(({str(self)}))"

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, start=1))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"1,4,3,2,5,6"``; whitespace and surrounding parentheses are ignored."""
        body = text.strip().strip("()[]")
        try:
            values = [int(tok) for tok in body.replace(" ", "").split(",") if tok]
        except ValueError as exc:
            raise ValidationError(f"cannot parse permutation {text!r}: {exc}") from None
        return cls(tuple(values))

    @classmethod
    def from_cycle(cls, cycle: Sequence[int]) -> Permutation:
        """One-line word of a cyclic visiting order, rotated so the walk starts at 1.

        ``(3, 2, 5, 6, 1, 4)`` and ``(1, 4, 3, 2, 5, 6)`` describe the same cyclic
        order and both give ``Permutation((1, 4, 3, 2, 5, 6))``.
        """
        cycle = tuple(cycle)
        if 1 not in cycle:
            raise ValidationError("cyclic word does not contain the label 1")
        k = cycle.index(1)
        return cls(cycle[k:] + cycle[:k])


def make_permutation(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(word))


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValidationError(f"size must be at least 1, got {n}")
    return Permutation(tuple(range(1, n + 1)))


def omega(n: int) -> Permutation:
    """The order-reversing permutation ``i -> n + 1 - i``."""
    if n < 1:
        raise ValidationError(f"size must be at least 1, got {n}")
    return Permutation(tuple(range(n, 0, -1)))


def _check_sizes(a: int, b: int):
    if a != b:
        raise ValidationError(f"size mismatch: {a} != {b}")


def compose(sigma: Permutation, tau: Permutation) -> Permutation:
    _check_sizes(sigma.n, tau.n)
    s = sigma.word
    return Permutation(tuple(s[t - 1] for t in tau.word))


def inverse(pi: Permutation) -> Permutation:
    inv = [0] * pi.n
    for i, v in enumerate(pi.word, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


@dataclass(frozen=True)
class PairSet:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise ValidationError(f"ground-set size must be at least 1, got {self.n}")
        if len(rows) != self.n:
            raise ValidationError(f"expected {self.n} rows, got {len(rows)}")
        for i, row in enumerate(rows):
            # only bits strictly above the diagonal and inside 0..n-1
            if row & ~(((1 << self.n) - 1) ^ ((1 << (i + 1)) - 1)):
                raise ValidationError(f"row {i + 1} holds bits outside the strict upper triangle")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> PairSet:
        rows = [0] * n
        for pair in pairs:
            i, j = pair
            if not (1 <= i < j <= n):
                raise ValidationError(f"pair {tuple(pair)} is not of the form 1 <= i < j <= {n}")
            rows[i - 1] |= 1 << (j - 1)
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> PairSet:
        return cls(n, (0,) * n)

    def __contains__(self, pair) -> bool:
        i, j = pair
        if not (1 <= i < j <= self.n):
            return False
        return bool(self.rows[i - 1] >> (j - 1) & 1)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows, start=1):
            j = 1
            while row:
                if row & 1:
                    yield (i, j)
                row >>= 1
                j += 1

    def __len__(self) -> int:
        return sum(row.bit_count() for row in self.rows)

    def __bool__(self) -> bool:
        return any(self.rows)

    def _combine(self, other: PairSet, op) -> PairSet:
        _check_sizes(self.n, other.n)
        return PairSet(self.n, tuple(op(a, b) for a, b in zip(self.rows, other.rows)))

    def __xor__(self, other: PairSet) -> PairSet:
        return self._combine(other, lambda a, b: a ^ b)

    def __or__(self, other: PairSet) -> PairSet:
        return self._combine(other, lambda a, b: a | b)

    def __and__(self, other: PairSet) -> PairSet:
        return self._combine(other, lambda a, b: a & b)

    def __sub__(self, other: PairSet) -> PairSet:
        return self._combine(other, lambda a, b: a & ~b)

    def issubset(self, other: PairSet) -> bool:
        return not (self - other)

    def pairs(self) -> list[tuple[int, int]]:
        return list(self)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "pairs": [list(p) for p in self]}, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> PairSet:
        data = json.loads(text)
        return cls.from_pairs(data["n"], (tuple(p) for p in data["pairs"]))

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for i, j in self) + "}"


def delta(n: int) -> PairSet:
    """All pairs ``i < j`` of ``1..n``; the inversion set of :func:`omega`."""
    full = (1 << n) - 1
    return PairSet(n, tuple(full ^ ((1 << (i + 1)) - 1) for i in range(n)))


def inversion_set(pi: Permutation) -> PairSet:
    w = pi.word
    n = pi.n
    rows = []
    for i in range(n):
        row = 0
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                row |= 1 << j
        rows.append(row)
    return PairSet(n, tuple(rows))


def co_inversion_set(pi: Permutation) -> PairSet:
    """Pairs ``i < j`` with ``pi(i) < pi(j)``, i.e. ``delta(n) - inversion_set(pi)``."""
    return delta(pi.n) - inversion_set(pi)


def pairset_image(tau: Permutation, s: PairSet) -> PairSet:
    """Apply ``tau`` to both components of every pair and re-sort each pair."""
    _check_sizes(tau.n, s.n)
    rows = [0] * s.n
    for i, j in s:
        a, b = tau(i), tau(j)
        if a > b:
            a, b = b, a
        rows[a - 1] |= 1 << (b - 1)
    return PairSet(s.n, tuple(rows))


def thurston_compose(sigma: Permutation, tau: Permutation) -> PairSet:
    """Inversion set of ``compose(sigma, tau)`` computed from the factors' inversion sets.

    Uses ``R(sigma tau) = tau^-1 R(sigma)  xor  R(tau)``.
    """
    _check_sizes(sigma.n, tau.n)
    return pairset_image(inverse(tau), inversion_set(sigma)) ^ inversion_set(tau)


def inversion_set_violation(s: PairSet) -> str | None:
    """Describe the first violated closure condition, or return ``None``.

    The two conditions are transitivity, ``(i,j),(j,k) in s => (i,k) in s``, and
    co-transitivity, ``(i,k) in s => (i,j) in s or (j,k) in s`` for ``i < j < k``.
    """
    n = s.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                ij, jk, ik = (i, j) in s, (j, k) in s, (i, k) in s
                if ij and jk and not ik:
                    return (
                        f"transitivity fails at triple ({i},{j},{k}): "
                        f"({i},{j}) and ({j},{k}) present but ({i},{k}) missing"
                    )
                if ik and not ij and not jk:
                    return (
                        f"co-transitivity fails at triple ({i},{j},{k}): "
                        f"({i},{k}) present but neither ({i},{j}) nor ({j},{k})"
                    )
    return None


def is_valid_inversion_set(s: PairSet) -> bool:
    return inversion_set_violation(s) is None


def permutation_from_inversion_set(s: PairSet) -> Permutation:
    """The unique permutation whose inversion set is ``s``.

    Position ``i`` has ``c_i = #{j > i : (i, j) in s}`` smaller values to its right
    (its Lehmer code), so its value is the ``c_i``-th smallest unused value, 0-based.
    """
    reason = inversion_set_violation(s)
    if reason is not None:
        raise ValidationError(f"not an inversion set: {reason}")
    remaining = list(range(1, s.n + 1))
    word = []
    for row in s.rows:
        word.append(remaining.pop(row.bit_count()))
    return Permutation(tuple(word))

"""Square matrices over GF(2) with bit-packed rows.

Row ``i`` is a Python int whose bit ``j`` is the entry ``(i, j)``.  Products use
``popcount(row & col) & 1`` for each entry, so the inner product of two rows of a
symmetric matrix is a single AND plus a popcount.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ValidationError
from .permcore import PairSet

KINDS = ("identity", "hollow_ones", "all_ones", "zero")


@dataclass(frozen=True, eq=False)
class Gf2Matrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ValidationError(f"expected {self.n} rows, got {len(rows)}")
        limit = 1 << self.n
        for i, row in enumerate(rows):
            if row < 0 or row >= limit:
                raise ValidationError(f"row {i} has bits outside columns 0..{self.n - 1}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]]) -> Gf2Matrix:
        n = len(data)
        rows = []
        for i, line in enumerate(data):
            if len(line) != n:
                raise ValidationError(f"row {i} has length {len(line)}, expected {n}")
            row = 0
            for j, x in enumerate(line):
                if x not in (0, 1):
                    raise ValidationError(f"entry ({i},{j}) = {x!r} is not 0 or 1")
                row |= x << j
            rows.append(row)
        return cls(n, tuple(rows))

    @classmethod
    def diagonal(cls, bits: Sequence[int]) -> Gf2Matrix:
        return cls(len(bits), tuple((b & 1) << i for i, b in enumerate(bits)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[row >> j & 1 for j in range(self.n)] for row in self.rows]

    def diag(self) -> tuple[int, ...]:
        return tuple(row >> i & 1 for i, row in enumerate(self.rows))

    def transpose(self) -> Gf2Matrix:
        cols = [0] * self.n
        for i, row in enumerate(self.rows):
            j = 0
            while row:
                if row & 1:
                    cols[j] |= 1 << i
                row >>= 1
                j += 1
        return Gf2Matrix(self.n, tuple(cols))

    @cached_property
    def symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_symmetric(self) -> bool:
        return self.symmetric

    def is_hollow(self) -> bool:
        return not any(self.diag())

    def inner(self, i: int, j: int) -> int:
        """Parity of the dot product of rows ``i`` and ``j``."""
        return (self.rows[i] & self.rows[j]).bit_count() & 1

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        return add(self, other)

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        return mul(self, other)

    def __str__(self) -> str:
        return "\n".join("".join(str(x) for x in line) for line in self.to_lists())

    def to_json(self) -> str:
        return json.dumps(self.to_lists(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> Gf2Matrix:
        return cls.from_lists(json.loads(text))

    def to_hex(self) -> str:
        """Golden-file text: a header, then one row per line as fixed-width hex."""
        width = max(1, (self.n + 3) // 4)
        lines = [
            f"# gf2 matrix n={self.n}",
            "# row value bit j = column j (little-endian: least significant bit is column 0)",
        ]
        lines += [format(row, f"0{width}x") for row in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_hex(cls, text: str) -> Gf2Matrix:
        n = None
        rows = []
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if line.startswith("# gf2 matrix n="):
                    n = int(line.split("=", 1)[1])
                continue
            rows.append(int(line, 16))
        if n is None:
            raise ValidationError("hex matrix is missing its '# gf2 matrix n=' header")
        return cls(n, tuple(rows))


def symmetric_from_rows(n: int, rows) -> Gf2Matrix:
    """Wrap rows the caller guarantees to be symmetric, skipping the transpose check."""
    m = Gf2Matrix(n, tuple(rows))
    m.__dict__["symmetric"] = True
    return m


def _check_dims(a: Gf2Matrix, b: Gf2Matrix):
    if a.n != b.n:
        raise ValidationError(f"dimension mismatch: {a.n} != {b.n}")


def add(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    _check_dims(a, b)
    return Gf2Matrix(a.n, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def mul(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    _check_dims(a, b)
    cols = b.rows if b.symmetric else b.transpose().rows
    out = []
    for row in a.rows:
        acc = 0
        for j, col in enumerate(cols):
            if (row & col).bit_count() & 1:
                acc |= 1 << j
        out.append(acc)
    return Gf2Matrix(a.n, tuple(out))


def is_idempotent(a: Gf2Matrix) -> bool:
    return mul(a, a) == a


def special(n: int, kind: str) -> Gf2Matrix:
    """``identity``, ``hollow_ones`` (ones off the diagonal), ``all_ones`` or ``zero``."""
    if n < 1:
        raise ValidationError(f"dimension must be at least 1, got {n}")
    full = (1 << n) - 1
    if kind == "identity":
        rows = tuple(1 << i for i in range(n))
    elif kind == "hollow_ones":
        rows = tuple(full ^ (1 << i) for i in range(n))
    elif kind == "all_ones":
        rows = (full,) * n
    elif kind == "zero":
        rows = (0,) * n
    else:
        raise ValidationError(f"unknown matrix kind {kind!r}; expected one of {KINDS}")
    return symmetric_from_rows(n, rows)


def from_pairset(s: PairSet) -> Gf2Matrix:
    """Symmetric hollow adjacency matrix of the pairs in ``s`` (label ``k`` is row ``k - 1``)."""
    rows = list(s.rows)
    for i, row in enumerate(s.rows):
        j = 0
        while row:
            if row & 1:
                rows[j] |= 1 << i
            row >>= 1
            j += 1
    return symmetric_from_rows(s.n, rows)


def adjacency(n: int, edges: Iterable[tuple[int, int]]) -> Gf2Matrix:
    """Symmetric hollow matrix on vertices ``0..n-1`` from undirected edges."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return symmetric_from_rows(n, rows)


def border_with_ones(m: Gf2Matrix) -> Gf2Matrix:
    """Prepend a vertex joined to every other: first row/column ones, corner zero."""
    n = m.n
    first = ((1 << n) - 1) << 1
    rows = (first,) + tuple((row << 1) | 1 for row in m.rows)
    return symmetric_from_rows(n + 1, rows) if m.symmetric else Gf2Matrix(n + 1, rows)


def solve_linear(a, b: Sequence[int], nvars: int | None = None) -> tuple[int, ...] | None:
    """Solve ``a x = b`` over GF(2) by Gaussian elimination.

    ``a`` is a :class:`Gf2Matrix` or a sequence of row bitmasks (bit ``j`` is the
    coefficient of ``x_j``), one per equation.  Returns ``None`` if the system is
    inconsistent; otherwise the solution with every free variable set to 0.
    """
    rows = list(a.rows) if isinstance(a, Gf2Matrix) else [int(r) for r in a]
    if nvars is None:
        nvars = a.n if isinstance(a, Gf2Matrix) else max((r.bit_length() for r in rows), default=0)
    if len(rows) != len(b):
        raise ValidationError(f"{len(rows)} equations but {len(b)} right-hand sides")
    # augmented column at bit nvars
    aug = [r | ((v & 1) << nvars) for r, v in zip(rows, b)]
    pivots = []
    rank = 0
    for col in range(nvars):
        bit = 1 << col
        pivot = next((k for k in range(rank, len(aug)) if aug[k] & bit), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        for k in range(len(aug)):
            if k != rank and aug[k] & bit:
                aug[k] ^= aug[rank]
        pivots.append(col)
        rank += 1
    rhs = 1 << nvars
    for k in range(rank, len(aug)):
        if aug[k] == rhs:
            return None
    x = [0] * nvars
    for k, col in enumerate(pivots):
        x[col] = aug[k] >> nvars & 1
    return tuple(x)

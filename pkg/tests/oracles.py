"""Independent reference implementations used as test oracles.

Nothing here imports the bit-packed code paths: matrices are lists of lists,
permutations are plain tuples.
"""

from itertools import product


def dense_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) % 2 for j in range(n)] for i in range(n)]


def dense_add(a, b):
    return [[(x + y) % 2 for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def dense_eye(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def dense_hollow(n):
    return [[int(i != j) for j in range(n)] for i in range(n)]


def compose_tuple(s, t):
    return tuple(s[x - 1] for x in t)


def inversions_tuple(p):
    n = len(p)
    return {(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if p[i] > p[j]}


def interlace_brute(word):
    """Edges between labels whose endpoints alternate, found by scanning all rotations."""
    labels = sorted(set(word))
    pos = {x: [k for k, y in enumerate(word) if y == x] for x in labels}
    edges = set()
    for a in labels:
        for b in labels:
            if a < b:
                pa, qa = pos[a]
                inside = [p for p in pos[b] if pa < p < qa]
                if len(inside) == 1:
                    edges.add((a, b))
    return labels, edges


def dense_adjacency(labels, edges):
    idx = {x: k for k, x in enumerate(labels)}
    n = len(labels)
    m = [[0] * n for _ in range(n)]
    for a, b in edges:
        m[idx[a]][idx[b]] = m[idx[b]][idx[a]] = 1
    return m


def realizable_by_search(m):
    """Try every diagonal D; return the first D making M + D idempotent over GF(2), else None."""
    n = len(m)
    for bits in product((0, 1), repeat=n):
        md = [row[:] for row in m]
        for i, b in enumerate(bits):
            md[i][i] = (md[i][i] + b) % 2
        # entrywise square with early exit on the first mismatch
        if all(
            sum(md[i][k] * md[k][j] for k in range(n)) % 2 == md[i][j]
            for i in range(n)
            for j in range(n)
        ):
            return bits
    return None


def noncrossing_brute(arcs):
    arcs = [tuple(sorted(a)) for a in arcs]
    for a, b in arcs:
        for c, d in arcs:
            if a < c < b < d:
                return False
    return True


def meandric_brute(word):
    """Geometric test written independently of the library: start at 1, arcs alternate below/above."""
    m = len(word)
    if m % 2 or word[0] != 1:
        return False
    lower = [(word[k], word[k + 1]) for k in range(0, m, 2)]
    upper = [(word[k], word[(k + 1) % m]) for k in range(1, m, 2)]
    return noncrossing_brute(lower) and noncrossing_brute(upper)

"""Ranks and indices of integer lattices given by generators."""

from __future__ import annotations

from typing import Sequence

from .polytope import rank_of


def int_rank(vectors: Sequence[Sequence[int]], d: int) -> int:
    return rank_of(vectors, d)


def smith_diagonal(vectors: Sequence[Sequence[int]], d: int) -> list:
    """Nonzero invariant factors of the lattice spanned by the rows."""
    a = [[int(x) for x in v] for v in vectors if any(v)]
    rows = len(a)
    diag = []
    r = 0
    for c in range(d):
        if r >= rows:
            break
        while True:
            # bring the smallest nonzero entry of the remaining block to (r, c)
            best = None
            for i in range(r, rows):
                for j in range(c, d):
                    if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return diag
            i, j = best
            a[r], a[i] = a[i], a[r]
            for row in a:
                row[c], row[j] = row[j], row[c]
            p = a[r][c]
            done = True
            for i in range(r + 1, rows):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                if a[i][c]:
                    done = False
            for j in range(c + 1, d):
                q = a[r][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[c]
                if a[r][j]:
                    done = False
            if done:
                if any(a[i][j] % p for i in range(r + 1, rows) for j in range(c + 1, d)):
                    # enforce divisibility of the next invariant factor
                    k = next(i for i in range(r + 1, rows) if any(a[i][j] % p for j in range(c + 1, d)))
                    a[r] = [x + y for x, y in zip(a[r], a[k])]
                    continue
                diag.append(abs(p))
                r += 1
                break
    return diag


def lattice_index(vectors: Sequence[Sequence[int]], d: int):
    """``[Z^d : L]`` when ``L`` has full rank, else ``None``."""
    diag = smith_diagonal(vectors, d)
    if len(diag) < d:
        return None
    out = 1
    for x in diag:
        out *= x
    return out

"""Hot numeric kernels: exact integer ranks and adjacency-code minimization.

Rank computations dominate every homology run, and the minimum-code search
dominates isomorphism-free graph enumeration.  Each kernel exists twice: a
numba ``@njit`` version and a pure-numpy version.  numba is used when it
imports cleanly unless the environment variable ``MP_NO_NUMBA=1`` forces the
numpy path.  ``benchmarks/bench_kernels.py`` compares the two.

Exactness: rank over GF(p) works on residues in [0, p) with p < 2**31, so
every intermediate product fits in int64.  Rank over the rationals runs
fraction-free (Bareiss) in int64 behind an overflow guard; when entries
threaten to overflow the kernel returns -1 and the caller redoes the
computation with Python big integers, which is always exact.
"""

from __future__ import annotations

import os

import numpy as np

# Entries bounded by _LIMIT keep |a*b - c*d| below 2**63 in an update round.
_LIMIT = 2**31 - 1

USE_NUMBA = os.environ.get("MP_NO_NUMBA", "") != "1"
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

BACKEND = "numba" if USE_NUMBA else "numpy"


# ---------------------------------------------------------------------------
# rank over GF(p)


def _rank_mod_p_np(m, p):
    """Row-reduce ``m`` (int64, entries in [0, p)) in place; return the rank."""
    nr, nc = m.shape
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        pv = m[rank, c]
        f = m[rank + 1:, c]
        hit = np.nonzero(f)[0]
        if hit.size:
            rows = rank + 1 + hit
            m[rows, c:] = (m[rows, c:] * pv - np.outer(f[hit], m[rank, c:])) % p
        rank += 1
    return rank


def _rank_mod_p_loop(m, p):
    nr, nc = m.shape
    rank = 0
    for c in range(nc):
        if rank == nr:
            break
        piv = -1
        for r in range(rank, nr):
            if m[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(c, nc):
                t = m[rank, j]
                m[rank, j] = m[piv, j]
                m[piv, j] = t
        pv = m[rank, c]
        for r in range(rank + 1, nr):
            f = m[r, c]
            if f != 0:
                for j in range(c, nc):
                    m[r, j] = (m[r, j] * pv - f * m[rank, j]) % p
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# rank over the rationals (fraction-free, int64 with overflow guard)


def _rank_bareiss_np(m):
    """Fraction-free elimination; returns rank, or -1 if int64 might overflow."""
    nr, nc = m.shape
    rank = 0
    prev = np.int64(1)
    for c in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(m[rank:, c])[0]
        if nz.size == 0:
            continue
        if np.abs(m[rank:, c:]).max() > _LIMIT:
            return -1
        piv = rank + int(nz[0])
        if piv != rank:
            m[[rank, piv]] = m[[piv, rank]]
        pv = m[rank, c]
        sub = m[rank + 1:, c:]
        if sub.size:
            f = m[rank + 1:, c]
            m[rank + 1:, c:] = (sub * pv - np.multiply.outer(f, m[rank, c:])) // prev
        prev = pv
        rank += 1
    return rank


def _rank_bareiss_loop(m):
    nr, nc = m.shape
    rank = 0
    prev = np.int64(1)
    limit = np.int64(_LIMIT)
    for c in range(nc):
        if rank == nr:
            break
        piv = -1
        for r in range(rank, nr):
            if m[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        for r in range(rank, nr):
            for j in range(c, nc):
                v = m[r, j]
                if v > limit or -v > limit:
                    return -1
        if piv != rank:
            for j in range(c, nc):
                t = m[rank, j]
                m[rank, j] = m[piv, j]
                m[piv, j] = t
        pv = m[rank, c]
        for r in range(rank + 1, nr):
            f = m[r, c]
            for j in range(c + 1, nc):
                m[r, j] = (pv * m[r, j] - f * m[rank, j]) // prev
            m[r, c] = 0
        prev = pv
        rank += 1
    return rank


def _rank_bigint(rows):
    """Bareiss on Python ints (arbitrary precision); always exact."""
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    rank = 0
    prev = 1
    for c in range(nc):
        if rank == nr:
            break
        piv = -1
        for r in range(rank, nr):
            if rows[r][c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][c]
        top = rows[rank]
        for r in range(rank + 1, nr):
            f = rows[r][c]
            row = rows[r]
            for j in range(c + 1, nc):
                row[j] = (pv * row[j] - f * top[j]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# minimum adjacency code over a permutation table


def _min_code_np(adj, perms, degs, mindeg):
    n = adj.shape[0]
    ps = perms[degs[perms[:, 0]] == mindeg]
    codes = np.zeros(len(ps), dtype=np.int64)
    for i in range(n - 1):
        rows = ps[:, i]
        for j in range(i + 1, n):
            codes = (codes << 1) | adj[rows, ps[:, j]]
    return int(codes.min())


def _min_code_loop(adj, perms, degs, mindeg):
    P = perms.shape[0]
    n = perms.shape[1]
    total = n * (n - 1) // 2
    best = np.int64(1) << np.int64(62)
    for t in range(P):
        if degs[perms[t, 0]] != mindeg:
            continue
        code = np.int64(0)
        used = 0
        dead = False
        for i in range(n - 1):
            pi = perms[t, i]
            for j in range(i + 1, n):
                code = (code << 1) | adj[pi, perms[t, j]]
            used += n - 1 - i
            if code > (best >> np.int64(total - used)):
                dead = True
                break
        if not dead and code < best:
            best = code
    return best


if USE_NUMBA:
    _rank_mod_p_nb = njit(cache=True)(_rank_mod_p_loop)
    _rank_bareiss_nb = njit(cache=True)(_rank_bareiss_loop)
    _min_code_nb = njit(cache=True)(_min_code_loop)
    _rank_mod_p = _rank_mod_p_nb
    _rank_bareiss = _rank_bareiss_nb
    _min_code = _min_code_nb
else:
    _rank_mod_p = _rank_mod_p_np
    _rank_bareiss = _rank_bareiss_np
    _min_code = _min_code_np


def rank_int(mat, char: int) -> int:
    """Exact rank of an integer matrix over GF(char), or over Q when char is 0."""
    a = np.array(mat, dtype=np.int64, order="C")
    if a.ndim != 2:
        raise ValueError("rank_int expects a 2-D matrix")
    if a.shape[0] == 0 or a.shape[1] == 0:
        return 0
    if char:
        return int(_rank_mod_p(a % char, char))
    r = int(_rank_bareiss(a.copy()))
    if r >= 0:
        return r
    return _rank_bigint([[int(x) for x in row] for row in a])


def min_adjacency_code(adj, perms) -> int:
    """Minimum upper-triangle bit code of ``adj`` over the given permutations.

    The first position is restricted to minimum-degree vertices: the leading
    block of the code is minimized by a vertex of minimum degree, so the
    global minimum is attained inside that restriction.
    """
    n = adj.shape[0]
    if n < 2:
        return 0
    degs = adj.sum(axis=1).astype(np.int64)
    mindeg = np.int64(degs.min())
    return int(_min_code(adj.astype(np.int64), perms, degs, mindeg))


def warmup():
    """Trigger JIT compilation of all kernels on tiny inputs."""
    m = np.array([[1, 2], [3, 4]], dtype=np.int64)
    rank_int(m, 0)
    rank_int(m, 2)
    perms = np.array([[0, 1], [1, 0]], dtype=np.int64)
    min_adjacency_code(np.array([[0, 1], [1, 0]], dtype=np.int64), perms)

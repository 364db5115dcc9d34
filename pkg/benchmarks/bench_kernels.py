#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Runs the same workloads through both implementations and prints a speedup
table.  The numpy path is the one selected at import time by MP_NO_NUMBA=1;
here both are called directly so a single process can compare them.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from matchpow import kernels
from matchpow.graphs import cycle_graph, path_graph, disjoint_union, _perm_table
from matchpow.monomials import matching_power, squarefree_veronese
from matchpow.simplicial import all_face_masks, stanley_reisner_complex
from matchpow.homology import _homology_ranks_from_masks


def boundary_matrices(nverts, ideal):
    """Collect the boundary matrices the homology pipeline would build."""
    cx = stanley_reisner_complex(ideal)
    masks = sorted(all_face_masks(cx))
    by_dim = {}
    for m in masks:
        by_dim.setdefault(bin(m).count("1") - 1, []).append(m)
    mats = []
    for d in sorted(by_dim):
        if d - 1 not in by_dim:
            continue
        rows = {m: i for i, m in enumerate(by_dim[d - 1])}
        mat = np.zeros((len(rows), len(by_dim[d])), dtype=np.int64)
        for c, m in enumerate(by_dim[d]):
            sign = 1
            mm = m
            while mm:
                v = mm & -mm
                mat[rows[m & ~v], c] = sign
                sign = -sign
                mm &= mm - 1
        mats.append(mat)
    return mats


def bench(fn, args_list, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a in args_list:
            fn(*a)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    opts = ap.parse_args()

    if not kernels.USE_NUMBA:
        print("numba unavailable or disabled; nothing to compare against")
        return

    kernels.warmup()
    rng = np.random.default_rng(7)

    mats = []
    for n in (5, 6, 7):
        mats += boundary_matrices(n, squarefree_veronese(n, 3))
        G = disjoint_union(path_graph(n - 2), cycle_graph(5))
        mats += boundary_matrices(G.n, matching_power(
            squarefree_veronese(G.n, 2), 2))
    dense = [rng.integers(-1, 2, size=(40, 40)) for _ in range(20)]

    rows = []

    gf2 = [(m.copy() % 2, 2) for m in mats + dense]
    t_nb = bench(lambda m, p: kernels._rank_mod_p_nb(m.copy(), p), gf2, opts.repeat)
    t_np = bench(lambda m, p: kernels._rank_mod_p_np(m.copy(), p), gf2, opts.repeat)
    rows.append(("rank over GF(2)", t_nb, t_np))

    qq = [(np.ascontiguousarray(m, dtype=np.int64),) for m in mats + dense]
    t_nb = bench(lambda m: kernels._rank_bareiss_nb(m.copy()), qq, opts.repeat)
    t_np = bench(lambda m: kernels._rank_bareiss_np(m.copy()), qq, opts.repeat)
    rows.append(("fraction-free rank over Q", t_nb, t_np))

    perms = _perm_table(8)
    adjs = []
    for _ in range(30):
        a = np.triu(rng.integers(0, 2, size=(8, 8)), 1)
        a = (a + a.T).astype(np.int64)
        degs = a.sum(axis=1)
        adjs.append((a, perms, degs, np.int64(degs.min())))
    t_nb = bench(kernels._min_code_nb, adjs, opts.repeat)
    t_np = bench(kernels._min_code_np, adjs, opts.repeat)
    rows.append(("canonical adjacency code (n=8)", t_nb, t_np))

    print(f"{'kernel':<34}{'numba':>10}{'numpy':>10}{'speedup':>9}")
    print("-" * 63)
    for name, t_nb, t_np in rows:
        print(f"{name:<34}{t_nb * 1e3:>8.2f}ms{t_np * 1e3:>8.2f}ms{t_np / t_nb:>8.1f}x")


if __name__ == "__main__":
    main()

import itertools
import random

import pytest

from matchpow import kernels
from matchpow.monomials import MonomialIdeal, minimalize


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    kernels.warmup()


# ---------------------------------------------------------------------------
# brute-force oracles shared across test modules


def monomials_up_to_degree(nvars, d):
    """Every exponent vector of total degree <= d."""
    out = []

    def rec(prefix, rem):
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        for e in range(rem + 1):
            rec(prefix + [e], rem - e)

    rec([], d)
    return out


def same_ideal_by_membership(I, J, degree_cap):
    """Semantic equality through degree-bounded membership."""
    if I.nvars != J.nvars:
        return False
    for m in monomials_up_to_degree(I.nvars, degree_cap):
        if I.contains(m) != J.contains(m):
            return False
    return True


def random_ideal(rng, nvars, max_gens, max_deg, squarefree=False):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if squarefree:
            size = rng.randint(1, min(nvars, max_deg))
            supp = rng.sample(range(nvars), size)
            gens.append(tuple(1 if i in supp else 0 for i in range(nvars)))
        else:
            g = [0] * nvars
            for _ in range(rng.randint(1, max_deg)):
                g[rng.randrange(nvars)] += 1
            gens.append(tuple(g))
    return minimalize(gens, nvars)


def fraction_rank(mat):
    """Reference rank over Q by Gaussian elimination on Fractions."""
    from fractions import Fraction

    m = [[Fraction(int(x)) for x in row] for row in mat]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][c]
        for r in range(rank + 1, nr):
            f = m[r][c] / pv
            if f:
                for j in range(c, nc):
                    m[r][j] -= f * m[rank][j]
        rank += 1
        if rank == nr:
            break
    return rank


def gf_rank_naive(mat, p):
    """Reference rank over GF(p), field arithmetic via Python ints."""
    m = [[int(x) % p for x in row] for row in mat]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        for r in range(rank + 1, nr):
            f = m[r][c] * inv % p
            if f:
                for j in range(c, nc):
                    m[r][j] = (m[r][j] - f * m[rank][j]) % p
        rank += 1
        if rank == nr:
            break
    return rank

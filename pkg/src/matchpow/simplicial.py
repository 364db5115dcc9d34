"""Simplicial complexes, Stanley-Reisner translation and minimal primes.

Minimal primes of a monomial ideal are the inclusion-minimal variable sets
meeting every generator support, so height and Krull dimension reduce to an
exact hypergraph transversal enumeration.  Complexes store their facets as
sorted vertex tuples ordered by (size, lexicographic).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidInput
from .monomials import MonomialIdeal, mono_mask


def _mask_bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list of a simplicial complex on vertices 0..nverts-1.

    ``facets == ()`` is the void complex (no faces at all); ``facets == ((),)``
    is the complex whose only face is the empty face.
    """

    nverts: int
    facets: tuple

    def facet_masks(self):
        return [sum(1 << v for v in f) for f in self.facets]

    @property
    def dim(self):
        return max((len(f) for f in self.facets), default=0) - 1


def make_complex(nverts, faces) -> SimplicialComplex:
    """Build a complex from a face iterable, keeping only the maximal ones."""
    masks = set()
    for f in faces:
        masks.add(sum(1 << v for v in f))
    maximal = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    facets = sorted((tuple(_mask_bits(m)) for m in maximal), key=lambda f: (len(f), f))
    return SimplicialComplex(nverts, tuple(facets))


def all_face_masks(cx: SimplicialComplex):
    """All faces of the complex as bitmasks (includes the empty face)."""
    out = set()
    for fm in cx.facet_masks():
        sub = fm
        while True:
            out.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fm
    return out


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Complex whose faces are the subsets containing no generator support."""
    if I.is_unit:
        raise InvalidInput("the unit ideal has no Stanley-Reisner complex")
    if not I.is_squarefree:
        raise InvalidInput("Stanley-Reisner translation needs a squarefree ideal")
    n = I.nvars
    gen_masks = [mono_mask(u) for u in I.gens]
    full = (1 << n) - 1

    def independent(mask):
        return all(g & mask != g for g in gen_masks)

    faces = []
    for mask in range(full + 1):
        if independent(mask):
            # maximal iff no single-vertex extension stays independent
            grow = full & ~mask
            ok = True
            while grow:
                v = grow & -grow
                if independent(mask | v):
                    ok = False
                    break
                grow &= grow - 1
            if ok:
                faces.append(tuple(_mask_bits(mask)))
    return make_complex(n, faces)


def induced_subcomplex(cx: SimplicialComplex, vertices) -> SimplicialComplex:
    sigma = set(vertices)
    return make_complex(cx.nverts, [tuple(v for v in f if v in sigma) for f in cx.facets])


def minimal_primes(I: MonomialIdeal):
    """All inclusion-minimal variable sets meeting every generator support.

    Branches on an uncovered support, partitioning transversals by the first
    of its vertices they contain; earlier siblings are banned downstream, so
    no transversal is produced twice.
    """
    if I.is_unit:
        raise InvalidInput("the unit ideal has no minimal primes")
    if I.is_zero:
        return []
    supports = {mono_mask(u) for u in I.gens}
    supports = [s for s in supports if not any(o != s and o & s == o for o in supports)]
    covers = set()

    def branch(chosen, banned):
        uncovered = [s for s in supports if not s & chosen]
        if not uncovered:
            covers.add(chosen)
            return
        pivot = min(uncovered, key=lambda s: bin(s & ~banned).count("1"))
        avail = pivot & ~banned
        sibling_ban = banned
        while avail:
            v = avail & -avail
            branch(chosen | v, sibling_ban)
            sibling_ban |= v
            avail &= avail - 1

    branch(0, 0)
    kept = []
    for c in sorted(covers, key=lambda c: bin(c).count("1")):
        if not any(k & c == k for k in kept):
            kept.append(c)
    return sorted(
        (frozenset(_mask_bits(c)) for c in kept), key=lambda p: (len(p), sorted(p))
    )


def height(I: MonomialIdeal) -> int:
    if I.is_zero:
        return 0
    primes = minimal_primes(I)
    return min(len(p) for p in primes)


def krull_dim(I: MonomialIdeal) -> int:
    """dim S/I."""
    return I.nvars - height(I)


def is_unmixed(I: MonomialIdeal) -> bool:
    if I.is_zero:
        return True
    return len({len(p) for p in minimal_primes(I)}) == 1


# ---------------------------------------------------------------------------
# clique complexes (the graph argument only needs .n and .adj)


def clique_complex(G) -> SimplicialComplex:
    """Complex whose faces are the cliques of the graph."""
    n = G.n
    cliques = []

    def bron_kerbosch(r, p, x):
        if not p and not x:
            cliques.append(r)
            return
        pivot_pool = p | x
        pivot = max(pivot_pool, key=lambda v: len(G.adj[v] & p))
        for v in list(p - G.adj[pivot]):
            bron_kerbosch(r | {v}, p & G.adj[v], x & G.adj[v])
            p = p - {v}
            x = x | {v}

    bron_kerbosch(set(), set(range(n)), set())
    return make_complex(n, [tuple(sorted(c)) for c in cliques])


def free_vertex_facets(cx: SimplicialComplex):
    """Facets containing a vertex that lies in no other facet."""
    count = {}
    for f in cx.facets:
        for v in f:
            count[v] = count.get(v, 0) + 1
    return [f for f in cx.facets if any(count[v] == 1 for v in f)]


def free_facet_count(cx: SimplicialComplex) -> int:
    """Number of facets admitting a free vertex."""
    return len(free_vertex_facets(cx))


def has_free_facet_partition(cx: SimplicialComplex) -> bool:
    """Whether the free-vertex facets partition the whole vertex set."""
    chosen = free_vertex_facets(cx)
    seen = set()
    for f in chosen:
        for v in f:
            if v in seen:
                return False
            seen.add(v)
    return len(seen) == cx.nverts

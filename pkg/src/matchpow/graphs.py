"""Simple graphs: matchings, structural predicates, graph6 I/O and
isomorphism-free enumeration up to 8 vertices.

Canonical forms take the minimum upper-triangle adjacency code over all
vertex permutations (a numba/numpy kernel); enumeration grows graphs one
edge at a time with canonical deduplication, so each isomorphism class is
produced exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, ParseError, Unsupported
from .kernels import min_adjacency_code
from .monomials import MonomialIdeal, minimalize, zero_ideal
from . import simplicial


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1.

    ``labels`` carries original-vertex provenance through deletions and
    component splits; it defaults to the identity.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n, edges=(), labels=None):
        if n < 0:
            raise InvalidInput("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise InvalidInput("labels length must equal vertex count")

    def edges(self):
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def edge_count(self):
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj[u]

    def closed_neighborhood(self, v):
        return self.adj[v] | {v}

    def adjacency_matrix(self):
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.adj == other.adj
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((self.n, self.adj, self.labels))

    def __repr__(self):
        return f"SimpleGraph({self.n}, {self.edges()})"


def complete_graph(n):
    return SimpleGraph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n):
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(G, H):
    edges = G.edges() + [(u + G.n, v + G.n) for u, v in H.edges()]
    return SimpleGraph(G.n + H.n, edges)


# ---------------------------------------------------------------------------
# edge ideals


def edge_ideal(G) -> MonomialIdeal:
    """The quadratic squarefree ideal of the graph's edges."""
    if G.n == 0:
        raise InvalidInput("empty graph has no edge ideal")
    if any(not s for s in G.adj):
        raise InvalidInput("graph has isolated vertices")
    return _edge_gens(G, G.n, range(G.n))


def edge_ideal_labeled(G, nvars) -> MonomialIdeal:
    """Edge ideal embedded in an ambient ring through the provenance labels."""
    if any(not 0 <= lab < nvars for lab in G.labels):
        raise InvalidInput("labels exceed the ambient variable count")
    return _edge_gens(G, nvars, G.labels)


def local_edge_ideal(G) -> MonomialIdeal:
    """Edge ideal over the graph's own vertex ring; isolated vertices allowed.

    Deletions can leave isolated vertices; those contribute free ring
    variables, which changes neither the Cohen-Macaulay property nor the
    Betti table.
    """
    if G.n == 0:
        raise InvalidInput("empty graph has no edge ideal")
    return _edge_gens(G, G.n, range(G.n))


def _edge_gens(G, nvars, var_of):
    var_of = list(var_of)
    gens = []
    for u, v in G.edges():
        w = [0] * nvars
        w[var_of[u]] = 1
        w[var_of[v]] = 1
        gens.append(tuple(w))
    if not gens:
        return zero_ideal(nvars)
    return minimalize(gens, nvars)


# ---------------------------------------------------------------------------
# matchings


def _adj_masks(G):
    return [sum(1 << u for u in s) for s in G.adj]


def matching_number(G) -> int:
    """Maximum matching size, by exhaustive branch and bound."""
    masks = _adj_masks(G)
    best = 0

    def rec(avail, size):
        nonlocal best
        if size > best:
            best = size
        if size + bin(avail).count("1") // 2 <= best:
            return
        rest = avail
        v = -1
        nb = 0
        while rest:
            v = (rest & -rest).bit_length() - 1
            nb = masks[v] & avail
            if nb:
                break
            rest &= rest - 1
        if not nb:
            return
        rec(avail & ~(1 << v), size)
        while nb:
            u = (nb & -nb).bit_length() - 1
            rec(avail & ~(1 << v) & ~(1 << u), size + 1)
            nb &= nb - 1

    rec((1 << G.n) - 1, 0)
    return best


def induced_matching_number(G) -> int:
    """Maximum induced matching size (no edges joining distinct matched edges)."""
    masks = _adj_masks(G)
    edges = G.edges()
    forbid = [
        (1 << u) | (1 << v) | masks[u] | masks[v] for u, v in edges
    ]
    pair = [(1 << u) | (1 << v) for u, v in edges]
    best = 0

    def rec(i, banned, size):
        nonlocal best
        if size > best:
            best = size
        if size + len(edges) - i <= best:
            return
        for idx in range(i, len(edges)):
            if not pair[idx] & banned:
                rec(idx + 1, banned | forbid[idx], size + 1)

    rec(0, 0, 0)
    return best


def has_perfect_matching(G) -> bool:
    return G.n > 0 and G.n % 2 == 0 and matching_number(G) == G.n // 2


def tutte_condition(G) -> bool:
    """G is perfectly matchable, or every single-vertex deletion of G is."""
    if has_perfect_matching(G):
        return True
    return all(
        has_perfect_matching(delete_vertices(G, {v})) for v in range(G.n)
    )


def perfect_matchings(G):
    """Yield every perfect matching as a list of local-index edge pairs."""
    if G.n == 0 or G.n % 2:
        return
    masks = _adj_masks(G)

    def rec(avail, acc):
        if not avail:
            yield list(acc)
            return
        v = (avail & -avail).bit_length() - 1
        nb = masks[v] & avail
        while nb:
            u = (nb & -nb).bit_length() - 1
            acc.append((v, u))
            yield from rec(avail & ~(1 << v) & ~(1 << u), acc)
            acc.pop()
            nb &= nb - 1

    yield from rec((1 << G.n) - 1, [])


# ---------------------------------------------------------------------------
# subgraphs and components


def delete_vertices(G, removed) -> SimpleGraph:
    removed = set(removed)
    keep = [v for v in range(G.n) if v not in removed]
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in G.edges() if u in pos and v in pos]
    return SimpleGraph(len(keep), edges, labels=[G.labels[v] for v in keep])


def closed_neighborhood_deletion(G, x) -> SimpleGraph:
    return delete_vertices(G, G.closed_neighborhood(x))


def connected_components(G):
    seen = [False] * G.n
    comps = []
    for start in range(G.n):
        if seen[start]:
            continue
        stack = [start]
        comp = []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return [delete_vertices(G, set(range(G.n)) - set(c)) for c in comps]


def without_isolated(G) -> SimpleGraph:
    return delete_vertices(G, {v for v in range(G.n) if not G.adj[v]})


# ---------------------------------------------------------------------------
# structural predicates


def is_chordal(G) -> bool:
    """Maximum cardinality search followed by the elimination-order check."""
    n = G.n
    if n == 0:
        return True
    weight = [0] * n
    order = []
    placed = [False] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if not placed[u]),
            key=lambda u: (weight[u], -u),
        )
        placed[v] = True
        order.append(v)
        for u in G.adj[v]:
            if not placed[u]:
                weight[u] += 1
    # reverse MCS order is a perfect elimination order iff G is chordal
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in G.adj[v] if pos[u] < pos[v]]
        for a, b in itertools.combinations(earlier, 2):
            if not G.has_edge(a, b):
                return False
    return True


def is_bipartite(G) -> bool:
    color = [-1] * G.n
    for start in range(G.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in G.adj[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_forest(G) -> bool:
    return G.edge_count() == G.n - len(connected_components(G))


def is_connected(G) -> bool:
    return len(connected_components(G)) <= 1


def is_complete(G) -> bool:
    return G.edge_count() == G.n * (G.n - 1) // 2


def is_very_well_covered(G) -> bool:
    """Unmixed with cover number exactly half the vertex count."""
    if any(not s for s in G.adj):
        raise InvalidInput("graph has isolated vertices")
    if G.n % 2:
        return False
    primes = simplicial.minimal_primes(edge_ideal(G))
    sizes = {len(p) for p in primes}
    return len(sizes) == 1 and min(sizes) == G.n // 2


def is_cameron_walker(G) -> bool:
    """Connected with matching number equal to induced matching number."""
    return G.n >= 2 and is_connected(G) and matching_number(G) == induced_matching_number(G)


def is_star_triangle(G) -> bool:
    """Some triangles glued at one common vertex."""
    n = G.n
    if n < 3 or n % 2 == 0:
        return False
    t = (n - 1) // 2
    if G.edge_count() != 3 * t:
        return False
    for c in range(n):
        if G.degree(c) != n - 1:
            continue
        if all(len(G.adj[v] - {c}) == 1 for v in range(n) if v != c):
            return True
    return False


def whisker(G) -> SimpleGraph:
    """Attach one pendant edge to every vertex."""
    edges = G.edges() + [(v, G.n + v) for v in range(G.n)]
    return SimpleGraph(2 * G.n, edges)


def generate_star_triangle(t) -> SimpleGraph:
    if t < 1:
        raise InvalidInput("need at least one triangle")
    edges = []
    for i in range(t):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return SimpleGraph(2 * t + 1, edges)


def is_whisker_shape(G) -> bool:
    """Whether G is the whisker of some graph on half its vertices."""
    if G.n == 0 or G.n % 2:
        return False
    half = G.n // 2
    tips = [v for v in range(G.n) if G.degree(v) == 1]
    if len(tips) < half:
        return False
    for chosen in itertools.combinations(tips, half):
        anchors = {next(iter(G.adj[v])) for v in chosen}
        if len(anchors) == half and not anchors & set(chosen):
            return True
    return False


# ---------------------------------------------------------------------------
# canonical forms and enumeration


_PERMS = {}


def _perm_table(n):
    tab = _PERMS.get(n)
    if tab is None:
        tab = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        _PERMS[n] = tab
    return tab


def canonical_code(G) -> int:
    """Minimum adjacency bit code over all relabelings; equal iff isomorphic."""
    if G.n > 8:
        raise Unsupported("canonical forms are supported for n <= 8")
    if G.n < 2:
        return 0
    return min_adjacency_code(G.adjacency_matrix(), _perm_table(G.n))


def graph_from_code(n, code) -> SimpleGraph:
    total = n * (n - 1) // 2
    edges = []
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (code >> (total - 1 - idx)) & 1:
                edges.append((i, j))
            idx += 1
    return SimpleGraph(n, edges)


def canonical_form(G) -> bytes:
    """Canonical byte form: graph6 of the minimum-code representative."""
    return emit_graph6(graph_from_code(G.n, canonical_code(G))).encode("ascii")


def _grow_closure(n, seeds):
    """All canonical codes reachable from the seed graphs by adding edges."""
    seen = {}
    frontier = []
    for seed in seeds:
        c = canonical_code(seed)
        if c not in seen:
            seen[c] = seed.edge_count()
            frontier.append(graph_from_code(n, c))
    while frontier:
        nxt = []
        for G in frontier:
            a = G.adjacency_matrix()
            for i in range(n):
                for j in range(i + 1, n):
                    if a[i, j]:
                        continue
                    a[i, j] = a[j, i] = 1
                    c = min_adjacency_code(a, _perm_table(n))
                    if c not in seen:
                        seen[c] = G.edge_count() + 1
                        nxt.append(graph_from_code(n, c))
                    a[i, j] = a[j, i] = 0
        frontier = nxt
    return sorted(seen, key=lambda c: (seen[c], c))


_ENUM_ALL = {}
_ENUM_PM = {}


def enumerate_graphs(n, no_isolated=False):
    """One representative per isomorphism class of graphs on n vertices."""
    if not 1 <= n <= 8:
        raise Unsupported("enumeration is supported for 1 <= n <= 8")
    codes = _ENUM_ALL.get(n)
    if codes is None:
        codes = _grow_closure(n, [SimpleGraph(n)])
        _ENUM_ALL[n] = codes
    out = [graph_from_code(n, c) for c in codes]
    if no_isolated:
        out = [G for G in out if all(G.adj)]
    return out


def enumerate_perfect_matching_graphs(n):
    """Representatives of all isomorphism classes with a perfect matching.

    Having a perfect matching survives edge addition, so growing upward from
    the disjoint perfect matching reaches exactly this family.
    """
    if not 2 <= n <= 8 or n % 2:
        raise Unsupported("perfect-matching enumeration needs even 2 <= n <= 8")
    codes = _ENUM_PM.get(n)
    if codes is None:
        seed = SimpleGraph(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])
        codes = _grow_closure(n, [seed])
        _ENUM_PM[n] = codes
    return [graph_from_code(n, c) for c in codes]


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)


def emit_graph6(G) -> str:
    if G.n > 62:
        raise Unsupported("only short-form graph6 (n <= 62) is supported")
    out = [chr(G.n + 63)]
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", offset=0)
    first = ord(s[0])
    if first == 126:
        raise Unsupported("long-form graph6 (n >= 63) is not supported")
    if not 63 <= first <= 125:
        raise ParseError(f"bad size byte {s[0]!r}", offset=0)
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 != need:
        raise ParseError(
            f"expected {need} data bytes for n={n}, got {len(s) - 1}", offset=len(s)
        )
    bits = []
    for pos, ch in enumerate(s[1:], start=1):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ParseError(f"bad data byte {ch!r}", offset=pos)
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    for pos in range(nbits, len(bits)):
        if bits[pos]:
            raise ParseError("nonzero padding bits", offset=1 + pos // 6)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return SimpleGraph(n, edges)


# ---------------------------------------------------------------------------
# edge-list text format: header "n <count>", then one "u v" line per edge,
# vertices 1-indexed


def parse_edge_list(text) -> SimpleGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
                raise ParseError("expected header 'n <count>'", line=lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range 1..{n}", line=lineno)
        if u == v:
            raise ParseError("loops are not allowed", line=lineno)
        edges.append((u - 1, v - 1))
    if n is None:
        raise ParseError("missing 'n <count>' header", line=1)
    return SimpleGraph(n, edges)


def emit_edge_list(G) -> str:
    lines = [f"n {G.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the relabeling search for Cohen-Macaulay very well-covered graphs


@dataclass(frozen=True)
class VwcLabeling:
    """Vertex pairing (x_i, y_i), i = 1..n, in index order."""

    pairs: tuple


def check_vwc_labeling(G, pairs) -> bool:
    """Verify the five structural conditions of the relabeling."""
    n = len(pairs)
    xs = [p[0] for p in pairs]
    ys = [p[1] for p in pairs]
    if sorted(xs + ys) != list(range(G.n)) or 2 * n != G.n:
        return False
    xset = set(xs)
    # X a minimal vertex cover, Y a maximal independent set
    for u, v in G.edges():
        if u not in xset and v not in xset:
            return False
    # X minimal as a cover, equivalently Y maximal independent: every x in X
    # keeps a neighbor inside Y
    for x in xs:
        if not any(w not in xset for w in G.adj[x]):
            return False
    # pairs are edges
    if not all(G.has_edge(x, y) for x, y in pairs):
        return False
    # triangular adjacency into Y
    for i in range(n):
        for j in range(n):
            if G.has_edge(xs[i], ys[j]) and i > j:
                return False
    # no x_i x_j edge alongside x_i y_j
    for i in range(n):
        for j in range(n):
            if i != j and G.has_edge(xs[i], ys[j]) and G.has_edge(xs[i], xs[j]):
                return False
    # transitivity through y_j
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) < 3:
                    continue
                if not G.has_edge(ys[j], xs[k]):
                    continue
                for z in (xs[i], ys[i]):
                    if G.has_edge(z, xs[j]) and not G.has_edge(z, xs[k]):
                        return False
    return True


def vwc_cm_labeling_search(G):
    """Search for a pairing and ordering meeting the five conditions.

    Iterates over perfect matchings as candidate pairings and orientations of
    each pairing; the index order is any topological order of the digraph
    forced by the triangular condition.  Returns None when no labeling exists.
    """
    if not is_very_well_covered(G):
        raise InvalidInput("labeling search needs a very well-covered graph")
    n = G.n // 2
    for pm in perfect_matchings(G):
        for bits in range(1 << n):
            pairs = [
                (a, b) if not (bits >> t) & 1 else (b, a)
                for t, (a, b) in enumerate(pm)
            ]
            ys = {y for _x, y in pairs}
            if any(G.has_edge(a, b) for a, b in itertools.combinations(ys, 2)):
                continue
            # index-free conditions first
            ok = True
            for (xi, yi), (xj, yj) in itertools.permutations(pairs, 2):
                if G.has_edge(xi, yj) and G.has_edge(xi, xj):
                    ok = False
                    break
            if not ok:
                continue
            for (pi, (xi, yi)), (pj, (xj, yj)), (pk, (xk, yk)) in itertools.permutations(
                enumerate(pairs), 3
            ):
                if not G.has_edge(yj, xk):
                    continue
                for z in (xi, yi):
                    if G.has_edge(z, xj) and not G.has_edge(z, xk):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
            # triangular condition: topological order of the forced digraph
            succ = {p: set() for p in range(n)}
            indeg = [0] * n
            for p, q in itertools.permutations(range(n), 2):
                if G.has_edge(pairs[p][0], pairs[q][1]) and q not in succ[p]:
                    succ[p].add(q)
                    indeg[q] += 1
            ready = sorted(p for p in range(n) if indeg[p] == 0)
            order = []
            while ready:
                p = ready.pop(0)
                order.append(p)
                for q in sorted(succ[p]):
                    indeg[q] -= 1
                    if indeg[q] == 0:
                        ready.append(q)
                ready.sort()
            if len(order) < n:
                continue
            labeled = tuple(pairs[p] for p in order)
            if check_vwc_labeling(G, labeled):
                return VwcLabeling(labeled)
    return None

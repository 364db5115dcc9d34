"""Exact reduced homology, graded Betti tables and homological summaries.

Two independent Betti engines are provided.  The primary one walks the lcm
lattice of a squarefree ideal and reads multigraded Betti numbers off the
reduced homology of induced subcomplexes of the Stanley-Reisner complex; the
oracle computes Tor directly from the Koszul complex, one multidegree at a
time, and also accepts non-squarefree input.  Non-squarefree ideals are
polarized before the primary engine runs; projective dimension is invariant
under polarization, so depth, dimension and the Cohen-Macaulay flag all refer
to the original ring.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

from .errors import InvalidInput
from .kernels import rank_int
from .monomials import (
    RATIONALS,
    FieldSpec,
    MonomialIdeal,
    initial_degree,
    matching_power,
    mono_mask,
    monomial_grade,
    polarize,
)
from . import simplicial


@dataclass
class BettiTable:
    """Graded Betti numbers of S/I; only nonzero entries are stored."""

    entries: dict
    field: FieldSpec
    multigraded: dict | None = None

    @property
    def pdim(self):
        return max((i for (i, _j) in self.entries), default=0)

    def beta(self, i, j=None):
        if j is None:
            return sum(v for (a, _), v in self.entries.items() if a == i)
        return self.entries.get((i, j), 0)

    def to_dict(self):
        d = {
            "schema": 1,
            "field": self.field.label(),
            "entries": sorted([i, j, v] for (i, j), v in self.entries.items()),
        }
        if self.multigraded is None:
            d["multigraded"] = None
        else:
            d["multigraded"] = sorted(
                [i, sorted(s), v] for (i, s), v in self.multigraded.items()
            )
        return d

    @staticmethod
    def from_dict(d):
        entries = {(i, j): v for i, j, v in d["entries"]}
        multi = d.get("multigraded")
        if multi is not None:
            multi = {(i, frozenset(s)): v for i, s, v in multi}
        return BettiTable(entries, FieldSpec.parse(d["field"]), multi)


@dataclass
class HomologicalSummary:
    nvars: int
    height: int
    dim: int
    depth: int
    pdim: int
    is_cm: bool
    field: FieldSpec

    def to_dict(self):
        return {
            "schema": 1,
            "nvars": self.nvars,
            "height": self.height,
            "dim": self.dim,
            "depth": self.depth,
            "pdim": self.pdim,
            "is_cm": self.is_cm,
            "field": self.field.label(),
        }

    @staticmethod
    def from_dict(d):
        return HomologicalSummary(
            d["nvars"], d["height"], d["dim"], d["depth"], d["pdim"],
            d["is_cm"], FieldSpec.parse(d["field"]),
        )


# ---------------------------------------------------------------------------
# reduced simplicial homology


def _mask_bits(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _homology_ranks_from_masks(face_masks, char):
    """Reduced homology ranks of a subset-closed face collection.

    Returns {d: rank} for -1 <= d <= dim; the empty collection (void complex)
    gives {}.
    """
    if not face_masks:
        return {}
    by_dim = {}
    for m in face_masks:
        by_dim.setdefault(bin(m).count("1") - 1, []).append(m)
    top = max(by_dim)
    faces = {d: sorted(by_dim.get(d, ())) for d in range(-1, top + 1)}
    index = {d: {m: c for c, m in enumerate(fs)} for d, fs in faces.items()}
    # boundary ranks; ranks[d] = rank of the map C_d -> C_{d-1}
    bd_rank = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        rows = index[d - 1]
        cols = faces[d]
        if not rows or not cols:
            continue
        mat = [[0] * len(cols) for _ in rows]
        for c, m in enumerate(cols):
            verts = _mask_bits(m)
            for t, v in enumerate(verts):
                sub = m & ~(1 << v)
                mat[rows[sub]][c] = 1 if t % 2 == 0 else -1
        bd_rank[d] = rank_int(mat, char)
    return {
        d: len(faces[d]) - bd_rank[d] - bd_rank[d + 1]
        for d in range(-1, top + 1)
    }


def reduced_homology_ranks(cx: simplicial.SimplicialComplex, field=RATIONALS):
    """Rank of each reduced homology group of the complex over the field."""
    return _homology_ranks_from_masks(simplicial.all_face_masks(cx), field.char)


# ---------------------------------------------------------------------------
# Betti engine 1: lcm-lattice walk over induced subcomplexes


_memo_lock = threading.Lock()
_table_memo = {}
_summary_memo = {}
_store = None


def set_store(store):
    """Install a persistent get/put store for tables and summaries (or None)."""
    global _store
    _store = store


def clear_memo():
    with _memo_lock:
        _table_memo.clear()
        _summary_memo.clear()


def _support_lattice(gen_masks):
    lattice = {0}
    for g in gen_masks:
        lattice |= {s | g for s in lattice}
    return lattice


def betti_table_hochster(I: MonomialIdeal, field=RATIONALS) -> BettiTable:
    """Betti table of S/I for squarefree I, multigraded entries included.

    Multigraded Betti numbers vanish outside the lcm lattice, so only vertex
    sets that are unions of generator supports are examined.
    """
    if I.is_unit:
        raise InvalidInput("S/I is zero for the unit ideal")
    if not I.is_squarefree:
        raise InvalidInput("primary Betti engine needs a squarefree ideal; polarize first")
    memo_key = (I.key(), field.char)
    with _memo_lock:
        hit = _table_memo.get(memo_key)
    if hit is not None:
        return hit
    if _store is not None:
        raw = _store.get(f"table:{field.label()}:{I.key()}")
        if raw is not None:
            table = BettiTable.from_dict(raw)
            with _memo_lock:
                _table_memo[memo_key] = table
            return table

    entries = {(0, 0): 1}
    multi = {(0, frozenset()): 1}
    gen_masks = [mono_mask(u) for u in I.gens]
    for sigma in _support_lattice(gen_masks):
        if sigma == 0:
            continue
        s = bin(sigma).count("1")
        faces = []
        sub = sigma
        while True:
            if all(g & sub != g for g in gen_masks):
                faces.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & sigma
        ranks = _homology_ranks_from_masks(faces, field.char)
        for d, r in ranks.items():
            if r <= 0:
                continue
            i = s - 1 - d
            if i >= 1:
                entries[(i, s)] = entries.get((i, s), 0) + r
                multi[(i, frozenset(_mask_bits(sigma)))] = r

    table = BettiTable(entries, field, multi)
    with _memo_lock:
        _table_memo[memo_key] = table
    if _store is not None:
        _store.put(f"table:{field.label()}:{I.key()}", table.to_dict())
    return table


# ---------------------------------------------------------------------------
# Betti engine 2 (oracle): Tor through the Koszul complex, per multidegree


def _lcm_lattice(gens, nvars):
    lattice = {(0,) * nvars}
    for g in gens:
        lattice |= {tuple(max(a, b) for a, b in zip(s, g)) for s in lattice}
    return lattice


def betti_table_koszul(I: MonomialIdeal, field=RATIONALS) -> BettiTable:
    """Betti table of S/I from exact ranks of the Koszul differentials.

    Valid for arbitrary monomial ideals; kept independent of the primary
    engine so the two can cross-validate each other.
    """
    if I.is_unit:
        raise InvalidInput("S/I is zero for the unit ideal")
    n = I.nvars
    entries = {(0, 0): 1}
    multi = {(0, frozenset()): 1} if I.is_squarefree else None
    member = {}

    def in_ideal(b):
        hit = member.get(b)
        if hit is None:
            hit = I.contains(b)
            member[b] = hit
        return hit

    for a in _lcm_lattice(I.gens, n):
        if not any(a):
            continue
        # Koszul basis in degree a: (F, b) with b = a - 1_F >= 0 and x^b not in I
        basis = {}
        for F in itertools.chain.from_iterable(
            itertools.combinations(range(n), i) for i in range(n + 1)
        ):
            if any(a[v] == 0 for v in F):
                continue
            b = tuple(e - 1 if v in F else e for v, e in enumerate(a))
            if not in_ideal(b):
                basis.setdefault(len(F), []).append((F, b))
        index = {
            i: {fb: c for c, fb in enumerate(fbs)} for i, fbs in basis.items()
        }
        bd_rank = {i: 0 for i in range(n + 2)}
        for i in sorted(basis):
            if i == 0 or i - 1 not in index:
                continue
            rows = index[i - 1]
            cols = basis[i]
            mat = [[0] * len(cols) for _ in rows]
            for c, (F, b) in enumerate(cols):
                for t, v in enumerate(F):
                    tgt_b = tuple(e + 1 if w == v else e for w, e in enumerate(b))
                    tgt = (tuple(w for w in F if w != v), tgt_b)
                    r = rows.get(tgt)
                    if r is not None:
                        mat[r][c] = 1 if t % 2 == 0 else -1
            bd_rank[i] = rank_int(mat, field.char)
        j = sum(a)
        for i, fbs in basis.items():
            h = len(fbs) - bd_rank[i] - bd_rank[i + 1]
            if h > 0 and i >= 1:
                entries[(i, j)] = entries.get((i, j), 0) + h
                if multi is not None:
                    multi[(i, frozenset(v for v, e in enumerate(a) if e))] = h
    return BettiTable(entries, field, multi)


# ---------------------------------------------------------------------------
# derived invariants


def summary(I: MonomialIdeal, field=RATIONALS) -> HomologicalSummary:
    """Height, dimension, depth, projective dimension and the CM flag of S/I."""
    if I.is_unit:
        raise InvalidInput("summary is undefined for the unit ideal")
    memo_key = (I.key(), field.char)
    with _memo_lock:
        hit = _summary_memo.get(memo_key)
    if hit is not None:
        return hit
    if _store is not None:
        raw = _store.get(f"summary:{field.label()}:{I.key()}")
        if raw is not None:
            s = HomologicalSummary.from_dict(raw)
            with _memo_lock:
                _summary_memo[memo_key] = s
            return s

    h = simplicial.height(I)
    dim = I.nvars - h
    if I.is_zero:
        pdim = 0
    elif I.is_squarefree:
        pdim = betti_table_hochster(I, field).pdim
    else:
        pol, _prov = polarize(I)
        pdim = betti_table_hochster(pol, field).pdim
    depth = I.nvars - pdim
    s = HomologicalSummary(I.nvars, h, dim, depth, pdim, depth == dim, field)
    with _memo_lock:
        _summary_memo[memo_key] = s
    if _store is not None:
        _store.put(f"summary:{field.label()}:{I.key()}", s.to_dict())
    return s


def is_cohen_macaulay(I: MonomialIdeal, field=RATIONALS) -> bool:
    """CM test with a cheap unmixedness gate (CM quotients are unmixed)."""
    if I.is_zero:
        return True
    if not simplicial.is_unmixed(I):
        return False
    return summary(I, field).is_cm


def has_linear_resolution(table: BettiTable, gen_degree: int) -> bool:
    """Whether the resolved ideal (equigenerated in gen_degree) is linear."""
    gen_degrees = {j for (i, j) in table.entries if i == 1}
    if gen_degrees != {gen_degree}:
        raise InvalidInput(
            f"table is not of an ideal equigenerated in degree {gen_degree}"
        )
    return all(
        j == gen_degree + i - 1 for (i, j) in table.entries if i >= 1
    )


def normalized_depth_function(I: MonomialIdeal, field=RATIONALS):
    """depth S/I^[k] - (initial degree of I^[k] - 1) for k = 1..nu(I)."""
    if I.is_zero or I.is_unit:
        raise InvalidInput("normalized depth function needs a nonzero proper ideal")
    out = []
    for k in range(1, monomial_grade(I) + 1):
        P = matching_power(I, k)
        out.append(summary(P, field).depth - (initial_degree(P) - 1))
    return out


def depth_lower_bound_check(G, k, field=RATIONALS) -> bool:
    """depth S/I(G)^[k] >= 2k - 1."""
    from .graphs import edge_ideal

    P = matching_power(edge_ideal(G), k)
    return summary(P, field).depth >= 2 * k - 1

"""Exhaustive verification suites and the small-graph classification.

Every suite runs a structural statement against a concrete corpus and
collects failures with full witnesses (graph6 string, power index, vertex,
field, both sides of the violated identity).  A clean report is the expected
outcome; any failure points at an implementation bug.
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .errors import InvalidInput
from .monomials import (
    RATIONALS,
    FieldSpec,
    colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    matching_power,
    minimalize,
    monomial_grade,
    squarefree_veronese,
    variable,
    zero_ideal,
)
from . import graphs as gr
from . import homology as hm
from . import simplicial as sc


@dataclass
class PowerStats:
    k: int
    gens: int
    height: int
    dim: int
    depth: int
    pdim: int
    is_cm: bool
    equals_veronese: bool

    def to_dict(self):
        return {
            "k": self.k,
            "gens": self.gens,
            "height": self.height,
            "dim": self.dim,
            "depth": self.depth,
            "pdim": self.pdim,
            "is_cm": self.is_cm,
            "equals_veronese": self.equals_veronese,
        }

    @staticmethod
    def from_dict(d):
        return PowerStats(
            d["k"], d["gens"], d["height"], d["dim"], d["depth"], d["pdim"],
            d["is_cm"], d["equals_veronese"],
        )


TAG_NAMES = (
    "complete",
    "forest",
    "cm_forest",
    "chordal",
    "bipartite",
    "very_well_covered",
    "cameron_walker",
    "whisker_shape",
)


@dataclass
class ClassificationRecord:
    graph6: str
    n: int
    nu: int
    per_k: list
    all_powers_cm: bool
    tags: dict
    field: FieldSpec

    def to_dict(self):
        return {
            "schema": 1,
            "graph6": self.graph6,
            "n": self.n,
            "nu": self.nu,
            "per_k": [p.to_dict() for p in self.per_k],
            "all_powers_cm": self.all_powers_cm,
            "tags": dict(self.tags),
            "field": self.field.label(),
        }

    @staticmethod
    def from_dict(d):
        return ClassificationRecord(
            d["graph6"], d["n"], d["nu"],
            [PowerStats.from_dict(p) for p in d["per_k"]],
            d["all_powers_cm"], dict(d["tags"]), FieldSpec.parse(d["field"]),
        )


@dataclass
class VerificationReport:
    theorem: str
    corpus: str
    instances: int = 0
    failures: list = dc_field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            "schema": 1,
            "theorem": self.theorem,
            "corpus": self.corpus,
            "instances": self.instances,
            "failures": self.failures,
            "passed": self.passed,
            "elapsed_s": round(self.elapsed_s, 3),
        }


# ---------------------------------------------------------------------------
# shared helpers


def g6(G) -> str:
    return gr.canonical_form(G).decode("ascii")


def all_matching_powers_cm(G, field=RATIONALS) -> bool:
    """Whether every matching power of the edge ideal is Cohen-Macaulay."""
    I = gr.edge_ideal(G)
    for k in range(1, gr.matching_number(G) + 1):
        if not hm.is_cohen_macaulay(matching_power(I, k), field):
            return False
    return True


def is_cm_graph(G, field=RATIONALS) -> bool:
    return hm.is_cohen_macaulay(gr.edge_ideal(G), field)


def is_cm_forest(G, field=RATIONALS) -> bool:
    """Forest whose edge ideal is Cohen-Macaulay (decided homologically)."""
    return gr.is_forest(G) and is_cm_graph(G, field)


def corpus_no_isolated(n_lo, n_hi):
    out = []
    for n in range(n_lo, n_hi + 1):
        out.extend(gr.enumerate_graphs(n, no_isolated=True))
    return out


def corpus_perfect_matching(n_hi):
    out = []
    for n in range(2, n_hi + 1, 2):
        out.extend(gr.enumerate_perfect_matching_graphs(n))
    return out


def sample_graphs(pool, count, seed):
    if count is None or count >= len(pool):
        return list(pool)
    rng = random.Random(seed)
    return rng.sample(list(pool), count)


# ---------------------------------------------------------------------------
# classification


def classify_graph(G, field=RATIONALS) -> ClassificationRecord:
    """Per-power invariants, Veronese comparison and family tags for G."""
    I = gr.edge_ideal(G)
    nu = gr.matching_number(G)
    if monomial_grade(I) != nu:
        raise AssertionError(f"matching number disagrees with monomial grade on {g6(G)}")
    per_k = []
    for k in range(1, nu + 1):
        P = matching_power(I, k)
        s = hm.summary(P, field)
        per_k.append(
            PowerStats(
                k, len(P.gens), s.height, s.dim, s.depth, s.pdim, s.is_cm,
                P == squarefree_veronese(G.n, 2 * k),
            )
        )
    forest = gr.is_forest(G)
    tags = {
        "complete": gr.is_complete(G),
        "forest": forest,
        "cm_forest": forest and per_k[0].is_cm,
        "chordal": gr.is_chordal(G),
        "bipartite": gr.is_bipartite(G),
        "very_well_covered": gr.is_very_well_covered(G),
        "cameron_walker": gr.is_cameron_walker(G),
        "whisker_shape": gr.is_whisker_shape(G),
    }
    return ClassificationRecord(
        g6(G), G.n, nu, per_k, all(p.is_cm for p in per_k), tags, field,
    )


def _classify_worker(args):
    text, char = args
    record = classify_graph(gr.parse_graph6(text), FieldSpec(char))
    return record.to_dict()


def classify_all(n, field=RATIONALS, jobs=1) -> list:
    """Classification records of the graphs on n non-isolated vertices whose
    matching powers are all Cohen-Macaulay."""
    if not 2 <= n <= 8:
        raise InvalidInput("classification needs 2 <= n <= 8")
    pool = gr.enumerate_graphs(n, no_isolated=True)
    if jobs > 1:
        args = [(gr.emit_graph6(G), field.char) for G in pool]
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            records = [
                ClassificationRecord.from_dict(d)
                for d in ex.map(_classify_worker, args, chunksize=8)
            ]
    else:
        records = [classify_graph(G, field) for G in pool]
    positives = [r for r in records if r.all_powers_cm]
    positives.sort(key=lambda r: (r.n, r.graph6))
    return positives


# ---------------------------------------------------------------------------
# the verification suites


def verify_last_power_theorem(corpus, field=RATIONALS) -> VerificationReport:
    """Equivalence of: last power CM; last power is the full Veronese at the
    maximal matching size; the perfect-matchability condition."""
    rep = VerificationReport("last-power", f"{len(corpus)} graphs")
    t0 = time.perf_counter()
    for G in corpus:
        I = gr.edge_ideal(G)
        nu = gr.matching_number(G)
        P = matching_power(I, nu)
        a = hm.is_cohen_macaulay(P, field)
        b = P == squarefree_veronese(G.n, 2 * nu) and nu == G.n // 2
        c = gr.tutte_condition(G)
        rep.instances += 1
        if not (a == b == c):
            rep.failures.append(
                {"graph6": g6(G), "nu": nu, "cm": a, "veronese_and_max": b,
                 "matchability": c, "field": field.label()}
            )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def _splitting_tables(ideal, field):
    return hm.betti_table_hochster(ideal, field).entries


def verify_betti_splitting(G, k, x, field=RATIONALS) -> VerificationReport:
    """Single-instance check of the colon decomposition and its additivity.

    Checks that (I(G)^[k] : x) equals the neighbor-sum decomposition, that
    graded Betti numbers add with the one-step homological shift on the
    intersection, and the resulting depth inequality.
    """
    rep = VerificationReport("betti-splitting", f"graph {g6(G)}, k={k}, x={x}")
    t0 = time.perf_counter()
    n = G.n
    I = matching_power(gr.edge_ideal(G), k)
    Ix = colon(I, variable(x, n))
    J = zero_ideal(n)
    for y in sorted(G.adj[x]):
        Gxy = gr.delete_vertices(G, {x, y})
        piece = ideal_product(
            minimalize([variable(y, n)], n),
            matching_power(gr.edge_ideal_labeled(Gxy, n), k - 1),
        )
        J = ideal_sum(J, piece)
    L = matching_power(
        gr.edge_ideal_labeled(gr.closed_neighborhood_deletion(G, x), n), k
    )
    rep.instances = 1
    witness = {"graph6": g6(G), "k": k, "x": x, "field": field.label()}

    if Ix != ideal_sum(J, L):
        rep.failures.append(
            {**witness, "check": "colon-decomposition",
             "lhs": Ix.key(), "rhs": ideal_sum(J, L).key()}
        )
        rep.elapsed_s = time.perf_counter() - t0
        return rep

    JL = hm.betti_table_hochster(ideal_intersection(J, L), field).entries
    TI = _splitting_tables(Ix, field)
    TJ = _splitting_tables(J, field)
    TL = _splitting_tables(L, field)
    keys = {(i, j) for (i, j) in {*TI, *TJ, *TL} if i >= 1}
    keys |= {(i + 1, j) for (i, j) in JL if i >= 1}
    for (i, j) in sorted(keys):
        lhs = TI.get((i, j), 0)
        rhs = TJ.get((i, j), 0) + TL.get((i, j), 0)
        if i >= 2:
            rhs += JL.get((i - 1, j), 0)
        if lhs != rhs:
            rep.failures.append(
                {**witness, "check": "betti-additivity", "i": i, "j": j,
                 "lhs": lhs, "rhs": rhs}
            )

    # the depth consequence rests on depth S/(y_1..y_m)L = depth S/L - (m-1),
    # which needs L != 0; the splitting machinery is stated for nonzero parts
    if not L.is_zero:
        depth_L = hm.summary(L, field).depth
        depth_Ix = hm.summary(Ix, field).depth
        if depth_L - len(G.adj[x]) < depth_Ix:
            rep.failures.append(
                {**witness, "check": "depth-inequality",
                 "depth_deletion_power": depth_L, "neighbors": len(G.adj[x]),
                 "depth_colon": depth_Ix}
            )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def run_betti_splitting(n_max, field=RATIONALS) -> VerificationReport:
    """verify_betti_splitting over all connected graphs, all k, all x."""
    rep = VerificationReport(
        "betti-splitting", f"connected graphs on 2..{n_max} vertices, all k, all x"
    )
    t0 = time.perf_counter()
    for G in corpus_no_isolated(2, n_max):
        if not gr.is_connected(G):
            continue
        for k in range(1, gr.matching_number(G) + 1):
            for x in range(G.n):
                sub = verify_betti_splitting(G, k, x, field)
                rep.instances += sub.instances
                rep.failures.extend(sub.failures)
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_hereditary(corpus, field=RATIONALS) -> VerificationReport:
    """CM matching powers survive closed-neighborhood deletion and restriction
    to connected components."""
    rep = VerificationReport("hereditary", f"{len(corpus)} graphs")
    t0 = time.perf_counter()
    for G in corpus:
        I = gr.edge_ideal(G)
        for k in range(1, gr.matching_number(G) + 1):
            if not hm.is_cohen_macaulay(matching_power(I, k), field):
                continue
            rep.instances += 1
            for x in range(G.n):
                H = gr.closed_neighborhood_deletion(G, x)
                if H.n == 0:
                    continue
                HP = matching_power(gr.local_edge_ideal(H), k)
                if not hm.is_cohen_macaulay(HP, field):
                    rep.failures.append(
                        {"graph6": g6(G), "k": k, "deleted_neighborhood_of": x,
                         "field": field.label()}
                    )
            for ci, C in enumerate(gr.connected_components(G)):
                CP = matching_power(gr.local_edge_ideal(C), k)
                if not hm.is_cohen_macaulay(CP, field):
                    rep.failures.append(
                        {"graph6": g6(G), "k": k, "component": ci,
                         "field": field.label()}
                    )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_dim_bounds(corpus) -> VerificationReport:
    """Dimension window for powers of perfectly matchable graphs, and the
    two-value dichotomy one step below the top power."""
    rep = VerificationReport("dim-bounds", f"{len(corpus)} perfect-matching graphs")
    t0 = time.perf_counter()
    for G in corpus:
        n = G.n // 2
        I = gr.edge_ideal(G)
        if gr.matching_number(G) != n:
            rep.failures.append({"graph6": g6(G), "check": "not-perfectly-matchable"})
            continue
        for k in range(1, n + 1):
            rep.instances += 1
            d = sc.krull_dim(matching_power(I, k))
            if not (2 * k - 1 <= d <= n + k - 1):
                rep.failures.append(
                    {"graph6": g6(G), "k": k, "dim": d, "check": "window"}
                )
            if n >= 2 and k == n - 1 and d not in (2 * n - 3, 2 * n - 2):
                rep.failures.append(
                    {"graph6": g6(G), "k": k, "dim": d, "check": "dichotomy"}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_perfect_matching_theorem(corpus, field=RATIONALS) -> VerificationReport:
    """On perfect-matching graphs whose next-to-last power has top dimension:
    all powers CM iff first and next-to-last powers CM iff CM forest; CM
    next-to-last powers have linear resolutions."""
    rep = VerificationReport(
        "perfect-matching", f"{len(corpus)} perfect-matching graphs (filtered by dimension)"
    )
    t0 = time.perf_counter()
    for G in corpus:
        n = G.n // 2
        if n < 2:
            continue
        I = gr.edge_ideal(G)
        P = matching_power(I, n - 1)
        if sc.krull_dim(P) != 2 * n - 2:
            continue
        rep.instances += 1
        cm_first = hm.is_cohen_macaulay(I, field)
        cm_next = hm.is_cohen_macaulay(P, field)
        b = cm_first and cm_next
        c = gr.is_forest(G) and cm_first
        if b != c:
            rep.failures.append(
                {"graph6": g6(G), "check": "equivalence", "pair_cm": b,
                 "cm_forest": c, "field": field.label()}
            )
        if b and not all_matching_powers_cm(G, field):
            rep.failures.append(
                {"graph6": g6(G), "check": "all-powers", "field": field.label()}
            )
        if cm_next and gr.is_connected(G):
            # the linear-resolution consequence needs |E| >= 2n - 1, which
            # only connectivity guarantees; two disjoint edges are a
            # counterexample otherwise (their edge ideal is a CM complete
            # intersection with a quadratic syzygy in degree 4)
            table = hm.betti_table_hochster(P, field)
            if not hm.has_linear_resolution(table, 2 * (n - 1)):
                rep.failures.append(
                    {"graph6": g6(G), "check": "linear-resolution",
                     "field": field.label()}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_vwc(n_max, field=RATIONALS) -> VerificationReport:
    """Very well-covered suite: the CM-forest equivalence, the dimension
    formula on CM members, the normalized depth function, and the bipartite
    and whisker specializations."""
    rep = VerificationReport("vwc", f"very well-covered graphs on <= {n_max} vertices")
    t0 = time.perf_counter()
    for n in range(2, n_max + 1, 2):
        for G in gr.enumerate_perfect_matching_graphs(n):
            if not gr.is_very_well_covered(G):
                continue
            rep.instances += 1
            half = G.n // 2
            I = gr.edge_ideal(G)
            nu = gr.matching_number(G)
            if not gr.has_perfect_matching(G):
                rep.failures.append({"graph6": g6(G), "check": "perfect-matching"})
            cm_first = hm.is_cohen_macaulay(I, field)
            a = all_matching_powers_cm(G, field)
            b = cm_first and (
                nu < 2 or hm.is_cohen_macaulay(matching_power(I, nu - 1), field)
            )
            c = gr.is_forest(G) and cm_first
            if not (a == b == c):
                rep.failures.append(
                    {"graph6": g6(G), "check": "equivalence", "all_powers": a,
                     "pair": b, "cm_forest": c, "field": field.label()}
                )
            if cm_first:
                for k in range(1, nu + 1):
                    d = sc.krull_dim(matching_power(I, k))
                    if d != half + k - 1:
                        rep.failures.append(
                            {"graph6": g6(G), "check": "dimension-formula",
                             "k": k, "dim": d, "expected": half + k - 1}
                        )
            if a:
                gvals = hm.normalized_depth_function(I, field)
                expected = [half - k for k in range(1, nu + 1)]
                if gvals != expected:
                    rep.failures.append(
                        {"graph6": g6(G), "check": "normalized-depth",
                         "got": gvals, "expected": expected}
                    )
    # bipartite specialization (full enumeration is available through n = 7)
    for G in corpus_no_isolated(2, min(n_max, 7)):
        if not gr.is_bipartite(G):
            continue
        rep.instances += 1
        if all_matching_powers_cm(G, field) != is_cm_forest(G, field):
            rep.failures.append(
                {"graph6": g6(G), "check": "bipartite", "field": field.label()}
            )
    # whisker specialization: whiskers of every graph on <= n_max // 2 vertices
    seen = set()
    for m in range(1, n_max // 2 + 1):
        for H in gr.enumerate_graphs(m):
            W = gr.whisker(H)
            code = gr.canonical_code(W)
            if code in seen:
                continue
            seen.add(code)
            rep.instances += 1
            if all_matching_powers_cm(W, field) != is_cm_forest(W, field):
                rep.failures.append(
                    {"graph6": g6(W), "check": "whisker", "field": field.label()}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_chordal(n_max, field=RATIONALS) -> VerificationReport:
    """Chordal graphs: all powers CM iff complete or CM forest; the
    free-facet-partition criterion for CM; the two-complete-components
    negative."""
    rep = VerificationReport("chordal", f"chordal graphs on 2..{n_max} vertices")
    t0 = time.perf_counter()
    for G in corpus_no_isolated(2, n_max):
        if not gr.is_chordal(G):
            continue
        rep.instances += 1
        lhs = all_matching_powers_cm(G, field)
        rhs = gr.is_complete(G) or is_cm_forest(G, field)
        if lhs != rhs:
            rep.failures.append(
                {"graph6": g6(G), "check": "classification", "all_powers": lhs,
                 "complete_or_cm_forest": rhs, "field": field.label()}
            )
        if is_cm_graph(G, field) != sc.has_free_facet_partition(sc.clique_complex(G)):
            rep.failures.append(
                {"graph6": g6(G), "check": "free-facet-partition",
                 "field": field.label()}
            )
    for a in range(2, n_max - 1):
        for b in range(a, n_max - a + 1):
            if a + b < 5 or a + b > n_max:
                continue
            G = gr.disjoint_union(gr.complete_graph(a), gr.complete_graph(b))
            rep.instances += 1
            I = gr.edge_ideal(G)
            nu = gr.matching_number(G)
            bad_found = not (
                hm.is_cohen_macaulay(matching_power(I, nu - 1), field)
                and hm.is_cohen_macaulay(matching_power(I, nu), field)
            )
            if not bad_found:
                rep.failures.append(
                    {"graph6": g6(G), "check": "two-complete-components",
                     "a": a, "b": b, "field": field.label()}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_cameron_walker(n_max, field=RATIONALS) -> VerificationReport:
    """Cameron-Walker graphs: all powers CM only for a single edge or a
    triangle; CM last powers force star-triangle or bipartite shape."""
    rep = VerificationReport(
        "cameron-walker", f"Cameron-Walker graphs on 2..{n_max} vertices"
    )
    t0 = time.perf_counter()
    for G in corpus_no_isolated(2, n_max):
        if not gr.is_cameron_walker(G):
            continue
        rep.instances += 1
        lhs = all_matching_powers_cm(G, field)
        rhs = gr.is_complete(G) and G.n in (2, 3)
        if lhs != rhs:
            rep.failures.append(
                {"graph6": g6(G), "check": "classification", "field": field.label()}
            )
        I = gr.edge_ideal(G)
        nu = gr.matching_number(G)
        if hm.is_cohen_macaulay(matching_power(I, nu), field):
            if not (gr.is_star_triangle(G) or gr.is_bipartite(G)):
                rep.failures.append(
                    {"graph6": g6(G), "check": "last-power-shape",
                     "field": field.label()}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


def verify_field_independence(n_max, jobs=1) -> VerificationReport:
    """Compare the positive classification sets over Q, GF(2) and GF(3)."""
    rep = VerificationReport(
        "field-independence", f"classification on 2..{n_max} vertices over q, gf2, gf3"
    )
    t0 = time.perf_counter()
    fields = [FieldSpec(0), FieldSpec(2), FieldSpec(3)]
    for n in range(2, n_max + 1):
        sets = {}
        for f in fields:
            sets[f.label()] = {r.graph6 for r in classify_all(n, f, jobs=jobs)}
        rep.instances += 1
        base = sets["q"]
        for lab, s in sets.items():
            if s != base:
                rep.failures.append(
                    {"n": n, "field": lab,
                     "only_q": sorted(base - s), "only_other": sorted(s - base)}
                )
    rep.elapsed_s = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# CLI dispatch


def run_suite(theorem, n_max, field=RATIONALS, sample=None, seed=0, jobs=1):
    """Build the right corpus and run one named suite."""
    if theorem == "last-power":
        pool = corpus_no_isolated(2, n_max - 1) if sample else []
        top = gr.enumerate_graphs(n_max, no_isolated=True)
        corpus = (
            pool + sample_graphs(top, sample, seed)
            if sample
            else corpus_no_isolated(2, n_max)
        )
        return verify_last_power_theorem(corpus, field)
    if theorem == "betti-splitting":
        return run_betti_splitting(n_max, field)
    if theorem == "hereditary":
        return verify_hereditary(corpus_no_isolated(2, n_max), field)
    if theorem == "dim-bounds":
        return verify_dim_bounds(corpus_perfect_matching(n_max))
    if theorem == "perfect-matching":
        return verify_perfect_matching_theorem(corpus_perfect_matching(n_max), field)
    if theorem == "vwc":
        return verify_vwc(n_max, field)
    if theorem == "chordal":
        return verify_chordal(n_max, field)
    if theorem == "cameron-walker":
        return verify_cameron_walker(n_max, field)
    if theorem == "field-independence":
        return verify_field_independence(n_max, jobs=jobs)
    raise InvalidInput(f"unknown theorem id {theorem!r}")


THEOREM_IDS = (
    "last-power",
    "betti-splitting",
    "hereditary",
    "dim-bounds",
    "perfect-matching",
    "vwc",
    "chordal",
    "cameron-walker",
    "field-independence",
)

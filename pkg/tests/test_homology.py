import itertools
import random

import pytest

from matchpow.errors import InvalidInput
from matchpow.graphs import (
    SimpleGraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_ideal,
    path_graph,
)
from matchpow.homology import (
    BettiTable,
    betti_table_hochster,
    betti_table_koszul,
    clear_memo,
    depth_lower_bound_check,
    has_linear_resolution,
    is_cohen_macaulay,
    normalized_depth_function,
    reduced_homology_ranks,
    summary,
    _homology_ranks_from_masks,
    _support_lattice,
)
from matchpow.monomials import (
    GF2,
    GF3,
    RATIONALS,
    colon,
    matching_power,
    mono_mask,
    parse_ideal_text,
    polarize,
    squarefree_veronese,
    unit_ideal,
    zero_ideal,
)
from matchpow.simplicial import make_complex

from conftest import random_ideal


def I(text):
    return parse_ideal_text(text)


# ---------------------------------------------------------------------------
# reduced homology


def test_homology_of_circle():
    # boundary of a triangle
    cx = make_complex(3, [(0, 1), (1, 2), (0, 2)])
    ranks = reduced_homology_ranks(cx)
    assert ranks == {-1: 0, 0: 0, 1: 1}


def test_homology_of_simplex_is_trivial():
    cx = make_complex(3, [(0, 1, 2)])
    assert all(r == 0 for r in reduced_homology_ranks(cx).values())


def test_homology_of_two_points():
    cx = make_complex(2, [(0,), (1,)])
    assert reduced_homology_ranks(cx) == {-1: 0, 0: 1}


def test_homology_of_empty_and_void():
    assert _homology_ranks_from_masks({0}, 0) == {-1: 1}
    assert _homology_ranks_from_masks(set(), 0) == {}


def test_homology_sphere():
    # boundary of the tetrahedron: H~_2 = 1
    cx = make_complex(4, list(itertools.combinations(range(4), 3)))
    ranks = reduced_homology_ranks(cx)
    assert ranks == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_projective_plane_distinguishes_gf2():
    # minimal 6-vertex triangulation of the real projective plane:
    # rationally acyclic, but GF(2) sees the torsion in dimensions 1 and 2
    tris = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
        (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5),
    ]
    cx = make_complex(6, tris)
    h_q = reduced_homology_ranks(cx, RATIONALS)
    h_2 = reduced_homology_ranks(cx, GF2)
    assert h_q == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert h_2 == {-1: 0, 0: 0, 1: 1, 2: 1}


# ---------------------------------------------------------------------------
# Betti tables


def test_betti_of_path_graph():
    t = betti_table_hochster(edge_ideal(path_graph(4)))
    assert t.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}
    assert t.pdim == 2


def test_betti_of_principal_ideal():
    t = betti_table_hochster(I("nvars 2\nx1 x2"))
    assert t.entries == {(0, 0): 1, (1, 2): 1}
    tk = betti_table_koszul(I("nvars 1\nx1^2"))
    assert tk.entries == {(0, 0): 1, (1, 2): 1}


def test_betti_engines_agree_on_random_squarefree():
    rng = random.Random(41)
    for _ in range(60):
        J = random_ideal(rng, rng.randint(2, 5), 5, 3, squarefree=True)
        th = betti_table_hochster(J)
        tk = betti_table_koszul(J)
        assert th.entries == tk.entries
        assert th.multigraded == tk.multigraded


def test_betti_engines_agree_over_prime_fields():
    rng = random.Random(43)
    for _ in range(20):
        J = random_ideal(rng, rng.randint(2, 5), 4, 3, squarefree=True)
        for f in (GF2, GF3):
            assert betti_table_hochster(J, f).entries == betti_table_koszul(J, f).entries


def test_hochster_lattice_matches_full_subset_scan():
    # walking only the union lattice loses no multigraded entries
    rng = random.Random(47)
    for _ in range(25):
        J = random_ideal(rng, 5, 4, 2, squarefree=True)
        t = betti_table_hochster(J)
        gen_masks = [mono_mask(u) for u in J.gens]
        full = {}
        for sigma in range(1, 1 << J.nvars):
            faces = []
            sub = sigma
            while True:
                if all(g & sub != g for g in gen_masks):
                    faces.append(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & sigma
            for d, r in _homology_ranks_from_masks(faces, 0).items():
                i = bin(sigma).count("1") - 1 - d
                if r > 0 and i >= 1:
                    full[(i, bin(sigma).count("1"))] = full.get(
                        (i, bin(sigma).count("1")), 0
                    ) + r
        full[(0, 0)] = 1
        assert t.entries == full


def test_polarization_preserves_betti_tables():
    cases = [
        "nvars 2\nx1^2\nx1 x2",
        "nvars 3\nx1^2 x2\nx2 x3\nx3^3",
        "nvars 2\nx1^3\nx1 x2^2",
    ]
    for text in cases:
        J = I(text)
        pol, _ = polarize(J)
        assert betti_table_koszul(J).entries == betti_table_hochster(pol).entries
    rng = random.Random(53)
    for _ in range(20):
        J = random_ideal(rng, 4, 3, 3)
        pol, _ = polarize(J)
        assert betti_table_koszul(J).entries == betti_table_hochster(pol).entries


def test_summary_paper_example_values():
    G = disjoint_union(complete_graph(2), complete_graph(3))
    s = summary(matching_power(edge_ideal(G), 2))
    assert (s.dim, s.depth, s.is_cm) == (4, 3, False)

    s2 = summary(squarefree_veronese(3, 2))
    assert s2.depth == s2.dim == 1

    s3 = summary(matching_power(edge_ideal(cycle_graph(5)), 2))
    assert s3.depth == s3.dim == 3 and s3.is_cm


def test_summary_of_zero_ideal():
    s = summary(zero_ideal(4))
    assert s.dim == s.depth == 4 and s.is_cm and s.pdim == 0


def test_summary_rejects_unit():
    with pytest.raises(InvalidInput):
        summary(unit_ideal(2))


def test_summary_non_squarefree_via_polarization():
    # (x^2, xy): depth 0 at the origin-supported quotient
    s = summary(I("nvars 2\nx1^2\nx1 x2"))
    assert (s.height, s.dim, s.pdim, s.depth, s.is_cm) == (1, 1, 2, 0, False)


def test_auslander_buchsbaum_identity():
    rng = random.Random(59)
    for _ in range(40):
        J = random_ideal(rng, rng.randint(2, 5), 4, 3)
        s = summary(J)
        assert s.depth + s.pdim == J.nvars
        assert s.depth <= s.dim
        assert s.is_cm == (s.depth == s.dim)


def test_colon_preserves_depth_on_cm_ideals():
    # for CM S/I and u outside I, S/(I:u) stays CM with the same depth
    rng = random.Random(61)
    checked = 0
    for _ in range(200):
        J = random_ideal(rng, rng.randint(2, 5), 4, 3, squarefree=True)
        s = summary(J)
        if not s.is_cm:
            continue
        for i in range(J.nvars):
            u = tuple(2 if k == i else 0 for k in range(J.nvars))
            if J.contains(u):
                continue
            su = summary(colon(J, u))
            assert su.is_cm and su.depth == s.depth
            checked += 1
    assert checked >= 30


def test_is_cohen_macaulay_gate_agrees_with_summary():
    rng = random.Random(67)
    for _ in range(50):
        J = random_ideal(rng, rng.randint(2, 5), 4, 2, squarefree=True)
        assert is_cohen_macaulay(J) == summary(J).is_cm


def test_linear_resolution_predicate():
    assert has_linear_resolution(betti_table_hochster(edge_ideal(path_graph(4))), 2)
    assert has_linear_resolution(betti_table_hochster(I("nvars 2\nx1 x2")), 2)
    # complete intersection of two disjoint edges is not linear
    two_edges = I("nvars 4\nx1 x2\nx3 x4")
    assert not has_linear_resolution(betti_table_hochster(two_edges), 2)
    with pytest.raises(InvalidInput):
        has_linear_resolution(betti_table_hochster(I("nvars 2\nx1\nx2^2")), 1)


def test_normalized_depth_function():
    # two disjoint edges: depth = 3 at the principal top power
    two = I("nvars 4\nx1 x2\nx3 x4")
    assert normalized_depth_function(two) == [1, 0]
    one = I("nvars 2\nx1 x2")
    assert normalized_depth_function(one) == [0]
    assert normalized_depth_function(edge_ideal(path_graph(4))) == [1, 0]


def test_depth_lower_bound():
    assert depth_lower_bound_check(SimpleGraph(2, [(0, 1)]), 1)
    assert depth_lower_bound_check(cycle_graph(5), 2)
    for G in (path_graph(4), cycle_graph(6), complete_graph(5)):
        from matchpow.graphs import matching_number

        for k in range(1, matching_number(G) + 1):
            assert depth_lower_bound_check(G, k)


def test_betti_table_serialization_round_trip():
    for J in (edge_ideal(path_graph(4)), squarefree_veronese(4, 2)):
        t = betti_table_hochster(J)
        back = BettiTable.from_dict(t.to_dict())
        assert back.entries == t.entries
        assert back.multigraded == t.multigraded
        assert back.field == t.field


def test_memo_returns_identical_objects():
    clear_memo()
    J = edge_ideal(cycle_graph(5))
    assert betti_table_hochster(J) is betti_table_hochster(J)
    assert summary(J) is summary(J)


def test_support_lattice():
    masks = [0b011, 0b110]
    assert _support_lattice(masks) == {0, 0b011, 0b110, 0b111}

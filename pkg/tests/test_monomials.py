import random

import pytest
from hypothesis import given, settings, strategies as st

from matchpow.errors import InvalidInput, ParseError
from matchpow.monomials import (
    FieldSpec,
    MonomialIdeal,
    big_cosize,
    colon,
    emit_ideal_text,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    initial_degree,
    matching_power,
    maximal_ideal,
    minimalize,
    mono_degree,
    mono_support,
    monomial_grade,
    parse_ideal_text,
    partial_star,
    polarize,
    principal_ideal,
    squarefree_veronese,
    unit_ideal,
    variable,
    zero_ideal,
)

from conftest import monomials_up_to_degree, random_ideal, same_ideal_by_membership


def I(text):
    return parse_ideal_text(text)


def test_minimalize_drops_multiples():
    assert I("nvars 3\nx1 x2\nx1 x2 x3") == I("nvars 3\nx1 x2")
    assert minimalize([], 3) == zero_ideal(3)
    got = minimalize([(2, 0, 0), (1, 1, 0), (2, 1, 0)], 3)
    assert got == I("nvars 3\nx1^2\nx1 x2")


def test_minimalize_rejects_bad_input():
    with pytest.raises(InvalidInput):
        minimalize([(1, 0)], 3)
    with pytest.raises(InvalidInput):
        minimalize([(1, -1, 0)], 3)


def test_minimalize_unit_monomial_gives_unit_ideal():
    assert minimalize([(0, 0)], 2).is_unit


def test_canonical_order_is_deterministic():
    a = minimalize([(0, 1, 1), (1, 1, 0), (1, 0, 1)], 3)
    b = minimalize([(1, 0, 1), (0, 1, 1), (1, 1, 0)], 3)
    assert a.gens == b.gens == ((0, 1, 1), (1, 0, 1), (1, 1, 0))


def test_sum_and_product():
    assert ideal_sum(I("nvars 3\nx1 x2"), I("nvars 3\nx1 x2 x3")) == I("nvars 3\nx1 x2")
    assert ideal_product(I("nvars 2\nx1"), I("nvars 2\nx2")) == I("nvars 2\nx1 x2")
    with pytest.raises(InvalidInput):
        ideal_sum(I("nvars 2\nx1"), I("nvars 3\nx1"))


def test_sum_reproduces_neighbor_decomposition_for_path():
    # (I(P4) : x2) built from the two neighbor pieces equals (x1, x3)
    lhs = colon(I("nvars 4\nx1 x2\nx2 x3\nx3 x4"), variable(1, 4))
    rhs = ideal_sum(
        ideal_product(principal_ideal(variable(0, 4), 4), unit_ideal(4)),
        ideal_product(principal_ideal(variable(2, 4), 4), unit_ideal(4)),
    )
    assert lhs == rhs == I("nvars 4\nx1\nx3")


def test_intersection_basics():
    assert ideal_intersection(I("nvars 2\nx1"), I("nvars 2\nx2")) == I("nvars 2\nx1 x2")
    J = I("nvars 3\nx1 x2\nx2 x3")
    assert ideal_intersection(J, J) == J


def test_colon_basics():
    assert colon(I("nvars 3\nx1 x2\nx2 x3"), variable(1, 3)) == I("nvars 3\nx1\nx3")
    J = I("nvars 3\nx1 x2\nx2 x3")
    assert colon(J, (0, 0, 0)) == J
    # u in I makes the colon the whole ring
    assert colon(I("nvars 2\nx1"), (1, 1)).is_unit


def test_unit_and_zero_conventions():
    u, z = unit_ideal(3), zero_ideal(3)
    J = I("nvars 3\nx1 x2")
    assert ideal_sum(u, J).is_unit
    assert ideal_product(u, J) == J
    assert ideal_intersection(u, J) == J
    assert ideal_product(z, J).is_zero
    assert matching_power(J, 0).is_unit


def test_ops_against_membership_oracle():
    rng = random.Random(99)
    for _ in range(60):
        nvars = rng.randint(2, 5)
        A = random_ideal(rng, nvars, 4, 4)
        B = random_ideal(rng, nvars, 4, 4)
        S = ideal_sum(A, B)
        P = ideal_product(A, B)
        X = ideal_intersection(A, B)
        u = tuple(rng.randint(0, 1) for _ in range(nvars))
        C = colon(A, u)
        prods = [
            tuple(x + y for x, y in zip(a, b)) for a in A.gens for b in B.gens
        ]
        for m in monomials_up_to_degree(nvars, 6):
            assert S.contains(m) == (A.contains(m) or B.contains(m))
            assert X.contains(m) == (A.contains(m) and B.contains(m))
            # colon membership: m in (A:u) iff m*u in A
            mu = tuple(a + b for a, b in zip(m, u))
            assert C.contains(m) == A.contains(mu)
            assert P.contains(m) == any(
                all(g <= e for g, e in zip(pr, m)) for pr in prods
            )


def test_matching_power_examples():
    P4 = I("nvars 4\nx1 x2\nx2 x3\nx3 x4")
    assert matching_power(P4, 2) == I("nvars 4\nx1 x2 x3 x4")
    K3 = I("nvars 3\nx1 x2\nx1 x3\nx2 x3")
    assert matching_power(K3, 2).is_zero
    assert matching_power(P4, 1) == P4
    # the 5-vertex graph with edges 12,23,34,15,25,45 fills the whole degree-4
    # squarefree stratum at k = 2
    H = I("nvars 5\nx1 x2\nx2 x3\nx3 x4\nx1 x5\nx2 x5\nx4 x5")
    assert matching_power(H, 2) == squarefree_veronese(5, 4)


def test_matching_power_squarefree_and_degrees():
    rng = random.Random(3)
    for _ in range(25):
        A = random_ideal(rng, 6, 6, 3, squarefree=True)
        for k in range(1, 4):
            P = matching_power(A, k)
            assert P.is_squarefree
            if k == 1:
                assert P == A


def test_monomial_grade():
    C5 = I("nvars 5\nx1 x2\nx2 x3\nx3 x4\nx4 x5\nx1 x5")
    assert monomial_grade(C5) == 2
    assert monomial_grade(I("nvars 3\nx1 x2 x3")) == 1
    K3K2 = I("nvars 5\nx1 x2\nx1 x3\nx2 x3\nx4 x5")
    assert monomial_grade(K3K2) == 2
    assert monomial_grade(zero_ideal(2)) == 0


def test_grade_consistent_with_power_vanishing():
    rng = random.Random(17)
    for _ in range(40):
        A = random_ideal(rng, 6, 5, 3)
        nu = monomial_grade(A)
        assert not matching_power(A, nu).is_zero or nu == 0
        assert matching_power(A, nu + 1).is_zero


def test_partial_star():
    assert partial_star(I("nvars 2\nx1 x2")) == I("nvars 2\nx1\nx2")
    assert partial_star(I("nvars 1\nx1^2")) == I("nvars 1\nx1")
    got = partial_star(I("nvars 4\nx1 x2 x3 x4"))
    assert got == I("nvars 4\nx1 x2 x3\nx1 x2 x4\nx1 x3 x4\nx2 x3 x4")
    with pytest.raises(InvalidInput):
        partial_star(zero_ideal(2))


def brute_big_cosize(J):
    import itertools

    full = J.gens[0]
    for g in J.gens[1:]:
        full = tuple(max(a, b) for a, b in zip(full, g))
    m = len(J.gens)
    for s in range(1, m + 1):
        ok = True
        for combo in itertools.combinations(J.gens, s):
            lcm = combo[0]
            for g in combo[1:]:
                lcm = tuple(max(a, b) for a, b in zip(lcm, g))
            if lcm != full:
                ok = False
                break
        if ok:
            return s
    return m


def test_big_cosize():
    assert big_cosize(I("nvars 4\nx1 x2\nx3 x4")) == 2
    assert big_cosize(I("nvars 3\nx1 x2 x3")) == 1
    rng = random.Random(31)
    for _ in range(50):
        A = random_ideal(rng, 5, 5, 3)
        assert big_cosize(A) == brute_big_cosize(A)


def test_polarize():
    pol, prov = polarize(I("nvars 2\nx1^2 x2"))
    assert pol == I("nvars 3\nx1 x2 x3")
    assert prov == [(0, 0), (0, 1), (1, 0)]
    sf = I("nvars 3\nx1 x2\nx2 x3")
    pol2, prov2 = polarize(sf)
    assert pol2.gens == sf.gens and pol2.nvars == 3
    assert prov2 == [(0, 0), (1, 0), (2, 0)]


def test_initial_degree():
    assert initial_degree(I("nvars 2\nx1 x2")) == 2
    assert initial_degree(maximal_ideal(4)) == 1
    with pytest.raises(InvalidInput):
        initial_degree(zero_ideal(2))


def test_field_spec():
    assert FieldSpec.parse("q").char == 0
    assert FieldSpec.parse("gf2").char == 2
    assert FieldSpec.parse("gf:7").char == 7
    with pytest.raises(InvalidInput):
        FieldSpec(4)
    with pytest.raises(InvalidInput):
        FieldSpec.parse("gf:9")


def test_text_format_round_trip():
    texts = [
        "nvars 3\nx2 x3\nx1 x2\n",
        "nvars 2\n# zero ideal\n",
        "nvars 4\n1\n",
        "nvars 5\nx2 x3\nx1^3 x4\n",
    ]
    for t in texts:
        J = parse_ideal_text(t)
        assert emit_ideal_text(J) == t
        assert parse_ideal_text(emit_ideal_text(J)) == J
    # emit always re-canonicalizes
    shuffled = parse_ideal_text("nvars 5\nx1^3 x4\nx2 x3\n")
    assert emit_ideal_text(shuffled) == "nvars 5\nx2 x3\nx1^3 x4\n"


def test_text_format_errors():
    with pytest.raises(ParseError):
        parse_ideal_text("x1 x2\n")
    with pytest.raises(ParseError):
        parse_ideal_text("nvars 2\nx3\n")
    with pytest.raises(ParseError):
        parse_ideal_text("nvars 2\ny1\n")
    with pytest.raises(ParseError):
        parse_ideal_text("")


@given(
    st.lists(
        st.tuples(*[st.integers(min_value=0, max_value=3)] * 4),
        min_size=0,
        max_size=8,
    )
)
@settings(max_examples=120, deadline=None)
def test_minimalize_idempotent(mons):
    mons = [m for m in mons if any(m)]
    A = minimalize(mons, 4)
    assert minimalize(A.gens, 4) == A
    # no generator divides another
    for u in A.gens:
        for v in A.gens:
            if u != v:
                assert not all(a <= b for a, b in zip(u, v))


def test_support_and_degree():
    assert mono_support((1, 0, 2)) == frozenset({0, 2})
    assert mono_degree((1, 0, 2)) == 3

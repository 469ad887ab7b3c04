"""Cross-checks for the exact matrix centralizer oracle.

Expected values come from two independent places: hand-counted block
decompositions of centralizers (frozen integers below) and the closed-form
signature recipes.  The matrix route computes kernels of X -> AXA^-1 - X
over exact rationals, so every comparison is literal integer equality.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecheck.algebras import Family, OutOfDomain
from liecheck.centralizers import (
    InvalidSignature,
    SigFamily,
    Signature,
    enumerate_signatures,
    signature_compact_dim,
    signature_dim,
)
from liecheck.matrixoracle import (
    FixedDims,
    InvalidElement,
    UnsupportedFamily,
    element,
    from_signature,
    g22_case,
    identity_element,
    matrix_fixed_dims,
    model,
    q_split_element,
)


def sig(family, params, *blocks):
    return Signature(family, tuple(params), tuple(blocks))


def eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rotation(n, i, j, c, s):
    """n x n identity with the block [[c, -s], [s, c]] in coordinates i, j."""
    rows = eye(n)
    rows[i][i] = Fraction(c)
    rows[i][j] = -Fraction(s)
    rows[j][i] = Fraction(s)
    rows[j][j] = Fraction(c)
    return rows


def mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


# (family, params, (dim_g, dim_k, dim_s)) -- centralizer of the identity is
# the whole algebra, so this pins every basis size against the catalog.
IDENTITY_DIMS = [
    (Family.SL_R, (3,), (8, 3, 5)),
    (Family.SL_R, (5,), (24, 10, 14)),
    (Family.SO, (1, 2), (3, 1, 2)),
    (Family.SO, (2, 3), (10, 4, 6)),
    (Family.SO, (3, 4), (21, 9, 12)),
    (Family.SU, (1, 2), (8, 4, 4)),
    (Family.SU, (2, 2), (15, 7, 8)),
    (Family.SP, (1, 1), (10, 6, 4)),
    (Family.SP, (1, 2), (21, 13, 8)),
    (Family.SO_STAR, (3,), (15, 9, 6)),
    (Family.SO_STAR, (4,), (28, 16, 12)),
    (Family.SL_H, (2,), (15, 10, 5)),
    (Family.SL_H, (3,), (35, 21, 14)),
    (Family.SP_R, (2,), (10, 4, 6)),
    (Family.SP_R, (3,), (21, 9, 12)),
    (Family.SO_CPT, (5,), (10, 10, 0)),
    (Family.SU_CPT, (3,), (8, 8, 0)),
    (Family.SP_CPT, (2,), (10, 10, 0)),
]


def test_identity_centralizer_is_everything():
    for family, params, expected in IDENTITY_DIMS:
        a = model(family, *params)
        e = identity_element(a)
        assert e.order == 1
        assert matrix_fixed_dims(e) == FixedDims(*expected), (family, params)


def test_model_keeps_the_given_presentation():
    # low-rank isomorphisms (su(2,2) ~ so(2,4), sp(4,R) ~ so(2,3)) must not
    # collapse here: the matrix model depends on the presentation.
    assert model(Family.SU, 2, 2).family is Family.SU
    assert model(Family.SP_R, 2).family is Family.SP_R


def test_q_split_fixed_dims():
    # diag(-I_{N-1}, 1): the equality witness class.
    cases = [
        (Family.SL_R, (5,), (16, 6, 10)),  # s(gl(4)+gl(1)), so(4); 10 = n(n-1)/2
        (Family.SL_R, (4,), (9, 3, 6)),
        (Family.SO, (2, 3), (6, 2, 4)),    # 4 = p(q-1)
        (Family.SO, (3, 4), (15, 6, 9)),   # 9 = p(q-1)
    ]
    for family, params, expected in cases:
        e = q_split_element(model(family, *params))
        assert e.order == 2
        assert matrix_fixed_dims(e) == FixedDims(*expected), (family, params)


def test_q_split_only_for_real_orthogonal_style_models():
    with pytest.raises(InvalidElement):
        q_split_element(model(Family.SU, 1, 2))


SPOT_SIGNATURES = [
    # (signature, frozen (dim_g, dim_k, dim_s))
    (sig(SigFamily.SO_PQ, (3, 4), (1, 1, 2), (2, 1, 1)), (7, 3, 4)),
    (sig(SigFamily.SO_PQ, (3, 4), (1, 1, 2), (-1, 2, 2)), (9, 3, 6)),
    (sig(SigFamily.SU_PQ, (2, 2), (1, 1, 1), (-1, 1, 0), (2, 0, 1)), (5, 3, 2)),
    (sig(SigFamily.SP_PQ, (1, 2), (1, 1, 1), (-1, 0, 1)), (13, 9, 4)),
    (sig(SigFamily.SP_PQ, (1, 2), (2, 1, 1), (1, 0, 1)), (7, 5, 2)),
    (sig(SigFamily.SOSTAR_2N, (4,), (1, 3, 0), (-1, 1, 0)), (16, 10, 6)),
    (sig(SigFamily.SOSTAR_2N, (4,), (2, 1, 1), (1, 2, 0)), (10, 6, 4)),
    (sig(SigFamily.SO_N, (7,), (1, 6, 0), (-1, 1, 0)), (15, 15, 0)),
    (sig(SigFamily.SU_N, (5,), (1, 4, 0), (-1, 1, 0)), (16, 16, 0)),
    (sig(SigFamily.SP_N_COMPACT, (3,), (1, 2, 0), (2, 1, 0)), (11, 11, 0)),
]


def test_spot_signatures_frozen_dims():
    for s, expected in SPOT_SIGNATURES:
        got = matrix_fixed_dims(from_signature(s))
        assert got == FixedDims(*expected), s
        # the same numbers must fall out of the combinatorial recipes
        if s.family in (SigFamily.SO_N, SigFamily.SU_N, SigFamily.SP_N_COMPACT):
            assert got.dim_centralizer_k == signature_dim(s)
        else:
            assert got.dim_s_fixed == signature_dim(s)
            assert got.dim_centralizer_k == signature_compact_dim(s)


SWEEP = [
    (SigFamily.SO_PQ, (1, 2)),
    (SigFamily.SO_PQ, (2, 2)),
    (SigFamily.SO_PQ, (2, 3)),
    (SigFamily.SU_PQ, (1, 1)),
    (SigFamily.SU_PQ, (1, 2)),
    (SigFamily.SU_PQ, (2, 2)),
    (SigFamily.SP_PQ, (1, 1)),
    (SigFamily.SP_PQ, (1, 2)),
    (SigFamily.SOSTAR_2N, (3,)),
    (SigFamily.SOSTAR_2N, (4,)),
    (SigFamily.SO_N, (5,)),
    (SigFamily.SU_N, (4,)),
    (SigFamily.SP_N_COMPACT, (2,)),
]


def test_matrix_route_agrees_with_every_small_class():
    checked = 0
    for family, params in SWEEP:
        for s in enumerate_signatures(family, params, order_le_4=True):
            got = matrix_fixed_dims(from_signature(s))
            if family in (SigFamily.SO_N, SigFamily.SU_N, SigFamily.SP_N_COMPACT):
                assert got.dim_s_fixed == 0, s
                assert got.dim_centralizer_k == signature_dim(s), s
            else:
                assert got.dim_s_fixed == signature_dim(s), s
                assert got.dim_centralizer_k == signature_compact_dim(s), s
            assert got.dim_centralizer_g == got.dim_centralizer_k + got.dim_s_fixed
            checked += 1
    assert checked > 50


def test_element_orders_and_integer_entries():
    quarter = from_signature(sig(SigFamily.SO_PQ, (3, 4), (1, 1, 2), (2, 1, 1)))
    assert quarter.order == 4
    half = from_signature(sig(SigFamily.SO_PQ, (3, 4), (1, 1, 2), (-1, 2, 2)))
    assert half.order == 2
    unitary = from_signature(sig(SigFamily.SU_PQ, (1, 2), (2, 1, 1), (1, 0, 1)))
    assert unitary.order == 4
    for e in (quarter, half, unitary):
        assert {x for row in e.entries for x in row} <= {-1, 0, 1}


def test_rejects_infinite_and_unsupported_orders():
    a = model(Family.SL_R, 2)
    with pytest.raises(InvalidElement):
        element(a, [[1, 1], [0, 1]])  # unipotent shear, infinite order
    with pytest.raises(InvalidElement):
        element(a, [[0, -1], [1, -1]])  # order 3 does not divide 4


def test_rejects_form_breaking_and_non_orthogonal_elements():
    a = model(Family.SO, 1, 2)
    # swaps a positive and a negative coordinate: not an isometry of the form
    with pytest.raises(InvalidElement, match="algebra"):
        element(a, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    # boost-conjugated reflection: preserves the form but moves the maximal
    # compact, so the k/p split is not respected
    f = Fraction
    boosted = [
        [f(41, 9), f(-40, 9), 0],
        [f(40, 9), f(-41, 9), 0],
        [0, 0, 1],
    ]
    with pytest.raises(InvalidElement, match="compact"):
        element(a, boosted)


def test_rejects_wrong_shape():
    with pytest.raises(InvalidElement):
        element(model(Family.SO, 2, 3), eye(4))


def test_unsupported_ambients():
    with pytest.raises(UnsupportedFamily):
        model(Family.G2_2)
    with pytest.raises(UnsupportedFamily):
        model(Family.SL_C, 3)
    with pytest.raises(UnsupportedFamily):
        model(Family.E8_8)
    with pytest.raises(OutOfDomain):
        model(Family.SO, 0, 3)
    with pytest.raises(OutOfDomain):
        model(Family.SL_R, 1)


def test_from_signature_needs_order_dividing_four():
    # two distinct rotation angles cannot both have order <= 4
    s = sig(SigFamily.SO_PQ, (4, 4), (2, 1, 1), (3, 1, 1))
    with pytest.raises(InvalidElement):
        from_signature(s)
    with pytest.raises(InvalidSignature):
        from_signature(sig(SigFamily.SO_PQ, (2, 3), (1, 2, 3)))  # central


def test_conjugation_invariance_hand_picked():
    a = model(Family.SO, 2, 3)
    base = from_signature(sig(SigFamily.SO_PQ, (2, 3), (1, 0, 1), (2, 1, 1)))
    want = matrix_fixed_dims(base)
    assert want == FixedDims(4, 2, 2)
    # rotation inside the negative part mixing the fixed +1 coordinate with
    # half of the rotation pair
    p = rotation(5, 2, 3, Fraction(3, 5), Fraction(4, 5))
    pinv = rotation(5, 2, 3, Fraction(3, 5), Fraction(-4, 5))
    moved = element(a, mul(mul(p, [list(r) for r in base.entries]), pinv))
    assert matrix_fixed_dims(moved) == want

    b = model(Family.SL_R, 5)
    split = q_split_element(b)
    p = rotation(5, 3, 4, Fraction(5, 13), Fraction(12, 13))
    pinv = rotation(5, 3, 4, Fraction(5, 13), Fraction(-12, 13))
    moved = element(b, mul(mul(p, [list(r) for r in split.entries]), pinv))
    assert matrix_fixed_dims(moved) == FixedDims(16, 6, 10)


@settings(max_examples=40, deadline=None)
@given(
    t=st.fractions(min_value=-3, max_value=3, max_denominator=8),
    u=st.fractions(min_value=-3, max_value=3, max_denominator=8),
)
def test_conjugation_invariance_rational_rotations(t, u):
    # (1-t^2, 2t)/(1+t^2) runs over rational points of the circle
    base = from_signature(sig(SigFamily.SO_PQ, (2, 3), (1, 0, 1), (2, 1, 1)))
    rows = [list(r) for r in base.entries]
    for pos, w in ((2, t), (3, u)):
        c = (1 - w * w) / (1 + w * w)
        s = 2 * w / (1 + w * w)
        p = rotation(5, pos, pos + 1, c, s)
        pinv = rotation(5, pos, pos + 1, c, -s)
        rows = mul(mul(p, rows), pinv)
    moved = element(model(Family.SO, 2, 3), rows)
    assert matrix_fixed_dims(moved) == FixedDims(4, 2, 2)


def test_g22_rotation_case_report():
    r = g22_case()
    assert r.ambient.family is Family.SO and r.ambient.params == (3, 4)

    # quarter turn: exact kernel dims, recorded next to the classical count 6
    assert r.quarter_turn == FixedDims(7, 3, 4)
    assert r.counted_centralizer_dim == 6
    assert r.quarter_turn.dim_centralizer_g != r.counted_centralizer_dim
    assert r.compact_centralizer_dim == 2
    assert r.chain_upper_bound == r.quarter_turn.dim_centralizer_g - 2 == 5
    assert r.strict_target == 6
    assert r.strict is True

    # the independent combinatorial route must reproduce the kernel numbers
    assert signature_dim(r.quarter_signature) == r.quarter_turn.dim_s_fixed
    assert signature_compact_dim(r.quarter_signature) == 3

    # half turn: involution, centralizer strictly larger, chain not strict
    assert r.half_turn == FixedDims(9, 3, 6)
    assert r.half_turn_chain == 7
    assert r.half_turn_chain >= r.strict_target
    assert r.half_turn_needs_involution_route is True
    assert signature_dim(r.half_signature) == r.half_turn.dim_s_fixed

    # zero angle degenerates to the identity
    assert r.zero_turn_rejected is True


def test_g22_quarter_matches_direct_signature_construction():
    s = sig(SigFamily.SO_PQ, (3, 4), (1, 1, 2), (2, 1, 1))
    assert matrix_fixed_dims(from_signature(s)) == g22_case().quarter_turn

import numpy as np
import pytest

from slrc.construct import (CodeShape, ConstructionParams, build_parity_check,
                            build_w_star, code_params, constructed_from_matrix,
                            expand_m_star)
from slrc.designs import affine_design, complete_graph_design
from slrc.errors import ParameterError
from slrc.field import GF
from slrc.mds import build_mds_parity
from slrc.reference import golden, reference_code


def k4_params(delta=3, q=4):
    gf = GF(q)
    design = complete_graph_design(3)
    mds = build_mds_parity(3, delta, gf)
    return ConstructionParams(r=3, delta=delta, t_i=2, field=gf,
                              design=design, mds=mds)


def test_m_star_reference():
    params = k4_params()
    m_star = expand_m_star(params.design, params.mds)
    assert (m_star == golden("m_star")).all()


def test_m_star_delta2_all_ones_q_equals_m():
    params = k4_params(delta=2)
    m_star = expand_m_star(params.design, params.mds)
    assert (m_star == params.design.incidence).all()


def test_m_star_block_column_structure():
    params = k4_params()
    m_star = expand_m_star(params.design, params.mds)
    d1 = params.delta - 1
    for col in range(params.k):
        nonzero_blocks = sum(
            1 for j in range(params.b)
            if m_star[j * d1:(j + 1) * d1, col].any())
        assert nonzero_blocks == params.t_i


def test_w_star_single_block_is_q():
    params = k4_params()
    W = build_w_star(2, params.mds)
    assert (W == params.mds.Q).all()


def test_w_star_delta2_all_ones():
    gf = GF(4)
    mds = build_mds_parity(3, 2, gf)
    W = build_w_star(1, mds)
    assert (W == np.ones((1, 3), dtype=int)).all()


def test_w_star_three_blocks():
    gf = GF(8)
    mds = build_mds_parity(3, 3, gf)
    W = build_w_star(7, mds)
    assert W.shape == (3 * 2, 9)
    for t in range(3):
        assert (W[2 * t:2 * t + 2, 3 * t:3 * t + 3] == mds.Q).all()
    mask = np.ones_like(W, dtype=bool)
    for t in range(3):
        mask[2 * t:2 * t + 2, 3 * t:3 * t + 3] = False
    assert (W[mask] == 0).all()


def test_reference_h_bit_exact():
    code = reference_code()
    assert (code.H == golden("h")).all()
    assert code.n == 16 and code.k == 6
    assert code.rank == 10 and code.dimension == 6


def test_identity_blocks_positions():
    for params in [k4_params(), k4_params(delta=2),
                   ConstructionParams(r=3, delta=3, t_i=2, field=GF(4),
                                      design=affine_design(3, 2),
                                      mds=build_mds_parity(3, 3, GF(4)))]:
        code = build_parity_check(params)
        mu = params.mu
        g = params.w_blocks * (params.delta - 1)
        k = params.k
        assert (code.H[:mu, k:k + mu] == np.eye(mu, dtype=int)).all()
        assert (code.H[mu:, -g:] == np.eye(g, dtype=int)).all()
        assert (code.H[mu:, :k] == 0).all()
        assert code.n - code.H.shape[0] == k


def test_delta2_dimensions():
    code = build_parity_check(k4_params(delta=2))
    assert code.H.shape == (5, 11)
    assert code.dimension == 6


def test_row_blocks_recover_local_matrix():
    code = reference_code()
    d1 = code.params.delta - 1
    local = code.params.mds.matrix
    local_cols = {tuple(c) for c in local.T}
    for j in range(code.params.b):
        support = code.row_block_support(j)
        assert len(support) == 5
        block = code.H[j * d1:(j + 1) * d1][:, support]
        assert {tuple(c) for c in block.T} == local_cols


def test_code_params_reference():
    params = k4_params()
    cp = code_params(params)
    assert cp["n"] == 16 and cp["k"] == 6
    assert cp["rate"] == 0.375
    assert cp["t_claim"] == 4 and cp["t_abstract"] == 7


def test_code_params_delta2():
    params = k4_params(delta=2)
    cp = code_params(params)
    assert cp["n"] == params.k + params.b + params.w_blocks == 11


def test_code_params_affine_cross_check():
    params = ConstructionParams(r=3, delta=3, t_i=2, field=GF(4),
                                design=affine_design(3, 2),
                                mds=build_mds_parity(3, 3, GF(4)))
    code = build_parity_check(params)
    assert code_params(params)["n"] == code.n


def test_param_validation():
    gf = GF(4)
    with pytest.raises(ParameterError):
        ConstructionParams(r=3, delta=3, t_i=4, field=gf,
                           design=complete_graph_design(3),
                           mds=build_mds_parity(3, 3, gf))
    with pytest.raises(ParameterError):
        ConstructionParams(r=3, delta=3, t_i=2, field=gf,
                           design=complete_graph_design(4),
                           mds=build_mds_parity(3, 3, gf))


def test_w_star_wider_than_parity_block_errors():
    from slrc.designs import Design
    gf = GF(4)
    design = Design(k=4, r=4, t_i=1, lines=((0, 1, 2, 3),))
    params = ConstructionParams(r=4, delta=2, t_i=1, field=gf,
                                design=design,
                                mds=build_mds_parity(4, 2, gf))
    with pytest.raises(ParameterError, match="W\\*"):
        build_parity_check(params)


def test_encode_zero_message():
    code = reference_code()
    assert code.encode([0] * 6) == (0,) * 16


def test_encode_unit_message():
    code = reference_code()
    word = code.encode([1, 0, 0, 0, 0, 0])
    assert word[6] == 1 and word[7] == 1  # char 2: negation is identity


def test_encode_random_membership():
    code = reference_code()
    lc = code.as_linear_code()
    rng = np.random.default_rng(23)
    for _ in range(200):
        word = code.encode([int(x) for x in rng.integers(0, 4, size=6)])
        assert lc.contains(word)


def test_encode_rejects_bad_length():
    code = reference_code()
    with pytest.raises(ValueError):
        code.encode([0] * 5)


def test_constructed_from_matrix_round_trip():
    code = reference_code()
    shape = CodeShape(field=code.field, r=3, delta=3, t_i=2, k=6, b=4)
    again = constructed_from_matrix(
        code.field, code.H,
        {"r": 3, "delta": 3, "t_i": 2, "k": 6, "b": 4},
        code.coordinate_roles)
    assert (again.H == code.H).all()
    assert again.params == shape
    assert again.params.mu == 8 and again.params.s == 2

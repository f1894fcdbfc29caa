"""Yetter-Drinfeld compatibility, tensor closure, B maps and twists."""

from itertools import product

import pytest

from conftest import FROZEN, cube, sparse_columns, z2_bialgebra

from homcat.exact_tensor import QQ, LinMap, diag, identity
from homcat.hom_structures import HomBialgebra
from homcat.qt_braiding import check_hom_ybe, check_mixed_hom_ybe
from homcat.rep_theory import check_comodule_morphism, check_module_morphism
from homcat.yetter_drinfeld import (
    YDModule, b_yd, check_yd, f_twist_yd, quasi_braiding_yd, yd_associator,
    yd_from_cubes, yd_tensor,
)
from homcat.yetter_drinfeld import _b_yd_map, _yd_tensor_coaction

Z2MUL = cube({(i, j, (i + j) % 2): 1 for i in range(2) for j in range(2)},
             (2, 2, 2))
REGCO = cube({(i, i, i): 1 for i in range(2)}, (2, 2, 2))
CONCO = cube({(i, 1, i): 1 for i in range(2)}, (2, 2, 2))
SIGN = cube({(h, m, m): (-1) ** (h * m) for h in range(2) for m in range(2)},
            (2, 2, 2))
TRIV = cube({(h, m, m): 1 for h in range(2) for m in range(2)}, (2, 2, 2))


@pytest.fixture(scope="module")
def H():
    return z2_bialgebra()


@pytest.fixture(scope="module")
def yd_regular():
    # regular action paired with the grading coaction: not compatible
    return yd_from_cubes(QQ, Z2MUL, REGCO, identity(2))


@pytest.fixture(scope="module")
def pool():
    return {
        "A": yd_from_cubes(QQ, Z2MUL, CONCO, identity(2)),
        "B": yd_from_cubes(QQ, SIGN, REGCO, identity(2)),
        "C": yd_from_cubes(QQ, TRIV, REGCO, identity(2)),
    }


def viol_freeze(vs):
    return [(v.axiom, v.index,
             [(i, str(c)) for i, c in v.lhs],
             [(i, str(c)) for i, c in v.rhs]) for v in vs]


# ---------------------------------------------------------- compatibility

def test_regular_grading_pair_fails_homyd(H, yd_regular):
    rep = check_yd(H, yd_regular)
    assert rep.ok == FROZEN["z2_yd_regular_ok"]
    assert list(rep.failed_axioms) == ["homYD"]
    assert (viol_freeze(rep.violations)[:1]
            == FROZEN["z2_yd_regular_first_violation"])


def test_constant_coaction_fixture_passes(H):
    M = yd_from_cubes(QQ, Z2MUL, CONCO, identity(2))
    rep = check_yd(H, M)
    assert rep.ok
    assert (rep.axiom_status["comodul1"] and rep.axiom_status["comodul2"]) \
        == FROZEN["z2_yd_constant_comodule_ok"]
    assert rep.axiom_status["homYD"] == FROZEN["z2_yd_constant_homyd_ok"]


def test_valid_pool(H, pool):
    got = {k: check_yd(H, M).ok for k, M in pool.items()}
    assert got == FROZEN["z2_yd_valid_fixtures_ok"]


def test_scaled_twist_breaks_sign_fixture(H):
    M = yd_from_cubes(QQ, SIGN, REGCO, diag([2, 2]))
    assert check_yd(H, M).ok == FROZEN["z2_yd_fixture_B_scaled_ok"]


def test_zero_fixture_tolerates_any_twist(H):
    zc = cube({}, (2, 2, 2))
    M = yd_from_cubes(QQ, zc, zc, diag([2, 3]))
    assert check_yd(H, M).ok == FROZEN["z2_yd_zero_scaled_ok"]


def test_check_yd_axiom_ids(H, pool):
    rep = check_yd(H, pool["A"])
    assert rep.checked == ["comodul1", "comodul2", "eq8", "eq9", "homYD"]


# -------------------------------------------------------- tensor structure

def test_tensor_coaction_matches_frozen(H, yd_regular):
    tc = _yd_tensor_coaction(H, yd_regular, yd_regular)
    got = {}
    for m in range(2):
        for n in range(2):
            col = tc.column(m * 2 + n)
            ent = [((r // 4, (r // 2) % 2, r % 2), str(c))
                   for r, c in enumerate(col) if c != QQ.zero]
            got[(m, n)] = ent
    assert got == FROZEN["z2_yd_tensor_coact"]


def test_tensor_closure(H, pool):
    got = {}
    for f1, f2 in product("ABC", repeat=2):
        T = yd_tensor(H, pool[f1], pool[f2])
        got[f1 + f2] = check_yd(H, T).ok
    assert got == FROZEN["z2_yd_tensor_closure_ok"]


def test_tensor_gates_on_invalid_input(H, yd_regular):
    with pytest.raises(ValueError, match="precondition fails"):
        yd_tensor(H, yd_regular, yd_regular)


# ------------------------------------------------------------------ B map

def test_b_map_on_regular_pair_matches_frozen(H, yd_regular):
    B = _b_yd_map(H, yd_regular, yd_regular)
    assert sparse_columns(B, (2, 2), (2, 2)) == FROZEN["z2_b_yd"]
    rep = check_hom_ybe(B, identity(2))
    assert (rep.axiom_status["eq145"],
            rep.axiom_status["ybe-compat"]) == FROZEN["z2_b_yd_ybe_ok"]


def test_b_map_tables_and_morphisms(H, pool):
    tables = {}
    morphisms = {}
    for f1, f2 in product("ABC", repeat=2):
        M, N = pool[f1], pool[f2]
        b = b_yd(H, M, N)
        tables[f1 + f2] = sparse_columns(b, (2, 2), (2, 2))
        src = yd_tensor(H, M, N)
        dst = yd_tensor(H, f_twist_yd(H, N), f_twist_yd(H, M))
        morphisms[f1 + f2] = (
            check_module_morphism(b, H, src.module, dst.module).ok,
            check_comodule_morphism(b, H.coalgebra, src.comodule,
                                    dst.comodule).ok)
    assert tables == FROZEN["z2_b_yd_tables"]
    assert morphisms == FROZEN["z2_b_yd_morphism_ok"]


def test_mixed_braid_relation_on_pool(H, pool):
    got = {}
    for f1, f2, f3 in product("ABC", repeat=3):
        M, N, P = pool[f1], pool[f2], pool[f3]
        got[f1 + f2 + f3] = check_mixed_hom_ybe(
            b_yd(H, M, N), b_yd(H, M, P), b_yd(H, N, P),
            M.alpha, N.alpha, P.alpha).ok
    assert got == FROZEN["z2_yd_mixed_ybe_ok"]


# ------------------------------------------------ derived transformations

def test_quasi_braiding_equals_b_for_identity_twists(H, pool):
    A, B = pool["A"], pool["B"]
    assert quasi_braiding_yd(H, A, B) == b_yd(H, A, B)


def test_associator_on_scalar_twists():
    zero_act = LinMap.from_rows(QQ, [[0, 0]])
    zero_co = LinMap.from_rows(QQ, [[0], [0]])
    M = YDModule(QQ, zero_act, zero_co, diag([2]))
    N = YDModule(QQ, zero_act, zero_co, identity(1))
    P = YDModule(QQ, zero_act, zero_co, diag([3]))
    a = yd_associator(M, N, P)
    assert str(a.entry(0, 0)) == "3/2"


def test_f_twist_is_identity_over_classical_base(H, pool):
    A = pool["A"]
    FA = f_twist_yd(H, A)
    assert (FA.action, FA.coaction, FA.alpha) == (A.action, A.coaction, A.alpha)


def test_f_twist_preserves_b(H, pool):
    A, B = pool["A"], pool["B"]
    assert b_yd(H, f_twist_yd(H, A), f_twist_yd(H, B)) == b_yd(H, A, B)


# ------------------------------------------------------------ entry gates

def test_unequal_twists_rejected(yd_regular):
    Hbad = HomBialgebra(QQ, Z2MUL, REGCO, identity(2), diag([1, -1]))
    with pytest.raises(ValueError, match="equal twist maps"):
        check_yd(Hbad, yd_regular)


def test_singular_twist_rejected(yd_regular):
    Hbad = HomBialgebra(QQ, Z2MUL, REGCO, diag([1, 0]), diag([1, 0]))
    with pytest.raises(ValueError, match="invertible twist map"):
        check_yd(Hbad, yd_regular)


def test_quasi_braiding_needs_invertible_module_twists(H, pool):
    bad = YDModule(QQ, LinMap.from_rows(QQ, [[0] * 4, [0] * 4]),
                   LinMap.from_rows(QQ, [[0] * 2] * 4), diag([1, 0]))
    with pytest.raises(ValueError, match="invertible"):
        quasi_braiding_yd(H, bad, pool["A"])


def test_yd_shape_validation():
    with pytest.raises(ValueError):
        YDModule(QQ, LinMap.from_rows(QQ, [[0] * 4, [0] * 4]),
                 LinMap.from_rows(QQ, [[0] * 2] * 6), identity(2))

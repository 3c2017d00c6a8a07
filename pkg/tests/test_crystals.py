import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from cyldim.combinatorics import (
    BinaryString,
    BoxShape,
    Partition,
    as_composition,
    conjugate,
    degree,
    partition_to_string,
)
from cyldim.crystals import (
    R_lambda,
    build_crystal_graph,
    column_highest,
    combinatorial_R,
    e,
    epsilon_by_iteration,
    f,
    f_single,
    omega,
    phi_by_iteration,
    r_matrix_table,
    satisfies_rmatrix_condition,
    satisfies_signature_condition,
    select_B_lambda,
    signature,
    tensor_vertices,
)
from cyldim.dimers import count_from, enumerate_configurations, to_crystal_vertex
from cyldim.errors import BudgetExceeded
from cyldim.qcohomology import quantum_kostka

P = BinaryString.parse


def test_f_single_examples():
    assert str(f_single(P("011"), 2)) == "101"
    assert f_single(P("011"), 1) is None
    assert str(f_single(P("100"), 3)) == "001"


def test_omega_examples():
    z = BinaryString.zeros(5)
    assert omega((z,)) == (z,)
    assert omega((P("100"),)) == (P("001"),)
    b = (P("10110"), P("00011"))
    assert omega(b, 5) == b
    assert omega(omega(b), -1) == b


@pytest.mark.parametrize("n,r", [(3, 1), (4, 2), (6, 3), (7, 5)])
def test_highest_column_signature(n, r):
    sig = signature((column_highest(n, r),))
    assert sig.varphi(r) == 1 and sig.epsilon(r) == 0
    for i in range(1, n):
        if i != r:
            assert sig.varphi(i) == sig.epsilon(i) == 0


def test_tensor_tie_breaking():
    one, two = P("001"), P("010")
    # eps(b1) = phi(b2) = 0: f lowers the left factor, e raises the right one
    assert f((one, two), 1) == (two, two)
    assert e((one, two), 1) == (one, one)
    # eps(b1) = phi(b2) = 1: the pair cancels for color 1
    assert signature((two, one)).varphi(1) == signature((two, one)).epsilon(1) == 0
    assert f((two, one), 1) is None and e((two, one), 1) is None


@st.composite
def tensor_vertex(draw, max_n=6, max_len=4):
    n = draw(st.integers(3, max_n))
    length = draw(st.integers(1, max_len))
    return tuple(BinaryString(n, draw(st.integers(0, 2**n - 1))) for _ in range(length))


@given(tensor_vertex())
@settings(max_examples=300)
def test_crystal_axioms(b):
    n = b[0].n
    sig = signature(b)
    for i in range(1, n + 1):
        w = f(b, i)
        if w is not None:
            assert e(w, i) == b
            assert signature(w).varphi(i) == sig.varphi(i) - 1
            assert signature(w).epsilon(i) == sig.epsilon(i) + 1
        u = e(b, i)
        if u is not None:
            assert f(u, i) == b
        assert sig.epsilon(i) == epsilon_by_iteration(b, i)
        assert sig.varphi(i) == phi_by_iteration(b, i)


@given(tensor_vertex(max_n=7, max_len=3))
def test_omega_intertwines_colors(b):
    n = b[0].n
    for i in range(1, n + 1):
        fb = f(b, i)
        assert (None if fb is None else omega(fb)) == f(omega(b), i % n + 1)


def test_small_crystal_graph():
    g = build_crystal_graph((1,), 3)
    assert len(g.vertices) == 3 and len(g.edges) == 3 and g.is_connected()
    assert {i for (_, i) in g.edges} == {1, 2, 3}
    assert g.to_dot() == build_crystal_graph((1,), 3).to_dot()


@pytest.mark.parametrize("weights,n", [((1, 2), 4), ((2, 2, 1), 5), ((3,), 6)])
def test_graph_sizes(weights, n):
    g = build_crystal_graph(weights, n)
    assert len(g.vertices) == math.prod(math.comb(n, r) for r in weights)
    assert g.is_connected()


def test_graph_budget():
    with pytest.raises(BudgetExceeded) as info:
        build_crystal_graph((2, 4, 2, 3, 2), 9, budget=1000)
    assert info.value.bound == 36 * 126 * 36 * 84 * 36


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_r_matrix_on_equal_weights_is_identity(n):
    # the identity is a color-preserving isomorphism, so uniqueness forces R = id
    for r in range(1, n):
        table = r_matrix_table(r, r, n)
        assert all(x == y for x, y in table.items())
        u = column_highest(n, r)
        assert combinatorial_R(u, u) == (u, u)


def test_r_matrix_known_values():
    x, y = P("0001"), P("0011")
    out = combinatorial_R(x, y)
    assert signature(out) == signature((x, y))
    assert (out[0].weight, out[1].weight) == (2, 1)
    assert combinatorial_R(*out) == (x, y)


def test_r_lambda_single_factor_matches_r():
    for x, y in itertools.product(tensor_vertices((2,), 5)[:4], tensor_vertices((1,), 5)):
        (b,), back = R_lambda(x[0], y)
        assert (b, back) == combinatorial_R(x[0], y[0])


def test_select_trivial():
    box = BoxShape(2, 5)
    e0 = Partition((), box)
    assert select_B_lambda(e0, e0, (0, 0)) == [(BinaryString.zeros(5),) * 2]
    assert select_B_lambda(e0, e0, (1, 0)) == []


def test_signature_condition_alone_over_counts():
    box = BoxShape(2, 4)
    mu, nu = Partition((), box), Partition((2, 2), box)
    sig = select_B_lambda(mu, nu, (2, 2), "signature")
    both = select_B_lambda(mu, nu, (2, 2))
    assert [[str(x) for x in b] for b in sig] == [["0011", "0110"], ["0110", "0011"]]
    assert len(both) == 1 == count_from(mu, (2, 2))[nu] == quantum_kostka(mu, (2, 2))[nu][1]


def test_omega_direction_matters():
    box = BoxShape(2, 4)
    mu, nu = Partition((), box), Partition((2, 2), box)
    (b,) = select_B_lambda(mu, nu, (2, 2))
    front = partition_to_string(conjugate(mu))
    back = partition_to_string(conjugate(nu))
    assert R_lambda(front, omega(b, 1)) == (b, back)
    assert R_lambda(front, omega(b, -1)) != (b, back)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_rmatrix_condition_implies_signature_condition(n):
    for k in range(1, min(3, n - 1) + 1):
        box = BoxShape(k, n)
        parts = box.partitions()
        for lam in parts:
            for mu, nu in itertools.product(parts, repeat=2):
                if degree(lam.size, mu, nu) is None:
                    continue
                rm = select_B_lambda(mu, nu, lam, "rmatrix")
                sig = select_B_lambda(mu, nu, lam, "signature")
                assert set(rm) <= set(sig)
                assert rm == select_B_lambda(mu, nu, lam, "both")


def test_dimer_images_pass_both_conditions():
    box = BoxShape(3, 6)
    parts = box.partitions()
    for lam in parts[::3]:
        for mu, nu in itertools.product(parts[::2], repeat=2):
            for c in enumerate_configurations(mu, nu, as_composition(lam, box)):
                b = to_crystal_vertex(c)
                assert satisfies_signature_condition(b, mu, nu)
                assert satisfies_rmatrix_condition(b, mu, nu)


def test_unknown_condition():
    box = BoxShape(1, 3)
    with pytest.raises(ValueError):
        select_B_lambda(Partition((), box), Partition((1,), box), (1,), "neither")

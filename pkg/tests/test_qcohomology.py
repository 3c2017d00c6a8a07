import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cyldim.combinatorics import BoxShape, Partition, as_composition, kostka_number
from cyldim.dimers import enumerate_all, total_configurations
from cyldim.errors import InvariantViolation
from cyldim.oracles import lr_coefficient, rim_hook_product, rim_hook_reduce
from cyldim.qcohomology import (
    RingElement,
    composition_multiplicity,
    gromov_witten,
    gw_rows,
    kostka_rows,
    pieri_multiply,
    projective_product,
    quantum_kostka,
    rows_to_json,
    rows_to_tsv,
    schubert_product,
    schur_coefficients_from_monomials,
    sum_rule_gw,
    sum_rule_kostka,
    toric_rows,
    toric_schur,
)

B13 = BoxShape(1, 3)
B24 = BoxShape(2, 4)


def S(box, *parts, d=0, c=1):
    return RingElement.schubert(Partition(parts, box), d, c)


def test_pieri_examples():
    for n, k in [(4, 2), (6, 3), (5, 1)]:
        box = BoxShape(k, n)
        for r in range(n - k + 1):
            assert pieri_multiply(RingElement.one(box), r) == (S(box, r) if r else RingElement.one(box))
    assert pieri_multiply(S(B13, 2), 1) == S(B13, d=1)
    assert pieri_multiply(S(B24, 1), 1) == S(B24, 2) + S(B24, 1, 1)
    assert pieri_multiply(S(B24, 1), 3) == RingElement(B24)


def test_quantum_kostka_oracle_case():
    assert quantum_kostka(Partition((2,), B13), (1,)) == {Partition((), B13): (1, 1)}


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 3), (6, 2)])
def test_degree_zero_sector_is_classical_kostka(n, k):
    box = BoxShape(k, n)
    empty = Partition((), box)
    for alpha in box.compositions():
        table = quantum_kostka(empty, alpha)
        for nu in box.partitions():
            if nu.size != alpha.size:
                continue
            expected = kostka_number(nu.parts, alpha.parts)
            assert table.get(nu, (0, 0)) == ((0, expected) if expected else (0, 0))


def test_schubert_examples():
    for lam in B24.partitions():
        assert schubert_product(Partition((), B24), lam) == {lam: {0: 1}}
    assert schubert_product(Partition((2,), B13), Partition((2,), B13)) == {Partition((1,), B13): {1: 1}}
    one = Partition((1,), B24)
    assert schubert_product(one, one) == {Partition((2,), B24): {0: 1}, Partition((1, 1), B24): {0: 1}}


def test_gr24_quantum_table():
    p = lambda *x: Partition(x, B24)  # noqa: E731
    assert schubert_product(p(2, 1), p(2, 1)) == {p(1, 1): {1: 1}, p(2): {1: 1}}
    assert schubert_product(p(2), p(1, 1)) == {p(): {1: 1}}
    assert schubert_product(p(2, 2), p(2, 2)) == {p(): {2: 1}}
    assert gromov_witten(p(1), p(2, 1), p(), 1) == 1
    assert gromov_witten(p(1), p(2, 1), p(2, 2), 0) == 1


def test_rim_hook_reduce_examples():
    # (3) in Gr(1,3): one 3-hook of height 1 leaves the empty core
    assert rim_hook_reduce((3,), 1, 3) == (1, (), 1)
    # (3,1) in Gr(2,4): bead at 4 slides onto bead 0, the class vanishes
    assert rim_hook_reduce((3,), 2, 4) is None
    assert rim_hook_reduce((3, 1), 2, 4) == (1, (), 1)
    assert rim_hook_reduce((1, 1, 1), 2, 4) is None


@pytest.mark.parametrize("n", range(3, 7))
def test_products_match_rim_hook_oracle(n):
    for k in range(min(3, n) + 1):
        box = BoxShape(k, n)
        for a, b in itertools.combinations_with_replacement(box.partitions(), 2):
            got = {nu.parts: v for nu, v in schubert_product(a, b).items()}
            assert got == rim_hook_product(a.parts, b.parts, k, n)


@st.composite
def ring_triple(draw):
    n = draw(st.integers(3, 7))
    k = draw(st.integers(1, min(3, n - 1)))
    parts = BoxShape(k, n).partitions()
    return tuple(RingElement.schubert(draw(st.sampled_from(parts))) for _ in range(3))


@given(ring_triple())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(t):
    a, b, c = t
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * RingElement.one(a.box) == a


def test_projective_presentation_examples():
    assert projective_product(2, 2, 3) == {1: (1, 1)}
    assert projective_product(2, 1, 3) == {0: (1, 1)}
    assert projective_product(0, 2, 3) == {2: (0, 1)}


def test_toric_examples():
    mu, nu = Partition((2,), B13), Partition((), B13)
    exp = toric_schur(mu, nu, 1)
    assert exp.monomials == {(1,): 1}
    assert exp.schur_coeffs == {Partition((1,), B13): 1}
    box = BoxShape(3, 5)
    e = Partition((), box)
    exp = toric_schur(e, e, 0)
    assert exp.monomials == {(0, 0, 0): 1} and exp.schur_coeffs == {e: 1}


@pytest.mark.parametrize("n,k", [(5, 2), (6, 3)])
def test_toric_degree_zero_is_lr(n, k):
    box = BoxShape(k, n)
    parts = box.partitions()
    for mu, nu in itertools.product(parts, repeat=2):
        size = nu.size - mu.size
        if size < 0:
            continue
        exp = toric_schur(mu, nu, 0)
        for lam in parts:
            if lam.size == size:
                assert exp.schur_coeffs.get(lam, 0) == lr_coefficient(lam.parts, mu.parts, nu.parts)


def test_toric_monomials_are_class_counts():
    box = BoxShape(3, 6)
    mu, nu = Partition((2, 1), box), Partition((3, 1), box)
    classes = enumerate_all(mu, nu)
    for d in range(3):
        exp = toric_schur(mu, nu, d)
        for a, c in exp.monomials.items():
            assert classes[as_composition(a, box)] == c
        assert exp.monomials_from_schur() == exp.monomials


def test_schur_transition_rejects_non_symmetric():
    with pytest.raises(InvariantViolation):
        schur_coefficients_from_monomials({(1, 0): 1}, 2)


def test_composition_multiplicity():
    box = BoxShape(4, 8)
    assert composition_multiplicity(Partition((2, 1, 1), box)) == 3 * 4
    assert composition_multiplicity(Partition((), box)) == 1
    assert composition_multiplicity(Partition((1, 1, 1, 1), box)) == 1


def test_sum_rule_examples():
    e = Partition((), B13)
    assert sum_rule_kostka(e, e) == sum_rule_gw(e, e) == 1
    mu = Partition((2,), B13)
    assert (sum_rule_kostka(mu, e), sum_rule_gw(mu, e), sum_rule_gw(mu, e, "n")) == (1, 1, 3)
    assert total_configurations(mu, e) == 1


@pytest.mark.parametrize("n", range(3, 7))
def test_sum_rules_exhaustive(n):
    for k in range(min(3, n) + 1):
        parts = BoxShape(k, n).partitions()
        for mu, nu in itertools.product(parts, repeat=2):
            t = total_configurations(mu, nu)
            assert sum_rule_kostka(mu, nu) == t == sum_rule_gw(mu, nu)


def test_tables():
    rows = kostka_rows(Partition((), B24), (1, 1))
    assert {(r["nu"], r["d"], r["value"]) for r in rows} == {("2", 0, 1), ("1,1", 0, 1)}
    tsv = rows_to_tsv(rows)
    assert tsv.splitlines()[0] == "n\tk\tmu\tnu\tlambda\td\tvalue"
    assert rows_to_json(rows) == rows_to_json(kostka_rows(Partition((), B24), (1, 1)))
    g = gw_rows(Partition((1,), B24), Partition((1,), B24))
    assert len(g) == 2
    t = toric_rows(toric_schur(Partition((2,), B13), Partition((), B13), 1))
    assert {r["basis"] for r in t} == {"monomial", "schur"}
    assert rows_to_tsv(t).splitlines()[0].endswith("\tbasis")

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from posetalg import (
    AlgebraMismatch,
    IncidenceAlgebra,
    MultiplicationTable,
    NoUnit,
    NotAssociative,
    NotMonomial,
    ParseError,
    antichain,
    chain,
    diamond,
    parse_poset,
    scramble,
)
from posetalg.oracles import element_product_via_matrices

from _strategies import elements_of, posets


def A_of(P, convention="reflexive"):
    return IncidenceAlgebra(P, convention)


# ---------------------------------------------------------------------------
# generators and the monomial product


def test_generator_order_matches_pair_poset():
    A = A_of(chain(3))
    assert [tuple(g) for g in A.generators] == [
        (0, 0),
        (1, 1),
        (2, 2),
        (0, 1),
        (0, 2),
        (1, 2),
    ]
    assert A.pair_poset().pairs == A.generators


def test_monomial_products():
    A = A_of(chain(3))
    ab = A.generator_by_labels("a", "b")
    bc = A.generator_by_labels("b", "c")
    ac = A.generator_by_labels("a", "c")
    assert A.multiply(ab, bc) == ac
    assert not A.multiply(bc, ab)
    aa = A.generator_by_labels("a", "a")
    assert A.multiply(aa, aa) == aa
    assert A.multiply(aa, ab) == ab
    assert not A.multiply(ab, aa)


def test_irreflexive_generators_are_strict_pairs_only():
    A = A_of(chain(2), "irreflexive")
    assert A.dim == 1
    assert tuple(A.generators[0]) == (0, 1)
    with pytest.raises(NoUnit):
        A.unit()


def test_unit_laws():
    A = A_of(diamond())
    one = A.unit()
    for i in range(A.dim):
        g = A.generator(i)
        assert A.multiply(one, g) == g
        assert A.multiply(g, one) == g
    assert A.multiply(one, one) == one


def test_empty_poset_unit_is_zero():
    A = A_of(parse_poset("elements:\n"))
    assert A.dim == 0
    assert not A.unit()


# ---------------------------------------------------------------------------
# element arithmetic


def test_element_repr():
    A = A_of(chain(2))
    f = A.element({0: Fraction(1), 2: Fraction(3)})
    assert repr(f) == "[a,a] + 3[a,b]"
    assert repr(A.element({0: Fraction(-1, 2)})) == "-1/2[a,a]"
    assert repr(A.zero()) == "0"


def test_zero_coefficients_are_pruned():
    A = A_of(chain(2))
    f = A.element({0: Fraction(0), 1: Fraction(2)})
    assert f.support() == [1]
    assert (f - f) == A.zero()
    assert not (f - f)


def test_operator_arithmetic():
    A = A_of(chain(3))
    f = A.element({0: Fraction(2), 3: Fraction(1)})
    g = A.element({3: Fraction(-1), 5: Fraction(1, 3)})
    assert (f + g).coefficient(3) == 0
    assert (f + g).coefficient(5) == Fraction(1, 3)
    assert (2 * f).coefficient(0) == 4
    assert (f * Fraction(1, 2)).coefficient(0) == 1
    assert (-f + f) == A.zero()
    assert f - g == f + (-g)


def test_cross_algebra_operations_rejected():
    f = A_of(chain(2)).element({0: Fraction(1)})
    g = A_of(chain(2)).element({0: Fraction(1)})
    with pytest.raises(AlgebraMismatch):
        f + g
    with pytest.raises(AlgebraMismatch):
        f.algebra.multiply(f, g)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_multiplication_is_associative_and_matches_matrices(data):
    P = data.draw(posets(max_n=4))
    A = A_of(P)
    f = data.draw(elements_of(A))
    g = data.draw(elements_of(A))
    h = data.draw(elements_of(A))
    fg = A.multiply(f, g)
    assert fg == element_product_via_matrices(f, g)
    assert A.multiply(fg, h) == A.multiply(f, A.multiply(g, h))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_matrices_are_upper_triangular(data):
    P = data.draw(posets(max_n=5))
    A = A_of(P)
    f = data.draw(elements_of(A))
    m = A.to_matrix(f)
    assert len(m) == P.n
    for i in range(P.n):
        for j in range(i):
            assert m[i][j] == 0


# ---------------------------------------------------------------------------
# the multiplication table


CHAIN2_TABLE_JSON = (
    '{"dim": 3, "entries": [[0, 0, "1", 0], [0, 2, "1", 2], '
    '[1, 1, "1", 1], [2, 1, "1", 2]]}\n'
)


def test_table_golden_chain2():
    T = A_of(chain(2)).multiplication_table()
    assert T.to_json_text() == CHAIN2_TABLE_JSON
    assert T.entries[(0, 2)] == (Fraction(1), 2)
    assert (2, 0) not in T.entries


def test_table_json_roundtrip():
    T = A_of(diamond()).multiplication_table()
    assert MultiplicationTable.from_json_text(T.to_json_text()) == T


def test_table_parse_errors():
    with pytest.raises(ParseError):
        MultiplicationTable.from_json_text("not json")
    with pytest.raises(ParseError):
        MultiplicationTable.from_json_text('{"entries": []}')
    with pytest.raises(ParseError):
        MultiplicationTable.from_json_text(
            '{"dim": 1, "entries": [[0, 0, "0", 0]]}'
        )
    with pytest.raises(ParseError):
        MultiplicationTable.from_json_text(
            '{"dim": 1, "entries": [[0, 1, "1", 0]]}'
        )
    with pytest.raises(NotMonomial):
        MultiplicationTable.from_json_text(
            '{"dim": 2, "entries": [[0, 0, "1", 0], [0, 0, "2", 1]]}'
        )


def test_incidence_tables_are_associative():
    for P in (chain(4), diamond(), antichain(3)):
        for conv in ("reflexive", "irreflexive"):
            T = A_of(P, conv).multiplication_table()
            assert T.associativity_witness() is None
            T.ensure_associative()


def _brute_assoc_witness(table):
    # literal triple scan, used only to validate the sparse sweep
    def hit(i, j):
        return table.entries.get((i, j))

    for i in range(table.dim):
        for j in range(table.dim):
            for l in range(table.dim):
                ij = hit(i, j)
                left = None
                if ij is not None:
                    k = ij[1]
                    kl = hit(k, l)
                    if kl is not None:
                        left = (ij[0] * kl[0], kl[1])
                jl = hit(j, l)
                right = None
                if jl is not None:
                    k = jl[1]
                    ik = hit(i, k)
                    if ik is not None:
                        right = (jl[0] * ik[0], ik[1])
                if left != right:
                    return (i, j, l)
    return None


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 4),
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        st.tuples(st.sampled_from([1, -1, 2]), st.integers(0, 3)),
        max_size=8,
    ),
)
def test_associativity_witness_agrees_with_brute_scan(dim, raw):
    entries = {
        (i, j): (Fraction(c), k)
        for (i, j), (c, k) in raw.items()
        if i < dim and j < dim and k < dim
    }
    T = MultiplicationTable(dim, entries)
    assert (T.associativity_witness() is None) == (
        _brute_assoc_witness(T) is None
    )


def test_nonassociative_table_raises_with_witness():
    T = MultiplicationTable(2, {(0, 1): (Fraction(1), 0)})
    w = T.associativity_witness()
    assert w is not None
    with pytest.raises(NotAssociative) as e:
        T.ensure_associative()
    assert e.value.witness == w


# ---------------------------------------------------------------------------
# scrambling


def test_identity_scramble_is_a_no_op():
    T = A_of(chain(3)).multiplication_table()
    same = T.permuted_rescaled(list(range(T.dim)), [Fraction(1)] * T.dim)
    assert same == T


def test_permuted_rescaled_validation():
    T = A_of(chain(2)).multiplication_table()
    with pytest.raises(ValueError):
        T.permuted_rescaled([0, 0, 1], [Fraction(1)] * 3)
    with pytest.raises(ValueError):
        T.permuted_rescaled([0, 1, 2], [Fraction(0)] * 3)


def test_scramble_is_deterministic_and_seed_sensitive():
    T = A_of(diamond()).multiplication_table()
    assert scramble(T, 9) == scramble(T, 9)
    assert any(scramble(T, s) != scramble(T, 9) for s in range(1, 6))


def test_scramble_without_rescale_keeps_unit_coefficients():
    T = A_of(chain(3)).multiplication_table()
    S = scramble(T, 4, rescale=False)
    assert all(c == 1 for c, _ in S.entries.values())
    assert len(S.entries) == len(T.entries)


@settings(max_examples=30, deadline=None)
@given(posets(max_n=4), st.integers(0, 2**32))
def test_scrambled_tables_stay_associative(P, seed):
    T = A_of(P).multiplication_table()
    S = scramble(T, seed)
    assert S.associativity_witness() is None


# ---------------------------------------------------------------------------
# nilpotency


def test_nilpotency_indices():
    cases = [
        (chain(3), 3),
        (chain(5), 5),
        (diamond(), 3),
        (antichain(4), 1),
        (parse_poset("elements:\n"), 1),
    ]
    for P, want in cases:
        assert A_of(P, "irreflexive").nilpotency_index() == want
    assert A_of(chain(3)).nilpotency_index() is None
    assert A_of(parse_poset("elements:\n")).nilpotency_index() == 1

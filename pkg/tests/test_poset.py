from hypothesis import given, settings
from hypothesis import strategies as st
import pytest

from posetalg import (
    CapExceeded,
    CycleDetected,
    DuplicateLabel,
    Pair,
    ParseError,
    Poset,
    SizeLimitExceeded,
    UnknownLabel,
    all_labeled_posets,
    antichain,
    boolean_lattice,
    chain,
    count_up_sets,
    covers,
    diamond,
    dual,
    enumerate_up_sets,
    find_isomorphism,
    format_poset,
    hasse_dot,
    interval_order,
    is_isomorphic,
    levels,
    longest_chain_length,
    natural_labeling,
    pair_poset,
    pair_poset_dot,
    parse_poset,
    poset_from_relations,
    random_poset,
)
from posetalg.oracles import (
    brute_antichain_count,
    brute_covers,
    brute_isomorphism,
    brute_up_closed_masks,
)
from posetalg.poset import all_pairs, down_set, transitive_closure, up_set

from _strategies import posets


# ---------------------------------------------------------------------------
# construction and validation


def test_poset_from_relations_closes_transitively():
    P = poset_from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert P.strict(0, 2)
    assert P.leq(0, 0) and not P.strict(0, 0)


def test_duplicate_labels_rejected():
    with pytest.raises(DuplicateLabel):
        poset_from_relations(["a", "a"], [])


def test_unknown_label_rejected():
    with pytest.raises(UnknownLabel):
        poset_from_relations(["a"], [("a", "b")])


def test_cycles_rejected():
    with pytest.raises(CycleDetected):
        poset_from_relations(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(CycleDetected):
        poset_from_relations(["a"], [("a", "a")])
    with pytest.raises(CycleDetected):
        poset_from_relations(
            ["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]
        )


def test_raw_rows_must_be_transitive():
    # a<b, b<c given without a<c
    with pytest.raises(ValueError):
        Poset(["a", "b", "c"], (0b010, 0b100, 0b000))


def test_bad_labels_rejected():
    for bad in ("", "a b", "x<y", "#z"):
        with pytest.raises(ValueError):
            poset_from_relations([bad], [])


def test_index_lookup():
    P = chain(3)
    assert P.index("b") == 1
    with pytest.raises(UnknownLabel):
        P.index("z")


# ---------------------------------------------------------------------------
# text format


CHAIN2_TEXT = "elements: a b\nrelations: a<b\n"


def test_format_emits_covers_only():
    assert format_poset(chain(2)) == CHAIN2_TEXT
    # chain(3) needs no a<c line
    assert format_poset(chain(3)) == "elements: a b c\nrelations: a<b b<c\n"


def test_parse_golden():
    P = parse_poset(CHAIN2_TEXT)
    assert P == chain(2)


def test_parse_ignores_comments_and_blanks():
    text = "# a chain\n\nelements: a b\n relations: a<b  # tail comment\n"
    assert parse_poset(text) == chain(2)


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as e:
        parse_poset("elements: a b\nrelations: a=b\n")
    assert "line 2" in str(e.value)
    with pytest.raises(ParseError):
        parse_poset("relations: a<b\n")


def test_parse_antichain_needs_no_relations_line():
    P = parse_poset("elements: a b c\n")
    assert P == antichain(3)


@settings(max_examples=60)
@given(posets())
def test_parse_format_roundtrip(P):
    assert parse_poset(format_poset(P)) == P


# ---------------------------------------------------------------------------
# order queries


@settings(max_examples=60)
@given(posets())
def test_covers_match_brute_force(P):
    assert covers(P) == brute_covers(P)


@settings(max_examples=60)
@given(posets())
def test_natural_labeling_is_topological_and_greedy(P):
    order = natural_labeling(P)
    assert sorted(order) == list(range(P.n))
    pos = {x: k for k, x in enumerate(order)}
    for x, y in P.strict_pairs():
        assert pos[x] < pos[y]
    # greedy: each entry is the smallest-index minimal element remaining
    remaining = set(range(P.n))
    for x in order:
        minimal = [
            y for y in remaining if all(not P.strict(z, y) for z in remaining)
        ]
        assert x == min(minimal)
        remaining.remove(x)


def test_levels_and_longest_chain():
    P = diamond()
    assert levels(P) == [0, 1, 1, 2]
    assert longest_chain_length(P) == 3
    assert longest_chain_length(chain(4)) == 4
    assert longest_chain_length(antichain(5)) == 1
    assert longest_chain_length(parse_poset("elements:\n")) == 0


@settings(max_examples=60)
@given(posets())
def test_dual_is_an_involution(P):
    assert dual(dual(P)) == P
    assert dual(P).strict_pair_count() == P.strict_pair_count()


def test_up_and_down_sets():
    P = diamond()
    assert up_set(P, [0]) == {0, 1, 2, 3}
    assert up_set(P, [1]) == {1, 3}
    assert down_set(P, [3]) == {0, 1, 2, 3}
    assert down_set(P, [1, 2]) == {0, 1, 2}


# ---------------------------------------------------------------------------
# builders


def test_builders_shapes():
    assert chain(3).strict_pair_count() == 3
    assert antichain(4).strict_pair_count() == 0
    assert diamond().strict_pair_count() == 5
    B3 = boolean_lattice(3)
    assert B3.n == 8
    assert B3.strict_pair_count() == 19
    assert len(covers(B3)) == 12
    assert longest_chain_length(B3) == 4


def test_boolean_lattice_size_limit():
    with pytest.raises(SizeLimitExceeded):
        boolean_lattice(7)


def test_random_poset_is_seed_deterministic():
    assert random_poset(6, 0.3, 17) == random_poset(6, 0.3, 17)
    drawn = {random_poset(6, 0.3, s).up for s in range(20)}
    assert len(drawn) > 1


def test_all_labeled_posets_counts():
    assert [len(all_labeled_posets(n)) for n in range(5)] == [1, 1, 3, 19, 219]


def test_all_labeled_posets_distinct_and_valid():
    seen = {P.up for P in all_labeled_posets(4)}
    assert len(seen) == 219


def test_all_labeled_posets_count_n5():
    assert len(all_labeled_posets(5)) == 4231


# ---------------------------------------------------------------------------
# the pair poset


def test_pair_order_is_canonical():
    P = chain(3)
    assert all_pairs(P) == [
        Pair(0, 0),
        Pair(1, 1),
        Pair(2, 2),
        Pair(0, 1),
        Pair(0, 2),
        Pair(1, 2),
    ]


def test_pair_poset_chain2():
    G = pair_poset(chain(2))
    assert G.size == 3
    # [a,b] sits above both diagonals
    assert G.wider[0] == 0b100 and G.wider[1] == 0b100 and G.wider[2] == 0
    assert G.minimal_of(0b111) == [0, 1]
    assert G.pair_label(2) == "[a,b]"
    assert count_up_sets(G) == 5


def test_diagonals_are_the_minimal_pairs():
    for P in (chain(4), diamond(), boolean_lattice(2), antichain(3)):
        G = pair_poset(P)
        assert G.minimal_of((1 << G.size) - 1) == list(range(P.n))


@settings(max_examples=40)
@given(posets(max_n=4))
def test_up_set_enumeration_matches_brute_force(P):
    G = pair_poset(P)
    got = sorted(enumerate_up_sets(G))
    assert got == brute_up_closed_masks(G.size, G.wider)
    assert count_up_sets(G) == len(got)
    assert count_up_sets(G) == brute_antichain_count(G.size, G.wider)


def test_up_set_cap():
    G = pair_poset(boolean_lattice(3))
    assert G.size == 27
    with pytest.raises(CapExceeded) as e:
        enumerate_up_sets(G)
    assert e.value.required == 27
    with pytest.raises(CapExceeded):
        count_up_sets(G)
    assert count_up_sets(G, cap=27) == 15936


def test_chain_up_set_counts_are_catalan():
    # up-sets of the pair poset of an n-chain count lattice paths
    assert [count_up_sets(pair_poset(chain(n))) for n in range(1, 5)] == [
        2,
        5,
        14,
        42,
    ]


def test_interval_order_reflexive_points_are_diagonals():
    for P in (chain(3), diamond(), antichain(2)):
        io = interval_order(P)
        assert io.reflexive_indices() == list(range(P.n))
        pairs = io.pairs
        for i, p in enumerate(pairs):
            for j, q in enumerate(pairs):
                assert io.holds(i, j) == P.leq(p.y, q.x)


# ---------------------------------------------------------------------------
# isomorphism


@settings(max_examples=40)
@given(posets(max_n=5), st.randoms(use_true_random=False))
def test_isomorphism_found_for_relabelings(P, rnd):
    perm = list(range(P.n))
    rnd.shuffle(perm)
    rows = [0] * P.n
    for x, y in P.strict_pairs():
        rows[perm[x]] |= 1 << perm[y]
    Q = Poset(["q%d" % i for i in range(P.n)], rows)
    f = find_isomorphism(P, Q)
    assert f is not None
    for x in range(P.n):
        for y in range(P.n):
            assert P.strict(x, y) == Q.strict(f[x], f[y])


@settings(max_examples=40)
@given(posets(max_n=4), posets(max_n=4))
def test_isomorphism_agrees_with_brute_force(P, Q):
    assert (find_isomorphism(P, Q) is None) == (brute_isomorphism(P, Q) is None)


def test_isomorphism_negatives():
    assert not is_isomorphic(chain(3), antichain(3))
    assert not is_isomorphic(chain(2), chain(3))
    assert is_isomorphic(diamond(), dual(diamond()))


def test_isomorphism_size_limit():
    with pytest.raises(SizeLimitExceeded):
        find_isomorphism(chain(13), chain(13))


# ---------------------------------------------------------------------------
# DOT output


def test_hasse_dot_golden():
    assert hasse_dot(chain(2)) == (
        'digraph hasse {\n'
        '  rankdir=BT;\n'
        '  "a";\n'
        '  "b";\n'
        '  { rank=same; "a"; }\n'
        '  { rank=same; "b"; }\n'
        '  "a" -> "b";\n'
        '}\n'
    )


def test_pair_poset_dot_mentions_every_pair():
    P = chain(3)
    text = pair_poset_dot(pair_poset(P))
    for lbl in ("[a,a]", "[b,b]", "[c,c]", "[a,b]", "[b,c]", "[a,c]"):
        assert '"%s"' % lbl in text
    assert text.count("->") == 6


def test_transitive_closure_labels_in_cycle_message():
    with pytest.raises(CycleDetected) as e:
        transitive_closure(2, [0b10, 0b01], ["left", "right"])
    assert "left" in str(e.value)

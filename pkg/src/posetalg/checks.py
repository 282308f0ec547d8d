"""Invariant suite over posets and tables, plus the built-in corpora.

Each check compares a fast structural computation against either a stated
closed form or a brute-force/linear-algebra oracle, and returns a
CheckResult rather than asserting, so the command line driver can aggregate
over a corpus and print witnesses.
"""

from fractions import Fraction
from typing import NamedTuple

from .algebra import IncidenceAlgebra
from .errors import PosetAlgebraError
from .ideals import (
    enumerate_ideals,
    ideal_generated_by,
    ideal_product,
    ideal_sum,
    indecomposable_ideals,
    is_indecomposable,
    maximal_ideals,
    maximal_indecomposable_ideals,
    principal_ideal,
    subspace_closure,
    zero_ideal,
)
from .oracles import brute_antichain_count
from .poset import Pair, all_labeled_posets, covers, random_poset
from .recovery import (
    quasi_idempotents,
    recover_by_ideal_products,
    recover_by_links,
    recovered_links,
    verify_roundtrip,
)
from .rng import LCG


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str
    skipped: bool = False


def _ok(name, detail=""):
    return CheckResult(name, True, detail)


def _fail(name, detail):
    return CheckResult(name, False, detail)


def _skip(name, detail):
    return CheckResult(name, True, detail, skipped=True)


# ---------------------------------------------------------------------------
# corpora


def corpus_exhaustive4():
    """Every labeled poset on up to 4 elements (243 posets)."""
    out = []
    for n in range(5):
        out.extend(all_labeled_posets(n))
    return out


def corpus_random7():
    """100 seeded random posets, sizes cycling 1..7, edge probability 0.3."""
    return [random_poset((i % 7) + 1, 0.3, 1000 + i) for i in range(100)]


CORPORA = {
    "exhaustive4": corpus_exhaustive4,
    "random7": corpus_random7,
}


def get_corpus(name):
    try:
        return CORPORA[name]()
    except KeyError:
        raise ValueError(
            "unknown corpus %r (have: %s)" % (name, ", ".join(sorted(CORPORA)))
        ) from None


# ---------------------------------------------------------------------------
# random elements, pinned to the package LCG

_COEFFS = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
    Fraction(3),
)


def random_element(A, rng):
    coeffs = {}
    for _ in range(1 + rng.next_below(3)):
        coeffs[rng.next_below(A.dim)] = _COEFFS[rng.next_below(len(_COEFFS))]
    return A.element(coeffs)


def random_element_lists(A, rng, n_lists):
    if A.dim == 0:
        return [[] for _ in range(n_lists)]
    return [
        [random_element(A, rng) for _ in range(1 + rng.next_below(2))]
        for _ in range(n_lists)
    ]


# ---------------------------------------------------------------------------
# per-poset checks (reflexive-convention algebra throughout)


def check_pair_minimals(P, A):
    G = A.pair_poset()
    minimal = G.minimal_of((1 << G.size) - 1)
    if minimal != list(range(P.n)):
        return _fail("pair_minimals", "%r minimal pair indices %r" % (P, minimal))
    return _ok("pair_minimals")


def check_ideal_count(P, A, enum_cap):
    G = A.pair_poset()
    if G.size > enum_cap:
        return _skip("ideal_count", "%d pairs over cap" % G.size)
    got = sum(1 for _ in enumerate_ideals(A, cap=enum_cap))
    want = brute_antichain_count(G.size, G.wider)
    if got != want:
        return _fail("ideal_count", "%r enumerated %d, antichains %d" % (P, got, want))
    return _ok("ideal_count")


def check_sum_lemma(P, A, enum_cap):
    G = A.pair_poset()
    if G.size > enum_cap:
        return _skip("sum_lemma", "%d pairs over cap" % G.size)
    ideals = list(enumerate_ideals(A, cap=enum_cap))
    for I in ideals:
        for J in ideals:
            if ideal_sum(I, J).up_mask != I.up_mask | J.up_mask:
                return _fail("sum_lemma", "%r I=%r J=%r" % (P, I, J))
    return _ok("sum_lemma")


def check_intersection_is_meet(P, A, enum_cap):
    """I & J must be the largest enumerated ideal inside both."""
    G = A.pair_poset()
    if G.size > enum_cap:
        return _skip("intersection_meet", "%d pairs over cap" % G.size)
    masks = [I.up_mask for I in enumerate_ideals(A, cap=enum_cap)]
    sample = masks[: min(len(masks), 48)]
    for m1 in sample:
        for m2 in sample:
            meet = 0
            for k in masks:
                if k & ~m1 == 0 and k & ~m2 == 0 and k & ~meet != 0 and meet & ~k == 0:
                    meet = k
            if meet != m1 & m2:
                return _fail(
                    "intersection_meet", "%r masks %d,%d" % (P, m1, m2)
                )
    return _ok("intersection_meet")


def check_product_lemma(P, A):
    """Principal products follow the closed form and match the span of
    pairwise element products."""
    G = A.pair_poset()
    gens = A.generators
    for i in range(G.size):
        x, y = gens[i]
        Pi = principal_ideal(A, i)
        for j in range(G.size):
            u, v = gens[j]
            Pj = principal_ideal(A, j)
            got = ideal_product(Pi, Pj)
            if P.leq(y, u):
                want = principal_ideal(A, A.index[Pair(x, v)])
            else:
                want = zero_ideal(A)
            if got != want:
                return _fail(
                    "product_lemma",
                    "%r pairs %s,%s got %r want %r"
                    % (P, G.pair_label(i), G.pair_label(j), got, want),
                )
            span = set()
            for a in Pi.pair_indices():
                ga = A.generator(a)
                for b in Pj.pair_indices():
                    prod = A.multiply(ga, A.generator(b))
                    span.update(prod.coeffs)
            if span != set(got.pair_indices()):
                return _fail(
                    "product_lemma",
                    "%r span oracle disagrees at %s,%s"
                    % (P, G.pair_label(i), G.pair_label(j)),
                )
    return _ok("product_lemma")


def check_product_in_intersection(P, A):
    for i in range(A.dim):
        Pi = principal_ideal(A, i)
        for j in range(A.dim):
            Pj = principal_ideal(A, j)
            prod = ideal_product(Pi, Pj)
            if prod.up_mask & ~(Pi.up_mask & Pj.up_mask):
                return _fail(
                    "product_in_intersection", "%r pair indices %d,%d" % (P, i, j)
                )
    return _ok("product_in_intersection")


def check_bijections(P, A):
    G = A.pair_poset()
    indec = indecomposable_ideals(A)
    if len(indec) != G.size:
        return _fail("bijections", "%r indecomposable count %d" % (P, len(indec)))
    if len(set(I.up_mask for I in indec)) != G.size:
        return _fail("bijections", "%r principal ideals collide" % (P,))
    for I in indec:
        if not is_indecomposable(I):
            return _fail("bijections", "%r principal not indecomposable %r" % (P, I))
    maxind = maximal_indecomposable_ideals(A)
    if len(maxind) != P.n:
        return _fail("bijections", "%r maximal indecomposable count" % (P,))
    if len(maximal_ideals(A)) != P.n:
        return _fail("bijections", "%r maximal ideal count" % (P,))
    if is_indecomposable(zero_ideal(A)):
        return _fail("bijections", "%r zero ideal counted indecomposable" % (P,))
    return _ok("bijections")


def check_idempotence(P, A):
    """Among indecomposables: II != 0 iff II = I iff I is a diagonal
    principal."""
    diag_masks = set(I.up_mask for I in maximal_indecomposable_ideals(A))
    for I in indecomposable_ideals(A):
        square = ideal_product(I, I)
        nonzero = not square.is_zero
        fixed = square == I
        topmost = I.up_mask in diag_masks
        if not (nonzero == fixed == topmost):
            return _fail(
                "idempotence",
                "%r ideal %r nonzero=%s fixed=%s diagonal=%s"
                % (P, I, nonzero, fixed, topmost),
            )
    return _ok("idempotence")


def check_maximality(P, A, enum_cap):
    G = A.pair_poset()
    full = (1 << A.dim) - 1
    for M in maximal_ideals(A):
        missing = full & ~M.up_mask
        if missing.bit_count() != 1:
            return _fail("maximality", "%r complement not a single pair" % (P,))
        i = missing.bit_length() - 1
        if A.generators[i].x != A.generators[i].y:
            return _fail("maximality", "%r missing pair not diagonal" % (P,))
    if G.size <= enum_cap:
        max_masks = set(M.up_mask for M in maximal_ideals(A))
        for I in enumerate_ideals(A, cap=enum_cap):
            if I.up_mask == full or I.up_mask in max_masks:
                continue
            for m in max_masks:
                if m & ~I.up_mask == 0 and I.up_mask != m:
                    return _fail(
                        "maximality", "%r ideal strictly between %r and full" % (P, I)
                    )
    return _ok("maximality")


def check_diagonal_products(P, A):
    """I_x * I_y is the principal ideal of (x, y) when x <= y, else zero."""
    maxind = maximal_indecomposable_ideals(A)
    for x in range(P.n):
        for y in range(P.n):
            got = ideal_product(maxind[x], maxind[y])
            if P.leq(x, y):
                want = principal_ideal(A, A.index[Pair(x, y)])
            else:
                want = zero_ideal(A)
            if got != want:
                return _fail(
                    "diagonal_products",
                    "%r elements %s,%s" % (P, P.labels[x], P.labels[y]),
                )
    return _ok("diagonal_products")


def check_span_corollary(P, A, rng, n_lists):
    for elems in random_element_lists(A, rng, n_lists):
        I = ideal_generated_by(A, elems)
        S = subspace_closure(A, elems)
        if S.dim != I.dimension():
            return _fail(
                "span_corollary",
                "%r closure dim %d vs up-set size %d" % (P, S.dim, I.dimension()),
            )
        for i in I.pair_indices():
            if not S.contains(A.generator(i)):
                return _fail(
                    "span_corollary", "%r pair %d missing from closure" % (P, i)
                )
    return _ok("span_corollary")


def check_quasi_idempotents(P, table):
    qs = quasi_idempotents(table)
    if qs != list(range(P.n)):
        return _fail("quasi_idempotents", "%r got %r" % (P, qs))
    return _ok("quasi_idempotents")


def check_links_are_covers(P, table):
    got = set(recovered_links(table))
    want = set((p.x, p.y) for p in covers(P))
    if got != want:
        return _fail("links_are_covers", "%r links %r covers %r" % (P, got, want))
    closed = recover_by_links(table)
    if closed.up != P.up:
        return _fail("links_are_covers", "%r closure differs from strict order" % (P,))
    return _ok("links_are_covers")


def check_unscrambled_recovery(P, table):
    via = recover_by_ideal_products(table)
    if via.up != P.up:
        return _fail("unscrambled_recovery", "%r ideal-product order differs" % (P,))
    return _ok("unscrambled_recovery")


def check_scramble_identity(P, table):
    same = table.permuted_rescaled(
        list(range(table.dim)), [Fraction(1)] * table.dim
    )
    if same != table:
        return _fail("scramble_identity", "%r identity scramble changed table" % (P,))
    return _ok("scramble_identity")


def check_roundtrip(P, seeds):
    try:
        report = verify_roundtrip(P, seeds)
    except PosetAlgebraError as e:
        return _fail("roundtrip", "%r raised %s: %s" % (P, type(e).__name__, e))
    for r in report.results:
        if not r["passed"]:
            return _fail("roundtrip", "%r seed %d: %r" % (P, r["seed"], r))
    return _ok("roundtrip")


def run_poset_checks(P, seeds=(1, 2), enum_cap=12, n_lists=3, rng_seed=7):
    """The full invariant suite for one poset, reflexive convention."""
    A = IncidenceAlgebra(P, "reflexive")
    table = A.multiplication_table()
    rng = LCG(rng_seed)
    results = [
        check_pair_minimals(P, A),
        check_ideal_count(P, A, enum_cap),
        check_sum_lemma(P, A, enum_cap),
        check_intersection_is_meet(P, A, enum_cap),
        check_product_lemma(P, A),
        check_product_in_intersection(P, A),
        check_bijections(P, A),
        check_idempotence(P, A),
        check_maximality(P, A, enum_cap),
        check_diagonal_products(P, A),
        check_span_corollary(P, A, rng, n_lists),
        check_quasi_idempotents(P, table),
        check_links_are_covers(P, table),
        check_unscrambled_recovery(P, table),
        check_scramble_identity(P, table),
        check_roundtrip(P, seeds),
    ]
    return results


# ---------------------------------------------------------------------------
# table checks


def check_table(table):
    """Validation plus double recovery for a bare table."""
    results = []
    witness = table.associativity_witness()
    if witness is not None:
        results.append(
            _fail("table_associative", "NotAssociative witness %r" % (witness,))
        )
        return results
    results.append(_ok("table_associative"))
    qs = quasi_idempotents(table)
    if table.dim > 0 and not qs:
        results.append(_fail("table_quasi_idempotents", "none found"))
        return results
    results.append(_ok("table_quasi_idempotents", "%d found" % len(qs)))
    try:
        via_products = recover_by_ideal_products(table)
        via_links = recover_by_links(table)
    except PosetAlgebraError as e:
        results.append(_fail("table_recovery", "%s: %s" % (type(e).__name__, e)))
        return results
    results.append(_ok("table_recovery"))
    if via_products.up == via_links.up and via_products.labels == via_links.labels:
        results.append(_ok("table_schemes_agree"))
    else:
        results.append(
            _fail(
                "table_schemes_agree",
                "%r vs %r" % (via_products, via_links),
            )
        )
    pairs = via_products.n + via_products.strict_pair_count()
    if pairs == table.dim:
        results.append(_ok("table_shape"))
    else:
        results.append(
            _fail(
                "table_shape",
                "dim %d but recovered poset has %d comparable pairs"
                % (table.dim, pairs),
            )
        )
    return results

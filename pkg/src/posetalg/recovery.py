"""Rebuilding a poset from a scrambled multiplication table.

Input is a bare monomial table: no labels, no pair structure, just dim and
entries.  Everything works at the level of index supports, which survive
basis rescaling untouched (monomial products never cancel).

Two independent routes:

  recover_by_ideal_products
      Elements are the quasi-idempotents (basis vectors whose square is a
      nonzero multiple of themselves; these are the images of the diagonal
      generators).  x lies strictly below y exactly when the two-sided
      ideals they generate have a nonzero product.  Transitivity of the
      resulting relation is verified, never imposed.

  recover_by_links
      For each quasi-idempotent, drop it from the full support to get a
      maximal ideal.  A link x -> y is detected when the support product
      M_x * M_y is a proper subset of M_x n M_y: the one missing index is
      the image of the pair (x, y), and it can only be missing when nothing
      sits strictly between x and y.  Links are exactly the covers, and
      their transitive closure is the strict order.

Both raise diagnostics (NotAssociative, NotMonomial, ClosureViolation,
RecoveredRelationNotTransitive, CycleDetected) rather than repairing
suspicious input.
"""

from .algebra import IncidenceAlgebra, scramble
from .errors import ClosureViolation, RecoveredRelationNotTransitive
from .poset import Poset, find_isomorphism, iterbits, transitive_closure


class AbstractIdeal:
    """Support bitmask closed under the table's left and right products."""

    __slots__ = ("table", "support")

    def __init__(self, table, support):
        self.table = table
        self.support = support

    def indices(self):
        return list(iterbits(self.support))

    def __eq__(self, other):
        return (
            isinstance(other, AbstractIdeal)
            and self.table == other.table
            and self.support == other.support
        )

    def __repr__(self):
        return "<AbstractIdeal %s>" % (self.indices(),)


def quasi_idempotents(table):
    """Indices i with b_i^2 = c * b_i, c != 0.  Validates associativity."""
    table.ensure_associative()
    out = []
    for i in range(table.dim):
        hit = table.entries.get((i, i))
        if hit is not None and hit[1] == i:
            out.append(i)
    return out


def principal_support(table, i):
    """Support of the two-sided ideal generated by basis element i.

    Worklist closure under single left and right table products; the table
    is monomial and every longer word is an iterate of those.
    """
    table.ensure_associative()
    support = 1 << i
    changed = True
    while changed:
        changed = False
        for (a, b), (_, k) in table.entries.items():
            if support >> k & 1:
                continue
            if support >> a & 1 or support >> b & 1:
                support |= 1 << k
                changed = True
    return AbstractIdeal(table, support)


def support_product(table, left, right):
    """Index support of products of the two support sets."""
    mask = 0
    for (a, b), (_, k) in table.entries.items():
        if left >> a & 1 and right >> b & 1:
            mask |= 1 << k
    return mask


def _support_product_nonzero(table, left, right):
    for (a, b), _ in table.entries.items():
        if left >> a & 1 and right >> b & 1:
            return True
    return False


def maximal_abstract_ideals(table):
    """One per quasi-idempotent e: everything except e itself.

    Refuses tables where such a complement is not closed; that cannot
    happen for a table that came from an incidence algebra.
    """
    table.ensure_associative()
    full = (1 << table.dim) - 1
    out = []
    for e in quasi_idempotents(table):
        support = full & ~(1 << e)
        for (a, b), (_, k) in table.entries.items():
            if k == e and (a != e or b != e):
                raise ClosureViolation(
                    "dropping index %d is not an ideal: product (%d,%d) lands on it"
                    % (e, a, b)
                )
        out.append(AbstractIdeal(table, support))
    return out


def _labels_for(indices):
    return ["e%d" % i for i in indices]


def recover_by_ideal_products(table):
    """Poset on the quasi-idempotents with x < y iff I_x * I_y != 0."""
    table.ensure_associative()
    qs = quasi_idempotents(table)
    n = len(qs)
    supports = [principal_support(table, q).support for q in qs]
    rows = [0] * n
    for x in range(n):
        for y in range(n):
            if x != y and _support_product_nonzero(table, supports[x], supports[y]):
                rows[x] |= 1 << y
    for x in range(n):
        for y in iterbits(rows[x]):
            bad = rows[y] & ~rows[x]
            if bad:
                # covers the cyclic case too: x is never in rows[x]
                z = (bad & -bad).bit_length() - 1
                raise RecoveredRelationNotTransitive(
                    "x<y and y<z without x<z at quasi-idempotents (%d, %d, %d)"
                    % (qs[x], qs[y], qs[z]),
                    witness=(qs[x], qs[y], qs[z]),
                )
    return Poset(_labels_for(qs), rows)


def _link_rows(table):
    table.ensure_associative()
    qs = quasi_idempotents(table)
    n = len(qs)
    maximals = maximal_abstract_ideals(table)
    links = [0] * n
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            inter = maximals[x].support & maximals[y].support
            prod = support_product(table, maximals[x].support, maximals[y].support)
            assert prod & ~inter == 0
            if prod != inter:
                links[x] |= 1 << y
    return qs, links


def recover_by_links(table):
    """Poset on the quasi-idempotents: transitive closure of detected links."""
    qs, links = _link_rows(table)
    labels = _labels_for(qs)
    rows = transitive_closure(len(qs), links, labels)
    return Poset(labels, rows)


def recovered_links(table):
    """The raw link relation (before closure) as index pairs into the
    quasi-idempotent list."""
    qs, links = _link_rows(table)
    return [(x, y) for x in range(len(qs)) for y in iterbits(links[x])]


class RoundtripReport:
    """Outcome of scramble-and-recover runs over several seeds."""

    __slots__ = ("poset", "results")

    def __init__(self, poset, results):
        self.poset = poset
        self.results = results

    @property
    def all_passed(self):
        return all(r["passed"] for r in self.results)

    def format_text(self):
        lines = []
        for r in self.results:
            lines.append(
                "seed=%d ideal_product_scheme=%s link_scheme=%s agree=%s" % (
                    r["seed"],
                    "ok" if r["ideal_products_isomorphic"] else "MISMATCH",
                    "ok" if r["links_isomorphic"] else "MISMATCH",
                    "yes" if r["schemes_agree"] else "NO",
                )
            )
        lines.append(
            "roundtrip %s (%d seeds)"
            % ("passed" if self.all_passed else "FAILED", len(self.results))
        )
        return "\n".join(lines) + "\n"


def verify_roundtrip(P, seeds, rescale=True):
    """Scramble the reflexive table of P for each seed and recover it both
    ways; each run must give posets isomorphic to P that agree exactly."""
    A = IncidenceAlgebra(P, "reflexive")
    table = A.multiplication_table()
    results = []
    for seed in seeds:
        puzzle = scramble(table, seed, rescale=rescale)
        via_products = recover_by_ideal_products(puzzle)
        via_links = recover_by_links(puzzle)
        iso_a = find_isomorphism(P, via_products) is not None
        iso_b = find_isomorphism(P, via_links) is not None
        agree = (
            via_products.labels == via_links.labels
            and via_products.up == via_links.up
        )
        results.append(
            {
                "seed": seed,
                "ideal_products_isomorphic": iso_a,
                "links_isomorphic": iso_b,
                "schemes_agree": agree,
                "passed": iso_a and iso_b and agree,
            }
        )
    return RoundtripReport(P, results)

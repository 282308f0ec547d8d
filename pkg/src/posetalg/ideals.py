"""Two-sided ideals of reflexive-convention incidence algebras.

The whole calculus rides on one fact: an ideal is the span of the generators
it contains, and the generator sets that occur are exactly the upward-closed
subsets of the pair poset.  So an Ideal here is a bitmask over generator
indices, closed upward under nesting.

Ideal sum is union, intersection is bitmask intersection, and the product is
relational composition of pair sets.  Indecomposable ideals are the principal
up-sets; the maximal indecomposable ones sit over the diagonal pairs; maximal
ideals drop a single diagonal pair.

subspace_closure is the independent oracle: it knows nothing about up-sets
and simply closes a rational span under multiplication by all generators,
with exact row reduction.  The invariant tests lean on it.

Irreflexive-convention algebras are out of scope here: without the diagonal
pairs the up-set description does not apply, and the constructors refuse.
"""

from fractions import Fraction

from .algebra import AlgebraElement
from .errors import AlgebraMismatch, CapExceeded, ConventionError
from .poset import Pair, enumerate_up_sets, iterbits


def _require_reflexive(A):
    if A.convention != "reflexive":
        raise ConventionError(
            "ideal calculus needs the reflexive convention (diagonal pairs)"
        )


def _require_same(I, J):
    if not I.algebra.same_algebra(J.algebra):
        raise AlgebraMismatch("ideals live in different algebras")


class Ideal:
    """Two-sided ideal, canonically an up-closed generator bitmask."""

    __slots__ = ("algebra", "up_mask")

    def __init__(self, algebra, up_mask):
        G = algebra.pair_poset()
        if not G.is_up_closed(up_mask):
            raise ValueError("generator set is not upward closed")
        self.algebra = algebra
        self.up_mask = up_mask

    @property
    def is_zero(self):
        return self.up_mask == 0

    @property
    def is_full(self):
        return self.up_mask == (1 << self.algebra.dim) - 1

    def pair_indices(self):
        return list(iterbits(self.up_mask))

    def pairs(self):
        gens = self.algebra.generators
        return [gens[i] for i in self.pair_indices()]

    def dimension(self):
        return self.up_mask.bit_count()

    def contains(self, other):
        _require_same(other, self)
        return other.up_mask & ~self.up_mask == 0

    def spanning_elements(self):
        return [self.algebra.generator(i) for i in self.pair_indices()]

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.algebra.same_algebra(other.algebra)
            and self.up_mask == other.up_mask
        )

    def __hash__(self):
        return hash(self.up_mask)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __and__(self, other):
        return ideal_intersect(self, other)

    def __repr__(self):
        return "<Ideal %s>" % format_ideal(self)


def format_ideal(I):
    """Brace-and-bracket form, pairs in canonical order: {[a,a],[a,b]}."""
    labs = I.algebra.poset.labels
    inner = ",".join("[%s,%s]" % (labs[p.x], labs[p.y]) for p in I.pairs())
    return "{%s}" % inner


def zero_ideal(A):
    _require_reflexive(A)
    return Ideal(A, 0)


def full_ideal(A):
    _require_reflexive(A)
    return Ideal(A, (1 << A.dim) - 1)


def principal_ideal(A, key):
    """Smallest ideal containing one generator: its principal up-set."""
    _require_reflexive(A)
    return Ideal(A, A.pair_poset().principal_up(A._gen_index(key)))


def ideal_generated_by(A, elems):
    """Upward closure of the supports of the given elements."""
    _require_reflexive(A)
    G = A.pair_poset()
    mask = 0
    for f in elems:
        A._claim(f)
        for i in f.coeffs:
            mask |= G.principal_up(i)
    return Ideal(A, mask)


def ideal_sum(I, J):
    _require_same(I, J)
    return Ideal(I.algebra, I.up_mask | J.up_mask)


def ideal_intersect(I, J):
    _require_same(I, J)
    return Ideal(I.algebra, I.up_mask & J.up_mask)


def ideal_product(I, J):
    """Relational composition: pairs [x,v] with [x,w] in I and [w,v] in J."""
    _require_same(I, J)
    A = I.algebra
    G = A.pair_poset()
    pairs = G.pairs
    mask = 0
    for i in iterbits(I.up_mask):
        x, w = pairs[i]
        for j in G.by_first[w]:
            if J.up_mask >> j & 1:
                mask |= 1 << G.index[Pair(x, pairs[j].y)]
    return Ideal(A, mask)


def is_indecomposable(I):
    """Nonzero with a unique minimal pair, i.e. a principal up-set."""
    if I.is_zero:
        return False
    return len(I.algebra.pair_poset().minimal_of(I.up_mask)) == 1


def indecomposable_ideals(A):
    """One principal ideal per comparable pair, in canonical pair order."""
    _require_reflexive(A)
    G = A.pair_poset()
    return [Ideal(A, G.principal_up(i)) for i in range(G.size)]


def maximal_indecomposable_ideals(A):
    """Principal ideals of the diagonal pairs, one per element."""
    _require_reflexive(A)
    G = A.pair_poset()
    return [Ideal(A, G.principal_up(x)) for x in range(A.poset.n)]


def maximal_ideals(A):
    """Complements of a single diagonal pair, one per element."""
    _require_reflexive(A)
    full = (1 << A.dim) - 1
    out = []
    for x in range(A.poset.n):
        out.append(Ideal(A, full & ~(1 << x)))
    return out


def enumerate_ideals(A, cap=20):
    """Every ideal (the zero ideal included), streamed in a fixed order.

    The cap is checked up front, so CapExceeded fires at the call."""
    _require_reflexive(A)
    masks = enumerate_up_sets(A.pair_poset(), cap=cap)
    return (Ideal(A, m) for m in masks)


# ---------------------------------------------------------------------------
# the subspace oracle


class Subspace:
    """Rational subspace in reduced row-echelon form over generator
    coordinates.  Equal subspaces have identical bases."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra, rows):
        self.algebra = algebra
        self.rows = rows  # pivot index -> {gen index: Fraction}, fully reduced

    @property
    def dim(self):
        return len(self.rows)

    def basis(self):
        return [
            AlgebraElement(self.algebra, dict(self.rows[p])) for p in sorted(self.rows)
        ]

    def reduce(self, coeffs):
        """Residue of a coefficient dict after eliminating all pivots."""
        vec = dict(coeffs)
        for p in sorted(self.rows):
            c = vec.get(p)
            if not c:
                continue
            row = self.rows[p]
            for i, v in row.items():
                s = vec.get(i, Fraction(0)) - c * v
                if s:
                    vec[i] = s
                else:
                    vec.pop(i, None)
        return vec

    def contains(self, f):
        self.algebra._claim(f)
        return not self.reduce(f.coeffs)

    def _insert(self, coeffs):
        """Grow the span by one vector; returns the residue row or None."""
        vec = self.reduce(coeffs)
        if not vec:
            return None
        pivot = min(vec)
        inv = Fraction(1) / vec[pivot]
        vec = {i: c * inv for i, c in vec.items()}
        for p, row in self.rows.items():
            c = row.get(pivot)
            if not c:
                continue
            for i, v in vec.items():
                s = row.get(i, Fraction(0)) - c * v
                if s:
                    row[i] = s
                else:
                    row.pop(i, None)
        self.rows[pivot] = vec
        return vec

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.algebra.same_algebra(other.algebra)
            and self.rows == other.rows
        )

    def __repr__(self):
        return "<Subspace dim=%d of %d>" % (self.dim, self.algebra.dim)


def span_of(A, elems):
    """Plain linear span (no multiplicative closure)."""
    S = Subspace(A, {})
    for f in elems:
        A._claim(f)
        S._insert(f.coeffs)
    return S


def subspace_closure(A, elems):
    """Smallest subspace containing elems and closed under left and right
    multiplication by every generator.  Oracle for the ideal calculus; it
    iterates products into an exact echelon basis until nothing new shows up.
    """
    S = Subspace(A, {})
    queue = []
    for f in elems:
        A._claim(f)
        added = S._insert(f.coeffs)
        if added is not None:
            queue.append(added)
    gens = [A.generator(i) for i in range(A.dim)]
    while queue:
        row = queue.pop()
        f = AlgebraElement(A, dict(row))
        for g in gens:
            for prod in (A.multiply(g, f), A.multiply(f, g)):
                if prod.coeffs:
                    added = S._insert(prod.coeffs)
                    if added is not None:
                        queue.append(added)
    return S


# ---------------------------------------------------------------------------
# lattice export


def ideal_lattice_dot(A, cap=64):
    """DOT digraph of all ideals under inclusion, edges are covers.

    Ideals of an incidence algebra differ along a cover by exactly one pair,
    so covering means 'superset by one bit'.
    """
    _require_reflexive(A)
    G = A.pair_poset()
    masks = list(enumerate_up_sets(G, cap=20))
    if len(masks) > cap:
        raise CapExceeded(
            "%d ideals exceed the lattice export cap %d" % (len(masks), cap),
            required=len(masks),
        )
    masks.sort(key=lambda m: (m.bit_count(), m))
    names = {}
    for m in masks:
        names[m] = format_ideal(Ideal(A, m))
    lines = ["digraph ideals {", "  rankdir=BT;"]
    for m in masks:
        lines.append('  "%s";' % names[m])
    for m in masks:
        for mm in masks:
            if mm & ~m == 0 and (m & ~mm).bit_count() == 1:
                lines.append('  "%s" -> "%s";' % (names[mm], names[m]))
    lines.append("}")
    return "\n".join(lines) + "\n"

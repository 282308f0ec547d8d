"""Incidence algebras over the rationals, with exact arithmetic throughout.

The algebra of a poset has one generator per comparable pair [x,y] (per
strictly comparable pair under the irreflexive convention) and the monomial
product [x,y][u,v] = [x,v] when y == u, zero otherwise.  Elements are sparse
rational combinations of generators; under a natural labeling their matrices
are upper triangular.

MultiplicationTable is the shareable face of an algebra: dimension plus
monomial structure constants, serialized as JSON.  Scrambling a table
(seeded basis permutation, optional rescale) produces the puzzles the
recovery module solves.
"""

import json
from fractions import Fraction

from . import poset as _poset
from .errors import (
    AlgebraMismatch,
    NoUnit,
    NotAssociative,
    NotMonomial,
    ParseError,
)
from .poset import Pair, all_pairs
from .rng import LCG

RESCALE_FACTORS = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(3),
    Fraction(-3),
)


class IncidenceAlgebra:
    """Incidence algebra of a poset under one of two conventions.

    reflexive: generators are all pairs x <= y, the diagonal sum is a unit.
    irreflexive: strict pairs only; the algebra is nilpotent and has no unit.
    """

    __slots__ = ("poset", "convention", "generators", "index", "_pair_poset")

    def __init__(self, poset, convention="reflexive"):
        if convention not in ("reflexive", "irreflexive"):
            raise ValueError("convention must be 'reflexive' or 'irreflexive'")
        pairs = all_pairs(poset)
        if convention == "irreflexive":
            pairs = [p for p in pairs if p.x != p.y]
        self.poset = poset
        self.convention = convention
        self.generators = tuple(pairs)
        self.index = {p: i for i, p in enumerate(pairs)}
        self._pair_poset = None

    @property
    def dim(self):
        return len(self.generators)

    def pair_poset(self):
        if self._pair_poset is None:
            self._pair_poset = _poset.PairPoset(self.poset)
        return self._pair_poset

    def same_algebra(self, other):
        return self.poset is other.poset and self.convention == other.convention

    # -- element construction

    def _gen_index(self, key):
        if isinstance(key, tuple):
            key = Pair(*key)
            if key not in self.index:
                raise KeyError("%r is not a generator pair" % (key,))
            return self.index[key]
        key = int(key)
        if not 0 <= key < self.dim:
            raise KeyError("generator index %d out of range" % key)
        return key

    def element(self, mapping):
        """Element from {generator index or Pair: rational coefficient}."""
        coeffs = {}
        for key, value in mapping.items():
            c = Fraction(value)
            if c:
                i = self._gen_index(key)
                coeffs[i] = coeffs.get(i, Fraction(0)) + c
        return AlgebraElement(self, {i: c for i, c in coeffs.items() if c})

    def generator(self, key):
        return AlgebraElement(self, {self._gen_index(key): Fraction(1)})

    def generator_by_labels(self, xlab, ylab):
        p = Pair(self.poset.index(xlab), self.poset.index(ylab))
        return self.generator(p)

    def zero(self):
        return AlgebraElement(self, {})

    def unit(self):
        if self.convention != "reflexive":
            raise NoUnit("the irreflexive-convention algebra has no unit")
        return AlgebraElement(
            self, {x: Fraction(1) for x in range(self.poset.n)}
        )

    # -- arithmetic

    def add(self, f, g):
        self._claim(f)
        self._claim(g)
        coeffs = dict(f.coeffs)
        for i, c in g.coeffs.items():
            s = coeffs.get(i, Fraction(0)) + c
            if s:
                coeffs[i] = s
            else:
                coeffs.pop(i, None)
        return AlgebraElement(self, coeffs)

    def scale(self, c, f):
        self._claim(f)
        c = Fraction(c)
        if not c:
            return self.zero()
        return AlgebraElement(self, {i: c * v for i, v in f.coeffs.items()})

    def multiply(self, f, g):
        self._claim(f)
        self._claim(g)
        gens = self.generators
        index = self.index
        coeffs = {}
        for i, ci in f.coeffs.items():
            x, y = gens[i]
            for j, cj in g.coeffs.items():
                u, v = gens[j]
                if y != u:
                    continue
                k = index.get(Pair(x, v))
                if k is None:
                    continue
                s = coeffs.get(k, Fraction(0)) + ci * cj
                if s:
                    coeffs[k] = s
                else:
                    del coeffs[k]
        return AlgebraElement(self, coeffs)

    def _claim(self, f):
        if not isinstance(f, AlgebraElement) or not self.same_algebra(f.algebra):
            raise AlgebraMismatch("element does not belong to this algebra")

    # -- views

    def to_matrix(self, f):
        """Upper-triangular matrix of f under the natural labeling."""
        self._claim(f)
        n = self.poset.n
        pos = [0] * n
        for k, x in enumerate(_poset.natural_labeling(self.poset)):
            pos[x] = k
        mat = [[Fraction(0)] * n for _ in range(n)]
        for i, c in f.coeffs.items():
            x, y = self.generators[i]
            mat[pos[x]][pos[y]] = c
        return mat

    def multiplication_table(self):
        gens = self.generators
        index = self.index
        entries = {}
        for i, (x, y) in enumerate(gens):
            for j, (u, v) in enumerate(gens):
                if y != u:
                    continue
                k = index.get(Pair(x, v))
                if k is not None:
                    entries[(i, j)] = (Fraction(1), k)
        return MultiplicationTable(self.dim, entries)

    def nilpotency_index(self):
        """Smallest k with every k-fold generator product zero; None if unital."""
        if self.convention == "reflexive" and self.poset.n > 0:
            return None
        gens = self.generators
        index = self.index
        live = set(range(self.dim))
        k = 1
        while live:
            succ = set()
            for i in live:
                x, y = gens[i]
                for j, (u, v) in enumerate(gens):
                    if y == u:
                        t = index.get(Pair(x, v))
                        if t is not None:
                            succ.add(t)
            live = succ
            k += 1
        return k

    def __repr__(self):
        return "<IncidenceAlgebra %s dim=%d %s>" % (
            ",".join(self.poset.labels),
            self.dim,
            self.convention,
        )


class AlgebraElement:
    """Sparse rational combination of generators.  Treat as immutable."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def support(self):
        return sorted(self.coeffs)

    def coefficient(self, key):
        return self.coeffs.get(self.algebra._gen_index(key), Fraction(0))

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra.same_algebra(other.algebra)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        return self.algebra.add(self, other)

    def __sub__(self, other):
        return self.algebra.add(self, self.algebra.scale(-1, other))

    def __neg__(self):
        return self.algebra.scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.algebra.scale(other, self)

    def __rmul__(self, other):
        return self.algebra.scale(other, self)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        labs = self.algebra.poset.labels
        parts = []
        for i in sorted(self.coeffs):
            x, y = self.algebra.generators[i]
            c = self.coeffs[i]
            name = "[%s,%s]" % (labs[x], labs[y])
            if c == 1:
                parts.append(name)
            elif c == -1:
                parts.append("-" + name)
            else:
                parts.append("%s%s" % (c, name))
        return " + ".join(parts).replace("+ -", "- ")


class MultiplicationTable:
    """Monomial structure constants: (i, j) -> (coeff, k) meaning
    b_i b_j = coeff * b_k; missing entries are zero products."""

    __slots__ = ("dim", "entries", "_assoc_ok")

    def __init__(self, dim, entries):
        self.dim = dim
        self.entries = dict(entries)
        for (i, j), (c, k) in self.entries.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ValueError("table entry (%d,%d)->%d out of range" % (i, j, k))
            if not c:
                raise ValueError("table entry (%d,%d) has zero coefficient" % (i, j))
        self._assoc_ok = None

    def __eq__(self, other):
        return (
            isinstance(other, MultiplicationTable)
            and self.dim == other.dim
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.dim, frozenset(self.entries.items())))

    def associativity_witness(self):
        """A triple (i, j, l) where (b_i b_j) b_l != b_i (b_j b_l), or None.

        Any violating triple either has (i, j) present in the table, or has
        (i, j) absent while b_j b_l and the outer product are both present;
        the two sweeps below cover both cases without cubing the dimension.
        """
        entries = self.entries
        for (i, j), (c, k) in sorted(entries.items()):
            for l in range(self.dim):
                lhs = entries.get((k, l))
                inner = entries.get((j, l))
                rhs = entries.get((i, inner[1])) if inner else None
                left = (c * lhs[0], lhs[1]) if lhs else None
                right = (inner[0] * rhs[0], rhs[1]) if inner and rhs else None
                if left != right:
                    return (i, j, l)
        for (j, l), (c, k) in sorted(entries.items()):
            for i in range(self.dim):
                if (i, j) not in entries and (i, k) in entries:
                    return (i, j, l)
        return None

    def ensure_associative(self):
        if self._assoc_ok is None:
            self._assoc_ok = self.associativity_witness() is None
        if not self._assoc_ok:
            witness = self.associativity_witness()
            raise NotAssociative(
                "table is not associative, witness indices %r" % (witness,),
                witness=witness,
            )

    def permuted_rescaled(self, perm, scales):
        """Relabel basis element i as perm[i] and rescale it by scales[i]."""
        if sorted(perm) != list(range(self.dim)):
            raise ValueError("not a permutation of 0..dim-1")
        if len(scales) != self.dim or any(not s for s in scales):
            raise ValueError("need one nonzero scale per basis element")
        entries = {}
        for (i, j), (c, k) in self.entries.items():
            entries[(perm[i], perm[j])] = (
                c * scales[i] * scales[j] / scales[k],
                perm[k],
            )
        return MultiplicationTable(self.dim, entries)

    def to_json_text(self):
        rows = [
            [i, j, str(c), k] for (i, j), (c, k) in sorted(self.entries.items())
        ]
        return json.dumps({"dim": self.dim, "entries": rows}) + "\n"

    @classmethod
    def from_json_text(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError("not valid JSON: %s" % e) from None
        if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
            raise ParseError("table JSON needs 'dim' and 'entries'")
        dim = data["dim"]
        if not isinstance(dim, int) or dim < 0:
            raise ParseError("'dim' must be a nonnegative integer")
        entries = {}
        for row in data["entries"]:
            if not (isinstance(row, list) and len(row) == 4):
                raise ParseError("each entry must be [i, j, coeff, k], got %r" % (row,))
            i, j, coeff, k = row
            if not all(isinstance(v, int) for v in (i, j, k)):
                raise ParseError("entry indices must be integers in %r" % (row,))
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise ParseError("entry indices out of range in %r" % (row,))
            try:
                c = Fraction(str(coeff))
            except (ValueError, ZeroDivisionError):
                raise ParseError("bad coefficient %r" % (coeff,)) from None
            if not c:
                raise ParseError("zero coefficient in %r (omit zero products)" % (row,))
            if (i, j) in entries:
                raise NotMonomial("duplicate entry for product (%d, %d)" % (i, j))
            entries[(i, j)] = (c, k)
        return cls(dim, entries)


def scramble(table, seed, rescale=True):
    """Seeded basis permutation, optionally rescaling each basis vector by a
    factor from RESCALE_FACTORS.  Same seed, same puzzle."""
    rng = LCG(seed)
    perm = list(range(table.dim))
    rng.shuffle(perm)
    if rescale:
        scales = [rng.choice(RESCALE_FACTORS) for _ in range(table.dim)]
    else:
        scales = [Fraction(1)] * table.dim
    return table.permuted_rescaled(perm, scales)

"""Finite posets as bitmask relation rows.

A Poset stores the strict order only: up[x] is the bitmask of elements
strictly above x, kept irreflexive, transitively closed and acyclic.  The
reflexive view is leq(x, y) == (x == y or strict(x, y)).  Everything else
in the package (comparable pairs, incidence algebras, ideals) is built on
top of these rows.

The canonical pair order used throughout is: diagonal pairs [x,x] in element
index order, then strict pairs sorted by natural-labeling position of their
endpoints.  PairPoset (the poset of comparable pairs under nesting) and the
algebra generator lists both follow it, so indices line up across modules.
"""

from typing import NamedTuple

from .errors import (
    CapExceeded,
    CycleDetected,
    DuplicateLabel,
    ParseError,
    SizeLimitExceeded,
    UnknownLabel,
)
from .rng import LCG

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def iterbits(mask):
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_label(label):
    if not isinstance(label, str) or not label:
        raise ValueError("labels must be nonempty strings, got %r" % (label,))
    if any(c.isspace() for c in label) or "<" in label or "#" in label:
        raise ValueError("label %r contains whitespace, '<' or '#'" % (label,))


class Pair(NamedTuple):
    x: int
    y: int


class Poset:
    """Immutable finite poset on elements 0..n-1 with string labels."""

    __slots__ = ("n", "labels", "up", "down", "_index")

    def __init__(self, labels, up):
        labels = tuple(labels)
        up = tuple(up)
        n = len(labels)
        if len(up) != n:
            raise ValueError("need one relation row per element")
        for lab in labels:
            _check_label(lab)
        if len(set(labels)) != n:
            raise DuplicateLabel("duplicate label among %r" % (labels,))
        full = (1 << n) - 1
        for x in range(n):
            if up[x] & ~full:
                raise ValueError("relation row %d mentions elements out of range" % x)
            if up[x] >> x & 1:
                raise CycleDetected("element %r is strictly below itself" % labels[x])
        for x in range(n):
            for y in iterbits(up[x]):
                if up[y] >> x & 1:
                    raise CycleDetected(
                        "%r and %r are strictly below each other" % (labels[x], labels[y])
                    )
                if up[y] & ~up[x]:
                    raise ValueError("relation is not transitively closed")
        down = [0] * n
        for x in range(n):
            for y in iterbits(up[x]):
                down[y] |= 1 << x
        self.n = n
        self.labels = labels
        self.up = up
        self.down = tuple(down)
        self._index = {lab: i for i, lab in enumerate(labels)}

    def strict(self, x, y):
        return bool(self.up[x] >> y & 1)

    def leq(self, x, y):
        return x == y or bool(self.up[x] >> y & 1)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel("no element labeled %r" % (label,)) from None

    def strict_pairs(self):
        for x in range(self.n):
            for y in iterbits(self.up[x]):
                yield Pair(x, y)

    def strict_pair_count(self):
        return sum(m.bit_count() for m in self.up)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        rels = " ".join(
            "%s<%s" % (self.labels[p.x], self.labels[p.y]) for p in covers(self)
        )
        return "<Poset %s%s>" % (",".join(self.labels), ": " + rels if rels else "")


def transitive_closure(n, rows, labels=None):
    """Close relation rows; raises CycleDetected if an element reaches itself."""
    rows = list(rows)
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= rows[k]
    for i in range(n):
        if rows[i] >> i & 1:
            who = labels[i] if labels is not None else i
            raise CycleDetected("cycle through element %r" % (who,))
    return rows


def poset_from_relations(labels, relations):
    """Build a Poset from labels and (smaller, larger) label pairs."""
    labels = list(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel("duplicate label %r" % (lab,))
        seen.add(lab)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    rows = [0] * n
    for a, b in relations:
        if a not in index:
            raise UnknownLabel("relation mentions unknown label %r" % (a,))
        if b not in index:
            raise UnknownLabel("relation mentions unknown label %r" % (b,))
        if a == b:
            raise CycleDetected("relation %r<%r relates an element to itself" % (a, b))
        rows[index[a]] |= 1 << index[b]
    return Poset(labels, transitive_closure(n, rows, labels))


# ---------------------------------------------------------------------------
# order queries


def covers(P):
    """Covering pairs: x < y with nothing strictly between."""
    out = []
    for x in range(P.n):
        for y in iterbits(P.up[x]):
            if P.up[x] & P.down[y] == 0:
                out.append(Pair(x, y))
    return out


def natural_labeling(P):
    """A topological order of the elements, ties broken by original index.

    Returns the permutation as a list: entry k is the element in position k.
    """
    remaining = (1 << P.n) - 1
    order = []
    while remaining:
        for x in iterbits(remaining):
            if P.down[x] & remaining == 0:
                break
        order.append(x)
        remaining &= ~(1 << x)
    return order


def down_set(P, elems):
    """Smallest downward-closed set containing elems."""
    out = set()
    for s in elems:
        out.add(s)
        out.update(iterbits(P.down[s]))
    return out


def up_set(P, elems):
    """Smallest upward-closed set containing elems."""
    out = set()
    for s in elems:
        out.add(s)
        out.update(iterbits(P.up[s]))
    return out


def levels(P):
    """Length of the longest chain strictly below each element (0 for minimal)."""
    lev = [0] * P.n
    for x in natural_labeling(P):
        lev[x] = max((lev[d] + 1 for d in iterbits(P.down[x])), default=0)
    return lev


def longest_chain_length(P):
    """Number of elements in a longest chain (0 for the empty poset)."""
    if P.n == 0:
        return 0
    return max(levels(P)) + 1


def dual(P):
    return Poset(P.labels, P.down)


def all_pairs(P):
    """Comparable pairs in the canonical order: diagonals, then strict pairs
    sorted by natural-labeling position."""
    pos = [0] * P.n
    for k, x in enumerate(natural_labeling(P)):
        pos[x] = k
    strict = sorted(P.strict_pairs(), key=lambda p: (pos[p.x], pos[p.y]))
    return [Pair(x, x) for x in range(P.n)] + strict


# ---------------------------------------------------------------------------
# the poset of comparable pairs under nesting


class PairPoset:
    """Comparable pairs [x,y] ordered by nesting: [x,y] below [u,v] when
    u <= x and y <= v.  Diagonal pairs are exactly the minimal elements.
    Upward-closed subsets of this poset are what the ideal machinery
    enumerates."""

    __slots__ = ("poset", "pairs", "index", "wider", "narrower", "by_first")

    def __init__(self, P):
        pairs = all_pairs(P)
        m = len(pairs)
        index = {p: i for i, p in enumerate(pairs)}
        wider = [0] * m
        narrower = [0] * m
        for i, (x, y) in enumerate(pairs):
            for j, (u, v) in enumerate(pairs):
                if i != j and P.leq(u, x) and P.leq(y, v):
                    wider[i] |= 1 << j
                    narrower[j] |= 1 << i
        by_first = [[] for _ in range(P.n)]
        for i, p in enumerate(pairs):
            by_first[p.x].append(i)
        self.poset = P
        self.pairs = tuple(pairs)
        self.index = index
        self.wider = tuple(wider)
        self.narrower = tuple(narrower)
        self.by_first = tuple(tuple(js) for js in by_first)

    @property
    def size(self):
        return len(self.pairs)

    def principal_up(self, i):
        return (1 << i) | self.wider[i]

    def is_up_closed(self, mask):
        for i in iterbits(mask):
            if self.wider[i] & ~mask:
                return False
        return True

    def minimal_of(self, mask):
        return [i for i in iterbits(mask) if self.narrower[i] & mask == 0]

    def covers(self):
        out = []
        for i in range(self.size):
            for j in iterbits(self.wider[i]):
                if self.wider[i] & self.narrower[j] == 0:
                    out.append((i, j))
        return out

    def pair_label(self, i):
        p = self.pairs[i]
        labs = self.poset.labels
        return "[%s,%s]" % (labs[p.x], labs[p.y])


def pair_poset(P):
    return PairPoset(P)


class IntervalOrder(NamedTuple):
    """Relation on comparable pairs: [x,y] relates to [u,v] when y <= u.
    Neither reflexive nor irreflexive; a pair relates to itself exactly
    when it is diagonal."""

    pairs: tuple
    rel: tuple

    def holds(self, i, j):
        return bool(self.rel[i] >> j & 1)

    def reflexive_indices(self):
        return [i for i in range(len(self.pairs)) if self.rel[i] >> i & 1]


def interval_order(P):
    pairs = all_pairs(P)
    m = len(pairs)
    rel = [0] * m
    for i, (_, y) in enumerate(pairs):
        for j, (u, _) in enumerate(pairs):
            if P.leq(y, u):
                rel[i] |= 1 << j
    return IntervalOrder(tuple(pairs), tuple(rel))


# ---------------------------------------------------------------------------
# upward-closed subsets

# Both branches of the recursion force decisions: including an element pulls
# in everything wider, excluding it rules out everything narrower.  Each
# up-set is emitted exactly once, masks come out in a fixed order.


def _up_closed_masks(n, above, below):
    def rec(undecided, current):
        if not undecided:
            yield current
            return
        i = (undecided & -undecided).bit_length() - 1
        forced_in = (1 << i) | above[i]
        yield from rec(undecided & ~forced_in, current | forced_in)
        forced_out = (1 << i) | below[i]
        yield from rec(undecided & ~forced_out, current)

    yield from rec((1 << n) - 1, 0)


def enumerate_up_sets(G, cap=20):
    """All upward-closed subsets of a PairPoset, as bitmasks (generator)."""
    if G.size > cap:
        raise CapExceeded(
            "pair poset has %d elements, cap is %d" % (G.size, cap), required=G.size
        )
    return _up_closed_masks(G.size, G.wider, G.narrower)


def count_up_sets(G, cap=20):
    """Number of upward-closed subsets, via the same branching with a memo."""
    if G.size > cap:
        raise CapExceeded(
            "pair poset has %d elements, cap is %d" % (G.size, cap), required=G.size
        )
    above, below = G.wider, G.narrower
    memo = {}

    def rec(undecided):
        if not undecided:
            return 1
        got = memo.get(undecided)
        if got is not None:
            return got
        i = (undecided & -undecided).bit_length() - 1
        total = rec(undecided & ~((1 << i) | above[i])) + rec(
            undecided & ~((1 << i) | below[i])
        )
        memo[undecided] = total
        return total

    return rec((1 << G.size) - 1)


def poset_up_sets(P):
    """Upward-closed element subsets of a plain poset, as bitmasks."""
    return _up_closed_masks(P.n, P.up, P.down)


def poset_down_sets(P):
    return _up_closed_masks(P.n, P.down, P.up)


# ---------------------------------------------------------------------------
# isomorphism


def _refined_colors(P):
    colors = [(P.up[x].bit_count(), P.down[x].bit_count()) for x in range(P.n)]
    colors = _canon(colors)
    for _ in range(P.n):
        new = [
            (
                colors[x],
                tuple(sorted(colors[y] for y in iterbits(P.up[x]))),
                tuple(sorted(colors[y] for y in iterbits(P.down[x]))),
            )
            for x in range(P.n)
        ]
        new = _canon(new)
        if new == colors:
            break
        colors = new
    return colors


def _canon(colors):
    table = {c: i for i, c in enumerate(sorted(set(colors)))}
    return [table[c] for c in colors]


def find_isomorphism(P, Q, max_n=12):
    """An order isomorphism P -> Q as a list (image of each element), or None.

    Exhaustive search with color refinement pruning; refuses very large
    inputs rather than silently taking forever.
    """
    if P.n != Q.n:
        return None
    if P.n > max_n:
        raise SizeLimitExceeded(
            "isomorphism search limited to %d elements, got %d" % (max_n, P.n)
        )
    n = P.n
    if n == 0:
        return []
    cp = _refined_colors(P)
    cq = _refined_colors(Q)
    if sorted(cp) != sorted(cq):
        return None
    class_size = {c: cp.count(c) for c in set(cp)}
    order = sorted(range(n), key=lambda x: (class_size[cp[x]], cp[x], x))
    candidates = {x: [q for q in range(n) if cq[q] == cp[x]] for x in order}
    image = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        x = order[k]
        for q in candidates[x]:
            if used[q]:
                continue
            ok = True
            for j in range(k):
                p2 = order[j]
                q2 = image[p2]
                if P.strict(x, p2) != Q.strict(q, q2) or P.strict(p2, x) != Q.strict(
                    q2, q
                ):
                    ok = False
                    break
            if ok:
                image[x] = q
                used[q] = True
                if extend(k + 1):
                    return True
                image[x] = -1
                used[q] = False
        return False

    if extend(0):
        return image
    return None


def is_isomorphic(P, Q, max_n=12):
    return find_isomorphism(P, Q, max_n=max_n) is not None


# ---------------------------------------------------------------------------
# stock posets and corpora


def _default_labels(k):
    if k <= 26:
        return [_LETTERS[i] for i in range(k)]
    return ["x%d" % i for i in range(k)]


def chain(k):
    full = (1 << k) - 1
    return Poset(_default_labels(k), [full ^ ((2 << i) - 1) for i in range(k)])


def antichain(k):
    return Poset(_default_labels(k), [0] * k)


def diamond():
    return poset_from_relations("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def boolean_lattice(k):
    """Subsets of a k-element set ordered by inclusion.  Labels are the
    member letters joined, '0' for the empty set."""
    if k > 6:
        raise SizeLimitExceeded("boolean_lattice(%d) would have %d elements" % (k, 1 << k))
    n = 1 << k
    labels = []
    for s in range(n):
        labels.append("".join(_LETTERS[i] for i in iterbits(s)) or "0")
    rows = []
    for s in range(n):
        row = 0
        for t in range(n):
            if s != t and s & t == s:
                row |= 1 << t
        rows.append(row)
    return Poset(labels, rows)


def random_poset(k, edge_prob=0.3, seed=0):
    """Transitive closure of a random DAG on a fixed topological order.

    Edge draws use the package LCG, one draw per index pair (i, j), i < j,
    in row order, so a (k, edge_prob, seed) triple pins the poset exactly.
    """
    rng = LCG(seed)
    rows = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if rng.next_is_below(edge_prob):
                rows[i] |= 1 << j
    return Poset(["x%d" % i for i in range(k)], transitive_closure(k, rows))


def all_labeled_posets(n):
    """Every labeled poset on n elements (strict relation rows differ).

    Built by extension: each poset on k elements arises once from its
    restriction to the first k-1 by choosing the new element's strict
    down-set D and strict up-set U, where D is down-closed, U is up-closed,
    they are disjoint, and every member of D lies strictly below every
    member of U.
    """
    level = [()]
    for k in range(1, n + 1):
        prev_n = k - 1
        new_level = []
        for rows in level:
            down_rows = [0] * prev_n
            for x in range(prev_n):
                for y in iterbits(rows[x]):
                    down_rows[y] |= 1 << x
            down_sets = list(_up_closed_masks(prev_n, down_rows, rows))
            up_sets = list(_up_closed_masks(prev_n, rows, down_rows))
            for D in down_sets:
                for U in up_sets:
                    if D & U:
                        continue
                    if any(U & ~rows[d] for d in iterbits(D)):
                        continue
                    ext = list(rows) + [U]
                    newbit = 1 << prev_n
                    for d in iterbits(D):
                        ext[d] |= newbit
                    new_level.append(tuple(ext))
        level = new_level
    labels = _default_labels(n)
    return [Poset(labels, rows) for rows in level]


# ---------------------------------------------------------------------------
# text format and DOT export


def parse_poset(text):
    """Read the poset text format:

        # optional comments
        elements: a b c
        relations: a<b b<c

    The relation list may be spread over several 'relations:' lines and is
    transitively closed; covers are enough.
    """
    elements = None
    relations = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("elements:"):
            if elements is not None:
                raise ParseError("second elements line", line=lineno)
            elements = line[len("elements:") :].split()
            for lab in elements:
                if "<" in lab:
                    raise ParseError("label %r contains '<'" % (lab,), line=lineno)
        elif line.startswith("relations:"):
            for tok in line[len("relations:") :].split():
                left, sep, right = tok.partition("<")
                if not sep or not left or not right or "<" in right:
                    raise ParseError("bad relation token %r" % (tok,), line=lineno)
                relations.append((left, right))
        else:
            raise ParseError("unrecognized line %r" % (line,), line=lineno)
    if elements is None:
        raise ParseError("missing elements line")
    return poset_from_relations(elements, relations)


def format_poset(P):
    """Inverse of parse_poset, emitting covers only."""
    rels = " ".join("%s<%s" % (P.labels[p.x], P.labels[p.y]) for p in covers(P))
    return "elements: %s\nrelations:%s\n" % (
        " ".join(P.labels),
        " " + rels if rels else "",
    )


def _dot_rank_groups(names, lev):
    lines = []
    for value in sorted(set(lev)):
        members = [names[x] for x in range(len(names)) if lev[x] == value]
        lines.append("  { rank=same; %s }" % " ".join('"%s";' % m for m in members))
    return lines


def hasse_dot(P):
    """Hasse diagram as DOT: one edge per cover, nodes ranked by level."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for lab in P.labels:
        lines.append('  "%s";' % lab)
    if P.n:
        lines.extend(_dot_rank_groups(P.labels, levels(P)))
    for p in covers(P):
        lines.append('  "%s" -> "%s";' % (P.labels[p.x], P.labels[p.y]))
    lines.append("}")
    return "\n".join(lines) + "\n"


def pair_poset_dot(G):
    """Hasse diagram of the nesting order on comparable pairs."""
    names = [G.pair_label(i) for i in range(G.size)]
    lev = [0] * G.size
    # anything narrower has a strictly smaller narrower-set, so this order is
    # topological
    for i in sorted(range(G.size), key=lambda i: G.narrower[i].bit_count()):
        lev[i] = max((lev[j] + 1 for j in iterbits(G.narrower[i])), default=0)
    lines = ["digraph pairs {", "  rankdir=BT;"]
    for name in names:
        lines.append('  "%s";' % name)
    if G.size:
        lines.extend(_dot_rank_groups(names, lev))
    for i, j in G.covers():
        lines.append('  "%s" -> "%s";' % (names[i], names[j]))
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Word rewriting for the relation-presented companion of an incidence
algebra.

Generators are the poset elements themselves; relations (as rewrite rules):

    (i)   a b c -> a c    whenever a <= b <= c
    (ii)  a b a -> 0      for distinct a, b
    (iii) b a   -> 0      for strictly comparable a < b

The triple convention decides who may repeat in (i): 'allow_repeats' (the
default) reads <= reflexively, so a a b -> a b and a a a -> a a are rules;
'distinct_only' demands three distinct elements.

Reduction runs a fixed strategy, leftmost position first and shorter left
side first, to a fixpoint.  Every rule shortens or kills the word, so this
terminates; whether the normal form is strategy-independent is exactly what
confluence_probe measures, by exploring every redex choice and reporting
words with more than one normal form.  Dimension counts are evidence about
specific posets and degrees, nothing more.
"""

from itertools import product as _cartesian

from .errors import WordLengthExceeded

MAX_WORD_LEN = 12
MAX_PROBE_DEGREE = 8


class RewriteSystem:
    """Rule set for one poset and triple convention.  Rules map a left side
    (tuple of element indices) to a shorter tuple or None for zero."""

    __slots__ = ("poset", "triple_convention", "rules", "max_word_len")

    def __init__(self, poset, triple_convention, rules, max_word_len=MAX_WORD_LEN):
        self.poset = poset
        self.triple_convention = triple_convention
        self.rules = dict(rules)
        self.max_word_len = max_word_len

    def sorted_rules(self):
        return sorted(self.rules.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def rule_strings(self):
        labs = self.poset.labels
        out = []
        for lhs, rhs in self.sorted_rules():
            left = " ".join(labs[i] for i in lhs)
            right = "0" if rhs is None else " ".join(labs[i] for i in rhs)
            out.append("%s -> %s" % (left, right))
        return out

    def __repr__(self):
        return "<RewriteSystem %s %s, %d rules>" % (
            ",".join(self.poset.labels),
            self.triple_convention,
            len(self.rules),
        )


def build_rewrite_system(P, triple_convention="allow_repeats"):
    if triple_convention not in ("distinct_only", "allow_repeats"):
        raise ValueError("triple_convention must be 'distinct_only' or 'allow_repeats'")
    rules = {}
    n = P.n
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            if P.strict(a, b):
                rules[(b, a)] = None
            rules[(a, b, a)] = None
    distinct = triple_convention == "distinct_only"
    for a in range(n):
        for b in range(n):
            if not P.leq(a, b):
                continue
            for c in range(n):
                if not P.leq(b, c):
                    continue
                if distinct and (a == b or b == c or a == c):
                    continue
                # a <= b <= a forces a == b, so no clash with rule (ii)
                rules[(a, b, c)] = (a, c)
    return RewriteSystem(P, triple_convention, rules)


def _match_at(R, word, p):
    """The rule applying at position p, shorter left side first."""
    two = tuple(word[p : p + 2])
    if len(two) == 2 and two in R.rules:
        return two
    three = tuple(word[p : p + 3])
    if len(three) == 3 and three in R.rules:
        return three
    return None


def reduce_word(R, word):
    """Normal form of the word (a tuple of element indices), None for zero."""
    word = tuple(word)
    if len(word) > R.max_word_len:
        raise WordLengthExceeded(
            "word of length %d exceeds the limit %d" % (len(word), R.max_word_len)
        )
    for i in word:
        if not 0 <= i < R.poset.n:
            raise ValueError("letter %r is not a poset element index" % (i,))
    w = list(word)
    p = 0
    while p < len(w):
        lhs = _match_at(R, w, p)
        if lhs is None:
            p += 1
            continue
        rhs = R.rules[lhs]
        if rhs is None:
            return None
        w[p : p + len(lhs)] = rhs
        # a rewrite can only create redexes overlapping the edit
        p = max(0, p - 2)
    return tuple(w)


def dimension_up_to(R, max_degree):
    """Cumulative rank of the span of reduced words of degree <= d, for each
    d up to max_degree.

    Rules send a word to a word or to zero, so the span of reduced words is
    spanned by distinct normal forms, and the rank is their count.
    """
    if max_degree > MAX_PROBE_DEGREE:
        raise ValueError(
            "dimension probe limited to degree %d, asked for %d"
            % (MAX_PROBE_DEGREE, max_degree)
        )
    letters = range(R.poset.n)
    seen = set()
    counts = []
    for d in range(1, max_degree + 1):
        for word in _cartesian(letters, repeat=d):
            nf = reduce_word(R, word)
            if nf is not None:
                seen.add(nf)
        counts.append(len(seen))
    return counts


def _all_normal_forms(R, word, memo):
    got = memo.get(word)
    if got is not None:
        return got
    # at one position both a 2- and a 3-rule can in principle fire; try both
    options = []
    for p in range(len(word)):
        for lhs in (tuple(word[p : p + 2]), tuple(word[p : p + 3])):
            if len(lhs) >= 2 and lhs in R.rules:
                options.append((p, lhs))
    if not options:
        result = frozenset([word])
    else:
        acc = set()
        for p, lhs in options:
            rhs = R.rules[lhs]
            if rhs is None:
                acc.add(None)
            else:
                nxt = word[:p] + rhs + word[p + len(lhs) :]
                acc |= _all_normal_forms(R, nxt, memo)
        result = frozenset(acc)
    memo[word] = result
    return result


def confluence_probe(R, max_len=5):
    """Words of length <= max_len whose normal form depends on the rewrite
    order, each with its full set of normal forms.  Empty list: no
    strategy dependence found at this scale."""
    witnesses = []
    memo = {}
    letters = range(R.poset.n)
    for d in range(1, max_len + 1):
        for word in _cartesian(letters, repeat=d):
            forms = _all_normal_forms(R, word, memo)
            if len(forms) > 1:
                witnesses.append(
                    (word, sorted(forms, key=lambda t: (t is not None, t)))
                )
    return witnesses

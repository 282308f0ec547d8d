"""Deliberately slow reference computations.

Everything here is the direct quantifier-chasing definition with no clever
data structure, so agreement with the fast implementations is meaningful
evidence rather than a shared bug. All entry points are capped at sizes
where exhaustive search stays instant.
"""

from itertools import permutations

from .errors import SizeLimitExceeded
from .poset import Pair, iterbits, natural_labeling

_SUBSET_LIMIT = 15
_PERM_LIMIT = 6


def brute_up_closed_masks(n, above):
    """All up-closed subsets of an n-element order, by filtering 2^n masks.

    above[i] is the bitmask of elements strictly above i.
    """
    if n > _SUBSET_LIMIT:
        raise SizeLimitExceeded("subset filter capped at %d elements" % _SUBSET_LIMIT)
    out = []
    for mask in range(1 << n):
        if all(above[i] & ~mask == 0 for i in iterbits(mask)):
            out.append(mask)
    return out


def brute_antichain_count(n, above):
    """Antichains counted directly: subsets containing no comparable pair."""
    if n > _SUBSET_LIMIT:
        raise SizeLimitExceeded("subset filter capped at %d elements" % _SUBSET_LIMIT)
    count = 0
    for mask in range(1 << n):
        if all(above[i] & mask == 0 for i in iterbits(mask)):
            count += 1
    return count


def brute_covers(P):
    """Cover pairs by scanning every candidate middle element."""
    out = []
    for x in range(P.n):
        for y in iterbits(P.up[x]):
            if not any(P.strict(x, z) and P.strict(z, y) for z in range(P.n)):
                out.append(Pair(x, y))
    return out


def brute_isomorphism(P, Q):
    """Exhaustive permutation search. Returns a mapping list or None."""
    if P.n > _PERM_LIMIT or Q.n > _PERM_LIMIT:
        raise SizeLimitExceeded("permutation search capped at %d" % _PERM_LIMIT)
    if P.n != Q.n:
        return None
    for perm in permutations(range(P.n)):
        if all(
            P.strict(x, y) == Q.strict(perm[x], perm[y])
            for x in range(P.n)
            for y in range(P.n)
        ):
            return list(perm)
    return None


def matrix_product(a, b):
    """Dense textbook matrix multiplication over Fractions."""
    n = len(a)
    assert all(len(row) == n for row in a) and len(b) == n
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def element_product_via_matrices(f, g):
    """Multiply two algebra elements through their dense matrix images."""
    A = f.algebra
    A._claim(g)
    order = natural_labeling(A.poset)
    m = matrix_product(A.to_matrix(f), A.to_matrix(g))
    coeffs = {}
    for ix, x in enumerate(order):
        for iy, y in enumerate(order):
            c = m[ix][iy]
            if not c:
                continue
            # products of incidence-pattern matrices keep the pattern
            key = A.index[Pair(x, y)]
            coeffs[key] = c
    return A.element(coeffs)

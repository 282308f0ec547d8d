"""A walk through the ideal lattice of one small incidence algebra.

Run:  python3 demos/ideal_lattice_tour.py
"""

from posetalg import (
    IncidenceAlgebra,
    diamond,
    enumerate_ideals,
    format_ideal,
    format_poset,
    ideal_product,
    indecomposable_ideals,
    is_indecomposable,
    maximal_ideals,
    maximal_indecomposable_ideals,
    principal_ideal,
)

P = diamond()
print("The poset (a below b and c, d on top):")
print(format_poset(P))

A = IncidenceAlgebra(P, "reflexive")
G = A.pair_poset()
print("Comparable pairs, i.e. algebra generators (%d):" % A.dim)
print("  " + " ".join(G.pair_label(i) for i in range(G.size)))

print()
print("Pairs ordered by nesting; the diagonals are the minimal ones:")
print("  minimal:", [G.pair_label(i) for i in G.minimal_of((1 << G.size) - 1)])

ideals = sorted(enumerate_ideals(A), key=lambda I: (I.dimension(), I.up_mask))
print()
print("Every two-sided ideal is an up-set of that pair order. All %d:"
      % len(ideals))
for I in ideals:
    tags = []
    if is_indecomposable(I):
        tags.append("indecomposable")
    if I in maximal_indecomposable_ideals(A):
        tags.append("generated by a diagonal")
    if I in maximal_ideals(A):
        tags.append("maximal")
    print(("  %-45s %s" % (format_ideal(I), ", ".join(tags))).rstrip())

print()
print("Products track the order. With I_x the ideal of the diagonal [x,x]:")
tops = maximal_indecomposable_ideals(A)
for x in range(P.n):
    for y in range(P.n):
        prod = ideal_product(tops[x], tops[y])
        rel = "<=" if P.leq(x, y) else "||"
        print("  I_%s * I_%s = %-30s (%s %s %s)" % (
            P.labels[x], P.labels[y], format_ideal(prod),
            P.labels[x], rel, P.labels[y]))

print()
print("Squaring separates the diagonal ideals from the rest:")
for I in indecomposable_ideals(A):
    sq = ideal_product(I, I)
    verdict = "idempotent" if sq == I else ("nilpotent" if sq.is_zero
                                            else "shrinks")
    print("  %-45s %s" % (format_ideal(I), verdict))

print()
print("Principal ideal of the strict pair [a,d], for contrast:")
i_ad = next(i for i in range(A.dim) if G.pair_label(i) == "[a,d]")
I = principal_ideal(A, i_ad)
print("  %s  (its square is %s)" %
      (format_ideal(I), format_ideal(ideal_product(I, I))))

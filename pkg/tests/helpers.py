"""Shared brute-force machinery for the test suite.

Everything here is deliberately dumb: exhaustive enumeration and union-find,
no closed forms, so it can serve as an independent oracle for them.
"""

from radical_ram.arith import unit_decomp
from radical_ram.holomorph import GroupDesc, HolomorphElement, conj, element


def elements(G):
    return [HolomorphElement(i, u)
            for u in range(G.pr) if u % G.p
            for i in range(G.ps)]


def generators(G):
    d = unit_decomp(G.p, G.r)
    gens = [element(G, 1, 1), element(G, 0, d.torsion_gen)]
    if G.r > 1:
        gens.append(element(G, 0, d.principal_gen))
    return gens


def brute_orbits(G):
    """Conjugation orbits via union-find over generator conjugation."""
    els = elements(G)
    index = {g: k for k, g in enumerate(els)}
    parent = list(range(len(els)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in els:
        for h in generators(G):
            a, b = find(index[g]), find(index[conj(g, h, G)])
            if a != b:
                parent[a] = b
    orbits = {}
    for g in els:
        orbits.setdefault(find(index[g]), set()).add(g)
    return list(orbits.values())


SMALL = [GroupDesc(3, 1, 1), GroupDesc(3, 2, 1), GroupDesc(3, 2, 2),
         GroupDesc(3, 3, 1), GroupDesc(3, 3, 3), GroupDesc(5, 1, 1),
         GroupDesc(5, 2, 2), GroupDesc(7, 1, 1), GroupDesc(3, 2, 0)]

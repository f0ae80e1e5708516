"""Closed-form irreducible character table of C(p^s) x| G(p^r).

The table has two families:

  * p^{r-1}(p-1) linear characters, inflated from the abelianization
    G(p^r) and labeled by exponent pairs (a, b) on the two unit-group
    generators;
  * for each k = 1..s, p^{r-k} induced characters of degree p^{k-1}(p-1),
    labeled by a canonical coset representative ("twist") among the linear
    characters of G(p^r) — we fix representatives (0, b) with
    0 <= b < p^{r-k}, whose restrictions hit each character of
    G(p^r)^k exactly once (property verified by test, not assumed).

Every value is (integer coefficient) x (root of unity of order dividing
phi(p^r)); the induced coefficient at a class with depths (alpha, beta) is
0 / -p^{k-1} / p^{k-1}(p-1) according to whether the class is too shallow
(alpha < k or beta < k-1), critical (beta = k-1), or deep (beta >= k).
Values are returned in Z[zeta_N] with N = p^r(p-1), one ring that also
contains every root needed by the brute-force induction sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arith import CycInt, discrete_log, unit_decomp
from .holomorph import GroupDesc, all_classes, class_count


@dataclass(frozen=True)
class SubgroupDesc:
    """C(p^x) x| G(p^r)^y inside a fixed ambient group (y = 0 meaning the
    full unit part).  Containment is componentwise: larger cyclic piece,
    smaller congruence level."""

    x: int
    y: int


def subgroup_order(sd, G):
    y = min(sd.y, G.r)
    unit = G.p ** (G.r - y) if y >= 1 else G.p ** (G.r - 1) * (G.p - 1)
    return G.p**sd.x * unit


def subgroup_normal_form(sd, G):
    """Descriptors with y >= r all denote the same (trivial unit part)."""
    return SubgroupDesc(sd.x, min(sd.y, G.r))


def subgroup_eq(a, b, G):
    return subgroup_normal_form(a, G) == subgroup_normal_form(b, G)


def subgroup_contains(big, small, G):
    """Whether `small` is a subgroup of `big` (as actual groups)."""
    a, b = subgroup_normal_form(big, G), subgroup_normal_form(small, G)
    return a.x >= b.x and a.y <= b.y


def subgroup_intersect(a, b, G):
    return SubgroupDesc(min(a.x, b.x), min(max(a.y, b.y), G.r))


def whole_group(G):
    return SubgroupDesc(G.s, 0)


def trivial_subgroup(G):
    return SubgroupDesc(0, G.r)


@dataclass(frozen=True)
class Character:
    """A table row: kind 'linear' or 'induced', with its defining exponent
    pair, degree, level and primitive degree."""

    group: GroupDesc
    kind: str
    twist: tuple
    degree: int
    level: int
    prim_degree: int

    @property
    def k(self):
        return self.level

    def is_trivial(self):
        return self.kind == "linear" and self.twist == (0, 0)


def twist_order(G):
    """phi(p^r): the order of the root-of-unity group the twists live in."""
    return G.p ** (G.r - 1) * (G.p - 1)


def zeta_order(G):
    """p^r(p-1): the common cyclotomic ring for values and induction sums."""
    return G.p**G.r * (G.p - 1)


def linear_exponent(twist, u, G):
    """Exponent e with psi_twist(u) = zeta_{m0}^e, m0 = phi(p^r)."""
    d = unit_decomp(G.p, G.r)
    a, b = discrete_log(u, d)
    m0 = twist_order(G)
    ta, tb = twist
    return (ta * a * d.principal_order + tb * b * d.torsion_order) % m0


def _trivial_on_level(twist, t, G):
    """Whether psi_twist restricts trivially to G(p^r)^t."""
    d = unit_decomp(G.p, G.r)
    if t >= G.r:
        return True
    if t == 0:
        gens = [d.torsion_gen, d.principal_gen]
    else:
        gens = [pow(d.principal_gen, G.p ** (t - 1), G.pr)]
    return all(linear_exponent(twist, g, G) == 0 for g in gens)


def _prim_degree_scan(twist, G):
    for t in range(G.r + 1):
        if _trivial_on_level(twist, t, G):
            return t
    raise AssertionError("unreachable: every twist is trivial on the trivial level")


@lru_cache(maxsize=None)
def character_table(G):
    """The full table, deterministically ordered by (level, twist).

    Cached per group; callers must treat the list as read-only."""
    p, r, s = G.p, G.r, G.s
    out = []
    for a in range(p - 1):
        for b in range(p ** (r - 1)):
            tw = (a, b)
            out.append(Character(G, "linear", tw, 1, 0, _prim_degree_scan(tw, G)))
    for k in range(1, s + 1):
        deg = p ** (k - 1) * (p - 1)
        for b in range(p ** (r - k)):
            tw = (0, b)
            pd = max(k, _prim_degree_scan(tw, G))
            out.append(Character(G, "induced", tw, deg, k, pd))
    assert len(out) == class_count(G)
    assert sum(chi.degree**2 for chi in out) == G.order
    return out


def induced_coefficient(k, alpha, beta, p):
    """The integer factor of an induced level-k value at class (alpha, beta)."""
    if alpha < k or beta < k - 1:
        return 0
    if beta == k - 1:
        return -(p ** (k - 1))
    return p ** (k - 1) * (p - 1)


def char_coefficient(chi, cls):
    if chi.kind == "linear":
        return 1
    return induced_coefficient(chi.level, cls.alpha, cls.beta, chi.group.p)


def char_value(chi, cls, G):
    """Exact value of chi on the class, as a CycInt of order p^r(p-1)."""
    if chi.group != G:
        raise ValueError(f"character of {chi.group} evaluated in {G}")
    n = zeta_order(G)
    coeff = char_coefficient(chi, cls)
    if coeff == 0:
        return CycInt.zero(n)
    e = linear_exponent(chi.twist, cls.representative.u, G)
    return CycInt.term(coeff, e * (n // twist_order(G)), n)


def level(chi):
    return chi.level


def prim_degree(chi):
    return chi.prim_degree


def null_subgroup(chi):
    """The largest congruence-shaped subgroup C(p^x) x| G(p^r)^y on which the
    underlying representation is trivial: (s - level, prim_degree).

    For induced rows this is the whole kernel; for linear rows the kernel
    may additionally contain torsion units, but ramification subgroups are
    congruence-shaped, so this descriptor is what conductor computations
    consume."""
    return SubgroupDesc(chi.group.s - chi.level, chi.prim_degree)


def count_by(k, t, G):
    """How many table characters have level k and primitive degree t."""
    p, r, s = G.p, G.r, G.s
    if not (0 <= k <= s) or not (0 <= t <= r):
        return 0
    if k == 0:
        if t == 0:
            return 1
        if t == 1:
            return p - 2
        return p ** (t - 2) * (p - 1) ** 2
    if t < k:
        return 0
    if t == k:
        return 1
    return (p - 1) * p ** (t - k - 1)


def rou_sum(s_prime, p, r):
    """Sum over all units tau mod p^r of zeta_{p^{s'}}^tau, computed by
    honest summation in Z[zeta_{p^r(p-1)}]."""
    assert 0 <= s_prime <= r
    n = p**r * (p - 1)
    step = n // p**s_prime
    pairs = [(1, tau * step) for tau in range(p**r) if tau % p]
    return CycInt.from_pairs(pairs, n)


def rou_sum_closed(s_prime, p, r):
    """The classified value: phi(p^r), -p^{r-1}, or 0."""
    if s_prime == 0:
        return p ** (r - 1) * (p - 1)
    if s_prime == 1:
        return -(p ** (r - 1))
    return 0


def value_profiles(G, classes=None, table=None):
    """Factorized value data for fast exact linear algebra: per character,
    an integer coefficient and a twist exponent (mod phi(p^r)) on every
    class.  chi(class j) = coeffs[j] * zeta_{m0}^{exps[j]} exactly."""
    if classes is None:
        classes = all_classes(G)
    if table is None:
        table = character_table(G)
    units = [c.representative.u for c in classes]
    exp_cache = {}
    profiles = []
    for chi in table:
        if chi.twist not in exp_cache:
            exp_cache[chi.twist] = [linear_exponent(chi.twist, u, G) for u in units]
        exps = exp_cache[chi.twist]
        coeffs = [char_coefficient(chi, c) for c in classes]
        profiles.append((coeffs, exps))
    return classes, table, profiles


def character_json(chi):
    return {
        "kind": chi.kind,
        "k": chi.level,
        "twist": list(chi.twist),
        "degree": chi.degree,
        "level": chi.level,
        "prim_degree": chi.prim_degree,
    }

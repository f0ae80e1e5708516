"""Artin conductor exponents and discriminant valuations, each computed
along independent routes that must agree.

For a character chi of the local Galois group C(p^s) x| G(p^r) the
conductor exponent c(chi) is

  - computed definitionally as the largest upper-numbering break whose
    ramification group is NOT contained in the null subgroup of chi
    (so this route exercises the whole filtration machinery), and
  - computed in closed form from (level, primitive degree), and
  - folded into f(chi) = deg(chi) * (1 + c(chi)), which must land on a
    non-negative integer even though c has denominator p - 1, and must
    match a third, directly printed integer form.

The p-valuation of the local discriminant is then obtained three ways:
the conductor-discriminant sum over the character table, a closed
polynomial in (p, r, s), and the different-sum of the lower filtration.
A fourth route decomposes the sum by (level, primitive degree) classes
into named partial sums with their own closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartab import (
    character_table,
    count_by,
    level,
    null_subgroup,
    prim_degree,
    subgroup_contains,
)
from .ramfil import (
    EISENSTEIN,
    UNIT,
    UPPER,
    classify_prime,
    different_sum,
    frac_str,
    lower_filtration,
    upper_filtration,
)


@dataclass(frozen=True)
class ConductorRecord:
    character: object
    c_exp: Fraction
    f_val: int


def c_exp_definitional(chi, filt):
    """Largest break b of the canonical upper filtration with G^b not
    inside the null subgroup of chi; -1 for the trivial character."""
    assert filt.numbering == UPPER and filt.group == chi.group
    if chi.is_trivial():
        return Fraction(-1)
    gr = null_subgroup(chi)
    best = Fraction(-1)
    for b, h in filt.steps:
        if not subgroup_contains(gr, h, filt.group):
            best = max(best, b)
    assert best >= 0, "a nontrivial character must be detected by some break"
    return best


def _c_closed(case, p, lev, pr):
    if lev == 0:
        return Fraction(pr - 1)
    assert 1 <= lev <= pr
    if case == UNIT:
        if lev < pr:
            return Fraction(pr - 1)
        return Fraction(pr - 1) + Fraction(1, p - 1)
    assert case == EISENSTEIN
    if lev + 2 <= pr:
        return Fraction(pr - 1)
    return Fraction(lev) + Fraction(1, p - 1)


def c_exp_closed(chi, case):
    """Closed conductor exponent from (level, primitive degree).

    Unit case: pr-1, except pr-1 + 1/(p-1) on the diagonal 0 < lev = pr.
    Eisenstein case: pr-1 when pr >= lev+2, else lev + 1/(p-1) (the
    whole wild part survives one congruence level longer, so the
    fractional band is two classes wide)."""
    return _c_closed(case, chi.group.p, level(chi), prim_degree(chi))


def _f_printed(case, p, lev, pr):
    """The directly printed integer form of f = deg * (1 + c)."""
    if lev == 0:
        return pr
    deg = p ** (lev - 1) * (p - 1)
    if case == UNIT:
        return deg * pr + (p ** (lev - 1) if lev == pr else 0)
    if lev + 2 <= pr:
        return deg * pr
    return deg * (lev + 1) + p ** (lev - 1)


def artin_conductor(chi, ctx, filt=None):
    """Conductor record for chi, with the definitional and closed-form
    exponents reconciled and the integrality of f checked.  Disagreement
    is an internal inconsistency (it would falsify either the filtration
    canonicalization or the closed conductor data), hence an assert."""
    assert ctx.case in (UNIT, EISENSTEIN)
    if filt is None:
        filt = upper_filtration(ctx)
    assert chi.group == ctx.group()
    c_def = c_exp_definitional(chi, filt)
    c_clo = c_exp_closed(chi, ctx.case)
    assert c_def == c_clo, (
        f"conductor mismatch at p={ctx.p} r={ctx.r} s={ctx.s} {ctx.case}: "
        f"definitional {c_def} != closed {c_clo} for lev={level(chi)}, pr={prim_degree(chi)}"
    )
    f = chi.degree * (1 + c_clo)
    assert f.denominator == 1 and f >= 0, f"Artin conductor {f} must be a non-negative integer"
    f_val = int(f)
    assert f_val == _f_printed(ctx.case, ctx.p, level(chi), prim_degree(chi))
    return ConductorRecord(chi, c_clo, f_val)


def conductor_table(ctx):
    """ConductorRecords for the full character table, in table order."""
    filt = upper_filtration(ctx)
    return [artin_conductor(chi, ctx, filt) for chi in character_table(ctx.group())]


# ---------------------------------------------------------------------------
# Discriminant valuations.


def disc_vp_local_sum(ctx):
    """Conductor-discriminant formula: v_p(d) = sum of deg(chi) * f(chi)."""
    return sum(rec.character.degree * rec.f_val for rec in conductor_table(ctx))


def disc_vp_local_closed(ctx):
    """Closed local discriminant exponent.

    Unit case: p^s [r p^r - (r+1) p^(r-1)] + 2 (p^(2s)-1)/(p+1).
    Eisenstein case: r p^(2r-1)(p-1) + p (p^(2r)-1)/(p+1)
                     - p (p^(2r-3)+1)/(p+1), evaluated in exact
    rationals because p^(2r-3) is a negative power at r = 1; the result
    must still be an integer."""
    assert ctx.case in (UNIT, EISENSTEIN)
    p, r, s = ctx.p, ctx.r, ctx.s
    if ctx.case == UNIT:
        val = Fraction(p**s * (r * p**r - (r + 1) * p ** (r - 1))) + Fraction(
            2 * (p ** (2 * s) - 1), p + 1
        )
    else:
        val = (
            Fraction(r * p ** (2 * r - 1) * (p - 1))
            + Fraction(p) * Fraction(p ** (2 * r) - 1, p + 1)
            - Fraction(p) * (Fraction(p) ** (2 * r - 3) + 1) / (p + 1)
        )
    assert val.denominator == 1 and val >= 0, f"closed discriminant {val} must be an integer"
    return int(val)


def disc_subtotals(ctx):
    """The discriminant sum decomposed by (level, primitive degree)
    class, computed from the character counts:

      linear         sum of pr over level-0 characters;
      induced_main   sum of deg^2 * pr over positive-level characters;
      boundary       the fractional-band excess on lev = pr;
      near_boundary  the excess on lev = pr - 1 (Eisenstein only).

    Every character's deg * f splits exactly across these buckets."""
    assert ctx.case in (UNIT, EISENSTEIN)
    p, r, s = ctx.p, ctx.r, ctx.s
    G = ctx.group()
    linear = sum(count_by(0, t, G) * t for t in range(r + 1))
    induced_main = 0
    boundary = 0
    near_boundary = 0
    for k in range(1, s + 1):
        deg_sq = p ** (2 * (k - 1)) * (p - 1) ** 2
        for t in range(k, r + 1):
            induced_main += count_by(k, t, G) * deg_sq * t
        if ctx.case == UNIT:
            # excess deg^2 / (p-1) from c = pr - 1 + 1/(p-1) at t = k
            boundary += count_by(k, k, G) * p ** (2 * (k - 1)) * (p - 1)
        else:
            # excess deg^2 (1 + 1/(p-1)) at t = k ...
            boundary += count_by(k, k, G) * (deg_sq + p ** (2 * (k - 1)) * (p - 1))
            # ... and deg^2 / (p-1) at t = k + 1
            if k + 1 <= r:
                near_boundary += count_by(k, k + 1, G) * p ** (2 * (k - 1)) * (p - 1)
    return {
        "linear": linear,
        "induced_main": induced_main,
        "boundary": boundary,
        "near_boundary": near_boundary,
    }


def disc_subtotals_closed(ctx):
    """Closed forms of the four partial sums."""
    assert ctx.case in (UNIT, EISENSTEIN)
    p, r, s = ctx.p, ctx.r, ctx.s
    linear = r * p**r - (r + 1) * p ** (r - 1)
    main = Fraction((p**s - 1) * linear) + Fraction(p ** (2 * s) - 1, p + 1)
    if ctx.case == UNIT:
        boundary = Fraction(p ** (2 * s) - 1, p + 1)
        near = Fraction(0)
    else:
        boundary = Fraction(p) * Fraction(p ** (2 * s) - 1, p + 1)
        near = Fraction(p - 1) * Fraction(p ** (2 * s - 2) - 1, p + 1)
    out = {"linear": Fraction(linear), "induced_main": main, "boundary": boundary, "near_boundary": near}
    assert all(v.denominator == 1 for v in out.values())
    return {k: int(v) for k, v in out.items()}


def disc_vp_global(m, a, p):
    """Global discriminant exponent at p for m = p^r.

    Unit case: p^(r-s) primes above p, each contributing the local
    exponent, and the product matches the closed global form
    p^r [r p^r - (r+1) p^(r-1)] + 2 (p^(r+s) - p^(r-s))/(p+1).
    Eisenstein case: totally ramified, global = local."""
    ctx = classify_prime(p, m, a)
    assert ctx.case in (UNIT, EISENSTEIN), f"no wild data at p = {p}"
    assert p**ctx.r == m, "the global closed form is stated for m = p^r"
    local = disc_vp_local_closed(ctx)
    if ctx.case == EISENSTEIN:
        return local
    r, s = ctx.r, ctx.s
    total = p ** (r - s) * local
    closed = Fraction(p**r * (r * p**r - (r + 1) * p ** (r - 1))) + Fraction(
        2 * (p ** (r + s) - p ** (r - s)), p + 1
    )
    assert closed.denominator == 1 and int(closed) == total, (
        f"global discriminant routes disagree at p={p}, r={r}, s={s}: "
        f"{total} vs {closed}"
    )
    return total


# ---------------------------------------------------------------------------
# JSON shape and the named self-checks.


def conductor_json(ctx):
    """Per-character conductor data plus the discriminant cross-check."""
    from .chartab import character_json

    records = conductor_table(ctx)
    sum_route = sum(rec.character.degree * rec.f_val for rec in records)
    closed_route = disc_vp_local_closed(ctx)
    diff_route = different_sum(lower_filtration(ctx))
    return {
        "characters": [
            {
                "character": character_json(rec.character),
                "c": frac_str(rec.c_exp),
                "f": rec.f_val,
            }
            for rec in records
        ],
        "v_p_disc": {
            "sum": sum_route,
            "closed": closed_route,
            "different": diff_route,
            "agree": sum_route == closed_route == diff_route,
        },
    }


def conductor_checks(ctx):
    """Named self-checks for the verification report."""
    checks = []

    def run(name, fn):
        try:
            ok, detail = fn()
            checks.append(
                {"name": name, "status": "pass" if ok else "fail", "detail": detail}
            )
        except AssertionError as exc:
            checks.append({"name": name, "status": "fail", "detail": str(exc)})

    def two_routes():
        records = conductor_table(ctx)  # asserts definitional == closed per character
        return True, f"{len(records)} characters reconciled"

    def three_routes():
        a = disc_vp_local_sum(ctx)
        b = disc_vp_local_closed(ctx)
        c = different_sum(lower_filtration(ctx))
        return a == b == c, f"sum={a} closed={b} different={c}"

    def subtotals():
        got = disc_subtotals(ctx)
        want = disc_subtotals_closed(ctx)
        total_ok = sum(got.values()) == disc_vp_local_sum(ctx)
        return got == want and total_ok, f"{got}"

    run("conductor_two_routes", two_routes)
    run("discriminant_three_routes", three_routes)
    run("conductor_level_subtotals", subtotals)
    return checks

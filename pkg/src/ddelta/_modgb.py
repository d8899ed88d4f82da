"""Buchberger engine for submodules of free modules R^n over F_p[vars].

Vectors are tuples of Polynomial; terms are ordered position-over-term
(position 0 dominates), extending the ring order.  Polynomial ideals are
the rank-1 case.  Syzygies and membership lifts use the augmented-module
elimination: positions [0, rank) dominate the tag positions, so basis
elements with zero head part generate the syzygy module.

Pair elimination: the coprime-lead (product) criterion is applied only in
rank 1, where it is valid; the chain criterion is applied for every rank.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .budget import Budget, DEFAULT_BUDGET
from .polyring import (
    Polynomial,
    RingContext,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

Vector = tuple  # tuple[Polynomial, ...]


def zero_vector(ctx: RingContext, rank: int) -> Vector:
    z = ctx.zero()
    return (z,) * rank


def unit_vector(ctx: RingContext, rank: int, pos: int) -> Vector:
    return tuple(ctx.one() if i == pos else ctx.zero() for i in range(rank))


def vec_is_zero(v: Vector) -> bool:
    return all(p.is_zero() for p in v)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u: Vector, s) -> Vector:
    return tuple(a * s for a in u)


def vec_lead(v: Vector, ctx: RingContext):
    """(position, monomial, coefficient) of the largest term, or None."""
    for i, p in enumerate(v):
        if not p.is_zero():
            m = p.leading_monomial()
            return (i, m, p.coefficient(m))
    return None


# -- mutable working form: list of {monomial: coeff} per position


def _to_work(v: Vector) -> list:
    return [dict(p._terms) for p in v]


def _from_work(ctx: RingContext, work: list) -> Vector:
    return tuple(Polynomial(ctx, dict(d)) for d in work)


def _work_is_zero(work: list) -> bool:
    return all(not d for d in work)


def _work_lead(work: list, key):
    for i, d in enumerate(work):
        if d:
            m = max(d, key=key)
            return (i, m, d[m])
    return None


def _work_axpy(work: list, g: Vector, factor_mono, factor_coeff: int, p: int, budget: Budget):
    """work -= factor * g, in place."""
    for pos, poly in enumerate(g):
        if poly.is_zero():
            continue
        d = work[pos]
        for m, c in poly._terms.items():
            mm = mono_mul(m, factor_mono)
            budget.check_degree(mono_deg(mm))
            v = (d.get(mm, 0) - factor_coeff * c) % p
            if v:
                d[mm] = v
            else:
                d.pop(mm, None)


def normal_form(
    v: Vector,
    basis: Sequence[Vector],
    ctx: RingContext,
    budget: Budget = DEFAULT_BUDGET,
) -> Vector:
    """Full normal form of v modulo the span of basis.

    Every term of the result is irreducible by the basis leads; the result
    is zero iff v lies in the submodule when basis is a Groebner basis.
    """
    key = ctx.sort_key
    p = ctx.p
    leads = [(vec_lead(g, ctx), g) for g in basis if not vec_is_zero(g)]
    work = _to_work(v)
    rem = [dict() for _ in v]
    while True:
        lead = _work_lead(work, key)
        if lead is None:
            break
        pos, mono, coeff = lead
        reducer = None
        for (gl, g) in leads:
            if gl[0] == pos and mono_divides(gl[1], mono):
                reducer = (gl, g)
                break
        if reducer is None:
            rem[pos][mono] = coeff
            del work[pos][mono]
            continue
        (gpos, gmono, gcoeff), g = reducer
        factor_mono = mono_div(mono, gmono)
        factor_coeff = (coeff * pow(gcoeff, -1, p)) % p
        _work_axpy(work, g, factor_mono, factor_coeff, p, budget)
    return _from_work(ctx, rem)


def _s_vector(u: Vector, v: Vector, ctx: RingContext, budget: Budget) -> Vector:
    p = ctx.p
    (pu, mu, cu) = vec_lead(u, ctx)
    (pv, mv, cv) = vec_lead(v, ctx)
    assert pu == pv
    lcm = mono_lcm(mu, mv)
    budget.check_degree(mono_deg(lcm))
    fu = Polynomial(ctx, {mono_div(lcm, mu): pow(cu, -1, p)})
    fv = Polynomial(ctx, {mono_div(lcm, mv): pow(cv, -1, p)})
    return vec_sub(vec_scale(u, fu), vec_scale(v, fv))


def buchberger(
    vecs: Sequence[Vector],
    ctx: RingContext,
    budget: Budget = DEFAULT_BUDGET,
) -> list:
    """The unique reduced Groebner basis of the submodule spanned by vecs.

    Rank 1 runs the Gebauer-Moller pair update (product, M, F, and B
    criteria); higher ranks, where the product criterion is invalid, use
    the chain criterion at selection time instead.
    """
    key = ctx.sort_key
    G: list = []
    leads: list = []
    pending: set = set()
    rank = len(vecs[0]) if vecs else 1

    def pair_lcm(i: int, j: int):
        return mono_lcm(leads[i][1], leads[j][1])

    def gm_update(n: int):
        """Gebauer-Moller UPDATE for the new element n (rank 1 only)."""
        lead_n = leads[n][1]
        candidates = [i for i in range(n)]
        lcms = {i: mono_lcm(leads[i][1], lead_n) for i in candidates}
        coprime = {i: lcms[i] == mono_mul(leads[i][1], lead_n) for i in candidates}
        kept = []
        remaining = list(candidates)
        while remaining:
            i = remaining.pop(0)
            others = remaining + kept
            if coprime[i] or not any(
                mono_divides(lcms[j], lcms[i]) and lcms[j] != lcms[i] for j in others
            ):
                # survives unless an equal lcm is still waiting (F criterion
                # keeps the last of each equal-lcm group)
                if any(lcms[j] == lcms[i] for j in remaining):
                    continue
                kept.append(i)
        # B criterion on old pairs
        for (i, j) in list(pending):
            lcm_ij = pair_lcm(i, j)
            if (
                mono_divides(lead_n, lcm_ij)
                and mono_lcm(leads[i][1], lead_n) != lcm_ij
                and mono_lcm(leads[j][1], lead_n) != lcm_ij
            ):
                pending.discard((i, j))
        for i in kept:
            if not coprime[i]:
                pending.add((i, n))

    def add_element(v: Vector):
        lead = vec_lead(v, ctx)
        inv = pow(lead[2], -1, ctx.p)
        v = vec_scale(v, Polynomial(ctx, {(0,) * ctx.nvars: inv}))
        n = len(G)
        G.append(v)
        leads.append((lead[0], lead[1]))
        if rank == 1:
            gm_update(n)
        else:
            for i in range(n):
                if leads[i][0] == lead[0]:
                    pending.add((i, n))
        budget.check_pairs(len(pending))

    for v in vecs:
        if not vec_is_zero(v):
            add_element(v)

    while pending:
        i, j = min(
            pending,
            key=lambda ij: (key(pair_lcm(*ij)), leads[ij[0]][0], ij),
        )
        pending.discard((i, j))
        if rank > 1:
            lcm = pair_lcm(i, j)
            pos = leads[i][0]
            # chain criterion: some k with lead dividing the pair lcm and
            # both flanking pairs already handled makes (i, j) redundant
            redundant = False
            for k in range(len(G)):
                if k in (i, j) or leads[k][0] != pos:
                    continue
                if mono_divides(leads[k][1], lcm):
                    a = (min(i, k), max(i, k))
                    b = (min(j, k), max(j, k))
                    if a not in pending and b not in pending:
                        redundant = True
                        break
            if redundant:
                continue
        s = _s_vector(G[i], G[j], ctx, budget)
        r = normal_form(s, G, ctx, budget)
        if not vec_is_zero(r):
            add_element(r)

    return reduce_basis(G, ctx, budget)


def reduce_basis(G: Sequence[Vector], ctx: RingContext, budget: Budget = DEFAULT_BUDGET) -> list:
    """Minimalize and autoreduce a Groebner basis; output is canonical."""
    key = ctx.sort_key
    items = [(vec_lead(g, ctx), g) for g in G if not vec_is_zero(g)]
    # ascending by lead term under position-over-term order
    items.sort(key=lambda t: (-t[0][0], key(t[0][1])))
    kept: list = []
    for (lead, g) in items:
        if any(kl[0] == lead[0] and mono_divides(kl[1], lead[1]) for (kl, _) in kept):
            continue
        kept.append((lead, g))
    basis = [g for (_, g) in kept]
    # autoreduce until stable (leads are pairwise irreducible already);
    # terminates because every change strictly decreases in the term order
    changed = True
    while changed:
        changed = False
        for idx in range(len(basis)):
            others = basis[:idx] + basis[idx + 1 :]
            r = normal_form(basis[idx], others, ctx, budget)
            if r != basis[idx]:
                basis[idx] = r
                changed = True
    basis = [
        vec_scale(g, Polynomial(ctx, {(0,) * ctx.nvars: pow(vec_lead(g, ctx)[2], -1, ctx.p)}))
        for g in basis
    ]
    basis.sort(key=lambda g: (-vec_lead(g, ctx)[0], key(vec_lead(g, ctx)[1])), reverse=True)
    return basis


def _augmented_basis(vecs: Sequence[Vector], rank: int, ctx: RingContext, budget: Budget) -> list:
    k = len(vecs)
    aug = []
    for i, v in enumerate(vecs):
        tag = tuple(ctx.one() if t == i else ctx.zero() for t in range(k))
        aug.append(tuple(v) + tag)
    return buchberger(aug, ctx, budget)


def syzygy_basis(
    vecs: Sequence[Vector],
    rank: int,
    ctx: RingContext,
    budget: Budget = DEFAULT_BUDGET,
) -> list:
    """Generators of {(a_1..a_k) : sum a_i vecs[i] = 0} in R^k."""
    G = _augmented_basis(vecs, rank, ctx, budget)
    out = []
    for g in G:
        if all(p.is_zero() for p in g[:rank]):
            out.append(tuple(g[rank:]))
    return out


def lift_coefficients(
    target: Vector,
    vecs: Sequence[Vector],
    rank: int,
    ctx: RingContext,
    budget: Budget = DEFAULT_BUDGET,
) -> Optional[list]:
    """Coefficients a with target = sum a_i vecs[i], or None if no solution."""
    G = _augmented_basis(vecs, rank, ctx, budget)
    k = len(vecs)
    t = tuple(target) + zero_vector(ctx, k)
    r = normal_form(t, G, ctx, budget)
    if any(not p.is_zero() for p in r[:rank]):
        return None
    return [-p for p in r[rank:]]

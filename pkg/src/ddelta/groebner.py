"""Ideal arithmetic over F_p[vars]: Groebner bases, normal forms, membership,
colon ideals, intersections, bracket powers, and certification of permutable
regular sequences.

Ideal equality is decided by comparing reduced Groebner bases, the unique
canonical form for the context's term order.  Colon and intersection are
computed by projecting syzygies of small augmented systems; no auxiliary
elimination variables are introduced.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from . import _modgb
from .budget import Budget, DEFAULT_BUDGET
from .polyring import Polynomial, RingContext


class NotPermutableRegular(ValueError):
    """A claimed permutable regular sequence failed certification."""

    def __init__(self, certificate: "PermutabilityCertificate"):
        super().__init__(f"not a permutable regular sequence: {certificate.describe()}")
        self.certificate = certificate


class Ideal:
    """A finitely generated ideal with a cached reduced Groebner basis."""

    __slots__ = ("ctx", "gens", "budget", "_gb")

    def __init__(self, ctx: RingContext, gens: Iterable[Polynomial], budget: Budget = DEFAULT_BUDGET):
        self.ctx = ctx
        self.gens = tuple(g for g in gens if not g.is_zero())
        self.budget = budget
        self._gb = None
        for g in self.gens:
            if g.ctx != ctx:
                raise ValueError("generator from a different ring")

    def groebner_basis(self) -> tuple:
        """The unique reduced Groebner basis (monic, autoreduced, sorted).

        Cache fill is idempotent, so concurrent computation is safe.
        """
        if self._gb is None:
            basis = _modgb.buchberger([(g,) for g in self.gens], self.ctx, self.budget)
            self._gb = tuple(v[0] for v in basis)
        return self._gb

    def normal_form(self, r: Polynomial) -> Polynomial:
        gb = self.groebner_basis()
        return _modgb.normal_form((r,), [(g,) for g in gb], self.ctx, self.budget)[0]

    def contains(self, r: Polynomial) -> bool:
        return self.normal_form(r).is_zero()

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def is_proper(self) -> bool:
        gb = self.groebner_basis()
        return not any(g.is_unit() for g in gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ctx == other.ctx and self.groebner_basis() == other.groebner_basis()

    def __hash__(self):
        return hash((self.ctx, self.groebner_basis()))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({gens})"

    def __add__(self, other: "Ideal") -> "Ideal":
        if self.ctx != other.ctx:
            raise ValueError("ideals from different rings")
        return Ideal(self.ctx, self.gens + other.gens, self.budget)

    def colon(self, r: Polynomial) -> "Ideal":
        """(I : r) = {s : s*r in I}, via syzygies of [r | gens(I)]."""
        if r.is_zero():
            raise ValueError("colon by zero")
        vecs = [(r,)] + [(g,) for g in self.gens]
        syz = _modgb.syzygy_basis(vecs, 1, self.ctx, self.budget)
        out = Ideal(self.ctx, [s[0] for s in syz], self.budget)
        out.groebner_basis()
        return out

    def colon_ideal(self, J: "Ideal") -> "Ideal":
        """(I : J) as the intersection of (I : g) over the generators of J."""
        if not J.gens:
            raise ValueError("colon by the zero ideal")
        result = None
        for g in J.gens:
            piece = self.colon(g)
            result = piece if result is None else result.intersect(piece)
        result.groebner_basis()
        return result

    def intersect(self, J: "Ideal") -> "Ideal":
        """I n J via syzygies of the diagonal map R -> R/I + R/J."""
        if self.ctx != J.ctx:
            raise ValueError("ideals from different rings")
        one = self.ctx.one()
        zero = self.ctx.zero()
        vecs = [(one, one)]
        vecs += [(g, zero) for g in self.gens]
        vecs += [(zero, h) for h in J.gens]
        syz = _modgb.syzygy_basis(vecs, 2, self.ctx, self.budget)
        out = Ideal(self.ctx, [s[0] for s in syz], self.budget)
        out.groebner_basis()
        return out


# -- spec-facing helpers


def groebner_basis(I: Ideal) -> tuple:
    return I.groebner_basis()


def ideal_member(r: Polynomial, I: Ideal) -> bool:
    return I.contains(r)


def colon(I: Ideal, r: Polynomial) -> Ideal:
    return I.colon(r)


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    return I.colon_ideal(J)


# ---------------------------------------------------------------------------
# Permutable regular sequences


class PermutabilityCertificate:
    """Outcome of the permutable-regular-sequence check.

    failures lists pairs (T, j) where f_j is a zerodivisor modulo the
    subsequence ideal (f_T); improper flags 1 in (f_1..f_c); unit_or_zero
    lists indices of unit or zero entries.  Truthy iff everything passed.
    """

    def __init__(self, failures, improper: bool, unit_or_zero):
        self.failures = tuple(failures)
        self.improper = improper
        self.unit_or_zero = tuple(unit_or_zero)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.improper and not self.unit_or_zero

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "permutable regular sequence"
        parts = []
        for (T, j) in self.failures:
            T_text = "{" + ",".join(str(t) for t in sorted(T)) + "}"
            parts.append(f"f_{j} is a zerodivisor mod (f_T), T={T_text}")
        if self.improper:
            parts.append("the ideal (f_1..f_c) is the unit ideal")
        for i in self.unit_or_zero:
            parts.append(f"f_{i} is zero or a unit")
        return "; ".join(parts)


def is_permutable_regular(
    polys: Sequence[Polynomial], budget: Budget = DEFAULT_BUDGET
) -> PermutabilityCertificate:
    """Certify that every subsequence of polys is a regular sequence.

    For each T subset [c] and j not in T this checks ((f_T) : f_j) = (f_T);
    T empty reads: f_j is a nonzerodivisor.  The full ideal must be proper
    and every entry a nonzero nonunit.
    """
    c = len(polys)
    ctx = polys[0].ctx if polys else None
    unit_or_zero = [i + 1 for i, g in enumerate(polys) if g.is_zero() or g.is_unit()]
    failures = []
    improper = False
    if not unit_or_zero and c:
        improper = not Ideal(ctx, polys, budget).is_proper()
        for size in range(c):
            for T in combinations(range(1, c + 1), size):
                idx = set(T)
                I_T = Ideal(ctx, [polys[t - 1] for t in T], budget)
                for j in range(1, c + 1):
                    if j in idx:
                        continue
                    if I_T.colon(polys[j - 1]) != I_T:
                        failures.append((frozenset(T), j))
    return PermutabilityCertificate(failures, improper, unit_or_zero)


class RegSeqContext:
    """A certified permutable regular sequence f_1..f_c with cached product.

    Construction runs the permutability certification and raises
    NotPermutableRegular on failure.
    """

    __slots__ = ("ctx", "polys", "c", "f_prod", "budget")

    def __init__(
        self,
        ctx: RingContext,
        polys: Sequence[Polynomial],
        budget: Budget = DEFAULT_BUDGET,
        *,
        certificate: Optional[PermutabilityCertificate] = None,
    ):
        if not polys:
            raise ValueError("empty sequence")
        self.ctx = ctx
        self.polys = tuple(polys)
        self.c = len(self.polys)
        self.budget = budget
        if certificate is None:
            certificate = is_permutable_regular(self.polys, budget)
        if not certificate.ok:
            raise NotPermutableRegular(certificate)
        prod = ctx.one()
        for g in self.polys:
            prod = prod * g
        self.f_prod = prod

    def indices(self) -> range:
        """1-based index range of the sequence."""
        return range(1, self.c + 1)

    def poly(self, j: int) -> Polynomial:
        return self.polys[j - 1]

    def subset_product(self, subset: Iterable) -> Polynomial:
        """f_T = product of f_j over j in subset (1 for the empty set)."""
        out = self.ctx.one()
        for j in sorted(set(subset)):
            out = out * self.polys[j - 1]
        return out

    def complement(self, subset: Iterable) -> frozenset:
        return frozenset(self.indices()) - frozenset(subset)

    def bracket_power(self, a: int, subset: Optional[Iterable] = None) -> Ideal:
        """The ideal (f_j^a : j in subset), defaulting to the whole sequence."""
        if a < 1:
            raise ValueError("bracket power requires a >= 1")
        idx = sorted(set(subset)) if subset is not None else list(self.indices())
        return Ideal(self.ctx, [self.polys[j - 1] ** a for j in idx], self.budget)

    def __repr__(self):
        seq = ", ".join(str(g) for g in self.polys)
        return f"RegSeqContext(F_{self.ctx.p}[{','.join(self.ctx.vars)}]; {seq})"


def bracket_power(rs: RegSeqContext, a: int) -> Ideal:
    return rs.bracket_power(a)

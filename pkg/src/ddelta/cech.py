"""Elements of the top local cohomology H^c_f(R) = lim R/f^[a] as leveled
classes with exact equality, the natural and Fedder Frobenius actions,
annihilator tests, and the annihilator embedding with its section.

A class (r, a) denotes the image of r + f^[a] under the direct system with
transition maps multiplication by f^(b-a); transitions are injective for a
regular sequence, so zero at a level decides zero in the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import _modgb
from .groebner import Ideal, RegSeqContext
from .polyring import Polynomial


class NotInAnnihilator(ValueError):
    """The class is not annihilated by the requested subsequence."""


@dataclass(frozen=True)
class CechClass:
    """The class of numerator/f^level; numerator is stored in normal form
    modulo the bracket-power ideal at its level."""

    rs: RegSeqContext
    numerator: Polynomial
    level: int

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")

    def to_dict(self) -> dict:
        return {"numerator": str(self.numerator), "level": self.level}

    def __str__(self):
        return f"{{{{({self.numerator}) / f^{self.level}}}}}"


def cech_class(rs: RegSeqContext, numerator: Polynomial, level: int) -> CechClass:
    """Canonical constructor: reduces the numerator at its level."""
    nf = rs.bracket_power(level).normal_form(numerator)
    return CechClass(rs, nf, level)


def cech_is_zero(xi: CechClass) -> bool:
    return xi.rs.bracket_power(xi.level).contains(xi.numerator)


def cech_equal(xi: CechClass, eta: CechClass) -> bool:
    """Raise both to the max level and compare modulo the bracket power."""
    if xi.rs is not eta.rs and xi.rs.polys != eta.rs.polys:
        raise ValueError("classes over different sequences")
    b = max(xi.level, eta.level)
    f = xi.rs.f_prod
    lhs = f ** (b - xi.level) * xi.numerator
    rhs = f ** (b - eta.level) * eta.numerator
    return xi.rs.bracket_power(b).contains(lhs - rhs)


def scalar_action(s: Polynomial, xi: CechClass) -> CechClass:
    return cech_class(xi.rs, s * xi.numerator, xi.level)


def f_nat(xi: CechClass) -> CechClass:
    """Natural Frobenius action: (r, a) -> (r^p, a*p)."""
    p = xi.rs.ctx.p
    return cech_class(xi.rs, xi.numerator.frobenius(), xi.level * p)


def f_fed(xi: CechClass) -> CechClass:
    """Fedder action f^(p-1) * F_nat: (r, a) -> (f^(p-1) r^p, a*p)."""
    p = xi.rs.ctx.p
    fpow = xi.rs.f_prod ** (p - 1)
    return cech_class(xi.rs, fpow * xi.numerator.frobenius(), xi.level * p)


def annihilated_by(xi: CechClass, T: Iterable) -> bool:
    """True iff f_j * xi = 0 for every j in T."""
    bracket = xi.rs.bracket_power(xi.level)
    return all(bracket.contains(xi.rs.poly(j) * xi.numerator) for j in set(T))


def quotient_ideal(rs: RegSeqContext, g_indices: Iterable, level: int) -> Ideal:
    """(f_j : j in g_indices) + (f_i^level : i in complement): the cyclic
    presentation of the annihilator summand named by g_indices."""
    g_idx = frozenset(g_indices)
    T = rs.complement(g_idx)
    gens = [rs.poly(j) for j in sorted(g_idx)]
    gens += [rs.poly(i) ** level for i in sorted(T)]
    return Ideal(rs.ctx, gens, rs.budget)


def phi_embed(rs: RegSeqContext, numerator: Polynomial, level: int, g_indices: Iterable) -> CechClass:
    """Embed a class of R/((f_g), f_T^[a]) into H^c via multiplication by
    g^(a-1), g the product over g_indices; lands in the g-annihilator."""
    g = rs.subset_product(g_indices)
    return cech_class(rs, g ** (level - 1) * numerator, level)


def phi_section(xi: CechClass, g_indices: Iterable) -> Polynomial:
    """Invert phi_embed on the annihilator: solve r = g^(a-1) s modulo
    f^[a], returning s reduced modulo ((f_g), f_T^[a]).

    Raises NotInAnnihilator when xi is not killed by every f_j, j in
    g_indices.  A lift failure past that check would be a bug: the
    annihilator is exactly the image of multiplication by g^(a-1).
    """
    g_idx = frozenset(g_indices)
    if not annihilated_by(xi, g_idx):
        raise NotInAnnihilator(f"class not annihilated by indices {sorted(g_idx)}")
    rs = xi.rs
    a = xi.level
    g = rs.subset_product(g_idx)
    gens = [g ** (a - 1)] + [rs.poly(j) ** a for j in rs.indices()]
    vecs = [(h,) for h in gens]
    coeffs = _modgb.lift_coefficients((xi.numerator,), vecs, 1, rs.ctx, rs.budget)
    if coeffs is None:
        raise RuntimeError("annihilator lift failed; this is a bug")
    s = coeffs[0]
    return quotient_ideal(rs, g_idx, a).normal_form(s)

"""Finitely presented modules over F_p[vars], polynomial-matrix maps between
them, and kernel/cohomology computation via module Groebner bases.

A module is R^rank / (relation columns); a cyclic quotient R/J is rank 1
with relations = generators of J.  Kernels are computed from syzygies of
the augmented system [matrix columns | target relations] projected to the
source coordinates; cohomology presents ker/im with explicit generator
lifts in reduced normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _modgb
from ._modgb import Vector, vec_is_zero, zero_vector
from .budget import Budget, DEFAULT_BUDGET
from .polyring import Polynomial, RingContext


class FPModule:
    """R^rank modulo the submodule spanned by relation vectors.

    summand_labels, when present, names the direct summands of a module of
    the form (+)_S R/J_S, one label per ambient coordinate.
    """

    __slots__ = ("ctx", "rank", "relations", "summand_labels", "budget", "_rel_gb")

    def __init__(
        self,
        ctx: RingContext,
        rank: int,
        relations: Iterable[Vector] = (),
        summand_labels: Optional[tuple] = None,
        budget: Budget = DEFAULT_BUDGET,
    ):
        self.ctx = ctx
        self.rank = rank
        rels = []
        for v in relations:
            v = tuple(v)
            if len(v) != rank:
                raise ValueError("relation vector has wrong length")
            if not vec_is_zero(v):
                rels.append(v)
        self.relations = tuple(rels)
        self.summand_labels = tuple(summand_labels) if summand_labels is not None else None
        self.budget = budget
        self._rel_gb = None

    @classmethod
    def free(cls, ctx: RingContext, rank: int, budget: Budget = DEFAULT_BUDGET) -> "FPModule":
        return cls(ctx, rank, (), None, budget)

    @classmethod
    def cyclic(cls, ctx: RingContext, gens: Iterable[Polynomial], budget: Budget = DEFAULT_BUDGET) -> "FPModule":
        """The cyclic quotient R/(gens) as a rank-1 module."""
        return cls(ctx, 1, [(g,) for g in gens], None, budget)

    def relation_groebner_basis(self) -> tuple:
        if self._rel_gb is None:
            if self.relations:
                self._rel_gb = tuple(_modgb.buchberger(list(self.relations), self.ctx, self.budget))
            else:
                self._rel_gb = ()
        return self._rel_gb

    def normal_form(self, v: Vector) -> Vector:
        if len(v) != self.rank:
            raise ValueError("vector has wrong length")
        return _modgb.normal_form(tuple(v), self.relation_groebner_basis(), self.ctx, self.budget)

    def is_zero_element(self, v: Vector) -> bool:
        return vec_is_zero(self.normal_form(v))

    def zero_vector(self) -> Vector:
        return zero_vector(self.ctx, self.rank)

    def basis_vector(self, i: int) -> Vector:
        return _modgb.unit_vector(self.ctx, self.rank, i)

    def __repr__(self):
        return f"FPModule(rank={self.rank}, relations={len(self.relations)})"


def module_normal_form(
    v: Vector,
    relations: Sequence[Vector],
    ctx: RingContext,
    budget: Budget = DEFAULT_BUDGET,
) -> Vector:
    """Reduced form of v modulo the module Groebner basis of the relations;
    zero iff v lies in the relation submodule."""
    gb = _modgb.buchberger(list(relations), ctx, budget) if relations else []
    return _modgb.normal_form(tuple(v), gb, ctx, budget)


class ModuleMap:
    """An R-linear map source -> target given by a polynomial matrix.

    rows has shape target.rank x source.rank; column j is the image of the
    j-th ambient basis vector.  Construction certifies well-definedness:
    every source relation must land in the target relation submodule.
    """

    __slots__ = ("source", "target", "rows")

    def __init__(self, source: FPModule, target: FPModule, rows, *, check: bool = True):
        self.source = source
        self.target = target
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError(
                f"matrix shape {len(rows)}x{'?' if not rows else len(rows[0])} "
                f"does not match {target.rank}x{source.rank}"
            )
        self.rows = rows
        if check and not self.is_well_defined():
            raise ValueError("matrix does not map source relations into target relations")

    @classmethod
    def zero(cls, source: FPModule, target: FPModule) -> "ModuleMap":
        z = source.ctx.zero()
        rows = tuple((z,) * source.rank for _ in range(target.rank))
        return cls(source, target, rows, check=False)

    @classmethod
    def identity(cls, module: FPModule) -> "ModuleMap":
        ctx = module.ctx
        rows = tuple(
            tuple(ctx.one() if i == j else ctx.zero() for j in range(module.rank))
            for i in range(module.rank)
        )
        return cls(module, module, rows, check=False)

    def column(self, j: int) -> Vector:
        return tuple(self.rows[i][j] for i in range(self.target.rank))

    def columns(self) -> list:
        return [self.column(j) for j in range(self.source.rank)]

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.source.rank:
            raise ValueError("vector has wrong length")
        out = []
        for i in range(self.target.rank):
            acc = self.source.ctx.zero()
            for j in range(self.source.rank):
                acc = acc + self.rows[i][j] * v[j]
            out.append(acc)
        return tuple(out)

    def is_well_defined(self) -> bool:
        return all(self.target.is_zero_element(self.apply(rel)) for rel in self.source.relations)

    def is_zero_map(self) -> bool:
        """True iff every ambient basis image reduces to zero in the target."""
        return all(
            self.target.is_zero_element(self.column(j)) for j in range(self.source.rank)
        )

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.target.rank != self.source.rank:
            raise ValueError("shape mismatch in composition")
        ctx = self.source.ctx
        rows = []
        for i in range(self.target.rank):
            row = []
            for j in range(other.source.rank):
                acc = ctx.zero()
                for k in range(self.source.rank):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return ModuleMap(other.source, self.target, tuple(rows), check=False)

    def __repr__(self):
        return f"ModuleMap({self.target.rank}x{self.source.rank})"


class ChainComplex:
    """Terms 0..n with maps[i]: terms[i] -> terms[i+1]."""

    __slots__ = ("terms", "maps")

    def __init__(self, terms: Sequence[FPModule], maps: Sequence[ModuleMap]):
        terms = tuple(terms)
        maps = tuple(maps)
        if len(maps) != max(len(terms) - 1, 0):
            raise ValueError("need exactly one map between consecutive terms")
        for i, phi in enumerate(maps):
            if phi.source is not terms[i] or phi.target is not terms[i + 1]:
                raise ValueError(f"map {i} does not connect terms {i} -> {i + 1}")
        self.terms = terms
        self.maps = maps

    def __len__(self):
        return len(self.terms)

    def top_degree(self) -> int:
        return len(self.terms) - 1


def is_complex(C: ChainComplex) -> bool:
    """True iff every composite of consecutive maps reduces to zero modulo
    the relations of its target."""
    for i in range(len(C.maps) - 1):
        if not C.maps[i + 1].compose(C.maps[i]).is_zero_map():
            return False
    return True


def _kernel_generators(phi: ModuleMap, budget: Budget) -> list:
    """Deterministic generators of {v : phi(v) in target relations}."""
    ctx = phi.source.ctx
    src_rank = phi.source.rank
    cols = phi.columns()
    vecs = cols + list(phi.target.relations)
    if phi.target.rank == 0:
        # everything maps to zero
        gens = [phi.source.basis_vector(i) for i in range(src_rank)]
        return gens
    syz = _modgb.syzygy_basis(vecs, phi.target.rank, ctx, budget)
    seen = set()
    gens = []
    for s in syz:
        g = tuple(s[:src_rank])
        if vec_is_zero(g) or g in seen:
            continue
        seen.add(g)
        gens.append(g)
    return gens


@dataclass(frozen=True)
class KernelResult:
    """Kernel presentation plus its inclusion into the source module."""

    module: FPModule
    inclusion: ModuleMap

    @property
    def generators(self) -> list:
        return self.inclusion.columns()


def kernel(phi: ModuleMap, budget: Budget = DEFAULT_BUDGET) -> KernelResult:
    """ker(phi) as an FPModule with its inclusion into phi.source.

    Generators come from syzygies of [matrix | target relations] projected
    to source coordinates; the presentation is taken modulo the source
    relations.
    """
    ctx = phi.source.ctx
    gens = _kernel_generators(phi, budget)
    m = len(gens)
    if m == 0:
        module = FPModule(ctx, 0, (), None, budget)
        return KernelResult(module, ModuleMap(module, phi.source, tuple(() for _ in range(phi.source.rank)), check=False))
    syz = _modgb.syzygy_basis(gens + list(phi.source.relations), phi.source.rank, ctx, budget)
    rels = [tuple(s[:m]) for s in syz]
    module = FPModule(ctx, m, rels, None, budget)
    rows = tuple(tuple(gens[j][i] for j in range(m)) for i in range(phi.source.rank))
    inclusion = ModuleMap(module, phi.source, rows, check=False)
    return KernelResult(module, inclusion)


@dataclass(frozen=True)
class CohomologyResult:
    """H^i = ker/im with generator lifts in the degree-i term.

    generator_lifts are nonzero reduced representatives (normal forms
    modulo coboundaries and term relations), sorted deterministically;
    module presents H^i on those generators.
    """

    module: FPModule
    generator_lifts: tuple
    degree: int

    @property
    def is_zero(self) -> bool:
        return not self.generator_lifts


def cohomology(C: ChainComplex, i: int, budget: Budget = DEFAULT_BUDGET) -> CohomologyResult:
    """Presentation of ker d^i / im d^(i-1); requires is_complex(C)."""
    if not (0 <= i < len(C.terms)):
        raise IndexError("degree out of range")
    term = C.terms[i]
    ctx = term.ctx
    if i < len(C.maps):
        kgens = _kernel_generators(C.maps[i], budget)
    else:
        kgens = [term.basis_vector(j) for j in range(term.rank)]
    boundaries = list(C.maps[i - 1].columns()) if i >= 1 else []
    modout = boundaries + list(term.relations)
    gb = _modgb.buchberger(modout, ctx, budget) if modout else []
    key = ctx.sort_key
    reduced = []
    seen = set()
    for g in kgens:
        r = _modgb.normal_form(g, gb, ctx, budget)
        if vec_is_zero(r) or r in seen:
            continue
        seen.add(r)
        reduced.append(r)
    reduced.sort(
        key=lambda v: (-_modgb.vec_lead(v, ctx)[0], key(_modgb.vec_lead(v, ctx)[1])),
        reverse=True,
    )
    m = len(reduced)
    if m == 0:
        return CohomologyResult(FPModule(ctx, 0, (), None, budget), (), i)
    syz = _modgb.syzygy_basis(list(reduced) + modout, term.rank, ctx, budget)
    rels = [tuple(s[:m]) for s in syz]
    module = FPModule(ctx, m, rels, None, budget)
    return CohomologyResult(module, tuple(reduced), i)

"""Exact finite-level verification of Frobenius-twisted complexes of cyclic
modules over F_p[x_1..x_n]: polynomial and ideal arithmetic, finitely
presented modules, leveled top local cohomology classes, and the complex of
subsequence annihilators with its verification procedures."""

from .budget import Budget, BudgetExceeded
from .cech import (
    CechClass,
    NotInAnnihilator,
    annihilated_by,
    cech_class,
    cech_equal,
    cech_is_zero,
    f_fed,
    f_nat,
    phi_embed,
    phi_section,
    scalar_action,
)
from .complexes import (
    DDeltaLevel,
    DeathReport,
    build_level,
    embed_summand,
    fedder_chain_map,
    quotient_and_kernel_complexes,
    transition_chain_map,
    verify_augmentation,
    verify_codim2_V,
    verify_structure_kernels,
    verify_vanishing,
)
from .fpmod import (
    ChainComplex,
    FPModule,
    ModuleMap,
    cohomology,
    is_complex,
    kernel,
    module_normal_form,
)
from .groebner import (
    Ideal,
    NotPermutableRegular,
    RegSeqContext,
    bracket_power,
    colon,
    colon_ideal,
    groebner_basis,
    ideal_member,
    is_permutable_regular,
)
from .polyring import (
    ContextMismatch,
    ExponentOverflow,
    ParseError,
    Polynomial,
    RingContext,
    UnknownVariable,
    frobenius,
    parse_polynomial,
)

__version__ = "0.1.0"

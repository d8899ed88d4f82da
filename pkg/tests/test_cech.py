"""Leveled top local-cohomology classes: equality, the two Frobenius
actions, annihilators, and the annihilator embedding with its section."""

import random

import pytest

from ddelta.cech import (
    NotInAnnihilator,
    annihilated_by,
    cech_class,
    cech_equal,
    cech_is_zero,
    f_fed,
    f_nat,
    phi_embed,
    phi_section,
    quotient_ideal,
    scalar_action,
)
from ddelta.groebner import RegSeqContext
from ddelta.polyring import RingContext, parse_polynomial, random_polynomial

F2 = RingContext(2, ("x", "y"))
X2, Y2 = F2.variable("x"), F2.variable("y")
RS2 = RegSeqContext(F2, [X2, Y2])

F3 = RingContext(3, ("x", "y"))
RS3 = RegSeqContext(F3, [F3.variable("x"), F3.variable("y")])

F2M = RingContext(2, ("x", "y"))
RS_MIXED = RegSeqContext(
    F2M, [parse_polynomial("x+y", F2M), parse_polynomial("x*y", F2M)]
)

ALL_RS = [RS2, RS3, RS_MIXED]


class TestZeroAndEquality:
    def test_zero_examples(self):
        assert cech_is_zero(cech_class(RS2, X2**2, 2))
        assert not cech_is_zero(cech_class(RS2, F2.one(), 1))
        assert not cech_is_zero(cech_class(RS2, X2 * Y2, 2))

    def test_transition_identity(self):
        assert cech_equal(cech_class(RS2, F2.one(), 1), cech_class(RS2, X2 * Y2, 2))
        assert not cech_equal(cech_class(RS2, F2.one(), 1), cech_class(RS2, X2, 2))

    def test_reflexive(self):
        xi = cech_class(RS2, X2 + Y2, 3)
        assert cech_equal(xi, xi)

    def test_numerator_stored_reduced(self):
        xi = cech_class(RS2, X2**2 + X2, 2)
        assert str(xi.numerator) == "x"

    def test_level_validation(self):
        with pytest.raises(ValueError):
            cech_class(RS2, X2, 0)

    def test_serialization(self):
        assert cech_class(RS2, X2, 2).to_dict() == {"numerator": "x", "level": 2}

    def test_transition_injectivity(self):
        # (r, a) is zero iff (f^(b-a) r, b) is zero, b <= a + 3
        rng = random.Random("transition")
        for rs in ALL_RS:
            for _ in range(25):
                r = random_polynomial(rng, rs.ctx, max_degree=3)
                a = rng.randint(1, 3)
                xi = cech_class(rs, r, a)
                for b in range(a, a + 4):
                    eta = cech_class(rs, rs.f_prod ** (b - a) * r, b)
                    assert cech_is_zero(xi) == cech_is_zero(eta)


class TestScalarAction:
    def test_identity_scalar(self):
        xi = cech_class(RS2, X2, 2)
        assert cech_equal(scalar_action(F2.one(), xi), xi)

    def test_f_kills_level_one(self):
        assert cech_is_zero(scalar_action(RS2.f_prod, cech_class(RS2, F2.one(), 1)))

    def test_transition_compatible(self):
        lhs = scalar_action(X2, cech_class(RS2, Y2, 2))
        assert cech_equal(lhs, cech_class(RS2, F2.one(), 1))


class TestFrobeniusActions:
    def test_f_nat_formula(self):
        xi = f_nat(cech_class(RS2, F2.one(), 1))
        assert xi.level == 2 and cech_equal(xi, cech_class(RS2, F2.one(), 2))

    def test_f_nat_zero(self):
        assert cech_is_zero(f_nat(cech_class(RS2, F2.zero(), 3)))

    def test_f_nat_consistent_with_transitions(self):
        xi = f_nat(cech_class(RS2, X2 * Y2, 2))
        assert xi.level == 4
        assert cech_equal(xi, cech_class(RS2, F2.one(), 2))

    def test_f_fed_on_level_one(self):
        r = X2 + Y2
        assert cech_equal(f_fed(cech_class(RS2, r, 1)), cech_class(RS2, r.frobenius(), 1))

    def test_f_fed_level_two(self):
        for rs in ALL_RS:
            p = rs.ctx.p
            xi = f_fed(cech_class(rs, rs.ctx.one(), 2))
            assert cech_equal(xi, cech_class(rs, rs.ctx.one(), p + 1))

    def test_f_fed_zero(self):
        assert cech_is_zero(f_fed(cech_class(RS2, F2.zero(), 2)))

    def test_semilinearity(self):
        rng = random.Random("semilinear")
        for rs in ALL_RS:
            p = rs.ctx.p
            for _ in range(40):
                s = random_polynomial(rng, rs.ctx, max_degree=3)
                r = random_polynomial(rng, rs.ctx, max_degree=3)
                xi = cech_class(rs, r, rng.randint(1, 3))
                assert cech_equal(f_nat(scalar_action(s, xi)), scalar_action(s**p, f_nat(xi)))
                assert cech_equal(f_fed(scalar_action(s, xi)), scalar_action(s**p, f_fed(xi)))

    def test_fed_fixes_embedded_copy(self):
        rng = random.Random("fixed")
        for rs in ALL_RS:
            one = cech_class(rs, rs.ctx.one(), 1)
            for _ in range(40):
                r = random_polynomial(rng, rs.ctx, max_degree=3)
                lhs = f_fed(scalar_action(r, one))
                rhs = scalar_action(r.frobenius(), one)
                assert cech_equal(lhs, rhs)

    def test_cyclic_generation(self):
        for rs in ALL_RS:
            p = rs.ctx.p
            xi = cech_class(rs, rs.ctx.one(), 2)
            q = 1
            for _ in range(3):
                xi = f_fed(xi)
                q *= p
                assert cech_equal(xi, cech_class(rs, rs.ctx.one(), q + 1))


class TestAnnihilators:
    def test_level_one_annihilated_by_all(self):
        xi = cech_class(RS2, F2.one(), 1)
        assert annihilated_by(xi, {1, 2})

    def test_mixed(self):
        xi = cech_class(RS2, X2, 2)
        assert annihilated_by(xi, {1})
        assert not annihilated_by(xi, {2})

    def test_level_two_unit_annihilated_by_none(self):
        xi = cech_class(RS2, F2.one(), 2)
        assert not annihilated_by(xi, {1})
        assert not annihilated_by(xi, {2})


class TestPhi:
    def test_embed_formula(self):
        assert cech_equal(phi_embed(RS2, F2.one(), 2, {1}), cech_class(RS2, X2, 2))

    def test_embed_level_one_is_identity(self):
        r = Y2
        assert cech_equal(phi_embed(RS2, r, 1, {1}), cech_class(RS2, r, 1))

    def test_embed_lands_in_annihilator(self):
        rng = random.Random("embed")
        for rs in ALL_RS:
            for _ in range(20):
                r = random_polynomial(rng, rs.ctx, max_degree=3)
                a = rng.randint(1, 3)
                for g_idx in ({1}, {2}):
                    assert annihilated_by(phi_embed(rs, r, a, g_idx), g_idx)

    def test_frobenius_stability_instance(self):
        # both routes produce g^(qp-1) f^(p-1) r^p: here (x^3*y, 4)
        rs = RS2
        emb = phi_embed(rs, F2.one(), 2, {1})
        lhs = f_fed(emb)
        # the twisted action on the quotient side multiplies by f_T^(p-1)
        quotient_action = Y2 * F2.one().frobenius()
        rhs = phi_embed(rs, quotient_action, 4, {1})
        assert cech_equal(lhs, rhs)
        assert cech_equal(lhs, cech_class(rs, X2**3 * Y2, 4))

    def test_frobenius_stability_random(self):
        rng = random.Random("phi-stability")
        for rs in ALL_RS:
            p = rs.ctx.p
            for _ in range(15):
                r = random_polynomial(rng, rs.ctx, max_degree=2)
                a = rng.randint(1, 3)
                for g_idx in ({1}, {2}):
                    T = rs.complement(g_idx)
                    lhs = f_fed(phi_embed(rs, r, a, g_idx))
                    twisted = rs.subset_product(T) ** (p - 1) * r.frobenius()
                    rhs = phi_embed(rs, twisted, a * p, g_idx)
                    assert cech_equal(lhs, rhs)

    def test_section_inverts_embed(self):
        s = phi_section(cech_class(RS2, X2, 2), {1})
        assert str(s) == "1"

    def test_section_of_zero_class(self):
        s = phi_section(cech_class(RS2, X2**2, 2), {1})
        assert quotient_ideal(RS2, {1}, 2).contains(s)

    def test_section_requires_annihilator(self):
        with pytest.raises(NotInAnnihilator):
            phi_section(cech_class(RS2, F2.one(), 2), {1})

    def test_section_round_trip(self):
        rng = random.Random("section")
        for rs in ALL_RS:
            for _ in range(15):
                r = random_polynomial(rng, rs.ctx, max_degree=2)
                a = rng.randint(1, 3)
                for g_idx in ({1}, {2}):
                    xi = phi_embed(rs, r, a, g_idx)
                    s = phi_section(xi, g_idx)
                    assert cech_equal(phi_embed(rs, s, a, g_idx), xi)

    def test_embed_injectivity(self):
        # phi_embed(r) = 0 iff r in ((f_g), f_T^[a])
        rng = random.Random("injective")
        for rs in ALL_RS:
            for _ in range(25):
                r = random_polynomial(rng, rs.ctx, max_degree=3)
                a = rng.randint(1, 3)
                for g_idx in ({1}, {2}):
                    zero = cech_is_zero(phi_embed(rs, r, a, g_idx))
                    member = quotient_ideal(rs, g_idx, a).contains(r)
                    assert zero == member


class TestBudgetRouting:
    def test_budget_exceeded_surfaces_from_class_ops(self):
        from ddelta.budget import Budget, BudgetExceeded
        from ddelta.groebner import RegSeqContext as RSC

        ctx = RingContext(2, ("x", "y"))
        tight = Budget(max_degree=3, max_pairs=100000)
        rs = RSC(ctx, [parse_polynomial("x+y", ctx), parse_polynomial("x*y", ctx)], tight)
        with pytest.raises(BudgetExceeded):
            cech_is_zero(cech_class(rs, ctx.one(), 4))

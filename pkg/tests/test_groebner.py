"""Groebner bases, ideal membership, colon ideals, bracket powers, and the
permutable-regular-sequence certificate."""

import random

import pytest

from ddelta.budget import Budget, BudgetExceeded
from ddelta.groebner import (
    Ideal,
    NotPermutableRegular,
    RegSeqContext,
    is_permutable_regular,
)
from ddelta.polyring import RingContext, parse_polynomial, random_polynomial

import oracle

F5 = RingContext(5, ("x", "y"))


def P(text, ctx=F5):
    return parse_polynomial(text, ctx)


def ideal(ctx, *texts):
    return Ideal(ctx, [parse_polynomial(t, ctx) for t in texts])


class TestGroebnerBasis:
    def test_already_reduced(self):
        assert [str(g) for g in ideal(F5, "x", "y").groebner_basis()] == ["x", "y"]

    def test_lex_example(self):
        ctx = RingContext(2, ("x", "y"), "lex")
        gb = ideal(ctx, "x+y", "x*y").groebner_basis()
        assert [str(g) for g in gb] == ["x + y", "y^2"]

    def test_containment(self):
        assert ideal(F5, "x^2", "x") == ideal(F5, "x")

    def test_idempotent(self):
        I = ideal(F5, "x^3 + y", "x*y + 2")
        again = Ideal(F5, list(I.groebner_basis()))
        assert again.groebner_basis() == I.groebner_basis()

    def test_zero_ideal(self):
        I = Ideal(F5, [])
        assert I.groebner_basis() == ()
        assert I.is_zero()

    def test_unit_ideal(self):
        assert not ideal(F5, "x", "x + 1").is_proper()

    def test_budget_exceeded_is_distinct(self):
        tight = Budget(max_degree=1, max_pairs=100000)
        I = Ideal(F5, [P("x^2 + y"), P("x*y + 1")], budget=tight)
        with pytest.raises(BudgetExceeded):
            I.groebner_basis()


class TestMembership:
    def test_examples(self):
        assert ideal(F5, "x").contains(P("x^2"))
        assert not ideal(F5, "x^2", "y").contains(P("x"))
        ctx = RingContext(2, ("x", "y"))
        assert ideal(ctx, "x+y", "y^2").contains(parse_polynomial("x*y", ctx))

    def test_monomial_oracle_agreement(self):
        ctx = RingContext(3, ("x", "y", "z"))
        gens = ["x^2*y", "y^3", "z^2"]
        I = ideal(ctx, *gens)
        gen_exps = [parse_polynomial(g, ctx).leading_monomial() for g in gens]
        rng = random.Random("membership")
        for _ in range(200):
            r = random_polynomial(rng, ctx, max_degree=6, max_terms=5)
            expected = oracle.monomial_ideal_member(gen_exps, list(r.items()))
            assert I.contains(r) == expected


class TestColon:
    def test_bracket_colon_power(self):
        # (x^3, y^3) : (xy)^2 = (x, y)
        assert ideal(F5, "x^3", "y^3").colon(P("x^2*y^2")) == ideal(F5, "x", "y")

    def test_bracket_colon_bracket(self):
        # (x^3, y^3) : (x, y) = ((xy)^2) + (x^3, y^3)
        lhs = ideal(F5, "x^3", "y^3").colon_ideal(ideal(F5, "x", "y"))
        assert lhs == ideal(F5, "x^2*y^2", "x^3", "y^3")

    def test_colon_by_one(self):
        I = ideal(F5, "x^2 + y", "y^3")
        assert I.colon(F5.one()) == I

    def test_colon_by_zero_rejected(self):
        with pytest.raises(ValueError):
            ideal(F5, "x").colon(F5.zero())

    def test_intersection(self):
        # (x) n (y) = (xy)
        assert ideal(F5, "x").intersect(ideal(F5, "y")) == ideal(F5, "x*y")
        lhs = ideal(F5, "x^2", "y^3").intersect(ideal(F5, "x^3", "y^2"))
        assert lhs == ideal(F5, "x^3", "y^3", "x^2*y^2")


class TestPermutability:
    def test_variables(self):
        assert is_permutable_regular([F5.variable("x"), F5.variable("y")]).ok

    def test_repeated_element_fails_with_witness(self):
        cert = is_permutable_regular([F5.variable("x"), F5.variable("x")])
        assert not cert.ok
        assert (frozenset({1}), 2) in cert.failures

    def test_nonmonomial_f2(self):
        ctx = RingContext(2, ("x", "y"))
        cert = is_permutable_regular(
            [parse_polynomial("x+y", ctx), parse_polynomial("x*y", ctx)]
        )
        assert cert.ok

    def test_improper_sequence_rejected(self):
        # x, x+1 satisfies all colon conditions but generates the unit ideal
        cert = is_permutable_regular([P("x"), P("x + 1")])
        assert not cert.ok and cert.improper

    def test_unit_entry_rejected(self):
        cert = is_permutable_regular([P("x"), F5.constant(2)])
        assert not cert.ok and cert.unit_or_zero == (2,)

    def test_regseq_context_raises(self):
        with pytest.raises(NotPermutableRegular):
            RegSeqContext(F5, [P("x"), P("x")])

    def test_bracket_power(self):
        rs = RegSeqContext(F5, [F5.variable("x"), F5.variable("y")])
        assert rs.bracket_power(3) == ideal(F5, "x^3", "y^3")
        assert rs.bracket_power(1) == ideal(F5, "x", "y")
        assert rs.bracket_power(2, subset={2}) == ideal(F5, "y^2")
        with pytest.raises(ValueError):
            rs.bracket_power(0)

    def test_bracket_power_nonmonomial(self):
        ctx = RingContext(2, ("x", "y"))
        rs = RegSeqContext(
            ctx, [parse_polynomial("x+y", ctx), parse_polynomial("x*y", ctx)]
        )
        expected = Ideal(
            ctx,
            [parse_polynomial("x^2 + y^2", ctx), parse_polynomial("x^2*y^2", ctx)],
        )
        assert rs.bracket_power(2) == expected


SUITE = [
    (2, ("x",), ("x",)),
    (2, ("x", "y"), ("x", "y")),
    (2, ("x", "y", "z"), ("x", "y", "z")),
    (2, ("x", "y"), ("x+y", "x*y")),
    (3, ("x", "y"), ("x", "y")),
    (3, ("x", "y"), ("x+y", "x*y")),
    (5, ("x", "y"), ("x", "y")),
]


def suite_contexts():
    for p, names, seq in SUITE:
        ctx = RingContext(p, names)
        yield RegSeqContext(ctx, [parse_polynomial(s, ctx) for s in seq])


class TestColonIdentities:
    def test_both_identities_small_range(self):
        # exact colon identities for bracket powers, 1 <= a < b <= 4 here;
        # the full a,b <= 6 sweep runs in the acceptance suite
        for rs in suite_contexts():
            for b in range(2, 5):
                bracket_b = rs.bracket_power(b)
                for a in range(1, b):
                    assert bracket_b.colon(rs.f_prod ** (b - a)) == rs.bracket_power(a)
                    expected = Ideal(rs.ctx, [rs.f_prod ** (b - a)]) + bracket_b
                    assert bracket_b.colon_ideal(rs.bracket_power(a)) == expected

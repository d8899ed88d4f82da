"""Sparse exact multivariate polynomial arithmetic over a prime field F_p.

Monomials are exponent tuples, polynomials are maps from monomials to
nonzero residues in [1, p-1].  All values are immutable and safe to share;
every operation is a pure function of its inputs.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

# Exponents are machine-word naturals; arithmetic past this cap raises
# instead of wrapping.
MAX_EXPONENT = 2**63 - 1

MAX_CHARACTERISTIC = 2**31

ORDER_TAGS = ("degrevlex", "lex", "grlex")

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

Monomial = tuple  # exponent vector, length = number of variables


class PolyringError(Exception):
    """Base error for this module."""


class ExponentOverflow(PolyringError):
    """An exponent would exceed the machine-word cap."""


class ContextMismatch(PolyringError):
    """Operands belong to different ring contexts."""


class ParseError(PolyringError):
    """Malformed polynomial text."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class UnknownVariable(ParseError):
    """A name in the input is not a variable of the ring."""


def is_prime(n: int) -> bool:
    """Deterministic primality test, adequate for n <= 2^31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# Monomial helpers (exponent tuples)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    out = tuple(x + y for x, y in zip(a, b))
    for e in out:
        if e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
    return out


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """The quotient b / a; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: Monomial) -> int:
    return sum(a)


def mono_scale(a: Monomial, k: int) -> Monomial:
    out = tuple(x * k for x in a)
    for e in out:
        if e > MAX_EXPONENT:
            raise ExponentOverflow(f"exponent {e} exceeds {MAX_EXPONENT}")
    return out


# ---------------------------------------------------------------------------
# Ring context and term orders


@dataclass(frozen=True)
class RingContext:
    """The ring F_p[vars] with a fixed term order.

    p must be prime (2 <= p <= 2^31); variable names must be distinct
    identifiers.  order is one of "degrevlex", "lex", "grlex".
    """

    p: int
    vars: tuple
    order: str = "degrevlex"

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not (2 <= self.p <= MAX_CHARACTERISTIC) or not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not a prime in [2, 2^31]")
        if self.order not in ORDER_TAGS:
            raise ValueError(f"unknown term order {self.order!r}")
        seen = set()
        for name in self.vars:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name {name!r}")
            seen.add(name)
        if not self.vars:
            raise ValueError("at least one variable is required")

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def sort_key(self, mono: Monomial):
        """Monotone key: larger key = larger monomial in the term order."""
        if self.order == "lex":
            return mono
        if self.order == "grlex":
            return (sum(mono), mono)
        # degrevlex: higher degree first, ties broken by the smallest
        # trailing exponent (reversed, negated comparison).
        return (sum(mono), tuple(-e for e in reversed(mono)))

    def var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    # -- convenience constructors

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        i = self.var_index(name)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {mono: 1})

    def variables(self) -> list:
        return [self.variable(v) for v in self.vars]

    def monomial(self, exponents: Iterable) -> "Polynomial":
        mono = tuple(exponents)
        if len(mono) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        return Polynomial(self, {mono: 1})

    def from_terms(self, terms) -> "Polynomial":
        """Build a polynomial from (monomial, coefficient) pairs."""
        acc = {}
        for mono, c in dict(terms).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != self.nvars:
                raise ValueError("exponent vector has wrong length")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            if any(e > MAX_EXPONENT for e in mono):
                raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
            c = int(c) % self.p
            if c:
                acc[mono] = (acc.get(mono, 0) + c) % self.p
        return Polynomial(self, {m: c for m, c in acc.items() if c})


class Polynomial:
    """An element of F_p[vars]: a finite map monomial -> coefficient.

    Zero coefficients are never stored; the zero polynomial is the empty
    map.  Equality is structural and hash-compatible.
    """

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingContext, terms: dict):
        self.ctx = ctx
        self._terms = terms
        self._hash = None

    # -- predicates / views

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono_deg(m) == 0 for m in self._terms)

    def is_unit(self) -> bool:
        """Units of F_p[vars] are the nonzero constants."""
        return bool(self._terms) and self.is_constant()

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention."""
        if not self._terms:
            return -1
        return max(mono_deg(m) for m in self._terms)

    def terms(self) -> list:
        """(monomial, coefficient) pairs, descending in the term order."""
        return sorted(self._terms.items(), key=lambda t: self.ctx.sort_key(t[0]), reverse=True)

    def items(self) -> Iterator:
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(tuple(mono), 0)

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=self.ctx.sort_key)

    def leading_coefficient(self) -> int:
        return self._terms[self.leading_monomial()]

    # -- arithmetic

    def _check_ctx(self, other: "Polynomial") -> None:
        if self.ctx is not other.ctx and self.ctx != other.ctx:
            raise ContextMismatch("operands from different rings")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ctx.constant(other)
        self._check_ctx(other)
        p = self.ctx.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ctx.p
        return Polynomial(self.ctx, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ctx.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ctx.p
            if c == 0:
                return self.ctx.zero()
            return Polynomial(self.ctx, {m: (v * c) % self.ctx.p for m, v in self._terms.items()})
        self._check_ctx(other)
        p = self.ctx.p
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base2 = base * base if e > 1 else base
            base = base2
            e >>= 1
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = pow(self.leading_coefficient(), -1, self.ctx.p)
        return self * inv

    def frobenius(self, e: int = 1) -> "Polynomial":
        """Raise to the p^e power by scaling exponents (freshman's dream).

        Coefficients are fixed by x -> x^p on F_p, so only the exponent
        vectors change; never computed by repeated multiplication.
        """
        if e < 0:
            raise ValueError("negative Frobenius exponent")
        if e == 0:
            return self
        q = self.ctx.p**e
        return Polynomial(self.ctx, {mono_scale(m, q): c for m, c in self._terms.items()})

    # -- comparisons

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ctx.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ctx == other.ctx and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.p, self.ctx.vars, frozenset(self._terms.items())))
        return self._hash

    # -- text form

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def frobenius(r: Polynomial, e: int = 1) -> Polynomial:
    """r^(p^e), computed exponent-wise."""
    return r.frobenius(e)


# ---------------------------------------------------------------------------
# Text grammar
#
#   poly   := term (('+'|'-') term)*
#   term   := coeff ('*' factor)* | factor ('*' factor)*
#   factor := var ('^' uint)?
#   coeff  := uint
#
# Whitespace is insignificant.  The printer emits '+'-separated terms in
# descending term order, eliding coefficient 1 except on the constant term.


def format_polynomial(poly: Polynomial) -> str:
    if poly.is_zero():
        return "0"
    chunks = []
    names = poly.ctx.vars
    for mono, coeff in poly.terms():
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if coeff != 1 or not factors:
            factors = [str(coeff)] + factors
        chunks.append("*".join(factors))
    return " + ".join(chunks)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an unsigned integer", start)
        return int(self.text[start : self.pos])

    def take_name(self) -> tuple:
        self.skip_ws()
        start = self.pos
        if self.pos >= len(self.text) or not (self.text[self.pos].isalpha()):
            raise ParseError("expected a variable name", start)
        self.pos += 1
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        return self.text[start : self.pos], start

    def take_char(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1


def parse_polynomial(text: str, ctx: RingContext) -> Polynomial:
    """Parse the grammar above; raises ParseError with a byte offset.

    A leading sign is tolerated even though the printer never emits one.
    """
    sc = _Scanner(text)
    acc = {}
    p = ctx.p
    nvars = ctx.nvars

    def add_term(coeff: int, mono: Monomial):
        c = (acc.get(mono, 0) + coeff) % p
        if c:
            acc[mono] = c
        else:
            acc.pop(mono, None)

    def parse_factor():
        name, offset = sc.take_name()
        try:
            idx = ctx.var_index(name)
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}", offset) from None
        exp = 1
        if sc.peek() == "^":
            sc.take_char("^")
            exp = sc.take_uint()
            if exp > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent {exp} exceeds {MAX_EXPONENT}")
        return idx, exp

    def parse_term(sign: int):
        exps = [0] * nvars
        ch = sc.peek()
        if ch is None:
            raise ParseError("expected a term", sc.pos)
        if ch.isdigit():
            coeff = sc.take_uint() % p
        else:
            coeff = 1
            idx, e = parse_factor()
            exps[idx] += e
        while sc.peek() == "*":
            sc.take_char("*")
            idx, e = parse_factor()
            exps[idx] += e
            if exps[idx] > MAX_EXPONENT:
                raise ExponentOverflow(f"exponent exceeds {MAX_EXPONENT}")
        add_term(sign * coeff % p, tuple(exps))

    sign = 1
    if sc.peek() == "-":
        sc.take_char("-")
        sign = p - 1
    elif sc.peek() == "+":
        sc.take_char("+")
    parse_term(sign)
    while True:
        ch = sc.peek()
        if ch is None:
            break
        if ch == "+":
            sc.take_char("+")
            parse_term(1)
        elif ch == "-":
            sc.take_char("-")
            parse_term(p - 1)
        else:
            raise ParseError(f"unexpected character {ch!r}", sc.pos)
    return Polynomial(ctx, acc)


def random_polynomial(rng, ctx: RingContext, max_degree: int = 4, max_terms: int = 5) -> Polynomial:
    """Seeded random polynomial for property suites (may be zero)."""
    nterms = rng.randint(0, max_terms)
    acc = {}
    for _ in range(nterms):
        mono = [0] * ctx.nvars
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            mono[rng.randrange(ctx.nvars)] += 1
        coeff = rng.randint(1, ctx.p - 1)
        key = tuple(mono)
        acc[key] = (acc.get(key, 0) + coeff) % ctx.p
    return Polynomial(ctx, {m: c for m, c in acc.items() if c})

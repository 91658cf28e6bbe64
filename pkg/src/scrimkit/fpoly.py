"""Polynomials over any coefficient ring exposing the shared ring protocol.

A ring object supplies zero/one, add/sub/neg/mul, is_unit/inv, from_int,
render_elem/parse_symbols, and (when it has one) conjugate. Poly stores a
trimmed low-degree-first coefficient tuple, so polynomials hash and
compare structurally. The star and dagger involutions, irreducibility
over a field, and a round-trip text form live here too.
"""

from __future__ import annotations

from .errors import (
    DivisionByZeroPoly,
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    Unsupported,
)


class Poly:
    """Dense univariate polynomial over a fixed coefficient ring."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        i = len(coeffs)
        zero = ring.zero
        while i and coeffs[i - 1] == zero:
            i -= 1
        self.ring = ring
        self.coeffs = tuple(coeffs[:i])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise DivisionByZeroPoly("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self):
        return self.coeffs[0] if self.coeffs else self.ring.zero

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def monic(self) -> "Poly":
        """Scale by the inverse of the leading coefficient."""
        if self.is_zero() or self.is_monic():
            return self
        lead = self.coeffs[-1]
        if not self.ring.is_unit(lead):
            raise NonUnitLeadingCoefficient("cannot normalize by a non-unit")
        inv = self.ring.inv(lead)
        return Poly(self.ring, [self.ring.mul(c, inv) for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring is other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.coeffs))

    def __add__(self, other):
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = r.add(out[i], c)
        return Poly(r, out)

    def __neg__(self):
        r = self.ring
        return Poly(r, [r.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        r = self.ring
        a, b = self.coeffs, other.coeffs
        out = [r.neg(c) for c in b]
        out += [r.zero] * (len(a) - len(b))
        for i, c in enumerate(a):
            out[i] = r.add(c, out[i])
        return Poly(r, out)

    def __mul__(self, other):
        r = self.ring
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(r, ())
        out = [r.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == r.zero:
                continue
            for j, y in enumerate(b):
                out[i + j] = r.add(out[i + j], r.mul(x, y))
        return Poly(r, out)

    def scale(self, c) -> "Poly":
        r = self.ring
        return Poly(r, [r.mul(x, c) for x in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.ring, (self.ring.zero,) * k + self.coeffs)

    def __divmod__(self, other):
        r = self.ring
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        lead = other.coeffs[-1]
        if not r.is_unit(lead):
            raise NonUnitLeadingCoefficient(
                "divisor leading coefficient is not a unit"
            )
        inv = r.inv(lead)
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return Poly(r, ()), self
        quot = [r.zero] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == r.zero:
                continue
            c = r.mul(c, inv)
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = r.sub(rem[i - db + j], r.mul(c, other.coeffs[j]))
        return Poly(r, quot), Poly(r, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly(self.ring, (self.ring.one,))
        acc = self
        while e:
            if e & 1:
                result = result * acc
            e >>= 1
            if e:
                acc = acc * acc
        return result

    def eval(self, point):
        r = self.ring
        acc = r.zero
        for c in reversed(self.coeffs):
            acc = r.add(r.mul(acc, point), c)
        return acc

    def map_coeffs(self, fn, new_ring) -> "Poly":
        """Apply fn to every coefficient, landing in new_ring."""
        return Poly(new_ring, [fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"Poly({render(self)!r})"


def poly(ring, coeffs) -> Poly:
    """Polynomial from low-degree-first coefficients."""
    return Poly(ring, coeffs)

def constant(ring, c) -> Poly:
    return Poly(ring, (c,))

def x_poly(ring) -> Poly:
    return Poly(ring, (ring.zero, ring.one))

def monomial(ring, k: int, c=None) -> Poly:
    return Poly(ring, (ring.zero,) * k + (ring.one if c is None else c,))

def xn_minus_1(ring, n: int) -> Poly:
    return Poly(ring, (ring.neg(ring.one),) + (ring.zero,) * (n - 1) + (ring.one,))


def add(f: Poly, g: Poly) -> Poly:
    return f + g

def sub(f: Poly, g: Poly) -> Poly:
    return f - g

def mul(f: Poly, g: Poly) -> Poly:
    return f * g

def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    return divmod(f, g)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field; gcd(0, 0) = 0."""
    if not getattr(f.ring, "is_field", False):
        raise Unsupported("polynomial gcd needs field coefficients")
    while not g.is_zero():
        f, g = g, f % g.monic()
    return f.monic()


def invert_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m over a field; NotCoprime if gcd(a, m) != 1."""
    if not getattr(a.ring, "is_field", False):
        raise Unsupported("modular inverse needs field coefficients")
    r = a.ring
    r0, r1 = m, a % m
    t0, t1 = Poly(r, ()), constant(r, r.one)
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        t0, t1 = t1, t0 - quot * t1
    if r0.degree != 0:
        from .errors import NotCoprime

        raise NotCoprime("polynomials share a nontrivial factor")
    return t0.scale(r.inv(r0.constant())) % m


def pow_mod(base: Poly, e: int, modulus: Poly) -> Poly:
    """base^e mod modulus, reducing after every product."""
    result = constant(base.ring, base.ring.one)
    acc = base % modulus
    while e:
        if e & 1:
            result = (result * acc) % modulus
        e >>= 1
        if e:
            acc = (acc * acc) % modulus
    return result


def reciprocal_star(f: Poly) -> Poly:
    """f*(x) = x^deg(f) f(0)^-1 f(1/x); needs a unit constant term."""
    r = f.ring
    c0 = f.constant()
    if not r.is_unit(c0):
        raise NonUnitConstantTerm("reciprocal needs a unit constant term")
    c0_inv = r.inv(c0)
    return Poly(r, [r.mul(c, c0_inv) for c in reversed(f.coeffs)])


def conjugate_reciprocal_dagger(f: Poly) -> Poly:
    """f+(x), the coefficient-conjugated reciprocal of f."""
    star = reciprocal_star(f)
    r = f.ring
    return Poly(r, [r.conjugate(c) for c in star.coeffs])


def is_irreducible(f: Poly) -> bool:
    """Frobenius-chain irreducibility test over a finite field ring."""
    r = f.ring
    if not getattr(r, "is_field", False) or not hasattr(r, "size"):
        raise Unsupported("irreducibility test needs a finite field ring")
    k = f.degree
    if k <= 0:
        return False
    if k == 1:
        return True
    f = f.monic()
    if f.constant() == r.zero:
        return False
    from . import numtheory

    probes = {k // l for l in numtheory.factorize(k).primes()}
    probes.update(i for i in (1, 2) if i < k)
    probes.discard(k)
    x = x_poly(r)
    cur = x
    for i in range(1, k + 1):
        cur = pow_mod(cur, r.size, f)
        if i in probes and gcd(cur - x, f).degree != 0:
            return False
    return cur == x


def _coeff_text(r, c) -> str:
    s = r.render_elem(c)
    return s if s.isdigit() else f"({s})"


def render(f: Poly) -> str:
    """Canonical text form: terms high to low, joined by ' + '."""
    if f.is_zero():
        return "0"
    r = f.ring
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == r.zero:
            continue
        xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not xs:
            parts.append(_coeff_text(r, c))
        elif c == r.one:
            parts.append(xs)
        else:
            parts.append(f"{_coeff_text(r, c)}*{xs}")
    return " + ".join(parts)


class _Lexer:
    def __init__(self, text: str):
        self.toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch.isalpha():
                self.toks.append(("name", ch))
                i += 1
            elif ch in "+-*^()":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r} in polynomial text")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise ValueError("unexpected end of polynomial text")
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r}, found {tok[1]!r}")
        self.pos += 1
        return tok


class _Parser:
    """expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
    factor := atom ('^' int)*; atom := int | name | '(' expr ')' | '-' atom
    """

    def __init__(self, lexer: _Lexer, ring):
        self.lx = lexer
        self.ring = ring
        self.symbols = ring.parse_symbols()

    def expr(self) -> Poly:
        acc = self.term()
        while self.lx.peek() in ("+", "-"):
            op = self.lx.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while self.lx.peek() == "*":
            self.lx.take()
            acc = acc * self.factor()
        return acc

    def factor(self) -> Poly:
        base = self.atom()
        while self.lx.peek() == "^":
            self.lx.take()
            e = self.lx.take("int")[1]
            base = base**e
        return base

    def atom(self) -> Poly:
        kind = self.lx.peek()
        if kind == "int":
            return constant(self.ring, self.ring.from_int(self.lx.take()[1]))
        if kind == "name":
            name = self.lx.take()[1]
            if name == "x":
                return x_poly(self.ring)
            if name in self.symbols:
                return constant(self.ring, self.symbols[name])
            raise ValueError(f"unknown symbol {name!r} for this ring")
        if kind == "(":
            self.lx.take()
            inner = self.expr()
            self.lx.take(")")
            return inner
        if kind == "-":
            self.lx.take()
            return -self.atom()
        raise ValueError("malformed polynomial text")


def parse(text: str, ring) -> Poly:
    """Parse the grammar produced by render back into a Poly."""
    lexer = _Lexer(text)
    out = _Parser(lexer, ring).expr()
    if lexer.pos != len(lexer.toks):
        raise ValueError("trailing junk in polynomial text")
    return out

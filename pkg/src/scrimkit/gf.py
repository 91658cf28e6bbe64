"""Exact arithmetic in the tower F_p < F_{q^2} < F_{(q^2)^m}.

Fields are ring objects; elements are plain tuples of residues mod p
(power-basis coordinates, lowest power first), so they hash, compare and
travel across processes for free. Small fields get full lookup tables;
big extension fields run on the polynomial kernels. Every constructed
modulus is the lexicographically least monic irreducible of its degree
(coefficients compared low-degree-first), and the generator of a
multiplicative group is the lex-least element of maximal order, so every
derived object is reproducible bit for bit.
"""

from __future__ import annotations

import functools
import itertools

from . import budgets, kernels, numtheory
from .errors import (
    CharacteristicDividesN,
    InternalCheckFailed,
    NonPrimeCharacteristic,
    SizeLimitExceeded,
    ZeroHasNoOrder,
)

_TABLE_SIZE_CAP = 160  # build full op tables for fields up to this order


def _trim(v):
    i = len(v)
    while i and v[i - 1] == 0:
        i -= 1
    return tuple(v[:i])


def _divmod_fp(a, b, p):
    """Long division of F_p coefficient vectors; b nonzero, trimmed."""
    a = list(_trim(a))
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), _trim(a)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            c = c * inv_lead % p
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(quot), _trim(a)


def _gcd_fp(a, b, p):
    """Monic gcd of two F_p coefficient vectors."""
    a, b = _trim(a), _trim(b)
    while b:
        lead = b[-1]
        if lead != 1:
            inv = pow(lead, p - 2, p)
            b = tuple(c * inv % p for c in b)
        a, b = b, _trim(kernels.rem_mod(a, b, p))
    if a and a[-1] != 1:
        inv = pow(a[-1], p - 2, p)
        a = tuple(c * inv % p for c in a)
    return a


def _eval_fp(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _pow_mod_fp(base, exp, modulus, p):
    """base^exp mod monic modulus, fixed width deg(modulus)."""
    dm = len(modulus) - 1
    result = (1,) + (0,) * (dm - 1)
    acc = kernels.rem_mod(base, modulus, p)
    while exp:
        if exp & 1:
            result = kernels.mulrem_mod(result, acc, modulus, p)
        exp >>= 1
        if exp:
            acc = kernels.mulrem_mod(acc, acc, modulus, p)
    return result


def is_irreducible_fp(f, p):
    """Distinct-degree irreducibility test for a monic F_p vector.

    Uses the Frobenius chain x^(p^i) mod f with gcd probes at i = k/l for
    prime l | k (plus small i for early rejection) and the closing check
    x^(p^k) = x.
    """
    f = _trim(f)
    k = len(f) - 1
    if k <= 0:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False
    if p <= 64:
        for a in range(p):
            if _eval_fp(f, a, p) == 0:
                return False
    probes = {k // l for l in numtheory.factorize(k).primes()}
    probes.update(i for i in (1, 2, 3) if i < k)
    probes.discard(k)
    x_vec = (0, 1) + (0,) * (k - 2)
    cur = x_vec
    for i in range(1, k + 1):
        cur = _pow_mod_fp(cur, p, f, p)
        if i in probes:
            g = _gcd_fp(kernels.sub_mod(cur, x_vec, p), f, p)
            if len(g) > 1:
                return False
    return cur == x_vec


@functools.lru_cache(maxsize=None)
def lex_least_irreducible(p, k):
    """Lex-least monic irreducible of degree k over F_p.

    Candidates are scanned in ascending low-degree-first coefficient
    order; the constant term starts at 1 since c0 = 0 is divisible by x.
    """
    if k < 2:
        raise ValueError(f"need degree >= 2, got {k}")
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=k - 1):
            cand = (c0,) + rest + (1,)
            if is_irreducible_fp(cand, p):
                return cand
    raise InternalCheckFailed(f"no irreducible of degree {k} over F_{p}")


@functools.lru_cache(maxsize=None)
def _cyclo_value(p, d):
    """Integer value of the d-th cyclotomic polynomial at p."""
    val = p**d - 1
    for dd in numtheory.factorize(d).divisors():
        if dd < d:
            val //= _cyclo_value(p, dd)
    return val


@functools.lru_cache(maxsize=None)
def _cyclo_factors(p, d):
    return numtheory._factor_unbounded(_cyclo_value(p, d))


@functools.lru_cache(maxsize=None)
def _field_order_factors(p, k):
    """Prime factorization of p^k - 1 via its cyclotomic pieces."""
    out: dict[int, int] = {}
    for d in numtheory.factorize(k).divisors():
        for prime, e in _cyclo_factors(p, d):
            out[prime] = out.get(prime, 0) + e
    factors = tuple(sorted(out.items()))
    check = 1
    for prime, e in factors:
        check *= prime**e
    if check != p**k - 1:
        raise InternalCheckFailed("cyclotomic factor merge is inconsistent")
    return factors


class PrimeField:
    """F_p with plain-int elements; coefficient ring for F_p polynomials."""

    is_field = True

    def __init__(self, p):
        if not numtheory.is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.char = p
        self.size = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def from_int(self, k):
        return k % self.p

    def iter_elements(self):
        return iter(range(self.p))

    def render_elem(self, a):
        return str(a)

    def parse_symbols(self):
        return {}

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtField:
    """F_{p^k} = F_p[w]/(modulus); elements are width-k tuples."""

    is_field = True

    def __init__(self, p, modulus):
        self.p = p
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        if self.degree < 2:
            raise ValueError("extension degree must be at least 2")
        self.char = p
        self.size = p**self.degree
        self.zero = (0,) * self.degree
        self.one = (1,) + (0,) * (self.degree - 1)
        self.gen = (0, 1) + (0,) * (self.degree - 2)
        self._mul_table = None
        self._add_table = None
        self._neg_table = None
        self._inv_table = None
        if self.size <= _TABLE_SIZE_CAP:
            self._build_tables()

    def _build_tables(self):
        elems = list(self.iter_elements())
        p, m = self.p, self.modulus
        self._neg_table = {a: tuple(-c % p for c in a) for a in elems}
        self._add_table = {
            (a, b): tuple((x + y) % p for x, y in zip(a, b))
            for a in elems
            for b in elems
        }
        self._mul_table = {
            (a, b): kernels.mulrem_mod(a, b, m, p) for a in elems for b in elems
        }
        inv = {}
        for a in elems:
            if any(a):
                inv[a] = self.pow(a, self.size - 2)
        self._inv_table = inv

    def iter_elements(self):
        """All field elements in ascending low-degree-first lex order."""
        return itertools.product(range(self.p), repeat=self.degree)

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b]
        return kernels.add_mod(a, b, self.p)

    def sub(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, self._neg_table[b]]
        return kernels.sub_mod(a, b, self.p)

    def neg(self, a):
        if self._neg_table is not None:
            return self._neg_table[a]
        return tuple(-c % self.p for c in a)

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return kernels.mulrem_mod(a, b, self.modulus, self.p)

    def is_unit(self, a):
        return any(a)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        if self._inv_table is not None:
            return self._inv_table[a]
        t = self._eea_inverse(_trim(a))
        return t + (0,) * (self.degree - len(t))

    def _eea_inverse(self, a):
        p = self.p
        r0, r1 = _trim(self.modulus), a
        t0, t1 = (), (1,)
        while r1:
            q, r = _divmod_fp(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _trim(kernels.sub_mod(t0, kernels.mul_mod(q, t1, p), p))
        c_inv = pow(r0[0], p - 2, p)
        return tuple(c * c_inv % p for c in t0)

    def pow(self, a, e):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        acc = a
        while e:
            if e & 1:
                result = self.mul(result, acc)
            e >>= 1
            if e:
                acc = self.mul(acc, acc)
        return result

    def scal_mul(self, a, c):
        """Multiply by an F_p scalar."""
        c %= self.p
        return tuple(x * c % self.p for x in a)

    def order_factors(self):
        """Prime factorization of size - 1."""
        return _field_order_factors(self.p, self.degree)

    def from_int(self, k):
        return (k % self.p,) + (0,) * (self.degree - 1)

    def render_elem(self, a):
        parts = []
        for i in range(self.degree - 1, -1, -1):
            c = a[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                w = "w" if i == 1 else f"w^{i}"
                parts.append(w if c == 1 else f"{c}*{w}")
        return " + ".join(parts) if parts else "0"

    def parse_symbols(self):
        return {"w": self.gen}

    def __repr__(self):
        return f"ExtField(p={self.p}, degree={self.degree})"


class FieldSpec(ExtField):
    """The base field F_{q^2} with q = p^e and its conjugation x -> x^q."""

    def __init__(self, p, e, modulus):
        super().__init__(p, modulus)
        self.e = e
        self.q = p**e
        self._conj_table = None
        if self._mul_table is not None:
            self._conj_table = {
                a: self.pow(a, self.q) for a in self.iter_elements()
            }

    def conjugate(self, x):
        if self._conj_table is not None:
            return self._conj_table[x]
        return self.pow(x, self.q)

    def __repr__(self):
        return f"FieldSpec(p={self.p}, e={self.e}, q2={self.size})"


@functools.lru_cache(maxsize=None)
def build_field(p, e=1):
    """The field F_{q^2}, q = p^e, with the lex-least degree-2e modulus."""
    if not numtheory.is_prime(p):
        raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
    if e < 1:
        raise ValueError(f"e must be positive, got {e}")
    if p ** (2 * e) > budgets.BASE_FIELD_SIZE_CAP:
        raise SizeLimitExceeded(f"p^(2e) = {p}^{2*e} exceeds the base budget")
    return FieldSpec(p, e, lex_least_irreducible(p, 2 * e))


def _solve_descent(big, powers, p, width):
    """Select rows making the embedding matrix invertible; return solver data.

    powers[i] is the big-field coordinate vector of W^i for i < width.
    """
    basis = []  # (pivot position, reduced row vector over F_p, row index)
    sel_rows = []
    for r in range(big.degree):
        v = [powers[i][r] for i in range(width)]
        for piv, vec, _ in basis:
            c = v[piv]
            if c:
                for j in range(width):
                    v[j] = (v[j] - c * vec[j]) % p
        piv = next((j for j, c in enumerate(v) if c), None)
        if piv is None:
            continue
        inv = pow(v[piv], p - 2, p)
        v = [c * inv % p for c in v]
        basis.append((piv, v, r))
        sel_rows.append(r)
        if len(sel_rows) == width:
            break
    if len(sel_rows) != width:
        raise InternalCheckFailed("embedding image does not span the subfield")
    # invert the width x width submatrix by Gauss-Jordan
    mat = [[powers[i][r] for i in range(width)] for r in sel_rows]
    aug = [row + [int(i == j) for j in range(width)] for i, row in enumerate(mat)]
    for col in range(width):
        piv = next(r for r in range(col, width) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [c * inv % p for c in aug[col]]
        for r in range(width):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
    s_inv = [row[width:] for row in aug]
    return sel_rows, s_inv


class ExtensionCtx:
    """The degree-m extension of F_{q^2} with embedding and descent maps."""

    def __init__(self, base: FieldSpec, m: int):
        self.base = base
        self.m = m
        if m == 1:
            self.big = base
        else:
            self.big = ExtField(base.p, lex_least_irreducible(base.p, base.degree * m))
        self._generator = None
        self._embed_image = None
        self._embed_powers = None
        self._descent = None

    @property
    def generator(self):
        """Lex-least element of maximal multiplicative order in the big field."""
        if self._generator is None:
            big = self.big
            primes = [r for r, _ in big.order_factors()]
            cofactors = [(big.size - 1) // r for r in primes]
            for cand in big.iter_elements():
                if not any(cand):
                    continue
                if all(big.pow(cand, c) != big.one for c in cofactors):
                    self._generator = cand
                    break
            else:
                raise InternalCheckFailed("no generator found")
        return self._generator

    @property
    def embed_image(self):
        """Canonical root of the base modulus inside the big field."""
        if self._embed_image is None:
            if self.m == 1:
                self._embed_image = self.base.gen
            else:
                big, base = self.big, self.base
                sub_gen = big.pow(self.generator, (big.size - 1) // (base.size - 1))
                w = big.one
                for _ in range(base.size - 1):
                    acc = big.zero
                    for c in reversed(base.modulus):
                        acc = big.add(big.mul(acc, w), big.from_int(c))
                    if acc == big.zero:
                        self._embed_image = w
                        break
                    w = big.mul(w, sub_gen)
                else:
                    raise InternalCheckFailed("no root of the base modulus found")
        return self._embed_image

    def _powers(self):
        if self._embed_powers is None:
            powers = [self.big.one]
            for _ in range(self.base.degree - 1):
                powers.append(self.big.mul(powers[-1], self.embed_image))
            self._embed_powers = powers
        return self._embed_powers

    def embed(self, x):
        """Ring-homomorphic image of a base-field element in the big field."""
        if self.m == 1:
            return x
        big = self.big
        acc = big.zero
        for c, wp in zip(x, self._powers()):
            if c:
                acc = kernels.add_mod(acc, big.scal_mul(wp, c), big.p)
        return acc

    def descend(self, c):
        """Preimage of a big-field element under embed; error if outside."""
        if self.m == 1:
            return c
        if self._descent is None:
            self._descent = _solve_descent(
                self.big, self._powers(), self.base.p, self.base.degree
            )
        sel_rows, s_inv = self._descent
        p = self.base.p
        rhs = [c[r] for r in sel_rows]
        coords = tuple(
            sum(s_inv[i][j] * rhs[j] for j in range(len(rhs))) % p
            for i in range(self.base.degree)
        )
        if self.embed(coords) != c:
            raise InternalCheckFailed("element does not lie in the base subfield")
        return coords

    def __repr__(self):
        return f"ExtensionCtx(base={self.base!r}, m={self.m})"


@functools.lru_cache(maxsize=None)
def get_extension(spec: FieldSpec, m: int) -> ExtensionCtx:
    return ExtensionCtx(spec, m)


def field_for_q(q: int) -> FieldSpec:
    """The field F_{q^2} for a prime power q."""
    p, e = numtheory.prime_power_split(q)
    return build_field(p, e)


def conjugate(x, spec: FieldSpec):
    """x^q, the Hermitian conjugation of F_{q^2}."""
    return spec.conjugate(x)


def element_order(x, field_or_ctx):
    """Multiplicative order of a nonzero element."""
    field = field_or_ctx.big if isinstance(field_or_ctx, ExtensionCtx) else field_or_ctx
    if x == field.zero:
        raise ZeroHasNoOrder("the zero element has no multiplicative order")
    order = field.size - 1
    for r, _ in field.order_factors():
        while order % r == 0 and field.pow(x, order // r) == field.one:
            order //= r
    return order


def primitive_nth_root(spec: FieldSpec, n: int):
    """(ExtensionCtx, alpha) with alpha of order exactly n.

    alpha is the (size-1)/n power of the lex-least generator of the
    extension of degree m = ord_n(q^2), hence fully deterministic.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n % spec.p == 0:
        raise CharacteristicDividesN(f"characteristic {spec.p} divides n = {n}")
    m = numtheory.mult_order(spec.size, n)
    if spec.size**m > budgets.EXT_FIELD_SIZE_CAP:
        raise SizeLimitExceeded(f"extension size (q^2)^{m} exceeds the budget")
    ctx = get_extension(spec, m)
    big = ctx.big
    alpha = big.pow(ctx.generator, (big.size - 1) // n)
    if big.pow(alpha, n) != big.one:
        raise InternalCheckFailed("candidate root has wrong order")
    for l in numtheory.factorize(n).primes():
        if big.pow(alpha, n // l) == big.one:
            raise InternalCheckFailed("candidate root has wrong order")
    return ctx, alpha

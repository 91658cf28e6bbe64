"""Hermitian self-dual cyclic codes over the chain ring R = F_{q^2}[u]/(u^t).

Elements of R are length-t tuples of F_{q^2} elements (coefficient of u^i
at index i). The factorization of x^n - r0 is built by linear Hensel
lifting from the factors of x^n - 1; r0 = (1+uc)(1+u c^q)^-1 is chosen so
that r0 conj(r0) = 1, which makes the dagger involution permute the
lifted factors. A code is an exponent vector k against that factor list;
self-duality is k_i + k_{i-hat} = t. The codeword oracle rechecks both
self-orthogonality and cardinality from raw cyclic shifts.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass, field

from . import budgets, fpoly, gf, scrim
from .errors import (
    EnumerationTooLarge,
    InternalCheckFailed,
    LiftMismatch,
    NilpotencyTooSmall,
    NotCoprime,
    OracleTooLarge,
    Unsupported,
)


class ChainRing:
    """F_{q^2}[u]/(u^t) under the shared coefficient-ring protocol."""

    is_field = False

    def __init__(self, spec: gf.FieldSpec, t: int):
        if t < 1:
            raise ValueError(f"nilpotency index must be >= 1, got {t}")
        self.spec = spec
        self.t = t
        self.size = spec.size**t
        self.char = spec.p
        self.zero = (spec.zero,) * t
        self.one = (spec.one,) + (spec.zero,) * (t - 1)
        if t >= 2:
            self.u = (spec.zero, spec.one) + (spec.zero,) * (t - 2)

    def inject(self, x):
        """Constant embedding of an F_{q^2} element."""
        return (x,) + (self.spec.zero,) * (self.t - 1)

    def inject_at(self, x, i: int):
        """x * u^i."""
        return (
            (self.spec.zero,) * i + (x,) + (self.spec.zero,) * (self.t - 1 - i)
        )

    def residue(self, a):
        """Image modulo u."""
        return a[0]

    def add(self, a, b):
        s = self.spec
        return tuple(s.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        s = self.spec
        return tuple(s.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        s = self.spec
        return tuple(s.neg(x) for x in a)

    def mul(self, a, b):
        s = self.spec
        t = self.t
        out = [s.zero] * t
        for i, x in enumerate(a):
            if x == s.zero:
                continue
            for j in range(t - i):
                y = b[j]
                if y != s.zero:
                    out[i + j] = s.add(out[i + j], s.mul(x, y))
        return tuple(out)

    def is_unit(self, a):
        return a[0] != self.spec.zero

    def inv(self, a):
        """Series inversion: solve sum_{i+j=k} a_i b_j = [k = 0]."""
        s = self.spec
        if a[0] == s.zero:
            raise ZeroDivisionError("inverse of a non-unit")
        b0 = s.inv(a[0])
        out = [b0] + [s.zero] * (self.t - 1)
        for k in range(1, self.t):
            acc = s.zero
            for i in range(1, k + 1):
                acc = s.add(acc, s.mul(a[i], out[k - i]))
            out[k] = s.neg(s.mul(b0, acc))
        return tuple(out)

    def conjugate(self, a):
        s = self.spec
        return tuple(s.conjugate(x) for x in a)

    def val(self, a) -> int:
        """u-adic valuation; t for the zero element."""
        s = self.spec
        for i, x in enumerate(a):
            if x != s.zero:
                return i
        return self.t

    def shift_down(self, a, k: int):
        """a / u^k for a with valuation >= k."""
        return a[k:] + (self.spec.zero,) * k

    def from_int(self, k):
        return self.inject(self.spec.from_int(k))

    def render_elem(self, a):
        s = self.spec
        parts = []
        for i, c in enumerate(a):
            if c == s.zero:
                continue
            us = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if not us:
                parts.append(s.render_elem(c))
            elif c == s.one:
                parts.append(us)
            else:
                cs = s.render_elem(c)
                parts.append(f"{cs}*{us}" if cs.isdigit() else f"({cs})*{us}")
        return " + ".join(parts) if parts else "0"

    def parse_symbols(self):
        out = {"w": self.inject(self.spec.gen)}
        if self.t >= 2:
            out["u"] = self.u
        return out

    def __repr__(self):
        return f"ChainRing(q2={self.spec.size}, t={self.t})"


@functools.lru_cache(maxsize=None)
def get_chain_ring(spec: gf.FieldSpec, t: int) -> ChainRing:
    return ChainRing(spec, t)


def make_r0(q: int, t: int):
    """r0 = (1+uc)(1+u conj(c))^-1 with c the lex-least element outside
    F_q; the quotient form forces r0 conj(r0) = 1."""
    if t < 2:
        raise NilpotencyTooSmall(f"need t >= 2, got {t}")
    spec = gf.field_for_q(q)
    ring = get_chain_ring(spec, t)
    c = next(x for x in spec.iter_elements() if spec.conjugate(x) != x)
    num = ring.inject_at(spec.one, 0)
    num = ring.add(num, ring.inject_at(c, 1))
    den = ring.add(ring.one, ring.inject_at(spec.conjugate(c), 1))
    r0 = ring.mul(num, ring.inv(den))
    if ring.mul(r0, ring.conjugate(r0)) != ring.one:
        raise InternalCheckFailed("r0 conj(r0) != 1")
    if ring.residue(r0) != spec.one or not ring.is_unit(
        ring.shift_down(ring.sub(r0, ring.one), 1)
    ):
        raise InternalCheckFailed("r0 is not 1 + u*(unit)")
    return r0


@dataclass
class LiftedFactorization:
    """Monic factors of x^n - r0 over R, aligned with their residues."""

    q: int
    n: int
    t: int
    ring: ChainRing
    field: gf.FieldSpec
    r0: tuple
    factors: tuple[fpoly.Poly, ...]
    dagger_perm: tuple[int, ...]
    residues: tuple[fpoly.Poly, ...]
    reps: tuple[int, ...]
    _star_perm: tuple[int, ...] | None = field(default=None, repr=False)


def hensel_lift(q: int, n: int, t: int) -> LiftedFactorization:
    """Lift the factorization of x^n - 1 over F_{q^2} to x^n - r0 over R
    by one u-power per stage, using Bezout cofactors mod each factor."""
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    r0 = make_r0(q, t)
    spec = gf.field_for_q(q)
    ring = get_chain_ring(spec, t)
    report = scrim.factor_xn_minus_1(q, n)
    residues = report.all_factors()
    xn1 = fpoly.xn_minus_1(spec, n)
    bezouts = [fpoly.invert_mod(xn1 // h, h) for h in residues]

    lifts = [h.map_coeffs(ring.inject, ring) for h in residues]
    target = fpoly.Poly(
        ring, (ring.neg(r0),) + (ring.zero,) * (n - 1) + (ring.one,)
    )
    for s in range(1, t):
        prod = fpoly.constant(ring, ring.one)
        for f in lifts:
            prod = prod * f
        err_r = target - prod
        err_coeffs = []
        for c in err_r.coeffs:
            if any(x != spec.zero for x in c[:s]):
                raise LiftMismatch(f"error term not divisible by u^{s}")
            err_coeffs.append(c[s])
        err = fpoly.Poly(spec, err_coeffs)
        if err.is_zero():
            continue
        for i, (h, b) in enumerate(zip(residues, bezouts)):
            delta = (err * b) % h
            if delta.is_zero():
                continue
            bump = delta.map_coeffs(lambda x: ring.inject_at(x, s), ring)
            lifts[i] = lifts[i] + bump

    prod = fpoly.constant(ring, ring.one)
    for f in lifts:
        prod = prod * f
    if prod != target:
        raise LiftMismatch("lifted factors do not multiply back to x^n - r0")

    perm = []
    for f in lifts:
        fd = fpoly.conjugate_reciprocal_dagger(f)
        try:
            perm.append(lifts.index(fd))
        except ValueError:
            raise LiftMismatch("dagger image of a factor is missing") from None
    for i, j in enumerate(perm):
        if perm[j] != i:
            raise LiftMismatch("dagger matching is not an involution")

    return LiftedFactorization(
        q=q,
        n=n,
        t=t,
        ring=ring,
        field=spec,
        r0=r0,
        factors=tuple(lifts),
        dagger_perm=tuple(perm),
        residues=residues,
        reps=tuple(rep for rep, _ in report.factors_by_rep),
    )


def dagger_is_preserved(lift: LiftedFactorization) -> bool:
    """Diagnostic: f_i self-dagger iff its residue h_i is self-dagger."""
    for f, h in zip(lift.factors, lift.residues):
        f_fixed = fpoly.conjugate_reciprocal_dagger(f) == f
        h_fixed = fpoly.conjugate_reciprocal_dagger(h) == h
        if f_fixed != h_fixed:
            return False
    return True


def star_perm(lift: LiftedFactorization) -> tuple[int, ...]:
    """Permutation matching f_i to its reciprocal f_i*; only well-defined
    when r0^2 = 1, since (x^n - r0)* = x^n - r0^-1."""
    if lift._star_perm is not None:
        return lift._star_perm
    ring = lift.ring
    if ring.mul(lift.r0, lift.r0) != ring.one:
        raise Unsupported("star permutation needs r0^2 = 1")
    perm = []
    for f in lift.factors:
        fs = fpoly.reciprocal_star(f)
        if fs not in lift.factors:
            raise InternalCheckFailed("star image of a factor is missing")
        perm.append(lift.factors.index(fs))
    lift._star_perm = tuple(perm)
    return lift._star_perm


@dataclass
class CyclicCodeCR:
    """Cyclic code over R: exponent k_i against each lifted factor."""

    lift: LiftedFactorization
    k: tuple[int, ...]


def make_code_cr(lift: LiftedFactorization, k) -> CyclicCodeCR:
    k = tuple(k)
    if len(k) != len(lift.factors):
        raise ValueError("exponent vector length does not match factor count")
    if any(ki < 0 or ki > lift.t for ki in k):
        raise ValueError(f"exponents must lie in [0, {lift.t}]")
    return CyclicCodeCR(lift, k)


def cardinality(c: CyclicCodeCR) -> int:
    """|C| = (q^2)^(sum (t - k_i) deg f_i)."""
    lift = c.lift
    exp = sum(
        (lift.t - ki) * f.degree for ki, f in zip(c.k, lift.residues)
    )
    return lift.field.size**exp


def generator_poly(c: CyclicCodeCR) -> fpoly.Poly:
    """prod f_i^{k_i} reduced mod x^n - 1 over R."""
    lift = c.lift
    ring = lift.ring
    gen = fpoly.constant(ring, ring.one)
    for ki, f in zip(c.k, lift.factors):
        if ki:
            gen = gen * f**ki
    xn1 = fpoly.xn_minus_1(ring, lift.n)
    return gen % xn1


def hermitian_dual(c: CyclicCodeCR) -> CyclicCodeCR:
    """Exponents of C-perp-H: k'_j = t - k_{j-hat}."""
    lift = c.lift
    perm = lift.dagger_perm
    k2 = tuple(lift.t - c.k[perm[j]] for j in range(len(c.k)))
    return CyclicCodeCR(lift, k2)


def euclidean_dual(c: CyclicCodeCR) -> CyclicCodeCR:
    """Exponents of C-perp-E via the star permutation; gated on r0^2 = 1."""
    lift = c.lift
    perm = star_perm(lift)
    k2 = tuple(lift.t - c.k[perm[j]] for j in range(len(c.k)))
    return CyclicCodeCR(lift, k2)


def is_hermitian_self_dual(c: CyclicCodeCR) -> bool:
    perm = c.lift.dagger_perm
    t = c.lift.t
    return all(ki + c.k[perm[i]] == t for i, ki in enumerate(c.k))


def _validate_sd_args(q: int, n: int, t: int) -> None:
    if t < 2:
        raise NilpotencyTooSmall(f"need t >= 2, got {t}")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")


def self_dual_exists(q: int, n: int, t: int) -> bool:
    """Hermitian self-dual cyclic codes over R exist iff t is even."""
    _validate_sd_args(q, n, t)
    return t % 2 == 0


def count_self_dual(q: int, n: int, t: int) -> int:
    """(t+1)^|Lambda| for even t, else 0."""
    _validate_sd_args(q, n, t)
    if t % 2:
        return 0
    _, lam = scrim.count_direct(q, n)
    return (t + 1) ** lam


def enumerate_self_dual(q: int, n: int, t: int, cap: int | None = None):
    """All self-dual codes: self-dagger factors at t/2, each dagger pair
    at (e, t - e) for e in 0..t."""
    total = count_self_dual(q, n, t)
    if total == 0:
        return []
    if total > budgets.enumeration_cap(cap):
        raise EnumerationTooLarge(f"{total} codes exceed the enumeration budget")
    lift = hensel_lift(q, n, t)
    perm = lift.dagger_perm
    fixed = [i for i in range(len(perm)) if perm[i] == i]
    pairs = [(i, perm[i]) for i in range(len(perm)) if i < perm[i]]
    out = []
    for combo in itertools.product(range(t + 1), repeat=len(pairs)):
        k = [0] * len(perm)
        for i in fixed:
            k[i] = t // 2
        for (i, j), e in zip(pairs, combo):
            k[i] = e
            k[j] = t - e
        out.append(CyclicCodeCR(lift, tuple(k)))
    if len(out) != total:
        raise InternalCheckFailed("self-dual enumeration count mismatch")
    return out


def _span_cardinality(rows, ring: ChainRing) -> int:
    """Cardinality of the R-span of the rows by valuation elimination:
    pick the min-valuation entry per column as pivot, normalize it to a
    pure u-power, clear the column, and multiply the column sizes."""
    t = ring.t
    rows = [list(r) for r in rows]
    active = set(range(len(rows)))
    exp_total = 0
    n_cols = len(rows[0]) if rows else 0
    for col in range(n_cols):
        best, best_v = None, t
        for ri in active:
            v = ring.val(rows[ri][col])
            if v < best_v:
                best, best_v = ri, v
        if best is None or best_v == t:
            continue
        active.discard(best)
        unit = ring.shift_down(rows[best][col], best_v)
        unit_inv = ring.inv(unit)
        rows[best] = [ring.mul(x, unit_inv) for x in rows[best]]
        for ri in active:
            e = rows[ri][col]
            if ring.val(e) == t:
                continue
            factor = ring.shift_down(e, best_v)
            rows[ri] = [
                ring.sub(x, ring.mul(factor, y))
                for x, y in zip(rows[ri], rows[best])
            ]
        exp_total += t - best_v
    for ri in active:
        if any(ring.val(x) != t for x in rows[ri]):
            raise InternalCheckFailed("elimination left a nonzero row")
    return ring.spec.size**exp_total


def codeword_duality_oracle(c: CyclicCodeCR, cap: int | None = None) -> bool:
    """Ground-truth self-duality check from raw codewords: all n^2 shift
    pairs Hermitian-orthogonal, and the independently computed |C|
    satisfies |C|^2 = (q^2)^(t n)."""
    lift = c.lift
    ring, spec, n, t = lift.ring, lift.field, lift.n, lift.t
    if spec.size ** (t * n) > budgets.oracle_cap(cap):
        raise OracleTooLarge("code space exceeds the oracle budget")
    gen = generator_poly(c)
    base = list(gen.coeffs) + [ring.zero] * (n - len(gen.coeffs))
    shifts = [base[-i:] + base[:-i] if i else list(base) for i in range(n)]

    orthogonal = True
    for i in range(n):
        for j in range(n):
            acc = ring.zero
            for a, b in zip(shifts[i], shifts[j]):
                acc = ring.add(acc, ring.mul(a, ring.conjugate(b)))
            if acc != ring.zero:
                orthogonal = False
                break
        if not orthogonal:
            break

    card = _span_cardinality(shifts, ring)
    if card != cardinality(c):
        raise InternalCheckFailed(
            "span cardinality disagrees with the exponent formula"
        )
    return orthogonal and card * card == spec.size ** (t * n)

"""Factorization of x^n - 1 over F_{q^2} into SCRIM factors and CRIM pairs.

A q^2-cyclotomic coset mod n indexes one irreducible factor (the minimal
polynomial of alpha^rep); the coset is SCRIM exactly when it absorbs
multiplication by -q. Three counting paths are computed side by side: the
explicit factorization, the divisor-sum formulas weighted by lambda(q, d),
and the recursive reduction (2-part of n, then dropping primes whose
ord_l(q) has 2-adic valuation != 1). Reports carry all counts so callers
can surface disagreement instead of trusting a single route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import fpoly, gf, numtheory
from .errors import EvenInput, InternalCheckFailed, NotCoprime


@dataclass(frozen=True)
class Coset:
    """Orbit of rep under multiplication by q^2 modulo n."""

    n: int
    rep: int
    members: tuple[int, ...]


@dataclass
class FactorizationReport:
    """Omega, Lambda, and the per-method counts for x^n - 1 over F_{q^2}."""

    q: int
    n: int
    field: gf.FieldSpec
    omega: tuple[fpoly.Poly, ...]
    lambda_pairs: tuple[tuple[fpoly.Poly, fpoly.Poly], ...]
    counts_by_method: dict
    factors_by_rep: tuple[tuple[int, fpoly.Poly], ...]
    dagger_perm: tuple[int, ...]

    def counts_agree(self) -> bool:
        c = self.counts_by_method
        return (
            c["explicit"]["omega"]
            == c["direct"]["omega"]
            == c["recursive"]["omega"]
        ) and c["explicit"]["lambda"] == c["direct"]["lambda"]

    def all_factors(self) -> tuple[fpoly.Poly, ...]:
        return tuple(f for _, f in self.factors_by_rep)


def _check_coprime(q: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")


def coset_partition(q: int, n: int) -> list[Coset]:
    """q^2-cyclotomic cosets mod n, sorted by minimal representative."""
    _check_coprime(q, n)
    qsq = q * q % n if n > 1 else 0
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        members = []
        j = i
        while not seen[j]:
            seen[j] = True
            members.append(j)
            j = j * qsq % n
        out.append(Coset(n, i, tuple(sorted(members))))
    return out


def is_scrim_coset(c: Coset, q: int, n: int | None = None) -> bool:
    """True iff the coset equals its image under multiplication by -q."""
    n = c.n if n is None else n
    return (-q * c.rep) % n in c.members


def _minimal_poly(ctx, alpha_pows, members, spec):
    """prod_{j in members} (x - alpha^j), with coefficients descended."""
    big = ctx.big
    coeffs = [big.one]
    for j in members:
        root = alpha_pows[j]
        new = [big.zero] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = big.add(new[i + 1], c)
            new[i] = big.sub(new[i], big.mul(c, root))
        coeffs = new
    down = []
    for c in coeffs:
        if big.pow(c, spec.size) != c:
            raise InternalCheckFailed(
                "minimal polynomial coefficient is not fixed by x -> x^(q^2)"
            )
        down.append(ctx.descend(c))
    return fpoly.Poly(spec, down)


def factor_xn_minus_1(q: int, n: int) -> FactorizationReport:
    """Full factorization of x^n - 1 over F_{q^2}, classified into Omega
    and Lambda, with explicit / direct / recursive counts attached."""
    _check_coprime(q, n)
    spec = gf.field_for_q(q)
    ctx, alpha = gf.primitive_nth_root(spec, n)
    big = ctx.big
    alpha_pows = [big.one]
    for _ in range(n - 1):
        alpha_pows.append(big.mul(alpha_pows[-1], alpha))

    cosets = coset_partition(q, n)
    rep_of = {}
    for c in cosets:
        for j in c.members:
            rep_of[j] = c.rep
    factor_of = {
        c.rep: _minimal_poly(ctx, alpha_pows, c.members, spec) for c in cosets
    }

    omega = []
    pairs = []
    index_of = {c.rep: i for i, c in enumerate(cosets)}
    perm = [0] * len(cosets)
    for i, c in enumerate(cosets):
        partner = rep_of[(-q * c.rep) % n]
        perm[i] = index_of[partner]
        if partner == c.rep:
            omega.append(factor_of[c.rep])
        elif c.rep < partner:
            pairs.append((factor_of[c.rep], factor_of[partner]))

    d_omega, d_lambda = count_direct(q, n)
    counts = {
        "explicit": {"omega": len(omega), "lambda": len(pairs)},
        "direct": {"omega": d_omega, "lambda": d_lambda},
        "recursive": {"omega": count_recursive(q, n)},
    }
    return FactorizationReport(
        q=q,
        n=n,
        field=spec,
        omega=tuple(omega),
        lambda_pairs=tuple(pairs),
        counts_by_method=counts,
        factors_by_rep=tuple((c.rep, factor_of[c.rep]) for c in cosets),
        dagger_perm=tuple(perm),
    )


def count_direct(q: int, n: int) -> tuple[int, int]:
    """(|Omega|, |Lambda|) by the divisor sums weighted with lambda(q, d)."""
    _check_coprime(q, n)
    omega = 0
    twice_lambda = 0
    for d in numtheory.divisors(n):
        lam = numtheory.lambda_predicate(q, d)
        term = numtheory.euler_phi(d) // numtheory.mult_order(q * q, d)
        if lam:
            omega += term
        else:
            twice_lambda += term
    if twice_lambda % 2:
        raise InternalCheckFailed("non-SCRIM cosets failed to pair up")
    return omega, twice_lambda // 2


def count_recursive(q: int, n: int) -> int:
    """|Omega| by the structural reduction: split off the 2-part of n,
    drop odd primes l with 2-adic valuation of ord_l(q) != 1, and sum
    phi(d)/ord_d(q^2) over divisors of what remains."""
    _check_coprime(q, n)
    m = 0
    n_odd = n
    while n_odd % 2 == 0:
        n_odd //= 2
        m += 1
    if m == 0:
        part2 = 1
    else:
        r = numtheory.two_adic_valuation(q + 1)
        part2 = 2 ** min(m, r)
    kept = 1
    for l, e in numtheory.factorize(n_odd).factors:
        if numtheory.two_adic_valuation(numtheory.mult_order(q, l)) == 1:
            kept *= l**e
    total = sum(
        numtheory.euler_phi(d) // numtheory.mult_order(q * q, d)
        for d in numtheory.divisors(kept)
    )
    return part2 * total


def _check_odd(n: int) -> None:
    if n % 2 == 0:
        raise EvenInput(f"n must be odd, got {n}")


def all_scrim(q: int, n: int) -> bool:
    """True iff every irreducible factor of x^n - 1 over F_{q^2} is SCRIM:
    each prime l | n has ord_l(q^2) odd and ord_l(q) even."""
    _check_odd(n)
    _check_coprime(q, n)
    for l in numtheory.factorize(n).primes():
        if numtheory.mult_order(q * q, l) % 2 == 0:
            return False
        if numtheory.mult_order(q, l) % 2 == 1:
            return False
    return True


def only_trivial_scrim(q: int, n: int) -> bool:
    """True iff x - 1 is the only SCRIM factor of x^n - 1 over F_{q^2}:
    each prime l | n has ord_l(q^2) even or ord_l(q) odd."""
    _check_odd(n)
    _check_coprime(q, n)
    for l in numtheory.factorize(n).primes():
        if numtheory.mult_order(q * q, l) % 2 == 1 and (
            numtheory.mult_order(q, l) % 2 == 0
        ):
            return False
    return True

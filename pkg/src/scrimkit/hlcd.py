"""Hermitian complementary-dual cyclic codes over F_{q^2}.

A cyclic code of length n = p^nu n' is a monic divisor g of x^n - 1. The
LCD property is decided three ways: gcd(g, h+) = 1 with h = (x^n - 1)/g
(method A), the self-dagger plus full-multiplicity criterion against the
factors of x^n' - 1 (method B), and a budget-gated row-space intersection
over F_{q^2} (method C). Any disagreement is an internal error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import budgets, fpoly, numtheory, scrim
from .errors import EnumerationTooLarge, InternalCheckFailed, OracleTooLarge


@dataclass
class CyclicCodeGF:
    """Cyclic code over F_{q^2} given by its monic generator divisor."""

    q: int
    n: int
    generator: fpoly.Poly

    @property
    def dimension(self) -> int:
        return self.n - self.generator.degree


def make_code(q: int, n: int, generator: fpoly.Poly) -> CyclicCodeGF:
    """Validated code: generator must be monic and divide x^n - 1."""
    if not generator.is_monic():
        raise ValueError("generator must be monic")
    if not (fpoly.xn_minus_1(generator.ring, n) % generator).is_zero():
        raise ValueError("generator does not divide x^n - 1")
    return CyclicCodeGF(q, n, generator)


def split_repeated_part(q: int, n: int) -> tuple[int, int, int]:
    """(p, nu, n') with n = p^nu n' and gcd(n', p) = 1."""
    p, _ = numtheory.prime_power_split(q)
    nu = 0
    n_prime = n
    while n_prime % p == 0:
        n_prime //= p
        nu += 1
    return p, nu, n_prime


def hermitian_dual_generator(c: CyclicCodeGF) -> fpoly.Poly:
    """h+(x) with h = (x^n - 1)/g: the generator of the Hermitian dual."""
    g = c.generator
    h = fpoly.xn_minus_1(g.ring, c.n) // g
    return fpoly.conjugate_reciprocal_dagger(h).monic()


def _method_a(c: CyclicCodeGF) -> bool:
    return fpoly.gcd(c.generator, hermitian_dual_generator(c)).degree == 0


def _multiplicity(g: fpoly.Poly, f: fpoly.Poly) -> int:
    count = 0
    while True:
        quot, rem = divmod(g, f)
        if not rem.is_zero():
            return count
        count += 1
        g = quot


def _method_b(c: CyclicCodeGF, report: scrim.FactorizationReport, pnu: int) -> bool:
    g = c.generator
    if fpoly.conjugate_reciprocal_dagger(g).monic() != g:
        return False
    for _, f in report.factors_by_rep:
        if _multiplicity(g, f) not in (0, pnu):
            return False
    return True


def _rref(rows, spec):
    """Row-reduce in place over the field; returns pivot column list."""
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(n_cols):
        piv = next(
            (i for i in range(r, len(rows)) if rows[i][col] != spec.zero), None
        )
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = spec.inv(rows[r][col])
        rows[r] = [spec.mul(x, inv) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != spec.zero:
                f = rows[i][col]
                rows[i] = [
                    spec.sub(x, spec.mul(f, y)) for x, y in zip(rows[i], rows[r])
                ]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return pivots


def _rank(rows, spec) -> int:
    return len(_rref([list(r) for r in rows], spec))


def _shift_rows(poly_coeffs, n, k, spec):
    """Coefficient rows of x^i * poly mod x^n - 1 for i < k."""
    base = list(poly_coeffs) + [spec.zero] * (n - len(poly_coeffs))
    return [base[-i:] + base[:-i] if i else list(base) for i in range(k)]


def method_c_intersection(c: CyclicCodeGF, cap: int | None = None) -> bool:
    """Oracle: C and its Hermitian dual intersect trivially, computed from
    raw row spaces. The dual basis is the right null space of the
    conjugated generator matrix, so this route never uses h+."""
    limit = budgets.INTERSECTION_DIM_CAP if cap is None else cap
    if c.n > limit:
        raise OracleTooLarge(f"intersection oracle capped at n <= {limit}")
    spec = c.generator.ring
    n, k = c.n, c.dimension
    if k == 0:
        return True
    gen_rows = _shift_rows(c.generator.coeffs, n, k, spec)
    conj_rows = [[spec.conjugate(x) for x in row] for row in gen_rows]
    work = [list(r) for r in conj_rows]
    pivots = _rref(work, spec)
    free_cols = [j for j in range(n) if j not in pivots]
    null_basis = []
    for fc in free_cols:
        vec = [spec.zero] * n
        vec[fc] = spec.one
        for r, pc in enumerate(pivots):
            vec[pc] = spec.neg(work[r][fc])
        null_basis.append(vec)
    if len(null_basis) != n - k:
        raise InternalCheckFailed("dual basis has wrong dimension")
    return _rank(gen_rows + null_basis, spec) == n


def lcd_methods(c: CyclicCodeGF, report: scrim.FactorizationReport | None = None):
    """{'A': bool, 'B': bool, 'C': bool or None (over budget)}."""
    _, nu, n_prime = split_repeated_part(c.q, c.n)
    if report is None:
        report = scrim.factor_xn_minus_1(c.q, n_prime)
    p, _ = numtheory.prime_power_split(c.q)
    out = {
        "A": _method_a(c),
        "B": _method_b(c, report, p**nu),
    }
    try:
        out["C"] = method_c_intersection(c)
    except OracleTooLarge:
        out["C"] = None
    return out


def is_hermitian_lcd(
    c: CyclicCodeGF, report: scrim.FactorizationReport | None = None
) -> bool:
    """True iff C meets its Hermitian dual trivially; every method that
    ran must agree, else InternalCheckFailed."""
    results = lcd_methods(c, report)
    votes = {v for v in results.values() if v is not None}
    if len(votes) != 1:
        raise InternalCheckFailed(f"LCD methods disagree: {results}")
    return votes.pop()


def count_hermitian_lcd(q: int, n: int) -> int:
    """2^(|Omega(n')| + |Lambda(n')|), independent of the p-power in n."""
    _, _, n_prime = split_repeated_part(q, n)
    omega, lam = scrim.count_direct(q, n_prime)
    return 2 ** (omega + lam)


def enumerate_hermitian_lcd(
    q: int, n: int, cap: int | None = None
) -> list[CyclicCodeGF]:
    """All Hermitian LCD cyclic codes of length n over F_{q^2}: factors of
    x^n' - 1 enter g with exponent 0 or p^nu, pairs enter whole."""
    total = count_hermitian_lcd(q, n)
    if total > budgets.enumeration_cap(cap):
        raise EnumerationTooLarge(f"{total} codes exceed the enumeration budget")
    p, nu, n_prime = split_repeated_part(q, n)
    report = scrim.factor_xn_minus_1(q, n_prime)
    spec = report.field
    blocks = [f for f in report.omega] + [g * gd for g, gd in report.lambda_pairs]
    out = []
    for mask in itertools.product((0, 1), repeat=len(blocks)):
        gen = fpoly.constant(spec, spec.one)
        for take, block in zip(mask, blocks):
            if take:
                gen = gen * block ** (p**nu)
        out.append(CyclicCodeGF(q, n, gen))
    if len(out) != total:
        raise InternalCheckFailed("enumeration count mismatch")
    return out

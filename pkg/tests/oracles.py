"""Independent reference implementations and frozen expected values.

Everything here is deliberately naive (power scans, set orbits, literal
tables) so the main library is checked against arithmetic it does not
share. Frozen values were computed once from these references and pinned.
"""

from __future__ import annotations

import itertools
import math

# Deterministic moduli the field builder must reproduce (low-degree-first
# lexicographic scan; degree-6 entry verified by exhaustive scan below it).
F4_MODULUS = (1, 1, 1)
F9_MODULUS = (1, 0, 1)
F64_MODULUS = (1, 0, 0, 0, 0, 1, 1)

# GF(4) multiplication with elements indexed 0, 1, a, a+1 and a^2 = a + 1.
F4_MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)


def f4_index(elem) -> int:
    return elem[0] + 2 * elem[1]


def f9_index(elem) -> int:
    return elem[0] + 3 * elem[1]


def f9_mul_index(a: int, b: int) -> int:
    """GF(9) as c0 + 3*c1 with w^2 = -1."""
    a0, a1 = a % 3, a // 3
    b0, b1 = b % 3, b // 3
    return (a0 * b0 + 2 * a1 * b1) % 3 + 3 * ((a0 * b1 + a1 * b0) % 3)


def naive_order(x, mul, one) -> int:
    acc = x
    for s in range(1, 10000):
        if acc == one:
            return s
        acc = mul(acc, x)
    raise AssertionError("order scan exhausted")


def naive_mult_order(a: int, n: int) -> int:
    if n == 1:
        return 1
    acc = a % n
    for s in range(1, 2 * n + 1):
        if acc == 1:
            return s
        acc = acc * a % n
    raise AssertionError("order scan exhausted")


def naive_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def naive_lambda(q: int, d: int, e_cap: int = 4001) -> int:
    """Definitional scan far past any order-based window."""
    if d <= 2:
        return 1
    for e in range(1, e_cap, 2):
        if (pow(q, e, d) + 1) % d == 0:
            return 1
    return 0


def naive_cosets(q: int, n: int) -> set[frozenset[int]]:
    out = set()
    for i in range(n):
        orbit = set()
        j = i
        while j not in orbit:
            orbit.add(j)
            j = j * q * q % n
        out.add(frozenset(orbit))
    return out


# Hand-verified Omega counts (anchor values, frozen).
OMEGA_COUNTS = {(5, 161): 9, (3, 133): 17, (3, 35): 3, (3, 7): 3}
EVEN_INT_Q3 = (1, 2, 4, 4, 4, 4, 4)  # |Omega(9, 2^m)| for m = 0..6
EVEN_INT_Q5 = (1, 2, 2, 2)  # |Omega(25, 2^m)| for m = 0..3

# Frozen explicit factorizations (canonical renderings).
OMEGA_2_3 = ("x + 1", "x + (w)", "x + (w + 1)")
CUBIC_PAIR_2_7 = ("x^3 + x^2 + 1", "x^3 + x + 1")
HENSEL_2_3_2 = ("x + (1 + u)", "x + (w + (w)*u)", "x + (w + 1 + (w + 1)*u)")
R0_2_2 = "1 + u"


def rand_elem(ring, rng):
    """Uniform random ring element by structural dispatch."""
    if hasattr(ring, "t") and hasattr(ring, "spec"):
        return tuple(rand_elem(ring.spec, rng) for _ in range(ring.t))
    if hasattr(ring, "degree"):
        return tuple(rng.randrange(ring.p) for _ in range(ring.degree))
    return rng.randrange(ring.p)


def codeword_lcd_oracle(spec, n: int, gen_coeffs, cap: int = 5000) -> bool:
    """Ground-truth Hermitian LCD test by enumerating every codeword.

    C is the row space of the k cyclic shifts of the generator; the code
    is LCD iff no nonzero codeword is orthogonal to all rows. Returns
    None when the codeword count exceeds cap.
    """
    k = n - (len(gen_coeffs) - 1)
    if spec.size**k > cap:
        return None
    base = list(gen_coeffs) + [spec.zero] * (n - len(gen_coeffs))
    rows = [base[-i:] + base[:-i] if i else list(base) for i in range(k)]
    for combo in itertools.product(list(spec.iter_elements()), repeat=k):
        word = [spec.zero] * n
        for c, row in zip(combo, rows):
            if c == spec.zero:
                continue
            for idx in range(n):
                word[idx] = spec.add(word[idx], spec.mul(c, row[idx]))
        if all(x == spec.zero for x in word):
            continue
        in_dual = True
        for row in rows:
            acc = spec.zero
            for x, y in zip(row, word):
                acc = spec.add(acc, spec.mul(x, spec.conjugate(y)))
            if acc != spec.zero:
                in_dual = False
                break
        if in_dual:
            return False
    return True

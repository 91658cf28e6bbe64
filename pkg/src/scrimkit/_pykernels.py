"""Pure-Python fallback for the dense polynomial kernels.

Coefficient vectors are little-endian sequences of residues in [0, p).
The compiled twin in _ckernels.pyx implements the same contracts; the
test suite enforces parity between the two.
"""


def mul_mod(a, b, p):
    """Convolution of a and b, coefficients reduced mod p; length na+nb-1."""
    na, nb = len(a), len(b)
    if na == 0 or nb == 0:
        return ()
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] += ai * b[j]
    return tuple(c % p for c in out)


def rem_mod(a, m, p):
    """Remainder of a modulo monic m, padded to fixed width deg(m)."""
    dm = len(m) - 1
    r = list(a)
    for i in range(len(r) - 1, dm - 1, -1):
        c = r[i] % p
        if c:
            base = i - dm
            for j in range(dm):
                r[base + j] -= c * m[j]
    out = [c % p for c in r[:dm]]
    out.extend([0] * (dm - len(out)))
    return tuple(out)


def mulrem_mod(a, b, m, p):
    """Fused multiply-then-reduce: rem_mod(mul_mod(a, b), m)."""
    return rem_mod(mul_mod(a, b, p), m, p)


def add_mod(a, b, p):
    """Pointwise sum mod p, padded to the longer input."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i in range(len(b)):
        out[i] = (out[i] + b[i]) % p
    return tuple(out)


def sub_mod(a, b, p):
    """Pointwise difference mod p, padded to the longer input."""
    n = max(len(a), len(b))
    return tuple(
        ((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
        for i in range(n)
    )

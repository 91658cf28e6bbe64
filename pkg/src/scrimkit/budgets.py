"""Size budgets guarding the expensive verification paths.

Defaults are deliberately conservative; callers may pass explicit
overrides, and the environment variable SCRIMKIT_BUDGET (an integer,
bytes of state allowed) raises the oracle and enumeration caps in one go.
"""

import os

# cap on p^(2e) when constructing the base field F_{q^2}
BASE_FIELD_SIZE_CAP = 2**64

# cap on (q^2)^m for the big extension holding the n-th roots of unity;
# the stock agreement sweep needs fields up to 2^246
EXT_FIELD_SIZE_CAP = 2**4096

# cap on (q^2)^(t*n) for the codeword duality oracle
ORACLE_CODEWORDS_CAP = 2**32

# cap on the number of codes an enumeration may emit
ENUMERATION_CAP = 2**20

# cap on the matrix dimension n for the row-space intersection oracle
INTERSECTION_DIM_CAP = 64


def _env_budget() -> int | None:
    raw = os.environ.get("SCRIMKIT_BUDGET")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None


def oracle_cap(override: int | None = None) -> int:
    """Codeword cap for the duality oracle, largest override winning."""
    if override is not None:
        return override
    return _env_budget() or ORACLE_CODEWORDS_CAP


def enumeration_cap(override: int | None = None) -> int:
    """Cap on enumeration sizes, largest override winning."""
    if override is not None:
        return override
    return _env_budget() or ENUMERATION_CAP

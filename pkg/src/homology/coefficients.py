"""
Coefficient systems for homology: rationals, prime fields, integers.
"""

import re
from dataclasses import dataclass

from sympy import isprime


RATIONALS = 'Q'
INTEGERS = 'Z'
PRIME_FIELD = 'Zp'

_PRIME_PATTERN = re.compile(r'^(?:Z|GF|F)_?\(?(\d+)\)?$')


@dataclass(frozen=True)
class Coefficients:
    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in (RATIONALS, INTEGERS, PRIME_FIELD):
            raise ValueError(f"Unknown coefficient kind: {self.kind}")
        if self.kind == PRIME_FIELD and not isprime(self.p):
            raise ValueError(f"Prime field modulus must be prime, got {self.p}")

    @property
    def is_field(self) -> bool:
        return self.kind != INTEGERS

    def __str__(self):
        if self.kind == PRIME_FIELD:
            return f"Z{self.p}"
        return self.kind


def parse_coefficients(text) -> Coefficients:
    """
    Parse a coefficient descriptor.

    Accepts "Q" / "rationals", "Z" / "integers", and "Z2", "Z_3", "GF(5)" style
    prime fields. Non-prime moduli are rejected.
    """
    if isinstance(text, Coefficients):
        return text
    token = str(text).strip()
    lowered = token.lower()
    if lowered in ('q', 'qq', 'rationals', 'rational'):
        return Coefficients(RATIONALS)
    if lowered in ('z', 'zz', 'integers', 'integer'):
        return Coefficients(INTEGERS)
    match = _PRIME_PATTERN.match(token.upper())
    if match:
        return Coefficients(PRIME_FIELD, int(match.group(1)))
    raise ValueError(f"Unknown coefficients: {text!r}. Supported: 'Q', 'Z', 'Z<p>' with p prime")

"""Brute-force hyper-expansion counting straight from the definition.

A hyper-(b-ary) expansion of n is a finite coefficient list (a0, a1, ...)
with 0 <= ai <= b and sum(ai * b**i) == n. Nothing here uses the digit
recurrence, so it can serve as ground truth for ``stern.s``:

    count_expansions(b, n) == s(b, n + 1)
"""

from __future__ import annotations

from dataclasses import dataclass

from .numeral import check_base


@dataclass(frozen=True)
class HyperExpansion:
    base: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("most significant coefficient must be nonzero")
        if any(not 0 <= a <= self.base for a in self.coeffs):
            raise ValueError("coefficient out of range")

    @property
    def value(self) -> int:
        return sum(a * self.base**i for i, a in enumerate(self.coeffs))

    def __str__(self):
        return ",".join(map(str, self.coeffs))


def _low_digits(b: int, n: int) -> range:
    # a0 must satisfy a0 = n (mod b), 0 <= a0 <= min(b, n)
    return range(n % b, min(b, n) + 1, b)


def count_expansions(base: int, n: int) -> int:
    b = check_base(base)
    if n < 0:
        raise ValueError("n must be nonnegative")
    memo = {0: 1}

    def c(m):
        if m not in memo:
            memo[m] = sum(c((m - a0) // b) for a0 in _low_digits(b, m))
        return memo[m]

    return c(n)


def iter_expansions(base: int, n: int):
    """All expansions of n, lexicographic in the LSB-first coefficient tuple."""
    b = check_base(base)
    if n < 0:
        raise ValueError("n must be nonnegative")

    def walk(m, prefix):
        if m == 0:
            yield prefix
            return
        for a0 in _low_digits(b, m):
            yield from walk((m - a0) // b, prefix + (a0,))

    for coeffs in walk(n, ()):
        yield HyperExpansion(b, coeffs)


def list_expansions(base: int, n: int, cap: int) -> tuple[list[HyperExpansion], bool]:
    """Return (expansions, truncated). At most ``cap`` items are kept."""
    if cap < 1:
        raise ValueError("cap must be positive")
    out = []
    for e in iter_expansions(base, n):
        if len(out) == cap:
            return out, True
        out.append(e)
    return out, False

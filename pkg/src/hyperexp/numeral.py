"""Base-b digit strings, least-significant digit first."""

from __future__ import annotations

from dataclasses import dataclass


def check_base(b: int) -> int:
    if not isinstance(b, int) or isinstance(b, bool) or b < 2:
        raise ValueError(f"base must be an integer >= 2, got {b!r}")
    return b


@dataclass(frozen=True)
class DigitString:
    """Canonical base-b numeral. ``digits[0]`` is the units digit; zero is ``()``."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def canonical(self) -> bool:
        return not self.digits or self.digits[-1] != 0

    def display(self) -> str:
        """Most-significant-first rendering, e.g. ``(1011)_3``."""
        if not self.digits:
            return f"(0)_{self.base}"
        sep = "" if self.base <= 10 else "."
        return "(" + sep.join(str(d) for d in reversed(self.digits)) + f")_{self.base}"


def to_digits(n: int, base: int) -> DigitString:
    check_base(base)
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []
    while n:
        n, r = divmod(n, base)
        out.append(r)
    return DigitString(base, tuple(out))


def value(d: DigitString) -> int:
    n = 0
    for digit in reversed(d.digits):
        n = n * d.base + digit
    return n


def psi(n: int, base: int) -> int:
    """Read the binary digits of n as a base-``base`` numeral."""
    return value(DigitString(base, to_digits(n, 2).digits))


def zero_one_shadow(n: int, base: int) -> int:
    """Clamp every base-b digit of n to min(digit, 1)."""
    return value(DigitString(base, tuple(min(d, 1) for d in to_digits(n, base))))


def shadow_binary(n: int, base: int) -> int:
    # same clamped digits, read in base 2
    return value(DigitString(2, tuple(min(d, 1) for d in to_digits(n, base))))


def is_zero_one(n: int, base: int) -> bool:
    return all(d <= 1 for d in to_digits(n, base))

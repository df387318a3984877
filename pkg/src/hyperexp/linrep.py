"""Integer linear representations  f(n) = w . A[e0] . A[e1] ... A[ed] . v.

Digits are consumed least-significant first, folding the row vector w from
the left. Entries are Python ints, so there is no overflow.

Text format (see README)::

    # comments and blank lines are ignored
    base 2
    dim 2
    A0 1 0 1 1        # d*d entries, row-major
    A1 1 1 0 1
    w 1 0
    v 0 1
"""

from __future__ import annotations

from dataclasses import dataclass

from .numeral import DigitString, check_base, to_digits

Matrix = tuple[tuple[int, ...], ...]


class RepFormatError(ValueError):
    pass


@dataclass(frozen=True)
class LinearRep:
    base: int
    matrices: tuple[Matrix, ...]
    w: tuple[int, ...]
    v: tuple[int, ...]

    def __post_init__(self):
        check_base(self.base)
        mats = tuple(tuple(tuple(int(x) for x in row) for row in m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "w", tuple(int(x) for x in self.w))
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        d = len(self.w)
        if d < 1:
            raise ValueError("dimension must be positive")
        if len(mats) != self.base:
            raise ValueError(f"expected {self.base} matrices, got {len(mats)}")
        if len(self.v) != d:
            raise ValueError("w and v must have the same length")
        for i, m in enumerate(mats):
            if len(m) != d or any(len(row) != d for row in m):
                raise ValueError(f"A{i} is not {d}x{d}")

    @property
    def dim(self) -> int:
        return len(self.w)


def stern_rep(base: int) -> LinearRep:
    b = check_base(base)
    a0 = ((1, 0), (1, 1))
    a1 = ((1, 1), (0, 1))
    a_hi = ((0, 1), (0, 1))
    return LinearRep(b, (a0, a1) + (a_hi,) * (b - 2), (1, 0), (0, 1))


def row_times(row, m):
    d = len(row)
    return tuple(sum(row[i] * m[i][j] for i in range(d)) for j in range(d))


def mat_mul(x, y):
    d = len(x)
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(d)) for j in range(d))
        for i in range(d)
    )


def identity(d: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(d)) for i in range(d))


def evaluate(rep: LinearRep, digits: DigitString | tuple[int, ...] | list[int]) -> int:
    """w . A[d0] ... A[dk] . v for an LSB-first digit sequence."""
    ds = digits.digits if isinstance(digits, DigitString) else tuple(digits)
    if isinstance(digits, DigitString) and digits.base != rep.base:
        raise ValueError("digit string base does not match representation")
    mats = rep.matrices
    row = rep.w
    for e in ds:
        if not 0 <= e < rep.base:
            raise ValueError(f"digit {e} out of range for base {rep.base}")
        row = row_times(row, mats[e])
    return sum(x * y for x, y in zip(row, rep.v))


def evaluate_at(rep: LinearRep, n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return evaluate(rep, to_digits(n, rep.base))


def partial_products(rep: LinearRep, digits) -> list[Matrix]:
    """Prefix products A[d0], A[d0]A[d1], ... (identity first)."""
    out = [identity(rep.dim)]
    for e in digits:
        out.append(mat_mul(out[-1], rep.matrices[e]))
    return out


def parse_rep(text: str) -> LinearRep:
    fields: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if key in fields:
            raise RepFormatError(f"line {lineno}: duplicate key {key!r}")
        try:
            fields[key] = [int(tok) for tok in rest]
        except ValueError:
            raise RepFormatError(f"line {lineno}: non-integer entry") from None
    for key in ("base", "dim", "w", "v"):
        if key not in fields:
            raise RepFormatError(f"missing {key!r}")
    if len(fields["base"]) != 1 or len(fields["dim"]) != 1:
        raise RepFormatError("'base' and 'dim' take a single integer")
    b, d = fields["base"][0], fields["dim"][0]
    if b < 2 or d < 1:
        raise RepFormatError("need base >= 2 and dim >= 1")
    expected = {"base", "dim", "w", "v"} | {f"A{i}" for i in range(b)}
    unknown = set(fields) - expected
    if unknown:
        raise RepFormatError(f"unexpected keys: {', '.join(sorted(unknown))}")
    mats = []
    for i in range(b):
        flat = fields.get(f"A{i}")
        if flat is None:
            raise RepFormatError(f"missing 'A{i}'")
        if len(flat) != d * d:
            raise RepFormatError(f"A{i} needs {d * d} entries, got {len(flat)}")
        mats.append(tuple(tuple(flat[r * d:(r + 1) * d]) for r in range(d)))
    if len(fields["w"]) != d or len(fields["v"]) != d:
        raise RepFormatError(f"w and v need {d} entries")
    return LinearRep(b, tuple(mats), tuple(fields["w"]), tuple(fields["v"]))


def format_rep(rep: LinearRep) -> str:
    lines = [f"base {rep.base}", f"dim {rep.dim}"]
    for i, m in enumerate(rep.matrices):
        lines.append(f"A{i} " + " ".join(str(x) for row in m for x in row))
    lines.append("w " + " ".join(map(str, rep.w)))
    lines.append("v " + " ".join(map(str, rep.v)))
    return "\n".join(lines) + "\n"

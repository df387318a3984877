"""Records, the piecewise-linear envelope h, the power-law bound H, and c_b.

Knots: t_k = (b**k - 1) / (b**2 - 1), so t_0 = 0, t_1 = 1/(b+1), t_2 = 1 and
t_{k+2} = b**2 t_k + 1. The envelope h interpolates (t_k, F_k) linearly; on
[t_k, t_{k+1}]

    h(x) = F_{k-1} (b+1)/b**k * x - F_{k-1} (b**k - 1)/(b**k (b-1)) + F_k

with F_{-1} = 1 so that the first segment needs no special case.

Everything involving h is exact (``fractions.Fraction``). H and c_b are
evaluated with mpmath interval arithmetic, which carries a rigorous error
radius along with the midpoint.
"""

from __future__ import annotations

import bisect
import contextlib
import math
import random
import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp, mpf, nstr

from . import linrep
from .numeral import check_base, is_zero_one, psi, shadow_binary
from .report import Report
from .stern import MemoTable, memo_for, s_range

DEFAULT_DPS = 40
# machine-precision slack for desk-scale ratio scans
FLOAT_SLACK = 1e-12


def fib(k: int) -> int:
    if k < -1:
        raise ValueError("fib is defined for k >= -1")
    if k == -1:
        return 1
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def tilde_knot(base: int, k: int) -> Fraction:
    b = check_base(base)
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(b**k - 1, b * b - 1)


def record_position(base: int, k: int) -> int:
    """Smallest argmax of s_b on [b**(k-2), b**(k-1))."""
    b = check_base(base)
    if k < 2:
        raise ValueError("record positions start at k = 2")
    a = Fraction(b**k - 1, b * b - 1) + Fraction(1 - (-1) ** k, 2) * Fraction(b, b + 1)
    assert a.denominator == 1
    return int(a)


def record_digits(base: int, k: int) -> tuple[int, ...]:
    """LSB-first digits of a_k built from the pattern (10)^(l-1)1 / (10)^(l-1)11."""
    ell, odd = divmod(k, 2)
    msb_first = [1, 0] * (ell - 1) + ([1, 1] if odd else [1])
    return tuple(reversed(msb_first))


class Envelope:
    """Lazily extended knot list for h in one base.

    Extension takes a lock; lookups read the lists after extension, so one
    instance can be shared across threads.
    """

    def __init__(self, base: int):
        self.base = b = check_base(base)
        self.knots: list[Fraction] = [Fraction(0), Fraction(1, b + 1)]
        self.fibs: list[int] = [0, 1]
        self._lock = threading.Lock()
        self._segments: dict[int, tuple[Fraction, Fraction]] = {}

    def _extend(self, count: int):
        with self._lock:
            b2 = self.base**2
            while len(self.knots) < count:
                k = len(self.knots)
                self.knots.append(b2 * self.knots[k - 2] + 1)
                self.fibs.append(self.fibs[k - 1] + self.fibs[k - 2])

    def knot(self, k: int) -> Fraction:
        if len(self.knots) <= k:
            self._extend(k + 1)
        return self.knots[k]

    def value_at_knot(self, k: int) -> int:
        if len(self.fibs) <= k:
            self._extend(k + 1)
        return self.fibs[k]

    def segment_index(self, x) -> int:
        """k with t_k <= x < t_{k+1}."""
        if x < 0:
            raise ValueError("h is defined for x >= 0")
        while self.knots[-1] <= x:
            self._extend(len(self.knots) + 8)
        return bisect.bisect_right(self.knots, x) - 1

    def segment(self, k: int) -> tuple[Fraction, Fraction]:
        """(slope, intercept) of h on [t_k, t_{k+1}]."""
        seg = self._segments.get(k)
        if seg is None:
            b = self.base
            bk = b**k
            f_prev = fib(k - 1) if k == 0 else self.value_at_knot(k - 1)
            slope = Fraction(f_prev * (b + 1), bk)
            intercept = self.value_at_knot(k) - Fraction(f_prev * (bk - 1), bk * (b - 1))
            seg = self._segments[k] = (slope, intercept)
        return seg

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        slope, intercept = self.segment(self.segment_index(x))
        return slope * x + intercept


_envelopes: dict[int, Envelope] = {}
_envelopes_lock = threading.Lock()


def envelope_for(base: int) -> Envelope:
    with _envelopes_lock:
        env = _envelopes.get(base)
        if env is None:
            env = _envelopes[base] = Envelope(base)
        return env


def h_eval(base: int, x) -> Fraction:
    return envelope_for(check_base(base))(x)


def h_slope(base: int, k: int) -> Fraction:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return envelope_for(check_base(base)).segment(k)[0]


# --- high precision -----------------------------------------------------------

# iv precision is process-global; serialise changes to it
_iv_lock = threading.RLock()


@contextlib.contextmanager
def _iv_dps(dps: int):
    with _iv_lock:
        saved = iv.prec
        iv.dps = max(dps, iv.dps)
        try:
            yield
        finally:
            iv.prec = saved


@dataclass(frozen=True)
class HighPrecisionReal:
    """Midpoint with a rigorous absolute error radius."""

    mid: mpf
    rad: mpf

    @classmethod
    def from_interval(cls, x) -> HighPrecisionReal:
        lo, hi = x._mpi_
        with mp.workprec(iv.prec + 20):
            lo, hi = mp.make_mpf(lo), mp.make_mpf(hi)
            mid = (lo + hi) / 2
            # widen by one extra-precision ulp so the radius stays an upper bound
            rad = max(hi - mid, mid - lo) * (1 + mpf(2) ** -(iv.prec + 10))
            return cls(mid, rad)

    def __float__(self):
        return float(self.mid)

    def format(self, digits: int = 20) -> str:
        with mp.workdps(digits + 10):
            return nstr(self.mid, digits, min_fixed=-30, max_fixed=30)

    def __str__(self):
        return self.format()

    @property
    def rel_err(self) -> mpf:
        return abs(self.rad / self.mid) if self.mid else self.rad


def _to_iv(x):
    if isinstance(x, HighPrecisionReal):
        return iv.mpf([x.mid - x.rad, x.mid + x.rad])
    if isinstance(x, float):
        x = Fraction(x)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    return iv.mpf(x)


def _exponent(b: int):
    # log_b(phi) as an interval
    phi = (1 + iv.sqrt(5)) / 2
    return iv.log(phi) / iv.log(b)


def _H_iv(b: int, x):
    x = _to_iv(x)
    if not x.a > 0:
        raise ValueError("H is defined for x > 0")
    e = _exponent(b)
    return iv.exp(e * (iv.log(b * b - 1) + iv.log(x))) / iv.sqrt(5)


def H_eval(base: int, x, dps: int = DEFAULT_DPS) -> HighPrecisionReal:
    """((b^2-1) x)^(log_b phi) / sqrt(5)."""
    b = check_base(base)
    with _iv_dps(dps):
        return HighPrecisionReal.from_interval(_H_iv(b, x))


def maximal_order_constant(base: int, dps: int = DEFAULT_DPS) -> HighPrecisionReal:
    """c_b = phi^(log_b(b^2-1)) / sqrt(5).

    Also evaluates the equivalent form (b^2-1)^(log_b phi) / sqrt(5) and
    raises ArithmeticError if the two enclosures are disjoint.
    """
    b = check_base(base)
    with _iv_dps(dps):
        phi = (1 + iv.sqrt(5)) / 2
        c = iv.exp(iv.log(phi) * iv.log(b * b - 1) / iv.log(b)) / iv.sqrt(5)
        other = _H_iv(b, 1)
        if c.b < other.a or other.b < c.a:
            raise ArithmeticError("closed forms of c_b disagree")
        return HighPrecisionReal.from_interval(c)


def H_float(base: int):
    """Machine-precision H for bulk scans: m -> c_b * m**(log_b phi)."""
    b = check_base(base)
    c = float(maximal_order_constant(b))
    e = math.log((1 + math.sqrt(5)) / 2) / math.log(b)
    return lambda m: c * m**e


# --- verification scans -------------------------------------------------------


def _segment_int_form(env: Envelope, k: int):
    # h(x) = (p*x + q) / d on segment k, integers only
    slope, intercept = env.segment(k)
    d = slope.denominator * intercept.denominator // math.gcd(slope.denominator, intercept.denominator)
    return slope.numerator * (d // slope.denominator), intercept.numerator * (d // intercept.denominator), d


def verify_envelope(base: int, n_max: int, values: list[int] | None = None) -> Report:
    """s_b(m) <= h(m) for 0 <= m <= n_max, equality at every even-index knot."""
    b = check_base(base)
    vals = values if values is not None else s_range(b, n_max)
    env = envelope_for(b)
    report = Report("envelope", b)
    k = 0
    p, q, d = _segment_int_form(env, 0)
    upper = env.knot(1)
    for m in range(n_max + 1):
        while m > upper:
            k += 1
            p, q, d = _segment_int_form(env, k)
            upper = env.knot(k + 1)
        lhs, rhs = vals[m] * d, p * m + q
        report.tick("s<=h")
        if lhs > rhs:
            report.fail("s<=h", m, f"s={vals[m]} h={Fraction(rhs, d)}")
    k = 0
    while env.knot(2 * k) <= n_max:
        m = int(env.knot(2 * k))
        report.tick("equality")
        if Fraction(vals[m]) != env(m):
            report.fail("equality", m, f"s={vals[m]} h={env(m)}")
        k += 1
    return report


def zero_one_numbers(base: int, n_max: int):
    """Ascending integers <= n_max whose base-b digits are all 0 or 1."""
    n = 0
    while (m := psi(n, base)) <= n_max:
        yield m
        n += 1


def verify_strengthening(base: int, n_max: int, memo: MemoTable | None = None,
                         values: list[int] | None = None) -> Report:
    """s_b(m) <= h(m - b/(b+1)) for zero-one-digit m = b+1 (mod b^2).

    Indices outside the zero-one class are measured (``notes``) but not
    asserted.
    """
    b = check_base(base)
    memo = memo or memo_for(b)
    env = envelope_for(b)
    shift = Fraction(b, b + 1)
    report = Report("strengthening", b)
    for m in zero_one_numbers(b, n_max):
        if m % (b * b) != b + 1:
            continue
        sm = memo[m]
        report.tick("s<=h(m-b/(b+1))")
        if sm > env(m - shift):
            report.fail("s<=h(m-b/(b+1))", m, f"s={sm} h={env(m - shift)}")
    if values is not None:
        over = total = 0
        for m in range(b + 1, min(n_max, len(values) - 1) + 1, b * b):
            if is_zero_one(m, b):
                continue
            total += 1
            if values[m] > env(m - shift):
                over += 1
        report.notes["unrestricted_checked"] = total
        report.notes["unrestricted_exceed"] = over
    return report


def random_rationals(rng: random.Random, x_max: Fraction, count: int, bits: int = 64):
    x_max = Fraction(x_max)
    for _ in range(count):
        den = rng.randrange(1, 2**bits)
        hi = min(x_max * den, Fraction(2**bits - 1))
        num = rng.randrange(0, math.floor(hi) + 1)
        yield Fraction(num, den)


def verify_h_recurrence(base: int, trials: int, x_max, seed: int) -> Report:
    """h(x) + h(b x + 1/(b+1)) == h(b^2 x + 1) at knots and seeded random x."""
    b = check_base(base)
    if trials < 1:
        raise ValueError("trials must be >= 1")
    env = envelope_for(b)
    x_max = Fraction(x_max)
    shift = Fraction(1, b + 1)
    report = Report("h-recurrence", b)

    def check(name, x):
        report.tick(name)
        lhs = env(x) + env(b * x + shift)
        rhs = env(b * b * x + 1)
        if lhs != rhs:
            report.fail(name, x, f"{lhs} != {rhs}")

    k = 0
    while env.knot(k) <= x_max:
        check("knots", env.knot(k))
        k += 1
    for x in random_rationals(random.Random(seed), x_max, trials):
        check("random", x)
    return report


@dataclass
class RecordEntry:
    k: int
    a_k: int
    F_k: int
    ratio_to_H: HighPrecisionReal
    h_minus_H: HighPrecisionReal
    scanned: bool
    observed_max: int | None = None
    observed_argmax: int | None = None
    s_at_a_k: int | None = None

    @property
    def ok(self) -> bool:
        if self.scanned:
            return self.observed_max == self.F_k and self.observed_argmax == self.a_k
        return self.s_at_a_k == self.F_k


def _ratio_and_gap(b: int, env: Envelope, k: int, a_k: int, dps: int):
    f = env.value_at_knot(k)
    # enough digits that h - H keeps `dps` digits after cancellation
    work = dps + len(str(f)) + 10
    with _iv_dps(work):
        h_iv = _to_iv(env(a_k))
        big_h = _H_iv(b, a_k)
        ratio = HighPrecisionReal.from_interval(iv.mpf(f) / big_h)
        gap = HighPrecisionReal.from_interval(h_iv - big_h)
    return ratio, gap


def verify_records(base: int, k_max: int, scan_limit: int, dps: int = DEFAULT_DPS,
                   values: list[int] | None = None) -> list[RecordEntry]:
    """Exhaustive record scan where b^(k-1) <= scan_limit, matrix check beyond."""
    b = check_base(base)
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    env = envelope_for(b)
    rep = linrep.stern_rep(b)
    k_scan = 1
    while k_scan + 1 <= k_max and b**k_scan <= scan_limit:
        k_scan += 1
    # records k = 2..k_scan are scanned; table must cover [0, b^(k_scan-1))
    need = b ** (k_scan - 1)
    if k_scan >= 2 and (values is None or len(values) < need):
        values = s_range(b, need - 1)
    entries = []
    for k in range(2, k_max + 1):
        a_k = record_position(b, k)
        f_k = env.value_at_knot(k)
        ratio, gap = _ratio_and_gap(b, env, k, a_k, dps)
        if k <= k_scan:
            lo, hi = b ** (k - 2), b ** (k - 1)
            best, arg = -1, None
            for n in range(lo, hi):
                if values[n] > best:
                    best, arg = values[n], n
            entries.append(RecordEntry(k, a_k, f_k, ratio, gap, True, best, arg,
                                       values[a_k]))
        else:
            entries.append(RecordEntry(k, a_k, f_k, ratio, gap, False,
                                       s_at_a_k=linrep.evaluate_at(rep, a_k)))
    return entries


@dataclass
class ConvergenceRow:
    k: int
    a_k: int
    F_k: int
    ratio_to_H: HighPrecisionReal
    h_minus_H: HighPrecisionReal
    s_matches: bool | None
    h_equals_s: bool


def convergence_report(base: int, k_max: int, dps: int = DEFAULT_DPS) -> list[ConvergenceRow]:
    b = check_base(base)
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    env = envelope_for(b)
    rep = linrep.stern_rep(b)
    rows = []
    for k in range(2, k_max + 1):
        a_k = record_position(b, k)
        f_k = env.value_at_knot(k)
        ratio, gap = _ratio_and_gap(b, env, k, a_k, dps)
        matches = linrep.evaluate_at(rep, a_k) == f_k if k <= 200 else None
        rows.append(ConvergenceRow(k, a_k, f_k, ratio, gap, matches, env(a_k) == f_k))
    return rows


@dataclass
class ScanResult:
    argmax: int
    max_ratio: HighPrecisionReal
    report: Report


def normalized_ratios(base: int, values: list[int]):
    """Float s_b(m)/H(m) for m = 1..len(values)-1 (index 0 is unused)."""
    H = H_float(base)
    return [0.0] + [values[m] / H(m) for m in range(1, len(values))]


def scan_normalized_max(base: int, n_max: int, values: list[int] | None = None,
                        ratios: list[float] | None = None,
                        dps: int = DEFAULT_DPS) -> ScanResult:
    """Maximise s_b(m)/H(m) over 1 <= m <= n_max.

    Floats locate the candidates; every m within the float slack of the float
    maximum is re-evaluated in interval arithmetic and the smallest exact
    winner is returned. Ratios above 1 + FLOAT_SLACK are reported as
    violations of the ceiling.
    """
    b = check_base(base)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    vals = values if values is not None else s_range(b, n_max)
    rs = ratios if ratios is not None else normalized_ratios(b, vals[: n_max + 1])
    report = Report("normalized-max", b)
    top = max(rs[1: n_max + 1])
    cutoff = top * (1 - 4 * FLOAT_SLACK)
    best = None
    for m in range(1, n_max + 1):
        r = rs[m]
        report.tick("ratio<=1")
        if r >= cutoff or r > 1 + FLOAT_SLACK / 2:
            exact = H_ratio(b, vals[m], m, dps)
            if r >= cutoff and (best is None or exact.mid > best[1].mid):
                best = (m, exact)
            if exact.mid - exact.rad > 1 + FLOAT_SLACK:
                report.fail("ratio<=1", m, f"s/H={exact.format(15)}")
    return ScanResult(best[0], best[1], report)


def H_ratio(base: int, s_value: int, m, dps: int = DEFAULT_DPS) -> HighPrecisionReal:
    with _iv_dps(dps):
        return HighPrecisionReal.from_interval(iv.mpf(s_value) / _H_iv(base, m))


def verify_embedding(base: int, n_max: int, memo: MemoTable | None = None,
                     memo2: MemoTable | None = None) -> Report:
    """s_b(psi_b(n)) == s_2(n) and the zero-one domination bound, n <= n_max."""
    b = check_base(base)
    memo = memo or memo_for(b)
    memo2 = memo2 or memo_for(2)
    report = Report("embedding", b)
    for n in range(n_max + 1):
        report.tick("s_b(psi(n))=s_2(n)")
        lhs, rhs = memo[psi(n, b)], memo2[n]
        if lhs != rhs:
            report.fail("s_b(psi(n))=s_2(n)", n, f"{lhs} != {rhs}")
        # domination over the clamped binary numeral of n read in base b
        report.tick("domination")
        clamped = shadow_binary(n, b)
        if memo[n] > memo2[clamped]:
            report.fail("domination", n, f"s_b={memo[n]} > s_2={memo2[clamped]}")
    return report

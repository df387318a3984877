"""Named verification suites shared by the CLI and the test-suite."""

from __future__ import annotations

from . import linrep
from .envelope import (verify_embedding, verify_envelope, verify_h_recurrence,
                       verify_strengthening)
from .numeral import check_base
from .oracle import count_expansions
from .report import Report
from .stern import check_case_identities, s_range


def triple_check(base: int, n_max: int, rep: linrep.LinearRep | None = None) -> Report:
    """Recurrence table vs matrix product vs brute-force count, 0 <= n <= n_max."""
    b = check_base(base)
    rep = rep or linrep.stern_rep(b)
    table = s_range(b, n_max)
    report = Report("oracle", b)
    for n in range(n_max + 1):
        rec = table[n]
        mat = linrep.evaluate_at(rep, n)
        brute = count_expansions(b, n - 1) if n else 0
        report.tick("recurrence=matrix")
        if rec != mat:
            report.fail("recurrence=matrix", n, f"{rec} != {mat}")
        report.tick("recurrence=oracle")
        if rec != brute:
            report.fail("recurrence=oracle", n, f"{rec} != {brute}")
    return report


def run_suite(suite: str, base: int, n_max: int, trials: int = 1000,
              seed: int | None = None) -> Report:
    if suite == "envelope":
        return verify_envelope(base, n_max)
    if suite == "strengthening":
        return verify_strengthening(base, n_max, values=s_range(base, n_max))
    if suite == "h-recurrence":
        if seed is None:
            raise ValueError("h-recurrence needs an explicit seed")
        return verify_h_recurrence(base, trials, n_max, seed)
    if suite == "identities":
        return check_case_identities(base, n_max)
    if suite == "oracle":
        return triple_check(base, n_max)
    if suite == "embedding":
        return verify_embedding(base, n_max)
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("envelope", "strengthening", "h-recurrence", "identities", "oracle", "embedding")

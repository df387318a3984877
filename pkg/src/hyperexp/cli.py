"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import sys
from dataclasses import dataclass

from mpmath import mp, nstr

from . import envelope, linrep, oracle, stern
from .suites import SUITES, run_suite

RATIO_DIGITS = 20


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    base: int = 2
    n: int | None = None
    n_max: int | None = None
    k_max: int | None = None
    scan_limit: int = 10**6
    method: str | None = None
    suite: str | None = None
    trials: int = 1000
    seed: int | None = None
    digits: int = 15
    cap: int = 1000
    out: str | None = None
    rep: str | None = None

    def validate(self):
        if self.base < 2:
            raise ConfigError(f"--base must be >= 2, got {self.base}")
        if self.n is not None and self.n < 0:
            raise ConfigError("n must be nonnegative")
        if self.n_max is not None and self.n_max < 0:
            raise ConfigError("--max must be nonnegative")
        if self.k_max is not None and self.k_max < 2:
            raise ConfigError("--kmax must be >= 2")
        if self.trials < 1 or self.cap < 1 or self.scan_limit < 1:
            raise ConfigError("--trials, --cap and --scan-limit must be positive")
        if not 1 <= self.digits <= 50:
            raise ConfigError("--digits must be in [1, 50]")
        return self


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="ascii") as fh:
            yield fh


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def cmd_compute(cfg: RunConfig) -> int:
    b, n = cfg.base, cfg.n
    if cfg.method == "recurrence":
        print(stern.s(b, n))
    elif cfg.method == "matrix":
        print(linrep.evaluate_at(linrep.stern_rep(b), n))
    elif cfg.method == "oracle":
        print(oracle.count_expansions(b, n - 1) if n else 0)
    else:
        rec = stern.s(b, n)
        mat = linrep.evaluate_at(linrep.stern_rep(b), n)
        if rec != mat:
            print(f"engine mismatch at n={n}: recurrence={rec} matrix={mat}", file=sys.stderr)
            return 1
        print(rec)
    return 0


def cmd_enumerate(cfg: RunConfig) -> int:
    found, truncated = oracle.list_expansions(cfg.base, cfg.n, cfg.cap)
    for e in found:
        print(e)
    print(f"count {oracle.count_expansions(cfg.base, cfg.n)}")
    if truncated:
        print(f"listing truncated at --cap {cfg.cap}", file=sys.stderr)
    return 0


def cmd_records(cfg: RunConfig) -> int:
    entries = envelope.verify_records(cfg.base, cfg.k_max, cfg.scan_limit)
    with _output(cfg.out) as fh:
        w = _writer(fh)
        w.writerow(["k", "a_k", "F_k", "ratio_to_H", "h_minus_H"])
        for e in entries:
            w.writerow([e.k, e.a_k, e.F_k, e.ratio_to_H.format(RATIO_DIGITS),
                        e.h_minus_H.format(RATIO_DIGITS)])
    bad = [e for e in entries if not e.ok]
    for e in bad:
        print(f"record mismatch at k={e.k}: expected a_k={e.a_k} F_k={e.F_k}, "
              f"observed max={e.observed_max} at {e.observed_argmax}, s(a_k)={e.s_at_a_k}",
              file=sys.stderr)
    return 1 if bad else 0


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.suite == "h-recurrence" and cfg.seed is None:
        raise ConfigError("suite h-recurrence requires --seed")
    report = run_suite(cfg.suite, cfg.base, cfg.n_max, cfg.trials, cfg.seed)
    if cfg.out is not None:
        with _output(cfg.out) as fh:
            w = _writer(fh)
            w.writerow(["suite", "base", "check", "checked", "violations", "first_violation"])
            for row in report.rows():
                w.writerow(row)
    for v in report.violations[:20]:
        print(f"violation [{v.check}] at {v.index}: {v.detail}", file=sys.stderr)
    print(report.summary(), file=sys.stderr if cfg.out in (None, "-") else sys.stdout)
    return 0 if report.ok else 1


def cmd_constant(cfg: RunConfig) -> int:
    c = envelope.maximal_order_constant(cfg.base, dps=max(envelope.DEFAULT_DPS, cfg.digits + 20))
    with mp.workdps(cfg.digits + 20):
        print(nstr(c.mid, cfg.digits, strip_zeros=False))
    return 0


def cmd_scan(cfg: RunConfig) -> int:
    b, n_max = cfg.base, cfg.n_max
    if n_max < 1:
        raise ConfigError("--max must be >= 1 for scan")
    values = stern.s_range(b, n_max)
    ratios = envelope.normalized_ratios(b, values)
    env = envelope.envelope_for(b)
    with _output(cfg.out) as fh:
        w = _writer(fh)
        w.writerow(["m", "s_b", "h_num", "h_den", "ratio_to_H"])
        for m in range(1, n_max + 1):
            h = env(m)
            w.writerow([m, values[m], h.numerator, h.denominator, repr(ratios[m])])
        result = envelope.scan_normalized_max(b, n_max, values, ratios)
        w.writerow(["summary", result.argmax, "", "", result.max_ratio.format(RATIO_DIGITS)])
    for v in result.report.violations[:20]:
        print(f"ratio above 1 at m={v.index}: {v.detail}", file=sys.stderr)
    return 0 if result.report.ok else 1


def cmd_eval_rep(cfg: RunConfig) -> int:
    try:
        with open(cfg.rep, encoding="utf-8") as fh:
            rep = linrep.parse_rep(fh.read())
    except OSError as exc:
        raise ConfigError(f"cannot read {cfg.rep}: {exc}") from None
    except ValueError as exc:
        raise ConfigError(f"bad representation file: {exc}") from None
    print(linrep.evaluate_at(rep, cfg.n))
    if cfg.n_max is not None:
        # check the file against s_b on 0..max
        table = stern.s_range(rep.base, cfg.n_max)
        for m, expected in enumerate(table):
            got = linrep.evaluate_at(rep, m)
            if got != expected:
                print(f"representation disagrees with s_{rep.base} at n={m}: "
                      f"{got} != {expected}", file=sys.stderr)
                return 1
    return 0


COMMANDS = {
    "compute": cmd_compute,
    "enumerate": cmd_enumerate,
    "records": cmd_records,
    "verify": cmd_verify,
    "constant": cmd_constant,
    "scan": cmd_scan,
    "eval-rep": cmd_eval_rep,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperexp", description="Hyper-(b-ary) expansion counts.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--base", type=int, default=2)
        return sp

    sp = add("compute", "print s_b(n)")
    sp.add_argument("n", type=int)
    sp.add_argument("--method", choices=["recurrence", "matrix", "oracle"])

    sp = add("enumerate", "list hyper-expansions of n")
    sp.add_argument("n", type=int)
    sp.add_argument("--cap", type=int, default=1000)

    sp = add("records", "record positions and values as CSV")
    sp.add_argument("--kmax", dest="k_max", type=int, required=True)
    sp.add_argument("--scan-limit", type=int, default=10**6)
    sp.add_argument("--out")

    sp = add("verify", "run a verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--max", dest="n_max", type=int, required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--out")

    sp = add("constant", "print c_b")
    sp.add_argument("--digits", type=int, default=15)

    sp = add("scan", "per-m table of s_b, h and s_b/H as CSV")
    sp.add_argument("--max", dest="n_max", type=int, required=True)
    sp.add_argument("--out")

    sp = add("eval-rep", "evaluate a linear representation file at n")
    sp.add_argument("rep", metavar="FILE")
    sp.add_argument("n", type=int)
    sp.add_argument("--max", dest="n_max", type=int,
                    help="also compare the file against s_b on 0..MAX")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        parser.exit(2, f"hyperexp: error: {exc}\n")
    except stern.CapacityError as exc:
        parser.exit(2, f"hyperexp: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())

"""s_b(n) from the digit recurrence.

    s_b(0) = 0,  s_b(1) = 1,
    s_b(bn) = s_b(n),  s_b(bn+1) = s_b(n) + s_b(n+1),  s_b(bn+i) = s_b(n+1)  (2 <= i < b).

Isolated indices go through a memo table (O(log n) entries touched); dense
ranges go through ``s_range``.
"""

from __future__ import annotations

import threading

from .numeral import check_base
from .report import Report

TABULATION_LIMIT = 10**8


class CapacityError(ValueError):
    pass


class MemoTable:
    """Insert-only cache n -> s_b(n) for one base.

    Concurrent use is safe: every insert writes the recurrence value, so racing
    writers store identical entries.
    """

    def __init__(self, base: int):
        self.base = check_base(base)
        self._cache: dict[int, int] = {0: 0, 1: 1}

    def __len__(self):
        return len(self._cache)

    def __contains__(self, n):
        return n in self._cache

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError("n must be nonnegative")
        cache = self._cache
        hit = cache.get(n)
        if hit is not None:
            return hit
        b = self.base
        # walk down to cached indices, then fill back up; no recursion
        levels = []
        frontier = {n}
        while frontier:
            todo = [m for m in frontier if m not in cache]
            if not todo:
                break
            levels.append(todo)
            frontier = set()
            for m in todo:
                q, i = divmod(m, b)
                if i != 1:
                    frontier.add(q if i == 0 else q + 1)
                else:
                    frontier.add(q)
                    frontier.add(q + 1)
        for todo in reversed(levels):
            for m in todo:
                q, i = divmod(m, b)
                if i == 0:
                    cache[m] = cache[q]
                elif i == 1:
                    cache[m] = cache[q] + cache[q + 1]
                else:
                    cache[m] = cache[q + 1]
        return cache[n]


_tables: dict[int, MemoTable] = {}
_tables_lock = threading.Lock()


def memo_for(base: int) -> MemoTable:
    with _tables_lock:
        table = _tables.get(base)
        if table is None:
            table = _tables[base] = MemoTable(base)
        return table


def s(base: int, n: int, memo: MemoTable | None = None) -> int:
    """Number of hyper-(base)-ary expansions of n - 1; s(base, 0) == 0."""
    if memo is None:
        memo = memo_for(check_base(base))
    elif memo.base != base:
        raise ValueError("memo table belongs to another base")
    return memo[n]


def s_range(base: int, n_max: int, limit: int = TABULATION_LIMIT) -> list[int]:
    """``[s(base, 0), ..., s(base, n_max)]`` by bottom-up tabulation."""
    b = check_base(base)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if n_max > limit:
        raise CapacityError(f"n_max={n_max} exceeds tabulation limit {limit}")
    r = [0] * (n_max + 1)
    if n_max >= 1:
        r[1] = 1
    for n in range(2, n_max + 1):
        q, i = divmod(n, b)
        if i == 0:
            r[n] = r[q]
        elif i == 1:
            r[n] = r[q] + r[q + 1]
        else:
            r[n] = r[q + 1]
    return r


def case_identities(b: int):
    """The composite identities used in the induction step of the envelope bound.

    Each entry is (name, lhs index, rhs as list of (coefficient, index)), all as
    functions of j.
    """
    b2, b3, b4 = b * b, b**3, b**4
    return [
        ("b3j+1", lambda j: b3 * j + 1,
         lambda j: [(2, j), (1, b * j + 1)]),
        ("b4j+b+1", lambda j: b4 * j + b + 1,
         lambda j: [(1, j), (2, b2 * j + 1)]),
        ("b4j+b3+b+1", lambda j: b4 * j + b3 + b + 1,
         lambda j: [(1, b3 * j + b2 + 1), (1, b2 * j + b + 1)]),
        ("b3j+b2+1", lambda j: b3 * j + b2 + 1,
         lambda j: [(1, b * j + 1), (1, b2 * j + b + 1)]),
        ("b3j+b2+b+1", lambda j: b3 * j + b2 + b + 1,
         lambda j: [(1, b2 * j + b + 1), (1, j + 1)]),
    ]


def check_case_identities(base: int, j_max: int, memo: MemoTable | None = None) -> Report:
    b = check_base(base)
    memo = memo or memo_for(b)
    report = Report("identities", b)
    cases = case_identities(b)
    for j in range(1, j_max + 1):
        for name, lhs, rhs in cases:
            left = memo[lhs(j)]
            right = sum(c * memo[m] for c, m in rhs(j))
            report.tick(name)
            if left != right:
                report.fail(name, j, f"{left} != {right}")
    return report

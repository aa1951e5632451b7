"""Exhaustive backtracking over multiset universal cycles at small scale.

A partial sequence is viable while no window multiset repeats; symbol
counts are also capped at L/n since every symbol must appear equally
often in a full cycle.  Unless raw sequences are requested the search
space is restricted to sequences starting with t ones — every cycle
contains the all-ones window exactly once, so this picks one rotation
per cycle and costs no solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import MULTISET, expected_length, necessary_condition
from .errors import BudgetExceeded
from .verify import CyclicSequence, window_keys

MODES = ("first", "all", "count")
EQUIVALENCES = ("raw", "relabel", "relabel_rotation")
DEFAULT_BUDGET = 10_000


@dataclass
class SearchConfig:
    n: int
    t: int
    mode: str = "first"
    equivalence: str = "relabel"
    prefix: tuple[int, ...] | None = None
    limit: int | None = None
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.equivalence not in EQUIVALENCES:
            raise ValueError(f"equivalence must be one of {EQUIVALENCES}")
        if self.limit is not None and self.limit < 0:
            raise ValueError("limit must be >= 0")
        if self.prefix is not None:
            self.prefix = tuple(self.prefix)


def _start_sequence(cfg: SearchConfig) -> tuple[int, ...]:
    t = cfg.t
    prefix = cfg.prefix or ()
    if any(not 1 <= s <= cfg.n for s in prefix):
        raise ValueError(f"prefix symbols must lie in 1..{cfg.n}")
    if cfg.equivalence == "raw":
        return prefix
    canonical = (1,) * t
    if len(prefix) < t:
        if prefix != canonical[: len(prefix)]:
            raise ValueError(f"prefix must extend the canonical start {canonical}")
        return canonical
    if prefix[:t] != canonical:
        raise ValueError(f"prefix must extend the canonical start {canonical}")
    return prefix


def backtrack(cfg: SearchConfig) -> Iterator[CyclicSequence]:
    """Depth-first enumeration of all cycles extending the start sequence.

    Infeasible (n, t) yields nothing; a target length beyond the budget
    raises BudgetExceeded.  Every emitted sequence is a verifier-passing
    universal cycle for t-multisets of [n].
    """
    n, t = cfg.n, cfg.t
    target = expected_length(n, t, MULTISET)
    if target > cfg.budget:
        raise BudgetExceeded(
            f"cycle length {target} exceeds search budget {cfg.budget}"
        )
    if not necessary_condition(n, t, MULTISET):
        return
    start = _start_sequence(cfg)
    if len(start) > target:
        return
    limit = cfg.limit if cfg.limit else None

    cap = target // n
    seq = list(start)
    counts = [0] * (n + 1)
    used = set()
    for s in seq:
        counts[s] += 1
        if counts[s] > cap:
            return
    for i in range(len(seq) - t + 1):
        w = tuple(sorted(seq[i : i + t]))
        if w in used:
            return
        used.add(w)

    def wrap_ok() -> bool:
        added = []
        ok = True
        for i in range(target - t + 1, target):
            w = tuple(sorted(seq[i:] + seq[: t - (target - i)]))
            if w in used:
                ok = False
                break
            used.add(w)
            added.append(w)
        for w in added:
            used.remove(w)
        return ok

    emitted = 0
    base = len(seq)
    if base == target:
        if wrap_ok():
            yield CyclicSequence(tuple(seq), n, t, MULTISET)
        return

    # iterative DFS: ptr[d] is the next symbol to try at position d
    ptr = [1] * (target + 1)
    d = base
    while d >= base:
        if d == target:
            if wrap_ok():
                yield CyclicSequence(tuple(seq), n, t, MULTISET)
                emitted += 1
                if limit is not None and emitted >= limit:
                    return
            d -= 1
            if d < base:
                break
            _unplace(seq, used, counts, t)
            continue
        c = ptr[d]
        if c > n:
            ptr[d] = 1
            d -= 1
            if d < base:
                break
            _unplace(seq, used, counts, t)
            continue
        ptr[d] = c + 1
        if counts[c] >= cap:
            continue
        if len(seq) + 1 >= t:
            w = tuple(sorted(seq[len(seq) - t + 1 :] + [c]))
            if w in used:
                continue
            used.add(w)
        counts[c] += 1
        seq.append(c)
        d += 1


def _unplace(seq, used, counts, t):
    c = seq.pop()
    counts[c] -= 1
    if len(seq) + 1 >= t:
        used.remove(tuple(sorted(seq[len(seq) - t + 1 :] + [c])))


def _relabel_min(symbols: tuple[int, ...]) -> tuple[int, ...]:
    # first-occurrence coding: the lexicographically least relabeling
    mapping = {}
    out = []
    for s in symbols:
        if s not in mapping:
            mapping[s] = len(mapping) + 1
        out.append(mapping[s])
    return tuple(out)


def canonicalize(seq: CyclicSequence, equivalence: str = "relabel") -> CyclicSequence:
    """Least sequence in the orbit of ``seq`` under the chosen group:
    letter relabelings, optionally combined with rotations.  Idempotent."""
    if equivalence not in EQUIVALENCES:
        raise ValueError(f"equivalence must be one of {EQUIVALENCES}")
    symbols = seq.symbols
    if equivalence == "raw":
        best = symbols
    elif equivalence == "relabel":
        best = _relabel_min(symbols)
    else:
        best = min(
            _relabel_min(symbols[i:] + symbols[:i]) for i in range(len(symbols))
        )
    return CyclicSequence(best, seq.n, seq.t, seq.kind)


def count_distinct(
    n: int,
    t: int,
    equivalence: str = "relabel",
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Number of canonicalize-distinct cycles for (n, t), by exhaustion."""
    cfg = SearchConfig(n, t, mode="all", equivalence=equivalence, budget=budget)
    if equivalence == "raw":
        cfg.equivalence = "raw"
    seen = set()
    for found in backtrack(cfg):
        seen.add(canonicalize(found, equivalence).symbols)
    return len(seen)


def branch_prefixes(n: int, t: int, depth: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All viable prefixes of the given length extending the canonical
    start: a complete set of disjoint branches for partitioned runs."""
    target = expected_length(n, t, MULTISET)
    if target > budget:
        raise BudgetExceeded(f"cycle length {target} exceeds search budget {budget}")
    t_ones = (1,) * t
    if depth < t:
        return [t_ones[:depth]]
    out = []

    def extend(prefix: tuple[int, ...]):
        if len(prefix) == depth:
            out.append(prefix)
            return
        for c in range(1, n + 1):
            w = tuple(sorted(prefix[len(prefix) - t + 1 :] + (c,)))
            if w in window_set(prefix):
                continue
            extend(prefix + (c,))

    def window_set(prefix: tuple[int, ...]) -> set:
        return {
            tuple(sorted(prefix[i : i + t])) for i in range(len(prefix) - t + 1)
        }

    extend(t_ones)
    return out

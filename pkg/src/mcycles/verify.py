"""Ground-truth checking for candidate universal cycles.

The verifier is total: any sequence of symbols yields a report, never an
exception.  A report is ok exactly when the cyclic windows are pairwise
distinct, every t-multiset (or t-subset) of [n] occurs, and the length
matches the count of such sets.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .core import MULTISET, SUBSET, check_kind, expected_length

MISSING_CAP = 100  # at most this many missing sets are listed explicitly


@dataclass(frozen=True)
class CyclicSequence:
    """A cyclic string of symbols from 1..n, declared as a candidate
    universal cycle for t-multisets (kind "multiset") or t-subsets
    (kind "subset")."""

    symbols: tuple[int, ...]
    n: int
    t: int
    kind: str = MULTISET

    def __post_init__(self):
        check_kind(self.kind)
        if self.n < 1 or self.t < 1:
            raise ValueError("need n >= 1 and t >= 1")
        if not self.symbols:
            raise ValueError("sequence must be nonempty")
        if any(not 1 <= s <= self.n for s in self.symbols):
            raise ValueError(f"symbols must lie in 1..{self.n}")

    def __len__(self) -> int:
        return len(self.symbols)


def window_keys(symbols, t: int) -> list[tuple[int, ...]]:
    """Sorted-tuple keys of all cyclic length-t windows; one per position."""
    symbols = tuple(symbols)
    if len(symbols) < t:
        raise ValueError(f"sequence of length {len(symbols)} has no windows of size {t}")
    ext = symbols + symbols[: t - 1]
    return [tuple(sorted(ext[i : i + t])) for i in range(len(symbols))]


def windows(seq: CyclicSequence) -> list[tuple[int, ...]]:
    """The cyclic windows of a sequence as sorted tuples (multiset keys)."""
    return window_keys(seq.symbols, seq.t)


@dataclass
class VerificationReport:
    ok: bool
    n: int
    t: int
    kind: str
    window_count: int
    length_expected: int
    duplicates: list = field(default_factory=list)      # (window, [positions])
    missing: list = field(default_factory=list)         # first MISSING_CAP windows
    missing_count: int = 0
    invalid_windows: list = field(default_factory=list)  # (position, window)
    symbol_errors: list = field(default_factory=list)    # (position, symbol)
    notes: list = field(default_factory=list)

    def to_kv(self) -> str:
        """Single machine-readable line, e.g. ``ok=true window_count=35 ...``."""
        return (
            f"ok={'true' if self.ok else 'false'}"
            f" window_count={self.window_count}"
            f" length_expected={self.length_expected}"
            f" duplicates={len(self.duplicates)}"
            f" missing={self.missing_count}"
            f" invalid_windows={len(self.invalid_windows)}"
            f" symbol_errors={len(self.symbol_errors)}"
        )

    def to_text(self) -> str:
        kindname = "multisets" if self.kind == MULTISET else "subsets"
        lines = [
            f"verification: {'OK' if self.ok else 'FAILED'}",
            f"covers {self.t}-{kindname} of [{self.n}];"
            f" windows {self.window_count}, expected {self.length_expected}",
        ]
        for note in self.notes:
            lines.append(f"note: {note}")
        for pos, sym in self.symbol_errors[:MISSING_CAP]:
            lines.append(f"symbol out of range at position {pos}: {sym}")
        for w, positions in self.duplicates[:MISSING_CAP]:
            lines.append(f"duplicate window {set_str(w)} at positions {positions}")
        for pos, w in self.invalid_windows[:MISSING_CAP]:
            lines.append(f"window at position {pos} repeats a symbol: {set_str(w)}")
        if self.missing_count:
            shown = ", ".join(set_str(w) for w in self.missing)
            more = "" if self.missing_count <= len(self.missing) else ", ..."
            lines.append(f"missing {self.missing_count} windows: {shown}{more}")
        return "\n".join(lines)


def set_str(window) -> str:
    return "{" + ",".join(str(x) for x in window) + "}"


def _universe(n: int, t: int, kind: str):
    if kind == MULTISET:
        return combinations_with_replacement(range(1, n + 1), t)
    return combinations(range(1, n + 1), t)


def verify_cycle(symbols, n: int, t: int, kind: str = MULTISET) -> VerificationReport:
    """Check a candidate cycle; all failures land in the report.

    ok means: correct length, all symbols in range, windows pairwise
    distinct as multisets, every t-multiset (resp. t-subset) of [n]
    present, and (subset kind) no window repeats a symbol.
    """
    check_kind(kind)
    symbols = tuple(symbols)
    expected = expected_length(n, t, kind)
    report = VerificationReport(
        ok=False, n=n, t=t, kind=kind,
        window_count=len(symbols), length_expected=expected,
    )
    report.symbol_errors = [
        (i, s) for i, s in enumerate(symbols) if not 1 <= s <= n
    ]
    if not symbols:
        report.notes.append("empty sequence")
        report.missing_count = expected
        return report
    if len(symbols) < t:
        report.notes.append(f"sequence shorter than window size {t}")
        report.window_count = 0
        report.missing_count = expected
        return report
    if len(symbols) != expected:
        report.notes.append(
            f"length {len(symbols)} differs from expected {expected}"
        )

    keys = window_keys(symbols, t)
    positions = defaultdict(list)
    for i, w in enumerate(keys):
        positions[w].append(i)
    report.duplicates = sorted(
        (w, pos) for w, pos in positions.items() if len(pos) > 1
    )
    if kind == SUBSET:
        report.invalid_windows = [
            (i, w) for i, w in enumerate(keys) if len(set(w)) != t
        ][:MISSING_CAP]

    in_universe = all(
        1 <= w[0] and w[-1] <= n and (kind == MULTISET or len(set(w)) == t)
        for w in positions
    )
    if in_universe and len(positions) == expected:
        # every window is a legal set and there are exactly as many
        # distinct ones as sets exist, so nothing is missing
        report.missing_count = 0
    else:
        missing = []
        count = 0
        for w in _universe(n, t, kind):
            if w not in positions:
                count += 1
                if len(missing) < MISSING_CAP:
                    missing.append(w)
        report.missing = missing
        report.missing_count = count

    report.ok = (
        not report.symbol_errors
        and len(symbols) == expected
        and not report.duplicates
        and report.missing_count == 0
        and not report.invalid_windows
    )
    return report


def verify_sequence(seq: CyclicSequence) -> VerificationReport:
    """Verify a CyclicSequence against its own declared (n, t, kind)."""
    return verify_cycle(seq.symbols, seq.n, seq.t, seq.kind)

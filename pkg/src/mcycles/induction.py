"""Inductive construction of 3-multiset universal cycles, three symbols
at a time.

A state holds a verified cycle on [n] split as body+tail, with the body
over [n-3].  One step promotes the tail's top three symbols to the three
new ones (covering all triples that use a new symbol together with only
old ones), appends a fixed 29- or 38-symbol gadget covering triples drawn
from the top two bands {n-5..n-3} and {n-2..n}, and appends a sweep
string covering triples that take one symbol from each of the low, middle
and top bands.  Every step re-verifies the assembled cycle and fails
loudly rather than propagate a broken state.

The two seed states (for ground sets of size 7 and 8) are fixed data,
found by computer search; chains starting from them cover every n >= 4
not divisible by 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import MULTISET
from .errors import Infeasible
from .verify import CyclicSequence, verify_cycle

ZONE_LOWER = "lower"   # all symbols <= n-3
ZONE_OUTER = "outer"   # some symbol >= n-2, none in the middle band
ZONE_UPPER = "upper"   # symbols from the middle and top bands only
ZONE_MIXED = "mixed"   # one symbol from each band


@dataclass(frozen=True)
class InductionState:
    """A 3-Mcycle on [n] written as body+tail, body over [n-3].

    Invariants (checked by the verifier at every extension): body starts
    1,1,1; tail starts 1,1 and ends n, n-1; body+tail is a universal
    cycle for 3-multisets of [n].
    """

    n: int
    body: tuple[int, ...]
    tail: tuple[int, ...]

    def sequence(self) -> CyclicSequence:
        return CyclicSequence(self.body + self.tail, self.n, 3, MULTISET)


# Seed data.  The 20-symbol body of the first seed is itself a 3-Mcycle
# on [4], and the 35-symbol body of the second is one on [5].
_BODY_A = (
    1, 1, 1, 4, 4, 4, 2, 2, 2, 3, 3, 3, 1, 2, 1, 2, 4, 3, 4, 3,
)
_TAIL_A = (
    1, 1, 5, 2, 2, 6, 3, 3, 7, 4, 4, 5, 1, 6, 6, 2, 7, 7, 3, 2,
    5, 7, 3, 6, 6, 7, 7, 1, 3, 5, 3, 4, 6, 4, 1, 7, 1, 5, 5, 5,
    3, 6, 1, 2, 7, 2, 4, 5, 5, 6, 6, 6, 4, 7, 7, 7, 5, 5, 2, 6,
    4, 5, 7, 6,
)
_BODY_B = (
    1, 1, 1, 2, 2, 2, 3, 1, 1, 4, 2, 2, 5, 1, 3, 3, 2, 4, 4, 4,
    3, 3, 3, 5, 2, 5, 4, 5, 4, 1, 4, 3, 5, 5, 5,
)
_TAIL_B = (
    1, 1, 6, 5, 7, 4, 3, 8, 2, 2, 7, 4, 4, 6, 8, 5, 4, 6, 6, 1,
    7, 2, 7, 3, 6, 1, 8, 1, 5, 7, 3, 1, 8, 8, 8, 7, 7, 5, 5, 6,
    6, 6, 8, 8, 5, 7, 2, 6, 2, 5, 8, 5, 3, 6, 2, 1, 8, 4, 8, 4,
    7, 7, 7, 6, 4, 1, 7, 7, 3, 3, 8, 8, 2, 6, 6, 7, 8, 3, 6, 3,
    6, 4, 2, 8, 7,
)

# Gadget strings covering the "upper" zone, one for even n and one for
# odd n; computer-found constants, kept as letter codes.  Letters a..f
# stand for n-5..n and digits for themselves.
_GADGET_EVEN = "aaffcaeebbdececbddccfbadadfbf"
_GADGET_ODD = "beb1fabd1cffaaecbfbfdada1eccfaeecdcdbd"


def _band_map(n: int) -> dict[str, int]:
    return {"a": n - 5, "b": n - 4, "c": n - 3, "d": n - 2, "e": n - 1, "f": n}


def classify_multiset(m, n: int) -> str:
    """Which zone a 3-multiset of [n] belongs to (n >= 10).

    The four zones partition all 3-multisets: lower (everything <= n-3),
    outer (top band plus low symbols only), upper (middle and top bands
    only), mixed (one symbol from each band).
    """
    if n < 10:
        raise ValueError("zones need n >= 10 so the three bands are disjoint")
    elements = tuple(m.elements) if hasattr(m, "elements") else tuple(m)
    if len(elements) != 3:
        raise ValueError("zone classification applies to 3-multisets")
    if any(not 1 <= x <= n for x in elements):
        raise ValueError(f"symbols out of range 1..{n}: {elements}")
    high = sum(1 for x in elements if x >= n - 2)
    mid = sum(1 for x in elements if n - 5 <= x <= n - 3)
    low = len(elements) - high - mid
    if high == 0:
        return ZONE_LOWER
    if mid == 0:
        return ZONE_OUTER
    if low == 0:
        return ZONE_UPPER
    return ZONE_MIXED


def base_case(which: int) -> InductionState:
    """The two seed states.  ``which`` names the chain by the first ground
    set its extension step produces (10 or 11); the returned state itself
    is the verified cycle on [7] resp. [8]."""
    if which == 10:
        return InductionState(7, _BODY_A, _TAIL_A)
    if which == 11:
        return InductionState(8, _BODY_B, _TAIL_B)
    raise ValueError("base cases exist for chains 10 and 11 only")


def promote_top_band(seq, n: int) -> tuple[int, ...]:
    """Rewrite a string over [n-3] by moving its top band up: n-5 -> n-2,
    n-4 -> n-1, n-3 -> n."""
    seq = tuple(seq)
    if any(not 1 <= x <= n - 3 for x in seq):
        raise ValueError(f"string must be over 1..{n - 3}")
    subs = {n - 5: n - 2, n - 4: n - 1, n - 3: n}
    return tuple(subs.get(x, x) for x in seq)


def upper_gadget(n: int) -> tuple[int, ...]:
    """Fixed gadget covering the upper zone: 29 symbols for even n,
    38 for odd n (which must also cover the nine mixed triples that the
    odd sweep skips at counter 1)."""
    _check_step_size(n)
    letters = _band_map(n)
    code = _GADGET_EVEN if n % 2 == 0 else _GADGET_ODD
    return tuple(letters[ch] if ch in letters else int(ch) for ch in code)


def mixed_sweep(n: int) -> tuple[int, ...]:
    """Sweep string covering the mixed zone: three runs of letter pairs
    against a descending counter (down to 1 for even n, 2 for odd),
    with fixed two- or three-letter terminators."""
    _check_step_size(n)
    letters = _band_map(n)
    lo = 1 if n % 2 == 0 else 2

    def run(first: str, second: str) -> list[int]:
        out = []
        for i, k in enumerate(range(n - 6, lo - 1, -1)):
            pair = first if i % 2 == 0 else second
            out += [letters[pair[0]], letters[pair[1]], k]
        return out

    sweep = (
        run("be", "af") + [letters["b"], letters["e"]]
        + run("ad", "ce") + [letters["a"], letters["d"]]
        + run("cf", "bd") + [letters["c"], letters["f"], letters["e"]]
    )
    return tuple(sweep)


def _check_step_size(n: int) -> None:
    if n < 10:
        raise ValueError("extension strings need n >= 10")
    if n % 3 == 0:
        raise Infeasible(f"no 3-multiset cycle exists when 3 divides n (n={n})")


def extend_step(state: InductionState) -> InductionState:
    """Grow a verified state on [n] to one on [n+3] and re-verify.

    A verification failure here means the implementation (or the seed
    data) is broken, so it raises instead of returning a bad state.
    """
    n = state.n + 3
    _check_step_size(n)
    new_body = state.body + state.tail
    new_tail = promote_top_band(state.tail, n) + upper_gadget(n) + mixed_sweep(n)
    new_state = InductionState(n, new_body, new_tail)
    report = verify_cycle(new_body + new_tail, n, 3, MULTISET)
    if not report.ok:
        raise RuntimeError(
            f"extension to n={n} produced an invalid cycle: {report.to_kv()}"
        )
    return new_state


def construct3(n: int) -> CyclicSequence:
    """A universal cycle for 3-multisets of [n], for any n >= 4 with 3∤n.

    n in {4, 5} returns a seed body directly, {7, 8} a full seed cycle,
    and larger n chains extension steps from the seed of matching residue
    mod 3.
    """
    if n < 4:
        raise Infeasible("3-multiset cycles are constructed for n >= 4 only")
    if n % 3 == 0:
        raise Infeasible(f"no 3-multiset cycle exists when 3 divides n (n={n})")
    if n == 4:
        seq = CyclicSequence(base_case(10).body, 4, 3, MULTISET)
    elif n == 5:
        seq = CyclicSequence(base_case(11).body, 5, 3, MULTISET)
    else:
        state = base_case(10 if n % 3 == 1 else 11)
        while state.n < n:
            state = extend_step(state)
        return state.sequence()
    report = verify_cycle(seq.symbols, seq.n, 3, MULTISET)
    if not report.ok:
        raise RuntimeError(f"seed data failed verification: {report.to_kv()}")
    return seq

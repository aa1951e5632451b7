"""Converting subset universal cycles into multiset ones (t = 2 and 3).

Doubling one instance of a pair of adjacent characters a,b inserts the
two multisets {a,a,b} and {a,b,b} into the cycle and changes nothing
else.  Doubling the first instance of every adjacent pair except the n
pairs along a suitable boundary permutation x_1..x_n, then appending
x_1x_1x_1...x_nx_nx_n, therefore upgrades a 3-subset cycle to a
3-multiset cycle on the same ground set.  The t=2 warm-up doubles the
first instance of every letter instead.
"""

from __future__ import annotations

from collections import deque

from .core import MULTISET, SUBSET
from .errors import NotAUcycle
from .verify import CyclicSequence, verify_cycle


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def cyclic_adjacent_pairs(symbols) -> set[tuple[int, int]]:
    """All unordered pairs of letters adjacent somewhere in the cyclic
    string, wraparound included.  Equal adjacent letters cannot occur in
    a subset cycle and raise NotAUcycle."""
    symbols = tuple(symbols)
    pairs = set()
    for i, a in enumerate(symbols):
        b = symbols[(i + 1) % len(symbols)]
        if a == b:
            raise NotAUcycle(f"equal adjacent letters {a} at position {i}")
        pairs.add(_pair(a, b))
    return pairs

def missing_pairs(symbols, n: int) -> set[tuple[int, int]]:
    """Unordered pairs never adjacent in the cycle.  For a genuine
    3-subset cycle these form a matching of size at most n/2; sharing a
    letter would leave some 3-subset uncoverable, so that raises."""
    present = cyclic_adjacent_pairs(symbols)
    missing = {
        _pair(a, b)
        for a in range(1, n + 1)
        for b in range(a + 1, n + 1)
        if (a, b) not in present
    }
    seen = {}
    for a, b in sorted(missing):
        for letter in (a, b):
            if letter in seen:
                raise NotAUcycle(
                    f"missing pairs {seen[letter]} and {(a, b)} share letter "
                    f"{letter}; input cannot be a 3-subset cycle"
                )
            seen[letter] = (a, b)
    return missing


def _slot_lists(n: int, has_first: bool, has_last: bool) -> list[list[tuple[int, int]]]:
    # candidate lists of index slots (1-based) that must hold the missing
    # pairs; even n has a single list, odd n three with a preferred order
    if n % 2 == 0:
        return [[(i, i + 1) for i in range(1, n, 2)]]
    l1 = [(i, i + 1) for i in range(1, n - 1, 2)]
    l2 = [(1, 2)] + [(i, i + 1) for i in range(4, n, 2)]
    l3 = [(i, i + 1) for i in range(2, n, 2)]
    if has_first and has_last:
        return [l2, l1, l3]
    if has_last and not has_first:
        return [l3, l2, l1]
    return [l1, l2, l3]


def _place(slots, n, first, last, p_first, p_last, others) -> tuple[int, ...] | None:
    has_head_slot = any(1 in s for s in slots)
    has_tail_slot = any(n in s for s in slots)
    if p_first and not has_head_slot:
        return None
    if p_last and not has_tail_slot:
        return None
    pos = {1: first, n: last}
    queue = deque(others)
    for i, j in slots:
        if i == 1 or j == 1:
            if p_first:
                other = j if i == 1 else i
                partner = p_first[0] if p_first[1] == first else p_first[1]
                if other in pos:
                    return None
                pos[other] = partner
        elif i == n or j == n:
            if p_last:
                other = i if j == n else j
                partner = p_last[0] if p_last[1] == last else p_last[1]
                if other in pos:
                    return None
                pos[other] = partner
        elif queue:
            a, b = queue.popleft()
            if i in pos or j in pos:
                return None
            pos[i], pos[j] = a, b
    if queue:
        return None
    fillers = deque(sorted(set(range(1, n + 1)) - set(pos.values())))
    for p in range(1, n + 1):
        if p not in pos:
            pos[p] = fillers.popleft()
    return tuple(pos[p] for p in range(1, n + 1))


def build_permutation(symbols, missing: set[tuple[int, int]], n: int) -> tuple[int, ...]:
    """A permutation x of [n] pinned to the cycle's first and last
    characters whose consecutive slots cover every missing pair.

    Pairs not tied to the endpoints fill the free slots in ascending
    order, and leftover letters fill the remaining positions ascending.
    """
    symbols = tuple(symbols)
    first, last = symbols[0], symbols[-1]
    if _pair(first, last) in missing:
        raise NotAUcycle(
            "first and last characters are cyclically adjacent, so their "
            "pair cannot be missing"
        )
    pair_of = {}
    for p in missing:
        pair_of[p[0]] = p
        pair_of[p[1]] = p
    p_first = pair_of.get(first)
    p_last = pair_of.get(last)
    others = sorted(p for p in missing if p != p_first and p != p_last)
    for slots in _slot_lists(n, p_first is not None, p_last is not None):
        x = _place(slots, n, first, last, p_first, p_last, others)
        if x is None:
            continue
        covered = {_pair(x[i - 1], x[j - 1]) for i, j in slots}
        if missing <= covered:
            return x
    raise NotAUcycle("could not place the missing pairs; input cannot be a 3-subset cycle")


def double_first_instances(symbols, excluded: set[tuple[int, int]]) -> tuple[int, ...]:
    """Repeat the first instance of every unordered adjacent pair except
    the excluded ones.  Instances are located on the original adjacencies
    in one left-to-right pass, so inserted characters never create new
    doublings; each doubled pair {a,b} adds exactly the multisets {a,a,b}
    and {a,b,b} to the cyclic window collection."""
    symbols = tuple(symbols)
    first_at = {}
    for i in range(len(symbols) - 1):
        p = _pair(symbols[i], symbols[i + 1])
        if p not in excluded and p not in first_at:
            first_at[p] = i
    out = [symbols[0]]
    for i in range(len(symbols) - 1):
        out.append(symbols[i + 1])
        if first_at.get(_pair(symbols[i], symbols[i + 1])) == i:
            out += [symbols[i], symbols[i + 1]]
    return tuple(out)


def convert3(x: CyclicSequence) -> CyclicSequence:
    """Convert a 3-subset cycle on [n] into a 3-multiset cycle on [n]."""
    if x.t != 3 or x.kind != SUBSET:
        raise NotAUcycle("convert3 expects a 3-subset cycle")
    report = verify_cycle(x.symbols, x.n, 3, SUBSET)
    if not report.ok:
        raise NotAUcycle(f"input is not a 3-subset cycle: {report.to_kv()}")
    n = x.n
    perm = build_permutation(x.symbols, missing_pairs(x.symbols, n), n)
    boundary = {_pair(perm[i], perm[(i + 1) % n]) for i in range(n)}
    doubled = double_first_instances(x.symbols, boundary)
    tail = tuple(letter for letter in perm for _ in range(3))
    out = CyclicSequence(doubled + tail, n, 3, MULTISET)
    check = verify_cycle(out.symbols, n, 3, MULTISET)
    if not check.ok:
        raise RuntimeError(f"conversion produced an invalid cycle: {check.to_kv()}")
    return out


def convert2(x: CyclicSequence) -> CyclicSequence:
    """Convert a 2-subset cycle on [n] into a 2-multiset cycle by doubling
    the first instance of every letter."""
    if x.t != 2 or x.kind != SUBSET:
        raise NotAUcycle("convert2 expects a 2-subset cycle")
    report = verify_cycle(x.symbols, x.n, 2, SUBSET)
    if not report.ok:
        raise NotAUcycle(f"input is not a 2-subset cycle: {report.to_kv()}")
    seen = set()
    out = []
    for s in x.symbols:
        out.append(s)
        if s not in seen:
            seen.add(s)
            out.append(s)
    result = CyclicSequence(tuple(out), x.n, 2, MULTISET)
    check = verify_cycle(result.symbols, x.n, 2, MULTISET)
    if not check.ok:
        raise RuntimeError(f"conversion produced an invalid cycle: {check.to_kv()}")
    return result

"""Transition multidigraphs whose eulerian circuits list all forms.

Each class representative (h_1, ..., h_{t-1}; d) becomes a directed edge
from the vertex (h_1, ..., h_{t-2}) to (h_2, ..., h_{t-1}).  An eulerian
circuit therefore reads off a difference string whose length-(t-1)
windows are the heads of all forms, each exactly once; repeating that
string n times and integrating from symbol 1 yields a universal cycle,
provided the per-block shift (sum of one block's differences mod n) is
coprime to n.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import combinations, islice, permutations, product

from .core import (
    MULTISET,
    SUBSET,
    DifferenceClass,
    check_kind,
    enumerate_classes,
    pattern_of,
)
from .errors import BadPattern, NotCoprimeShift, NotEulerian
from .verify import CyclicSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormRep:
    """One form of a class, linearized to end at the distinguished value.

    Only ``head`` (the first t-1 differences) is walked when listing the
    form's multisets; the distinguished value closes the cycle and may be
    0 for multiset classes whose sole multiplicity-one part is 0.
    """

    head: tuple[int, ...]
    distinguished: int
    n: int
    kind: str = MULTISET

    def __post_init__(self):
        check_kind(self.kind)
        if len(self.head) < 1:
            raise ValueError("head must have at least one difference")
        lo = 0 if self.kind == MULTISET else 1
        if any(not lo <= h <= self.n - 1 for h in self.head):
            raise ValueError(f"head differences out of range: {self.head}")
        if not lo <= self.distinguished <= self.n:
            raise ValueError(f"distinguished value out of range: {self.distinguished}")
        if (sum(self.head) + self.distinguished) % self.n != 0:
            raise ValueError(
                f"differences {self.head + (self.distinguished,)} do not sum to 0 mod {self.n}"
            )
        if (self.head + (self.distinguished,)).count(self.distinguished) != 1:
            raise ValueError(
                f"distinguished value {self.distinguished} is not unique in "
                f"{self.head + (self.distinguished,)}"
            )

    @property
    def t(self) -> int:
        return len(self.head) + 1

    @property
    def source(self) -> tuple[int, ...]:
        return self.head[:-1]

    @property
    def target(self) -> tuple[int, ...]:
        return self.head[1:]

    @property
    def label(self) -> str:
        return "(%s;%d)" % (",".join(str(h) for h in self.head), self.distinguished)


@dataclass(frozen=True)
class TransitionGraph:
    n: int
    t: int
    kind: str
    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[FormRep, ...]


def representative_candidates(c: DifferenceClass) -> list[int]:
    """Values usable as the class representative, largest first.

    A value qualifies when it occurs exactly once among the parts and the
    remaining parts stay within the interior-difference range.
    """
    counts = Counter(c.parts)
    hi = c.n - 1  # interior differences never reach n
    out = [v for v, k in counts.items() if k == 1 and all(
        p <= hi for p in c.parts if p != v
    )]
    return sorted(out, reverse=True)


def choose_representative(c: DifferenceClass, value: int | None = None) -> DifferenceClass:
    """Pick the distinguished value of a class (largest candidate by default)."""
    candidates = representative_candidates(c)
    if not candidates:
        raise BadPattern(
            f"class [{','.join(str(p) for p in c.parts)}] with pattern "
            f"<{','.join(str(m) for m in pattern_of(c).multiplicities)}> "
            f"has no usable representative"
        )
    if value is None:
        value = candidates[0]
    elif value not in candidates:
        raise BadPattern(f"{value} cannot represent class {c.parts}")
    return c.with_distinguished(value)


def forms_of_class(c: DifferenceClass) -> list[FormRep]:
    """All forms of a class, one per distinct ordering of the non-distinguished
    parts.  Distinct orderings give inequivalent forms because the
    distinguished value occurs only once."""
    if c.distinguished is None:
        raise ValueError("class has no distinguished value; call choose_representative")
    rest = list(c.parts)
    rest.remove(c.distinguished)
    heads = sorted(set(permutations(rest)))
    return [FormRep(h, c.distinguished, c.n, c.kind) for h in heads]


def build_graph(
    n: int,
    t: int,
    kind: str = MULTISET,
    choices: dict[tuple[int, ...], int] | None = None,
) -> TransitionGraph:
    """Build the transition graph for (n, t, kind).

    ``choices`` optionally maps class part-tuples to representative values;
    classes not mentioned use the default policy.
    """
    if t < 3:
        raise ValueError("transition graphs need t >= 3; smaller t has direct constructions")
    edges: list[FormRep] = []
    for c in enumerate_classes(n, t, kind):
        value = None if choices is None else choices.get(c.parts)
        rep = choose_representative(c, value)
        edges.extend(forms_of_class(rep))
    vertices = sorted({e.source for e in edges} | {e.target for e in edges})
    return TransitionGraph(n, t, kind, tuple(vertices), tuple(edges))


def _edges_eulerian(edges) -> bool:
    if not edges:
        return False
    out_deg = Counter(e.source for e in edges)
    in_deg = Counter(e.target for e in edges)
    active = set(out_deg) | set(in_deg)
    if any(out_deg[v] != in_deg[v] for v in active):
        return False
    neighbors = defaultdict(set)
    for e in edges:
        neighbors[e.source].add(e.target)
        neighbors[e.target].add(e.source)
    seen = set()
    stack = [next(iter(active))]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(neighbors[v] - seen)
    return seen == active


def is_eulerian(g: TransitionGraph) -> bool:
    """In-degree equals out-degree everywhere and one weak component
    carries all edges (which then makes the graph strongly connected)."""
    return _edges_eulerian(g.edges)


def eulerian_circuit(g: TransitionGraph, seed: int | None = None) -> list[FormRep]:
    """One eulerian circuit of the graph, as an edge list (Hierholzer).

    With seed None the adjacency lists are sorted by (head, distinguished)
    and the walk starts at the smallest vertex, which makes the circuit a
    reproducible golden value; an integer seed deterministically shuffles
    the adjacency lists instead, as an escape hatch to other circuits.
    """
    if not is_eulerian(g):
        raise NotEulerian(f"transition graph for (n={g.n}, t={g.t}, {g.kind}) is not eulerian")
    adj: dict[tuple, list[FormRep]] = defaultdict(list)
    for e in g.edges:
        adj[e.source].append(e)
    for v in adj:
        adj[v].sort(key=lambda e: (e.head, e.distinguished))
    if seed is not None:
        import random

        rng = random.Random(seed)
        for v in sorted(adj):
            rng.shuffle(adj[v])

    start = min(adj)
    ptr = {v: 0 for v in adj}
    stack: list[tuple[tuple, FormRep | None]] = [(start, None)]
    out: list[FormRep] = []
    while stack:
        v, e_in = stack[-1]
        pending = adj.get(v, ())
        i = ptr.get(v, 0)
        if i < len(pending):
            ptr[v] = i + 1
            e = pending[i]
            stack.append((e.target, e))
        else:
            stack.pop()
            if e_in is not None:
                out.append(e_in)
    circuit = list(reversed(out))
    if len(circuit) != len(g.edges):
        raise NotEulerian("circuit failed to use every edge; graph is disconnected")
    return circuit


def difference_string(circuit: list[FormRep]) -> list[int]:
    """Per-edge differences along a circuit: the first head entry of each
    edge, so that the i-th length-(t-1) window of the (cyclic) result is
    exactly the head of the i-th edge."""
    return [e.head[0] for e in circuit]


def emit_cycle(circuit: list[FormRep], n: int, t: int, kind: str = MULTISET) -> CyclicSequence:
    """Repeat the circuit's difference block n times, integrating from 1.

    The block shift (sum of the block mod n) must be coprime to n or the
    blocks would revisit starting symbols; otherwise NotCoprimeShift.
    """
    if not circuit:
        raise ValueError("empty circuit")
    d = difference_string(circuit)
    m = len(d)
    shift = sum(d) % n
    if math.gcd(shift, n) != 1:
        raise NotCoprimeShift(
            f"block shift {shift} is not coprime to {n}; blocks would repeat"
        )
    symbols = [1]
    for k in range(n * m - 1):
        symbols.append((symbols[-1] - 1 + d[k % m]) % n + 1)
    return CyclicSequence(tuple(symbols), n, t, kind)


def _assignment_space(classes: list[DifferenceClass]) -> list[list[int]]:
    space = []
    for c in classes:
        candidates = representative_candidates(c)
        if not candidates:
            choose_representative(c)  # raises BadPattern with a useful message
        space.append(candidates)
    return space


def _assignments(space: list[list[int]]):
    # all-defaults first, then assignments ordered by how many classes
    # deviate from their default; covers the whole product eventually
    base = tuple(lst[0] for lst in space)
    yield base
    flexible = [i for i, lst in enumerate(space) if len(lst) > 1]
    for width in range(1, len(flexible) + 1):
        for idxs in combinations(flexible, width):
            for alts in product(*([space[i][1:] for i in idxs])):
                a = list(base)
                for i, v in zip(idxs, alts):
                    a[i] = v
                yield tuple(a)


def construct_cycle(
    n: int,
    t: int,
    kind: str = MULTISET,
    seed: int | None = None,
    max_assignments: int = 10_000,
) -> CyclicSequence:
    """Full pipeline: classes -> representatives -> graph -> circuit -> cycle.

    The default representative policy (largest usable value per class) is
    tried first.  If it yields a non-eulerian graph or a block shift not
    coprime to n, alternative assignments are tried in a deterministic
    order (fewest deviations from the default first), bounded by
    ``max_assignments``; succeeding on a retry is logged as a finding.
    """
    classes = enumerate_classes(n, t, kind)
    space = _assignment_space(classes)
    # per-class, per-candidate edge lists and their first-difference sums
    forms_cache: list[dict[int, list[FormRep]]] = []
    shift_cache: list[dict[int, int]] = []
    for c, candidates in zip(classes, space):
        by_value = {v: forms_of_class(c.with_distinguished(v)) for v in candidates}
        forms_cache.append(by_value)
        shift_cache.append({v: sum(e.head[0] for e in es) for v, es in by_value.items()})

    default_eulerian = None
    shift_failures = 0
    eulerian_failures = 0
    for count, assignment in enumerate(islice(_assignments(space), max_assignments)):
        shift = sum(sc[v] for sc, v in zip(shift_cache, assignment)) % n
        if math.gcd(shift, n) != 1:
            shift_failures += 1
            if count == 0:
                logger.warning(
                    "(n=%d, t=%d, %s) default representatives: block shift %d "
                    "not coprime to %d; retrying with other representatives",
                    n, t, kind, shift, n,
                )
            continue
        edges = [e for fc, v in zip(forms_cache, assignment) for e in fc[v]]
        eulerian = _edges_eulerian(edges)
        if count == 0:
            default_eulerian = eulerian
        if not eulerian:
            eulerian_failures += 1
            continue
        vertices = sorted({e.source for e in edges} | {e.target for e in edges})
        g = TransitionGraph(n, t, kind, tuple(vertices), tuple(edges))
        cycle = emit_cycle(eulerian_circuit(g, seed), n, t, kind)
        if count > 0:
            logger.warning(
                "(n=%d, t=%d, %s): default representatives failed; succeeded at "
                "assignment %d (skipped %d non-coprime shifts, %d non-eulerian)",
                n, t, kind, count, shift_failures, eulerian_failures,
            )
        return cycle
    if default_eulerian is False and shift_failures == 0:
        raise NotEulerian(
            f"no representative assignment among {max_assignments} tried gives an "
            f"eulerian transition graph for (n={n}, t={t}, {kind})"
        )
    raise NotCoprimeShift(
        f"no representative assignment among {max_assignments} tried gives an "
        f"eulerian graph with block shift coprime to {n} for (n={n}, t={t}, {kind})"
    )


def shift_graph_down(g: TransitionGraph) -> TransitionGraph:
    """Image of a subset-kind graph under decreasing every coordinate of
    every vertex and edge by one: a multiset-kind graph on [n-t]."""
    if g.kind != SUBSET:
        raise ValueError("shift_graph_down expects a subset-kind graph")
    n = g.n - g.t
    edges = tuple(
        FormRep(tuple(h - 1 for h in e.head), e.distinguished - 1, n, MULTISET)
        for e in g.edges
    )
    vertices = tuple(tuple(x - 1 for x in v) for v in g.vertices)
    return TransitionGraph(n, g.t, MULTISET, vertices, edges)


def render_dot(g: TransitionGraph) -> str:
    """Graph as deterministic DOT text: one line per vertex and per edge."""

    def vid(v: tuple[int, ...]) -> str:
        return ",".join(str(x) for x in v)

    lines = [f"digraph transition_{g.kind}_{g.n}_{g.t} {{"]
    for v in sorted(g.vertices):
        lines.append(f'  "{vid(v)}";')
    for e in sorted(g.edges, key=lambda e: (e.source, e.head, e.distinguished)):
        lines.append(f'  "{vid(e.source)}" -> "{vid(e.target)}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

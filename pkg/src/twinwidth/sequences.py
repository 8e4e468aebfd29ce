"""Contraction sequences, width verification, and the uncontraction view.

Certificate id convention: the original graph's vertices are 0..n-1 and
the product of the j-th contraction (0-based) is the fresh id n+j, so a
full sequence uses ids 0..2n-2.  Certificates store only the (u, v) pairs;
product ids are recomputed deterministically on replay.
"""

from dataclasses import dataclass

from .graphs import Graph, Trigraph, pair
from .partitions import VertexPartition


class SequenceError(ValueError):
    """A malformed contraction or uncontraction sequence."""


@dataclass(frozen=True)
class ContractionStep:
    u: int
    v: int
    product: int


@dataclass(frozen=True)
class ContractionSequence:
    """n-1 pair-merges turning an n-vertex graph into a single vertex."""

    n: int
    steps: tuple[ContractionStep, ...]

    def __post_init__(self):
        if self.n < 1:
            raise SequenceError("sequences are defined for graphs with at least one vertex")
        if len(self.steps) != self.n - 1:
            raise SequenceError(f"expected {self.n - 1} steps, got {len(self.steps)}")
        for j, s in enumerate(self.steps):
            if s.product != self.n + j:
                raise SequenceError(f"step {j} product id {s.product}, expected {self.n + j}")
            if s.u == s.v:
                raise SequenceError(f"step {j} contracts {s.u} with itself")

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((s.u, s.v) for s in self.steps)


def sequence_from_pairs(n: int, pairs_list) -> ContractionSequence:
    steps = tuple(
        ContractionStep(min(u, v), max(u, v), n + j) for j, (u, v) in enumerate(pairs_list)
    )
    return ContractionSequence(n, steps)


class _Replay:
    """Mutable replay state over certificate ids; used by the verifiers."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.black: dict[int, set[int]] = {v: set(g.adj[v]) for v in range(g.n)}
        self.red: dict[int, set[int]] = {v: set() for v in range(g.n)}

    def live(self) -> set[int]:
        return set(self.black)

    def apply(self, step: ContractionStep) -> None:
        u, v, x0 = step.u, step.v, step.product
        if u not in self.black or v not in self.black:
            raise SequenceError(f"step merges dead or unknown vertex in ({u},{v})")
        drop = {u, v}
        n1 = (self.black[u] | self.red[u]) - drop
        n2 = (self.black[v] | self.red[v]) - drop
        reds = ((self.red[u] | self.red[v]) - drop) | (n1 ^ n2)
        blacks = (n1 | n2) - reds
        for w in (self.black.pop(u) | self.black.pop(v)) - drop:
            self.black[w].discard(u)
            self.black[w].discard(v)
        for w in (self.red.pop(u) | self.red.pop(v)) - drop:
            self.red[w].discard(u)
            self.red[w].discard(v)
        self.black[x0] = blacks
        self.red[x0] = reds
        for w in blacks:
            self.black[w].add(x0)
        for w in reds:
            self.red[w].add(x0)

    def max_red_degree(self) -> int:
        return max((len(s) for s in self.red.values()), default=0)

    def snapshot(self) -> Trigraph:
        verts = frozenset(self.black)
        black = frozenset(pair(u, v) for u in self.black for v in self.black[u] if u < v)
        red = frozenset(pair(u, v) for u in self.red for v in self.red[u] if u < v)
        return Trigraph(verts, black, red)


def _check_shape(g: Graph, s: ContractionSequence) -> None:
    if s.n != g.n:
        raise SequenceError(f"sequence is for n={s.n}, graph has n={g.n}")


def width_trace(g: Graph, s: ContractionSequence) -> list[int]:
    """Max red degree of the trigraph after each step (length n-1)."""
    _check_shape(g, s)
    state = _Replay(g)
    trace = []
    for step in s.steps:
        state.apply(step)
        trace.append(state.max_red_degree())
    return trace


def verify_width(g: Graph, s: ContractionSequence) -> int:
    """Exact maximum red degree over all trigraphs of the sequence.

    The sequence "has width <= d" iff the result is <= d.  The initial
    trigraph is the graph itself and contributes red degree 0.
    """
    return max(width_trace(g, s), default=0)


def apply_prefix(g: Graph, s: ContractionSequence, i: int) -> Trigraph:
    """The trigraph after the first i contractions, on certificate ids."""
    _check_shape(g, s)
    if not (0 <= i <= g.n - 1):
        raise SequenceError(f"prefix length {i} out of range")
    state = _Replay(g)
    for step in s.steps[:i]:
        state.apply(step)
    return state.snapshot()


@dataclass(frozen=True)
class Split:
    """One refinement step: `parent` splits into two nonempty parts."""

    parent: int
    id_a: int
    set_a: frozenset[int]
    id_b: int
    set_b: frozenset[int]


@dataclass(frozen=True)
class UncontractionSequence:
    """Chain of partitions from {V} to singletons, splitting one part per step."""

    n: int
    root_id: int
    splits: tuple[Split, ...]

    def __post_init__(self):
        if len(self.splits) != self.n - 1:
            raise SequenceError(f"expected {self.n - 1} splits, got {len(self.splits)}")


def partitions_at(u: UncontractionSequence, i: int) -> VertexPartition:
    """The i-th partition of the chain; i=1 is {V}, i=n is singletons."""
    if not (1 <= i <= u.n):
        raise SequenceError(f"partition index {i} out of range 1..{u.n}")
    parts: dict[int, frozenset[int]] = {u.root_id: frozenset(range(u.n))}
    for sp in u.splits[: i - 1]:
        if sp.parent not in parts:
            raise SequenceError(f"split of unknown part {sp.parent}")
        whole = parts.pop(sp.parent)
        if sp.set_a | sp.set_b != whole or (sp.set_a & sp.set_b) or not sp.set_a or not sp.set_b:
            raise SequenceError(f"split of part {sp.parent} is not a two-way partition of it")
        parts[sp.id_a] = sp.set_a
        parts[sp.id_b] = sp.set_b
    return VertexPartition(u.n, tuple(sorted(parts.items())))


def invert(g: Graph, s: ContractionSequence) -> UncontractionSequence:
    """The partition view of a contraction sequence.

    The k-part partition groups original vertices by the live vertex they
    contracted into; part ids are the live certificate ids, and split i
    undoes the (n-i)-th contraction.
    """
    _check_shape(g, s)
    members: dict[int, frozenset[int]] = {v: frozenset((v,)) for v in range(g.n)}
    live = set(range(g.n))
    for step in s.steps:
        if step.u not in live or step.v not in live:
            raise SequenceError(f"step merges dead or unknown vertex in ({step.u},{step.v})")
        members[step.product] = members[step.u] | members[step.v]
        live -= {step.u, step.v}
        live.add(step.product)
    root = g.n + len(s.steps) - 1 if s.steps else 0
    splits = tuple(
        Split(st.product, min(st.u, st.v), members[min(st.u, st.v)],
              max(st.u, st.v), members[max(st.u, st.v)])
        for st in reversed(s.steps)
    )
    return UncontractionSequence(g.n, root, splits)


def uncontraction_from_chain(n: int, chain) -> UncontractionSequence:
    """Build an uncontraction sequence from an explicit partition chain.

    `chain` lists n partitions as iterables of vertex sets, starting at
    {V} and ending at singletons, each refining the previous by splitting
    exactly one part.  Part ids are each part's minimum vertex.
    """
    levels = [sorted(frozenset(b) for b in level) for level in chain]
    if len(levels) != n:
        raise SequenceError(f"chain must have {n} partitions, got {len(levels)}")
    if levels[0] != [frozenset(range(n))]:
        raise SequenceError("chain must start at the one-part partition")
    splits = []
    for i in range(1, n):
        prev, cur = set(levels[i - 1]), set(levels[i])
        gone, new = prev - cur, cur - prev
        if len(gone) != 1 or len(new) != 2:
            raise SequenceError(f"chain step {i} does not split exactly one part in two")
        (parent,) = gone
        a, b = sorted(new, key=min)
        if a | b != parent:
            raise SequenceError(f"chain step {i} children do not cover the split part")
        splits.append(Split(min(parent), min(a), a, min(b), b))
    return UncontractionSequence(n, 0, tuple(splits))


def sequence_relabel(s: ContractionSequence, perm) -> ContractionSequence:
    """Rename original vertices by perm; product ids are positional and stay."""

    def f(x: int) -> int:
        return perm[x] if x < s.n else x

    return sequence_from_pairs(s.n, ((f(st.u), f(st.v)) for st in s.steps))

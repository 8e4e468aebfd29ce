"""Vertex partitions and their quotient trigraphs.

The quotient of (G, P) has one vertex per part; parts P1, P2 are joined
iff some G-edge crosses P1 x P2, and the edge is red iff the crossing is
not complete.  A part pair with zero crossing edges is a non-edge, not a
black edge.
"""

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, Trigraph, pair


@dataclass(frozen=True)
class VertexPartition:
    """Partition of 0..n-1 into nonempty parts, each with a stable id."""

    n: int
    parts: tuple[tuple[int, frozenset[int]], ...]

    def __post_init__(self):
        seen: set[int] = set()
        ids = set()
        for pid, members in self.parts:
            if pid in ids:
                raise ValueError(f"duplicate part id {pid}")
            ids.add(pid)
            if not members:
                raise ValueError(f"empty part {pid}")
            if members & seen:
                raise ValueError("parts are not disjoint")
            seen |= members
        if seen != set(range(self.n)):
            raise ValueError("parts do not cover 0..n-1")

    @cached_property
    def by_id(self) -> dict[int, frozenset[int]]:
        return dict(self.parts)

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        owner = [0] * self.n
        for pid, members in self.parts:
            for v in members:
                owner[v] = pid
        return tuple(owner)

    def ids(self) -> tuple[int, ...]:
        return tuple(pid for pid, _ in self.parts)

    def members(self, pid: int) -> frozenset[int]:
        try:
            return self.by_id[pid]
        except KeyError:
            raise ValueError(f"unknown part id {pid}") from None

    def size(self, pid: int) -> int:
        return len(self.members(pid))

    def __len__(self) -> int:
        return len(self.parts)


def partition_from_blocks(n: int, blocks, ids=None) -> VertexPartition:
    """Build a partition; default part ids are each block's minimum vertex."""
    blocks = [frozenset(b) for b in blocks]
    if ids is None:
        ids = [min(b) for b in blocks if b]
    parts = tuple(sorted(zip(ids, blocks)))
    return VertexPartition(n, parts)


def singleton_partition(n: int) -> VertexPartition:
    return VertexPartition(n, tuple((v, frozenset((v,))) for v in range(n)))


@dataclass(frozen=True)
class PartitionedTrigraph:
    """A partition together with its quotient trigraph over part ids."""

    partition: VertexPartition
    quotient: Trigraph


def _cross_color(g: Graph, a: frozenset[int], b: frozenset[int]) -> str | None:
    """None / "black" / "red" for the a x b crossing in g."""
    if len(a) > len(b):
        a, b = b, a
    count = 0
    for u in a:
        count += len(g.adj[u] & b)
    if count == 0:
        return None
    return "black" if count == len(a) * len(b) else "red"


def quotient(g: Graph, p: VertexPartition) -> PartitionedTrigraph:
    """The partitioned trigraph of (g, p)."""
    if p.n != g.n:
        raise ValueError(f"partition is over {p.n} vertices, graph has {g.n}")
    black: set[tuple[int, int]] = set()
    red: set[tuple[int, int]] = set()
    items = p.parts
    for i in range(len(items)):
        pid_i, mem_i = items[i]
        for j in range(i + 1, len(items)):
            pid_j, mem_j = items[j]
            color = _cross_color(g, mem_i, mem_j)
            if color == "black":
                black.add(pair(pid_i, pid_j))
            elif color == "red":
                red.add(pair(pid_i, pid_j))
    return PartitionedTrigraph(p, Trigraph(frozenset(p.ids()), frozenset(black), frozenset(red)))


def split_part(
    g: Graph,
    pt: PartitionedTrigraph,
    parent: int,
    child_a: tuple[int, frozenset[int]],
    child_b: tuple[int, frozenset[int]],
) -> PartitionedTrigraph:
    """Refine one part into two, updating only the affected quotient edges.

    Equivalent to recomputing quotient() from scratch on the refined
    partition; kept incremental because sequence audits split one part per
    step.
    """
    p = pt.partition
    members = p.members(parent)
    ida, seta = child_a
    idb, setb = child_b
    if not seta or not setb or (seta & setb) or (seta | setb) != members:
        raise ValueError("children must split the parent part into two nonempty sets")
    for cid in (ida, idb):
        if cid != parent and cid in p.by_id:
            raise ValueError(f"child id {cid} collides with an existing part")
    new_parts = tuple(sorted(
        [(pid, mem) for pid, mem in p.parts if pid != parent] + [(ida, frozenset(seta)), (idb, frozenset(setb))]
    ))
    new_p = VertexPartition(p.n, new_parts)
    black = {e for e in pt.quotient.black if parent not in e}
    red = {e for e in pt.quotient.red if parent not in e}
    # the child-child pair is recomputed twice with the same color; sets dedupe
    for cid, cset in ((ida, frozenset(seta)), (idb, frozenset(setb))):
        for pid, mem in new_parts:
            if pid == cid:
                continue
            color = _cross_color(g, cset, mem)
            e = pair(cid, pid)
            if color == "black":
                black.add(e)
            elif color == "red":
                red.add(e)
    return PartitionedTrigraph(new_p, Trigraph(frozenset(new_p.ids()), frozenset(black), frozenset(red)))

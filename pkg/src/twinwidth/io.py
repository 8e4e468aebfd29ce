"""Text and JSON formats.

Text formats are 1-indexed (DIMACS-like graphs, partition files, PACE
decompositions); JSON formats use the certificate id convention directly
(originals 0..n-1, products n+j).  Every writer's output round-trips
bit-exactly through the matching reader.
"""

import json

from .graphs import Graph, Trigraph, graph_from_edges
from .partitions import VertexPartition, partition_from_blocks
from .sequences import ContractionSequence, sequence_from_pairs
from .structure import MeshEmbedding
from .treewidth import TreeDecomposition


class FormatError(ValueError):
    """Unparseable input, with a 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


# ---------------------------------------------------------------- graphs


def read_dimacs(text: str) -> Graph:
    """Parse `p edge <n> <m>` followed by m `e <u> <v>` lines, 1-indexed."""
    n = None
    m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise FormatError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise FormatError(lineno, f"expected 'p edge <n> <m>', got {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(lineno, "non-integer counts in problem line") from None
            if n < 0 or m < 0:
                raise FormatError(lineno, "negative counts in problem line")
        elif parts[0] == "e":
            if n is None:
                raise FormatError(lineno, "edge before problem line")
            if len(parts) != 3:
                raise FormatError(lineno, f"expected 'e <u> <v>', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(lineno, "non-integer endpoint") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(lineno, f"endpoint out of range 1..{n}")
            if u == v:
                raise FormatError(lineno, "loops are not allowed")
            e = (min(u, v) - 1, max(u, v) - 1)
            if e in edges:
                raise FormatError(lineno, f"duplicate edge {u} {v}")
            edges.append(e)
        else:
            raise FormatError(lineno, f"unrecognized line {line!r}")
    if n is None:
        raise FormatError(1, "missing problem line")
    if len(edges) != m:
        raise FormatError(1, f"problem line promises {m} edges, file has {len(edges)}")
    return graph_from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def trigraph_to_dot(t: Trigraph, name: str = "trigraph") -> str:
    lines = [f"graph {name} {{"]
    for v in sorted(t.vertices):
        lines.append(f"  {v};")
    for u, v in sorted(t.black):
        lines.append(f"  {u} -- {v};")
    for u, v in sorted(t.red):
        lines.append(f"  {u} -- {v} [color=red];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------- sequences


def sequence_to_json(s: ContractionSequence) -> str:
    payload = {"n": s.n, "steps": [{"u": u, "v": v} for u, v in s.pairs()]}
    return json.dumps(payload, sort_keys=True) + "\n"


def sequence_from_json(text: str) -> ContractionSequence:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    if not isinstance(payload, dict) or "n" not in payload or "steps" not in payload:
        raise FormatError(1, "certificate must be an object with 'n' and 'steps'")
    steps = payload["steps"]
    if not isinstance(steps, list) or any(not isinstance(x, dict) or "u" not in x or "v" not in x for x in steps):
        raise FormatError(1, "'steps' must be a list of {u, v} objects")
    return sequence_from_pairs(int(payload["n"]), [(int(x["u"]), int(x["v"])) for x in steps])


def verdict_to_json(width: int, trace: list[int]) -> str:
    return json.dumps({"trace": trace, "width": width}, sort_keys=True) + "\n"


# ------------------------------------------------------------ partitions


def read_partition(text: str, n: int) -> VertexPartition:
    """One line per part, space-separated 1-indexed vertex ids.

    Part ids are 1-based line positions (blank and comment lines skipped).
    """
    blocks = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        try:
            vals = [int(x) for x in line.split()]
        except ValueError:
            raise FormatError(lineno, "non-integer vertex id") from None
        for x in vals:
            if not (1 <= x <= n):
                raise FormatError(lineno, f"vertex {x} out of range 1..{n}")
        blocks.append(frozenset(x - 1 for x in vals))
    try:
        return partition_from_blocks(n, blocks, ids=list(range(1, len(blocks) + 1)))
    except ValueError as exc:
        raise FormatError(1, str(exc)) from None


def write_partition(p: VertexPartition) -> str:
    lines = [" ".join(str(v + 1) for v in sorted(members)) for _, members in p.parts]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------- decompositions


def read_pace_td(text: str) -> TreeDecomposition:
    """PACE-style: `s td <#bags> <width+1> <n>`, `b <id> <v...>`, edges."""
    header = None
    bags: dict[int, frozenset[int]] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise FormatError(lineno, "duplicate solution line")
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError(lineno, f"expected 's td <bags> <width+1> <n>', got {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            except ValueError:
                raise FormatError(lineno, "non-integer value in solution line") from None
        elif parts[0] == "b":
            if header is None:
                raise FormatError(lineno, "bag before solution line")
            try:
                bid = int(parts[1])
                verts = [int(x) for x in parts[2:]]
            except (IndexError, ValueError):
                raise FormatError(lineno, "malformed bag line") from None
            if bid in bags:
                raise FormatError(lineno, f"duplicate bag id {bid}")
            for x in verts:
                if not (1 <= x <= header[2]):
                    raise FormatError(lineno, f"bag vertex {x} out of range 1..{header[2]}")
            bags[bid] = frozenset(x - 1 for x in verts)
        else:
            if header is None:
                raise FormatError(lineno, "edge before solution line")
            if len(parts) != 2:
                raise FormatError(lineno, f"expected a bag-tree edge, got {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise FormatError(lineno, "non-integer bag id in edge") from None
    if header is None:
        raise FormatError(1, "missing solution line")
    if len(bags) != header[0]:
        raise FormatError(1, f"solution line promises {header[0]} bags, file has {len(bags)}")
    td = TreeDecomposition(tuple(sorted(bags.items())), tuple(edges))
    if header[1] != td.width + 1:
        raise FormatError(1, f"solution line promises width {header[1] - 1}, bags give {td.width}")
    return td


def write_pace_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for bid, bag in sorted(td.bags):
        lines.append("b " + " ".join([str(bid)] + [str(v + 1) for v in sorted(bag)]))
    lines.extend(f"{a} {b}" for a, b in sorted(td.edges))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- meshes


def mesh_to_json(me: MeshEmbedding) -> str:
    payload = {"N": me.n, "cols": [list(c) for c in me.cols], "rows": [list(r) for r in me.rows]}
    return json.dumps(payload, sort_keys=True) + "\n"


def mesh_from_json(text: str) -> MeshEmbedding:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.lineno, f"invalid JSON: {exc.msg}") from None
    for key in ("N", "rows", "cols"):
        if key not in payload:
            raise FormatError(1, f"mesh object missing {key!r}")
    return MeshEmbedding(
        int(payload["N"]),
        tuple(tuple(int(v) for v in row) for row in payload["rows"]),
        tuple(tuple(int(v) for v in col) for col in payload["cols"]),
    )

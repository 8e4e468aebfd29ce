#!/usr/bin/env python3
"""The invariant laboratory: witness states, the split automaton, audits,
the mesh-driven search, and the certify-or-refute pipeline.

A witness is a red path X1-X2-X3-X4 of big parts with X1, X4 detached and
s + ||Nb(X2)|| + ||Nb(X3)|| >= 4t.  On biclique-free graphs inside
width-2 sequences the automaton keeps it alive forever, which is exactly
why no such sequence can finish; watching it die on a concrete split is
the whole point of this lab.
"""

from twinwidth import (
    Split,
    advance_witness,
    audit_sequence,
    black_neighborhood_weight,
    check_path_layout,
    check_witness,
    cycle_graph,
    find_mesh_witness,
    graph_from_edges,
    grid_graph,
    partition_from_blocks,
    pipeline_certify,
    quotient,
    uncontraction_from_chain,
)

# four blobs of 8 joined by 8 disjoint paths: the canonical witness host
size, blocks = 8, 4
edges = []
for i in range(size):
    chain = [i + size * b for b in range(blocks)]
    edges.extend(zip(chain, chain[1:]))
g = graph_from_edges(size * blocks, edges)
x = [frozenset(range(size * b, size * (b + 1))) for b in range(blocks)]
p = partition_from_blocks(g.n, x)

print("== validating a witness ==")
w = check_witness(g, p, 0, 8, 16, 24, t=2)
print(f"s={w.s}, w2={w.w2}, w3={w.w3}  (needs >= {4 * w.t})")
print("path layout:", check_path_layout(g, p, 0, 8, 16, 24))
pt = quotient(g, p)
print("black weight around X2:", black_neighborhood_weight(pt, 8))

print("\n== advancing through a split ==")
lead = 0
split = Split(0, 0, x[0] - {lead + 1}, lead + 1, frozenset({lead + 1}))
rep = advance_witness(g, p, w, split)
print("verdict:", rep.verdict, "| case:", rep.case)
print("successor:", rep.successor)

print("\n== auditing a whole chain ==")
chain = [
    [x[0] | x[1] | x[2] | x[3]],
    [x[0] | x[1], x[2] | x[3]],
    [x[0], x[1], x[2] | x[3]],
    [x[0], x[1], x[2], x[3]],
]
while len(chain) < g.n:
    last = chain[-1]
    big = min((b for b in last if len(b) >= 2), key=min)
    v = min(big)
    chain.append([b for b in last if b is not big] + [frozenset([v]), big - {v}])
u = uncontraction_from_chain(g.n, chain)
print("audit verdict:", audit_sequence(g, u, w, 2))
print("(the chain either escapes width 2 or the automaton forces a contradiction)")

print("\n== the certify-or-refute pipeline ==")
for name, host in [("C5", cycle_graph(5)), ("C4", cycle_graph(4)), ("5x5 grid", grid_graph(5))]:
    r = pipeline_certify(host, t=2, k=3)
    extra = f" width {r.width} <= {r.bound}" if r.status == "sequence" else ""
    flag = " (conditional)" if r.conditional else ""
    print(f"{name:8s} -> {r.status}{flag}{extra}")

print("\n== mesh-driven witness search on an engineered chain ==")
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from plants import planted_cases  # noqa: E402

plant = planted_cases()[0]
hit = find_mesh_witness(plant.g, plant.useq, plant.mesh, plant.k, plant.t)
print("plant:", plant.name)
print("found:", hit)
print("expected:", plant.expected)

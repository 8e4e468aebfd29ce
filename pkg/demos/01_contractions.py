#!/usr/bin/env python3
"""Contractions and quotients, step by step.

Merging two vertices keeps their shared black neighbours black; everything
inherited red or seen by only one side turns red.  The same red/black rule
falls out of partitions: a quotient edge is black exactly when the
crossing between the two parts is complete.
"""

from twinwidth import (
    contract,
    cycle_graph,
    max_red_degree,
    partition_from_blocks,
    path_graph,
    quotient,
    trigraph_from_graph,
)
from twinwidth.io import trigraph_to_dot

print("== contracting a path ==")
p4 = path_graph(4)
t = trigraph_from_graph(p4)
print("P4 as a trigraph:", sorted(t.black), "red:", sorted(t.red))
t1 = contract(t, 0, 1)
print("after contract(0,1):", "black", sorted(t1.black), "red", sorted(t1.red))
print("the merged vertex sees 2 through only one side, so the edge is red")
print("max red degree:", max_red_degree(t1))

print("\n== twins merge for free ==")
p3 = trigraph_from_graph(path_graph(3))
print("contract(0,2) on P3:", sorted(contract(p3, 0, 2).black), "red:", sorted(contract(p3, 0, 2).red))

print("\n== a cycle resists ==")
c5 = trigraph_from_graph(cycle_graph(5))
t2 = contract(c5, 0, 1)
print("contract(0,1) on C5 reds both boundary edges:", sorted(t2.red))

print("\n== quotients are the partition view of the same rule ==")
c4 = cycle_graph(4)
pt = quotient(c4, partition_from_blocks(4, [{0, 2}, {1}, {3}]))
print("C4 / {{0,2},{1},{3}}: black", sorted(pt.quotient.black), "red", sorted(pt.quotient.red))
print("both crossings are complete, hence black")

print("\n== DOT export (red edges carry color=red) ==")
print(trigraph_to_dot(t2), end="")

#!/usr/bin/env python3
"""Structural families: walls, cubic meshes, the spiked-path family,
biclique detection, and disjoint-path duality.

The spiked-path family shows width 3 is a different world from width 2:
it is biclique-free, its tree-width grows with N, yet a fixed-shape
sequence contracts it at red degree 3.
"""

from twinwidth import (
    gen_tww3_family,
    gen_wall,
    grid_graph,
    has_ktt,
    max_disjoint_paths,
    min_vertex_cut,
    subdivide_wall,
    treewidth_exact,
    tww3_family_sequence,
    verify_mesh,
    verify_width,
    wall_to_mesh,
)

print("== walls and meshes ==")
wall, wl = gen_wall(8)
print(f"wall(8): {wall.n} vertices, {wall.m} edges, biclique-free: {has_ktt(wall, 2) is None}")
mesh = wall_to_mesh(wall, wl, 3)
print(f"3x3 mesh inside it: {len(mesh.branching)} branching vertices, valid: {verify_mesh(wall, mesh)[0]}")
sub, swl = subdivide_wall(wall, wl, 1)
smesh = wall_to_mesh(sub, swl, 3)
print(f"after subdividing every edge once the mesh survives: {verify_mesh(sub, smesh)[0]}")

print("\n== the spiked-path family ==")
for n in (2, 3, 5, 10):
    g, _ = gen_tww3_family(n)
    width = verify_width(g, tww3_family_sequence(n))
    print(f"N={n:2d}: {g.n:3d} vertices, K_2,2-free: {has_ktt(g, 2) is None}, sequence width {width}")
for n in (2, 3):
    g, _ = gen_tww3_family(n)
    print(f"N={n}: tree-width {treewidth_exact(g).width} >= {n}")

print("\n== biclique detection ==")
print("C4 viewed as K_{2,2}:", has_ktt(grid_graph(2), 2))
print("a grid has one in every unit square:", has_ktt(grid_graph(4), 2))

print("\n== disjoint paths meet their separator ==")
g = grid_graph(3)
left, right = {0, 3, 6}, {2, 5, 8}
count, paths = max_disjoint_paths(g, left, right)
cut = min_vertex_cut(g, left, right)
print(f"3x3 grid, left to right: {count} disjoint paths, separator {sorted(cut)}")
for p in paths:
    print("  path:", p)

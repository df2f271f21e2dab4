"""Covers and transversals, from scratch.

A cover equips every vertex with a color list and every edge with a
matching between the endpoint lists.  Coloring then means picking one
color per vertex so that no matched pair is chosen on any edge.  With the
matchings set to plain equality this is ordinary list coloring; with other
matchings it can be strictly harder.
"""

from dpcolor import (bfs_tree_edges, build_from_rotation, cover_graph,
                     diagonal_cover, find_transversal, full_cover,
                     straighten, table_chooser)

# the 4-cycle 0-1-2-3, outer face chosen automatically
c4 = build_from_rotation(4, [(1, 3), (2, 0), (3, 1), (0, 2)])
print("graph: 4-cycle,", c4.edge_count, "edges,", len(c4.faces), "faces")

# 1. equality matchings = list coloring. Two colors suffice on an even cycle.
cov = diagonal_cover(c4, [(1, 2)] * 4)
t = find_transversal(cover_graph(c4, cov))
print("\nequality matchings, lists {1,2}:")
print("  transversal:", t.assignment)

# 2. twist a single edge: match 1<->2 across edge (0,1). Now the parity
#    trick fails and two colors are no longer enough.
twisted = full_cover(c4, 2, table_chooser({(0, 1): (2, 1)}))
print("\none twisted edge, lists {1,2}:")
print("  transversal:", find_transversal(cover_graph(c4, twisted)))

# 3. with three colors every matching assignment is beatable.
for k in (2, 3):
    cov3 = full_cover(c4, k, table_chooser({(0, 1): tuple(
        range(2, k + 1)) + (1,)}))
    t = find_transversal(cover_graph(c4, cov3))
    print(f"  k={k}, cyclic twist on one edge ->",
          t.assignment if t else "no transversal")

# 4. straightening: renaming colors vertex by vertex makes any spanning
#    tree's matchings plain equalities without changing solvability.
out, cert = straighten(c4, twisted, bfs_tree_edges(c4))
print("\nstraightened along a spanning tree:")
for u, v in c4.edges():
    print(f"  edge {u}-{v}: {'straight' if out.is_straight(u, v) else out.matching(u, v)}")
print("  certificate verifies:", cert.verify(out))
print("  the twist moved to the one non-tree edge; it cannot be renamed away")

"""Structural detection: classes, triangle patches, good and bad cycles.

Two hereditary classes organize everything here:

  g1 - plane graphs with no 4-cycle sharing an edge with a 5-cycle,
  g2 - plane graphs with no 4-cycle sharing an edge with a 6-cycle.

The structural checks that power the charge-redistribution audits live in
verify_structural_lemmas; precondition-type checks may legitimately fail
on a graph (that only says the graph is reducible, not faulty).
"""

from dpcolor import (build_from_rotation, class_membership, classify_cycle,
                     classify_vertices_and_faces, find_triangle_patches,
                     identify_and_reduce, verify_structural_lemmas,
                     embed_planar)

w4 = build_from_rotation(
    5, [(1, 4, 3), (2, 4, 0), (3, 4, 1), (0, 4, 2), (0, 1, 2, 3)])
print("the 4-spoke wheel: hub 4, rim 0-1-2-3, rim is the outer face")
print("  class:", class_membership(w4).label)

print("\ntriangle patches (maximal edge-glued groups of bounded 3-faces):")
for p in find_triangle_patches(w4):
    print(f"  size {p.size}: faces {p.face_ids}, vertices {sorted(p.vertices)}")

print("\ncycle classification:")
rim = classify_cycle(w4, (0, 1, 2, 3))
print("  rim 0-1-2-3: bad =", rim.is_bad, "(hub has four rim neighbors)")
tri = classify_cycle(w4, (0, 1, 4))
print("  triangle 0-1-4: bad =", tri.is_bad, "(3-cycles are always good)")

print("\nvertex/face tags on a two-triangle bowtie over one edge:")
diamond = build_from_rotation(6, [(2, 1, 3, 4), (5, 3, 0, 2), (1, 0), (0, 1),
                                  (0,), (1,)])
tags = classify_vertices_and_faces(diamond)
print("  bad 4-vertices:", sorted(tags.bad4))
print("  diamond faces:", sorted(tags.diamond_faces))

print("\nstructural checks on the wheel:")
for r in verify_structural_lemmas(w4):
    print(f"  [{r.kind}] {r.check_id}: {'holds' if r.holds else 'violated'}")
print("(the patch-edge profile check fails: on five vertices the rim "
      "4-face sits where only big faces could in a larger host)")

print("\nidentification reduction: merge two opposite neighbors of an "
      "interior 4-vertex")
edges = [(0, 1), (0, 2), (0, 3), (0, 4)]
ring2 = list(range(5, 13))
for i, v in enumerate((1, 2, 3, 4)):
    edges += [(v, ring2[2 * i]), (v, ring2[2 * i + 1])]
edges += [(ring2[i], ring2[(i + 1) % 8]) for i in range(8)]
g = embed_planar(13, edges, limit=13)
rot = g.neighbors(0)
reduced = identify_and_reduce(g, 0, (rot[0], rot[2]), mode=None)
print(f"  {g.vertex_count} vertices -> {reduced.vertex_count} "
      "(center and two neighbors removed, the other two merged)")

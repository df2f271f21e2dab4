"""dpcolor: a correspondence-coloring (DP-coloring) laboratory for plane graphs.

The package is organized around six areas:

* :mod:`dpcolor.plane_graph` - combinatorial embeddings (rotation systems),
  faces, bounded-length cycle enumeration;
* :mod:`dpcolor.cover` - list assignments, per-edge matchings, the cover
  graph, straightening along forests, canonical cover enumeration;
* :mod:`dpcolor.solver` - transversal search, precoloring extension, and
  the chromatic / list-chromatic / correspondence-chromatic numbers;
* :mod:`dpcolor.structure` - class membership, triangle patches, good and
  bad cycles, vertex/face tags, structural checks, and the identification
  reduction;
* :mod:`dpcolor.discharging` - exact-rational charge ledgers, the two
  rulesets, transfer logs, and audited runs;
* :mod:`dpcolor.io` - file formats, small-graph planar embedding, corpus
  generation (the command line lives in :mod:`dpcolor.cli`).
"""

from .plane_graph import (BadHint, Cycle, Face, InconsistentRotation,
                          NonPlanarClosure, PlaneGraph, PlaneGraphError,
                          build_from_rotation, enumerate_cycles,
                          face_shared_edges, faces)
from .cover import (BadPermutation, Cover, CoverError, CoverGraph,
                    NonPerfectTreeMatching, NotAForest,
                    StraightnessCertificate, bfs_tree_edges, cover_graph,
                    diagonal_cover, enumerate_covers, full_cover,
                    identity_chooser, make_cover, random_chooser,
                    straighten, table_chooser)
from .solver import (BudgetExceeded, ColorabilityVerdict, ExtensionSurvey,
                     InconsistentPrecoloring, Precoloring, Transversal,
                     chromatic, dp_chromatic, dp_colorable,
                     extend_precoloring, find_transversal,
                     greedy_extension_order, list_chromatic,
                     survey_precoloring_extensions)
from .structure import (BadFourCyclePresent, ClassTag, CreatesForbiddenAdjacency,
                        CreatesLoop, CreatesParallelEdge, CycleClassification,
                        LemmaReport, NotACycle, NotInternal, TrianglePatch,
                        VertexFaceBadness, class_membership, classify_cycle,
                        classify_vertices_and_faces, cycle_sides,
                        find_triangle_patches, identify_and_reduce,
                        verify_structural_lemmas)
from .discharging import (ChargeLedger, DischargingReport, RULESET_G1,
                          RULESET_G2, RULESETS, Rule, RuleSet, TagUnavailable,
                          Transfer, TransferLog, audit, initial_charges,
                          run_discharging)
from .io import (CorpusSpec, DocumentSyntaxError, GraphDocument, NotPlanar,
                 TooLargeToEmbed, corpus_generate, document_cover,
                 embed_planar, load_document, parse, parse_graph6,
                 parse_planar_code, parse_rotation_text,
                 serialize_rotation_text)

__version__ = "0.1.0"

"""Arnold's J⁺ invariant, winding numbers and rotation numbers of plane curves."""
from .constructions import (PredictedResult, SumSpec, add_interior_loop, connected_sum,
                            inner_loop_curve, interior_sum, standard_curve,
                            tunnel_interior_sum)
from .diagram import (CurveDiagram, GaussCode, canonical_form, crossing_indices,
                      from_gauss_code, label_windings, reverse_orientation,
                      to_gauss_code, trace_diagram)
from .geometry import (DoublePointRecord, PolylineCurve, ValidatedCurve, find_intersections,
                       point_winding, turning_number, validate_curve)
from .invariants import (InvariantReport, jplus_viro, report, rotation_from_windings,
                         verify_sum_identity)
from .moves import HomotopyTrace, MoveSite, apply_move, enumerate_moves, random_homotopy
from .realize import realize
from .svg import RenderSpec, render_svg
from .verify import verify_corpus

__version__ = "0.1.0"

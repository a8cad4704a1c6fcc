"""One-shot positivity report combining every criterion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisors import NOT_SPANNED, LineBundle, level_min, max_convexity, support_function
from .intersection import intersection_table, jet_level, seshadri_global
from .jets import DEFAULT_MAX_FIXED_POINTS, oracle_jet_level
from .polytope import edge_lengths, lattice_points, vertices


def _json_level(level):
    return "not-spanned" if level is NOT_SPANNED else level


@dataclass
class Report:
    jet_level: object
    convexity: object
    min_edge_length: object
    seshadri: object
    walls: list = field(default_factory=list)
    vertices: list | None = None
    h0: int = 0
    oracle_max_k: int | None = None
    oracle_level: object = None

    @property
    def criteria_agree(self) -> bool:
        values = [self.jet_level, self.convexity, self.min_edge_length, self.seshadri]
        if any(v != values[0] for v in values):
            return False
        if self.oracle_max_k is not None:
            return self.oracle_level == level_min(self.jet_level, self.oracle_max_k)
        return True

    @property
    def spanned(self) -> bool:
        return self.jet_level is not NOT_SPANNED

    def to_dict(self) -> dict:
        out = {
            "jet_level": _json_level(self.jet_level),
            "convexity": _json_level(self.convexity),
            "min_edge_length": _json_level(self.min_edge_length),
            "seshadri": _json_level(self.seshadri),
            "criteria_agree": self.criteria_agree,
            "walls": self.walls,
            "polytope": {"h0": self.h0, "vertices": self.vertices},
        }
        if self.oracle_max_k is not None:
            out["oracle"] = {"max_k": self.oracle_max_k, "level": _json_level(self.oracle_level)}
        return out


def analyze(
    L: LineBundle, oracle_k: int | None = None, max_fixed_points: int = DEFAULT_MAX_FIXED_POINTS
) -> Report:
    fan = L.fan
    psi = support_function(L)
    convexity = max_convexity(psi)
    table = intersection_table(L)
    if convexity is NOT_SPANNED:
        lengths = None
        min_edge = NOT_SPANNED
        verts = None
    else:
        lengths = edge_lengths(L)
        min_edge = min(lengths)
        verts = [list(v) for v in vertices(L)]
    walls = []
    for i, w in enumerate(fan.walls):
        walls.append(
            {
                "cones": [w.cone_a + 1, w.cone_b + 1],
                "shared_rays": [r + 1 for r in w.shared_rays],
                "intersection": table[i],
                "edge_length": None if lengths is None else lengths[i],
            }
        )
    report = Report(
        jet_level=jet_level(L),
        convexity=convexity,
        min_edge_length=min_edge,
        seshadri=seshadri_global(L),
        walls=walls,
        vertices=verts,
        h0=len(lattice_points(L)),
    )
    if oracle_k is not None:
        report.oracle_max_k = oracle_k
        report.oracle_level = oracle_jet_level(L, oracle_k, max_fixed_points)
    return report


def format_report(report: Report) -> str:
    lines = [
        f"jet level (wall intersections): {report.jet_level}",
        f"k-convexity of psi_L:          {report.convexity}",
        f"min edge length of P_L:        {report.min_edge_length}",
        f"toric Seshadri constant:       {report.seshadri}",
    ]
    if report.oracle_max_k is not None:
        lines.append(f"fixed-point jet oracle (k<={report.oracle_max_k}): {report.oracle_level}")
    lines.append(f"h0(L) = {report.h0}")
    if report.vertices is not None:
        lines.append("vertices of P_L: " + " ".join(str(tuple(v)) for v in report.vertices))
    lines.append("walls (cones | shared rays | L.V(tau) | edge length):")
    for w in report.walls:
        edge = "-" if w["edge_length"] is None else w["edge_length"]
        lines.append(
            f"  {w['cones'][0]}-{w['cones'][1]} | {w['shared_rays']} | {w['intersection']} | {edge}"
        )
    lines.append("criteria agree: " + ("yes" if report.criteria_agree else "NO"))
    return "\n".join(lines)

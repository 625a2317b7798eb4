"""CSV and SVG emission with locale-independent, reproducible formatting.

All numbers are printed with 12 significant digits ("%.12g"): enough to
round-trip the computed doubles for golden-file comparison without printing
noise beyond the precision actually carried.
"""

from __future__ import annotations

import math
from typing import Sequence

from .irregularity import PATTERN_DEGREES, IrregularityPattern, k_at
from .propagation import PathLossParams, RadioParams, isotropic_range_m, range_at_bearing
from .scenario import AsymmetryReport, ConnectivityGraph, SweepRow


def fmt(value: float) -> str:
    """Format a float with 12 significant digits, period decimal separator."""
    return format(value, ".12g")


def pattern_csv(pattern: IrregularityPattern) -> str:
    lines = ["degree,k"]
    for degree in range(PATTERN_DEGREES):
        lines.append(f"{degree},{fmt(float(pattern.k[degree]))}")
    return "\n".join(lines) + "\n"


def contour_ranges(
    pattern: IrregularityPattern,
    radio: RadioParams,
    peer_sensitivity_dbm: float,
    params: PathLossParams,
) -> list[float]:
    """Range in meters at each integer degree 0..359."""
    return [
        range_at_bearing(pattern, radio, peer_sensitivity_dbm, params, float(degree))
        for degree in range(PATTERN_DEGREES)
    ]


def contour_csv(
    pattern: IrregularityPattern,
    radio: RadioParams,
    peer_sensitivity_dbm: float,
    params: PathLossParams,
) -> str:
    ranges = contour_ranges(pattern, radio, peer_sensitivity_dbm, params)
    lines = ["degree,k,range_m"]
    for degree in range(PATTERN_DEGREES):
        k = k_at(pattern, float(degree))
        lines.append(f"{degree},{fmt(k)},{fmt(ranges[degree])}")
    return "\n".join(lines) + "\n"


def edges_csv(graph: ConnectivityGraph) -> str:
    lines = ["src,dst,prx_dbm,audible"]
    for edge in graph.edges:
        audible = "true" if edge.audible else "false"
        lines.append(f"{edge.src},{edge.dst},{fmt(edge.received_power_dbm)},{audible}")
    return "\n".join(lines) + "\n"


def summary_line(report: AsymmetryReport) -> str:
    return (
        f"pairs={report.total_pairs} symmetric={report.symmetric_links} "
        f"asymmetric={report.asymmetric_links} disconnected={report.disconnected_pairs} "
        f"asym_fraction={report.asymmetry_fraction:.6f}"
    )


def sweep_csv(rows: Sequence[SweepRow]) -> str:
    lines = ["doi,mean_asym,std,reps"]
    for row in rows:
        lines.append(
            f"{fmt(row.doi)},{fmt(row.mean_asymmetry)},{fmt(row.std_asymmetry)},{row.replications}"
        )
    return "\n".join(lines) + "\n"


_SVG_SIZE = 800
_SVG_MARGIN = 40


def contour_svg(ranges: Sequence[float], isotropic_range: float) -> str:
    """Polar plot of a range contour: closed path plus the K=1 axis circle.

    Degree 0 points along +x and degrees run counterclockwise, matching the
    bearing convention (y up).  Output is deterministic for fixed inputs:
    no timestamps, fixed precision.
    """
    center = _SVG_SIZE / 2.0
    max_r = max(max(ranges), isotropic_range)
    scale = (center - _SVG_MARGIN) / max_r

    points = []
    for degree, r in enumerate(ranges):
        theta = math.radians(degree)
        x = center + r * math.cos(theta) * scale
        y = center - r * math.sin(theta) * scale
        points.append(f"{x:.3f},{y:.3f}")
    path = "M" + " L".join(points) + " Z"

    iso_px = isotropic_range * scale
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" height="{_SVG_SIZE}" '
        f'viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">\n'
        f'  <rect width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="white"/>\n'
        f'  <circle cx="{center:.3f}" cy="{center:.3f}" r="{iso_px:.3f}" '
        f'fill="none" stroke="#888888" stroke-dasharray="6 4" stroke-width="1"/>\n'
        f'  <path d="{path}" fill="#4477aa" fill-opacity="0.25" '
        f'stroke="#224488" stroke-width="1.5"/>\n'
        f"</svg>\n"
    )

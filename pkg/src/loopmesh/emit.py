"""CSV tables and minimal SVG line charts."""
from __future__ import annotations

import csv
import dataclasses
import io
import math
import xml.etree.ElementTree as ET
from pathlib import Path

from .errors import InvalidInputError


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(float(v))
    return str(v)


def to_csv(rows) -> str:
    rows = list(rows)
    if not rows:
        raise InvalidInputError("no rows to write")
    if dataclasses.is_dataclass(rows[0]):
        header = [f.name for f in dataclasses.fields(rows[0])]
        records = [[getattr(r, h) for h in header] for r in rows]
    else:
        header = list(rows[0])
        records = [[r[h] for h in header] for r in rows]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for rec in records:
        w.writerow([_cell(v) for v in rec])
    return buf.getvalue()


def emit_csv(rows, path) -> None:
    text = to_csv(rows)  # raises before touching the filesystem
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def read_csv(path, row_type):
    """Parse a file written by :func:`emit_csv` back into ``row_type`` instances."""
    types = {f.name: f.type for f in dataclasses.fields(row_type)}
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        for rec in csv.DictReader(fh):
            kw = {}
            for name, raw in rec.items():
                t = str(types[name])
                if raw == "":
                    kw[name] = None
                elif t.startswith("int"):
                    kw[name] = int(raw)
                elif t.startswith("float"):
                    kw[name] = float(raw)
                else:
                    kw[name] = raw
            out.append(row_type(**kw))
    return out


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


def _ticks(lo, hi, log_y):
    if log_y:
        return [10.0 ** k for k in range(math.floor(lo), math.ceil(hi) + 1)]
    step = (hi - lo) / 5 or 1.0
    return [lo + k * step for k in range(6)]


def emit_svg(series, path, log_y: bool = False, title: str = "", xlabel: str = "N",
             ylabel: str = "transmission", width: int = 640, height: int = 420) -> None:
    """Write one polyline per ``(label, xs, ys)`` series."""
    series = [(label, list(map(float, xs)), list(map(float, ys))) for label, xs, ys in series]
    if not series or not any(xs for _, xs, _ in series):
        raise InvalidInputError("no series to plot")
    if log_y and any(y <= 0 for _, _, ys in series for y in ys):
        raise InvalidInputError("log-scale axis needs positive values")

    fy = math.log10 if log_y else (lambda y: y)
    xs_all = [x for _, xs, _ in series for x in xs]
    ys_all = [fy(y) for _, _, ys in series for y in ys]
    x0, x1 = min(xs_all), max(xs_all)
    y0, y1 = min(ys_all), max(ys_all)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1
    left, right, top, bottom = 70, 150, 30, 50
    pw, ph = width - left - right, height - top - bottom

    def px(x):
        return left + (x - x0) / (x1 - x0) * pw

    def py(y):
        return top + ph - (fy(y) - y0) / (y1 - y0) * ph

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg", width=str(width), height=str(height),
                     viewBox=f"0 0 {width} {height}")
    if title:
        ET.SubElement(svg, "text", x=str(width / 2), y="18", attrib={"text-anchor": "middle"}).text = title
    ET.SubElement(svg, "rect", x=str(left), y=str(top), width=str(pw), height=str(ph),
                  fill="none", stroke="black")
    for t in _ticks(y0, y1, log_y):
        val = math.log10(t) if log_y else t
        if y0 - 1e-12 <= val <= y1 + 1e-12:
            yy = top + ph - (val - y0) / (y1 - y0) * ph
            ET.SubElement(svg, "line", x1=str(left - 4), y1=f"{yy:.2f}", x2=str(left), y2=f"{yy:.2f}", stroke="black")
            ET.SubElement(svg, "text", x=str(left - 6), y=f"{yy + 4:.2f}", attrib={"text-anchor": "end",
                          "font-size": "10"}).text = f"{t:.3g}"
    for x in sorted(set(xs_all)):
        ET.SubElement(svg, "text", x=f"{px(x):.2f}", y=str(top + ph + 15),
                      attrib={"text-anchor": "middle", "font-size": "10"}).text = f"{x:g}"
    ET.SubElement(svg, "text", x=str(left + pw / 2), y=str(height - 10),
                  attrib={"text-anchor": "middle", "class": "xlabel"}).text = xlabel
    ET.SubElement(svg, "text", x="15", y=str(top + ph / 2),
                  attrib={"text-anchor": "middle", "class": "ylabel",
                          "transform": f"rotate(-90 15 {top + ph / 2})"}).text = ylabel + (" (log)" if log_y else "")

    for k, (label, xs, ys) in enumerate(series):
        color = _PALETTE[k % len(_PALETTE)]
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        ET.SubElement(svg, "polyline", points=pts, fill="none", stroke=color,
                      attrib={"stroke-width": "1.5", "data-label": label})
        ly = top + 14 * (k + 1)
        ET.SubElement(svg, "line", x1=str(left + pw + 10), y1=str(ly - 4), x2=str(left + pw + 28), y2=str(ly - 4),
                      stroke=color)
        ET.SubElement(svg, "text", x=str(left + pw + 32), y=str(ly), attrib={"font-size": "10"}).text = label

    Path(path).write_bytes(ET.tostring(svg, encoding="utf-8", xml_declaration=True))

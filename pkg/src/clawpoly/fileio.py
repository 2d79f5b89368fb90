"""Exact-rational polyhedral file formats and report records.

V-files (.ext) and H-files (.ine) follow the cdd text layout so standard
polyhedral tools can audit the output:

    * order=row-major rows=3 cols=4
    V-representation
    begin
     16 13 rational
     1 0 0 1 ...
    end

Every number is an integer or p/q; vertex rows carry the leading 1 marker
(rays are rejected: these polytopes are bounded). H-file rows encode
a . x <= b as "b -a1 ... -ad"; equations, when present, are listed in a
cdd "linearity" line by row index. The record format used by reports is
one record per line of space-separated key=value pairs whose values never
contain spaces (sequences are comma- and semicolon-joined).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import FileFormatError
from .rationals import canon, fmt, parse_rational
from .vertices import VertexSet

_SHAPE_RE = re.compile(r"^\*\s*order=row-major\s+rows=(\d+)\s+cols=(\d+)\s*$")


def _shape_comment(shape) -> str | None:
    if len(shape) == 2:
        return f"* order=row-major rows={shape[0]} cols={shape[1]}"
    if len(shape) == 1:
        return f"* order=row-major rows=1 cols={shape[0]}"
    return None


def format_vfile(vs: VertexSet) -> str:
    lines = []
    comment = _shape_comment(vs.shape)
    if comment:
        lines.append(comment)
    lines.append("V-representation")
    lines.append("begin")
    lines.append(f" {len(vs.points)} {vs.dimension + 1} rational")
    for p in vs.points:
        lines.append(" 1 " + " ".join(fmt(x) for x in p))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_vfile(text: str) -> VertexSet:
    points, _, shape, d = _parse_poly_file(text, "V-representation", vertex_rows=True)
    if shape is None:
        shape = (d,)
    return VertexSet(dimension=d, shape=shape, points=tuple(points))


def format_hfile(source) -> str:
    """H-file for an InequalitySystem or PolytopeDD (facets + linearity)."""
    rows = []
    linearity = []
    shape = getattr(source, "shape", None)
    if hasattr(source, "inequalities"):
        for q in source.inequalities:
            rows.append((tuple(q.coeffs), q.rhs))
    else:
        rows.extend(source.facets)
        for a, b in source.equations:
            linearity.append(len(rows) + 1)
            rows.append((a, b))
        if shape is None:
            shape = (source.dimension,)
    d = len(rows[0][0]) if rows else source.dimension
    lines = []
    comment = _shape_comment(shape) if shape else None
    if comment:
        lines.append(comment)
    lines.append("H-representation")
    if linearity:
        lines.append("linearity " + " ".join(str(i) for i in [len(linearity)] + linearity))
    lines.append("begin")
    lines.append(f" {len(rows)} {d + 1} rational")
    for a, b in rows:
        lines.append(" " + " ".join(fmt(x) for x in (b, *(-c for c in a))))
    lines.append("end")
    return "\n".join(lines) + "\n"


class ParsedHRep:
    """Inequalities read back from an H-file, ready for the engine."""

    def __init__(self, dimension, shape, inequalities, equations):
        self.dimension = dimension
        self.shape = shape
        self.inequalities = tuple(inequalities)  # (a, b) pairs, a . x <= b
        self.equations = tuple(equations)

    def homogenized_rows(self):
        rows = [(-b,) + tuple(a) for a, b in self.inequalities]
        for a, b in self.equations:
            rows.append((-b,) + tuple(a))
            rows.append((b,) + tuple(-x for x in a))
        return rows


def parse_hfile(text: str) -> ParsedHRep:
    rows, linearity, shape, d = _parse_poly_file(text, "H-representation", vertex_rows=False)
    ineqs = []
    eqs = []
    for i, (b, *nega) in enumerate(rows, start=1):
        a = tuple(canon(-x) for x in nega)
        pair = (a, canon(b))
        if i in linearity:
            eqs.append(pair)
        else:
            ineqs.append(pair)
    if shape is None:
        shape = (d,)
    return ParsedHRep(d, shape, ineqs, eqs)


def _parse_poly_file(text, header, vertex_rows):
    shape = None
    linearity: set[int] = set()
    lines = text.splitlines()
    i = 0
    found_header = False
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line or line.startswith("*"):
            m = _SHAPE_RE.match(line)
            if m:
                shape = (int(m.group(1)), int(m.group(2)))
                if shape[0] == 1:
                    shape = (shape[1],)
            continue
        if line == header:
            found_header = True
            continue
        if line.startswith("linearity"):
            parts = line.split()
            try:
                count = int(parts[1])
                linearity = {int(x) for x in parts[2 : 2 + count]}
            except (IndexError, ValueError):
                raise FileFormatError(f"bad linearity line: {line!r}")
            continue
        if line == "begin":
            break
        raise FileFormatError(f"unexpected line before begin: {line!r}")
    else:
        raise FileFormatError("no begin line found")
    if not found_header:
        raise FileFormatError(f"missing {header} header")
    if i >= len(lines):
        raise FileFormatError("truncated file: no size line")
    size_parts = lines[i].split()
    i += 1
    if len(size_parts) != 3 or size_parts[2] not in ("rational", "integer"):
        raise FileFormatError(f"bad size line: {lines[i-1]!r}")
    try:
        nrows = int(size_parts[0])
        ncols = int(size_parts[1])
    except ValueError:
        raise FileFormatError(f"bad size line: {lines[i-1]!r}")
    rows = []
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if line == "end":
            break
        if not line:
            continue
        fields = line.split()
        if len(fields) != ncols:
            raise FileFormatError(
                f"row has {len(fields)} fields, expected {ncols}: {line!r}"
            )
        try:
            values = [parse_rational(f) for f in fields]
        except ValueError as e:
            raise FileFormatError(str(e))
        if vertex_rows:
            if values[0] != 1:
                raise FileFormatError(
                    f"generator row is not a vertex (leading {fmt(values[0])}); rays unsupported"
                )
            rows.append(tuple(values[1:]))
        else:
            rows.append(tuple(values))
    else:
        raise FileFormatError("truncated file: no end line")
    if len(rows) != nrows:
        raise FileFormatError(f"size line promised {nrows} rows, found {len(rows)}")
    return rows, linearity, shape, ncols - 1


# --- record format -----------------------------------------------------------

def _render_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return fmt(v)
    if isinstance(v, str):
        return v
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return ";".join(",".join(fmt(canon(x)) for x in row) for row in v)
        return ",".join(fmt(canon(x)) for x in v)
    if hasattr(v, "entries"):
        return _render_value(v.entries)
    return str(v)


def record_line(pairs) -> str:
    """One report record: space-joined key=value pairs, values space-free."""
    out = []
    for key, value in pairs:
        rendered = _render_value(value)
        if " " in rendered or "=" in rendered:
            raise FileFormatError(f"record value for {key} contains a space or '='")
        out.append(f"{key}={rendered}")
    return " ".join(out)


def parse_record(line: str) -> dict:
    out = {}
    for field in line.split():
        if "=" not in field:
            raise FileFormatError(f"bad record field: {field!r}")
        key, _, value = field.partition("=")
        out[key] = value
    return out


def _json_default(obj):
    if isinstance(obj, Fraction):
        return fmt(obj)
    if hasattr(obj, "entries"):
        return obj.entries
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def to_json(obj) -> str:
    return json.dumps(obj, default=_json_default, indent=2) + "\n"


def write_text(path, content: str):
    with open(path, "w", newline="\n") as fh:
        fh.write(content)


def read_text(path) -> str:
    with open(path, "r") as fh:
        return fh.read()

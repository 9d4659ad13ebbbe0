"""Polytope and curve-configuration file formats.

Polytope files::

    # comment
    d n
    x_11 ... x_1d
    ...
    x_n1 ... x_nd

Trailing tokens on the header line are ignored, as are blank lines and lines
starting with ``#``. The transposed layout (d rows of n integers), common in
polytope-database exports, is accepted when the header rules out the direct
reading.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidConfiguration, ParseError
from .perverse_config import CurveConfiguration
from .polytope import LatticePolytope, from_vertices


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_polytope_text(text: str) -> list[tuple[int, ...]]:
    """Vertex rows from polytope-file text (no hull computation)."""
    lines = [(k, ln.split()) for k, ln in enumerate(text.splitlines(), start=1)
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty polytope file", 1)
    hline, header = lines[0]
    if len(header) < 2:
        raise ParseError("header must be 'd n'", hline)
    d, n = _ints(header[:2], hline)
    if d <= 0 or n <= 0:
        raise ParseError("header entries must be positive", hline)
    body = [(k, _ints(toks, k)) for k, toks in lines[1:]]
    widths = {len(row) for _, row in body}
    if len(body) == n and widths == {d}:
        return [tuple(row) for _, row in body]
    if len(body) == d and widths == {n}:
        return [tuple(col) for col in zip(*(row for _, row in body))]
    for k, row in body:
        if len(row) not in (d, n):
            raise ParseError(f"row has {len(row)} entries, expected {d}", k)
    last = body[-1][0] if body else hline
    raise ParseError(f"expected {n} rows of {d} integers (or {d} rows of {n}), "
                     f"got {len(body)} rows", last)


def parse_polytope(path: str | Path) -> LatticePolytope:
    return from_vertices(parse_polytope_text(Path(path).read_text()))


def format_polytope(vertices: Sequence[Sequence[int]] | LatticePolytope, comment: str | None = None) -> str:
    if isinstance(vertices, LatticePolytope):
        vertices = vertices.vertices
    vertices = [tuple(v) for v in vertices]
    out = []
    if comment:
        out.append(f"# {comment}")
    out.append(f"{len(vertices[0])} {len(vertices)}")
    out.extend(" ".join(str(x) for x in v) for v in vertices)
    return "\n".join(out) + "\n"


def write_polytope(path: str | Path, vertices, comment: str | None = None) -> None:
    Path(path).write_text(format_polytope(vertices, comment))


def load_config(path: str | Path) -> CurveConfiguration:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(data, dict):
        raise InvalidConfiguration("configuration must be a JSON object")
    return CurveConfiguration.from_dict(data)


def dump_config(cfg: CurveConfiguration, path: str | Path) -> None:
    Path(path).write_text(json.dumps(cfg.to_dict(), indent=2) + "\n")


def dumps_json(obj) -> str:
    """Deterministic JSON used for every ``--json`` output."""
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def iter_polytope_files(paths: Iterable[str | Path]) -> list[Path]:
    """Expand directories to their ``*.poly`` files; sorted by path."""
    out = []
    for p in map(Path, paths):
        if p.is_dir():
            out.extend(sorted(p.glob("*.poly")))
        else:
            out.append(p)
    return sorted(out)

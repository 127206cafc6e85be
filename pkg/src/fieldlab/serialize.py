"""Canonical text / JSON / DOT renderings of results, and JSON parsing back.

JSON output always has sorted keys, compact separators and a trailing
newline, so identical inputs give byte-identical output.
"""
from __future__ import annotations

import json

from .codes import ChannelReport, Code, format_word, min_distance
from .designs import BlockDesign, Resolution, design_counts
from .errors import DomainError
from .fingeo import IncidenceStructure
from .gfield import OpTablePair
from .tablesearch import SearchResult

FORMATS = ("text", "json", "dot")

_KINDS = {
    "tables": OpTablePair,
    "search": SearchResult,
    "incidence": IncidenceStructure,
    "code": Code,
    "channel": ChannelReport,
}


class FormatError(DomainError):
    pass


def dumps(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def to_data(result):
    if isinstance(result, BlockDesign):
        d = result.to_dict()
        d.update({"t": result.t, "k": result.k, "lambda": result.lam})
        return d
    if isinstance(result, Resolution):
        return {"classes": [[list(b) for b in cls] for cls in result.classes]}
    if hasattr(result, "to_dict"):
        return result.to_dict()
    raise FormatError(f"no JSON form for {type(result).__name__}")


def serialize(result, fmt: str = "text", **opts) -> str:
    if fmt not in FORMATS:
        raise FormatError(f"unknown format {fmt!r}")
    if fmt == "dot":
        if not isinstance(result, IncidenceStructure):
            raise FormatError("dot output is only available for incidence structures")
        return incidence_dot(result)
    if fmt == "json":
        return dumps(to_data(result))
    return _text(result, **opts)


def parse(text: str, kind: str):
    """Inverse of the JSON form of :func:`serialize`."""
    data = json.loads(text)
    if kind == "design":
        return BlockDesign.from_dict(data)
    try:
        cls = _KINDS[kind]
    except KeyError:
        raise FormatError(f"unknown kind {kind!r}") from None
    return cls.from_dict(data)


# text ----------------------------------------------------------------------

def table_grid(rows, symbol: str) -> str:
    n = len(rows)
    w = len(str(n - 1))
    head = f"{symbol:>{w}} | " + " ".join(f"{j:>{w}}" for j in range(n))
    lines = [head, "-" * (w + 1) + "+" + "-" * (len(head) - w - 2)]
    for i, row in enumerate(rows):
        lines.append(f"{i:>{w}} | " + " ".join(f"{x:>{w}}" for x in row))
    return "\n".join(lines)


def _tables_text(t: OpTablePair, names=None):
    out = []
    if names:
        out.append("labels: " + " ".join(f"{i}={s}" for i, s in enumerate(names)))
    out.append(table_grid(t.add, "+"))
    out.append("")
    out.append(table_grid(t.mul, "*"))
    return "\n".join(out)


def _text(result, names=None, max_solutions=None):
    if isinstance(result, OpTablePair):
        return _tables_text(result, names) + "\n"
    if isinstance(result, SearchResult):
        word = "solution" if result.raw_count == 1 else "solutions"
        lines = [f"{result.raw_count} {word}",
                 f"order {result.size}: {result.iso_classes} up to relabeling, "
                 f"{result.nodes_explored} nodes explored"]
        shown = result.solutions if max_solutions is None else result.solutions[:max_solutions]
        for k, t in enumerate(shown):
            lines.append("")
            lines.append(f"solution {k + 1}")
            lines.append(_tables_text(t))
        return "\n".join(lines) + "\n"
    if isinstance(result, IncidenceStructure):
        lines = [f"{result.kind}: {len(result.points)} points, {len(result.lines)} lines"]
        for k, line in enumerate(result.lines):
            lines.append(f"L{k}: " + " ".join(result.points[i] for i in line))
        return "\n".join(lines) + "\n"
    if isinstance(result, BlockDesign):
        c = design_counts(result)
        lines = [result.parameters(),
                 f"(v, t, r) = ({result.v}, {result.t}, {result.lam}) with k = {result.k}; "
                 f"each point in {c.point_replication} blocks"]
        lines += [" ".join(map(str, b)) for b in result.blocks]
        return "\n".join(lines) + "\n"
    if isinstance(result, Resolution):
        lines = [f"{len(result.classes)} parallel classes"]
        for k, cls in enumerate(result.classes):
            lines.append(f"class {k + 1}: " + " | ".join(" ".join(map(str, b)) for b in cls))
        return "\n".join(lines) + "\n"
    if isinstance(result, Code):
        lines = [f"length {result.length}, q = {result.alphabet_size}, {len(result)} codewords"]
        if len(result) > 1:
            d = min_distance(result)
            lines.append(f"d = {d.d}, detects {d.detect}, corrects {d.correct}")
        lines += [format_word(w) for w in result.codewords]
        return "\n".join(lines) + "\n"
    if isinstance(result, ChannelReport):
        return (f"{result.successes}/{result.trials} letters decoded correctly "
                f"(rate {result.per_letter_success_rate!r}) at p = {result.flip_probability!r}, "
                f"seed {result.seed}, {result.generator}\n")
    if isinstance(result, (list, tuple)):
        return "".join(f"{x}\n" for x in result)
    return f"{result}\n"


def incidence_dot(s: IncidenceStructure) -> str:
    """Bipartite point-line incidence graph."""
    lines = ["graph incidence {"]
    for i, name in enumerate(s.points):
        lines.append(f'  p{i} [label="{name}", shape=circle];')
    for k in range(len(s.lines)):
        lines.append(f'  l{k} [label="L{k}", shape=box];')
    for k, line in enumerate(s.lines):
        for i in line:
            lines.append(f"  p{i} -- l{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"

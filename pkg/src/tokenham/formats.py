"""Cycle serialization: JSON, plain text, and DOT."""

from __future__ import annotations

import json
from typing import Sequence

from tokenham.token_graph import TokenVertex, format_subset


def cycle_to_json(family: str, n: int, k: int, verts: Sequence[TokenVertex], anchor=None) -> str:
    doc = {
        "family": family,
        "n": n,
        "k": k,
        "cycle": [list(v) for v in verts],
        "anchor": [list(a) for a in anchor] if anchor is not None else None,
    }
    return json.dumps(doc)


def cycle_to_text(verts: Sequence[TokenVertex]) -> str:
    """One subset per line; the first vertex is repeated to close the cycle."""
    if not verts:
        return ""
    lines = [",".join(map(str, v)) for v in verts]
    lines.append(lines[0])
    return "\n".join(lines) + "\n"


def cycle_to_dot(verts: Sequence[TokenVertex], name: str = "cycle") -> str:
    names = [format_subset(v) for v in verts]
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{a}";' for a in names)
    m = len(names)
    lines.extend(f'  "{names[i]}" -- "{names[(i + 1) % m]}";' for i in range(m) if m > 1)
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_cycle(text: str) -> tuple[list[TokenVertex], dict]:
    """Read a cycle in JSON or text form.

    Returns the vertex list (closing repeat removed) and whatever metadata the
    JSON document carried (empty for text). Raises ``ValueError`` on garbage.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty cycle file")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid cycle JSON: {exc}") from None
        if not isinstance(doc, dict) or not isinstance(doc.get("cycle"), list):
            raise ValueError("cycle JSON needs a 'cycle' list")
        try:
            verts = [tuple(int(a) for a in v) for v in doc["cycle"]]
        except (TypeError, ValueError):
            raise ValueError("cycle entries must be lists of integers") from None
        meta = {key: doc[key] for key in ("family", "n", "k", "anchor") if doc.get(key) is not None}
        if "anchor" in meta:
            meta["anchor"] = tuple(tuple(int(a) for a in v) for v in meta["anchor"])
        return verts, meta
    verts = []
    for line in stripped.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            verts.append(tuple(int(tok) for tok in line.split(",")))
        except ValueError:
            raise ValueError(f"malformed cycle line: {line!r}") from None
    if len(verts) > 1 and verts[0] == verts[-1]:
        verts.pop()
    return verts, {}

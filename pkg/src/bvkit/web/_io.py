"""JSON and DOT renderings of webs."""

from __future__ import annotations

import json
from typing import Any

from bvkit.exceptions import WebError
from bvkit.structure import Atom, Leaf, Variable
from bvkit.web._relations import Relation, WebCandidate

__all__ = ["web_to_dict", "web_from_dict", "dump_web", "load_web", "web_to_dot"]


def _leaf_to_dict(i: int, leaf: Leaf) -> dict[str, Any]:
    if isinstance(leaf, Variable):
        return {"id": i, "var": leaf.name, "neg": leaf.negated, "atomic": leaf.atomic}
    return {"id": i, "atom": leaf.name, "neg": leaf.negated, "index": list(leaf.index)}


def _leaf_from_dict(entry: dict[str, Any]) -> Leaf:
    if "var" in entry:
        return Variable(str(entry["var"]), bool(entry.get("neg", False)), bool(entry.get("atomic", False)))
    return Atom(str(entry["atom"]), bool(entry.get("neg", False)), tuple(entry.get("index", ())))


def web_to_dict(web: WebCandidate) -> dict[str, Any]:
    relations = []
    for i, j, rel in web.pairs():
        if rel is Relation.COSEQ:
            relations.append({"a": j, "b": i, "rel": "seq"})
        else:
            relations.append({"a": i, "b": j, "rel": rel.value})
    return {
        "occurrences": [_leaf_to_dict(i, leaf) for i, leaf in enumerate(web.labels)],
        "relations": relations,
    }


def web_from_dict(data: dict[str, Any]) -> WebCandidate:
    """Build a candidate from its JSON object.

    Raises
    ------
    WebError
        If the object is malformed or the relations are not a candidate.
    """
    try:
        entries = sorted(data["occurrences"], key=lambda e: int(e["id"]))
        if [int(e["id"]) for e in entries] != list(range(len(entries))):
            raise WebError("occurrence ids must be 0..k-1")
        labels = [_leaf_from_dict(e) for e in entries]
        relations = []
        for r in data["relations"]:
            if r["rel"] not in ("seq", "par", "copar"):
                raise WebError(f"unknown relation {r['rel']!r}")
            relations.append((int(r["a"]), int(r["b"]), Relation(r["rel"])))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, WebError):
            raise
        raise WebError(f"malformed web: {exc}") from exc
    return WebCandidate(labels, relations)


def dump_web(web: WebCandidate, **kwargs: Any) -> str:
    return json.dumps(web_to_dict(web), **kwargs)


def load_web(text: str) -> WebCandidate:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WebError(f"invalid JSON: {exc}") from exc
    return web_from_dict(data)


_DOT_STYLE = {
    Relation.PAR: " [dir=none]",
    Relation.COPAR: " [dir=none, style=dashed]",
    Relation.SEQ: "",
}


def web_to_dot(web: WebCandidate, name: str = "web") -> str:
    """Graphviz source for *web*.

    Seq is a directed edge from the earlier occurrence, par an undirected
    edge and copar an undirected dashed edge.
    """
    lines = [f"digraph {name} {{"]
    for i, leaf in enumerate(web.labels):
        lines.append(f'  n{i} [label="{leaf}"];')
    for i, j, rel in web.pairs():
        if rel is Relation.COSEQ:
            i, j, rel = j, i, Relation.SEQ
        lines.append(f"  n{i} -> n{j}{_DOT_STYLE[rel]};")
    lines.append("}")
    return "\n".join(lines) + "\n"

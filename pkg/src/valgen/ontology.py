"""Miniature class hierarchy: path-based tree with linking and expansion queries."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DuplicatePath, OrphanNode, SchemaError, UnknownPath

#: A hierarchical class label, most general segment first, lowercase-normalized.
ClassPath = tuple[str, ...]


def parse_class_path(text: str | list[str] | tuple[str, ...]) -> ClassPath:
    """Accept dotted strings ("belebt.menschlich") or segment lists."""
    if isinstance(text, str):
        segments = text.split(".")
    else:
        segments = list(text)
    segments = [str(s).strip().lower() for s in segments]
    if not segments or any(not s for s in segments):
        raise SchemaError(f"malformed class path {text!r}")
    return tuple(segments)


def format_class_path(path: ClassPath) -> str:
    return ".".join(path)


@dataclass
class OntologyNode:
    path: ClassPath
    members: list[str] = field(default_factory=list)
    external_tags: dict[str, str] = field(default_factory=dict)

    @property
    def parent(self) -> ClassPath | None:
        return self.path[:-1] if len(self.path) > 1 else None


@dataclass
class Ontology:
    """Single-parent tree keyed by full path; immutable after load."""

    nodes: dict[ClassPath, OntologyNode] = field(default_factory=dict)

    @property
    def roots(self) -> set[ClassPath]:
        return {p for p in self.nodes if len(p) == 1}

    def children(self, path: ClassPath) -> list[ClassPath]:
        return sorted(
            p for p in self.nodes if len(p) == len(path) + 1 and p[: len(path)] == path
        )

    def member_count(self) -> int:
        return sum(len(n.members) for n in self.nodes.values())


def load_ontology(path: str | Path) -> Ontology:
    """Load a node list; every non-root parent prefix must already be a node."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "nodes" not in doc:
        raise SchemaError(f"{path}: expected an object with a 'nodes' array")

    onto = Ontology()
    for raw in doc["nodes"]:
        if "path" not in raw:
            raise SchemaError(f"{path}: node without path: {raw}")
        node_path = parse_class_path(raw["path"])
        if node_path in onto.nodes:
            raise DuplicatePath(f"{path}: duplicate node {format_class_path(node_path)}")
        members = [str(m) for m in raw.get("members", [])]
        if len(set(members)) != len(members):
            raise SchemaError(
                f"{path}: node {format_class_path(node_path)} lists a member twice"
            )
        onto.nodes[node_path] = OntologyNode(
            path=node_path,
            members=members,
            external_tags={str(k): str(v) for k, v in raw.get("tags", {}).items()},
        )
    for node_path in onto.nodes:
        parent = node_path[:-1]
        if parent and parent not in onto.nodes:
            raise OrphanNode(
                f"{path}: node {format_class_path(node_path)} has no parent node "
                f"{format_class_path(parent)}"
            )
    return onto


def subsumes(ancestor: ClassPath, descendant: ClassPath, onto: Ontology) -> bool:
    """True iff ancestor's segments are a prefix of descendant's segments."""
    for p in (ancestor, descendant):
        if p not in onto.nodes:
            raise UnknownPath(format_class_path(p))
    return descendant[: len(ancestor)] == ancestor


def classify_lexeme(lexeme: str, onto: Ontology) -> set[ClassPath]:
    """Every node path that lists the lexeme as a member; empty if unclassified."""
    return {path for path, node in onto.nodes.items() if lexeme in node.members}


def expand_class(
    query: ClassPath,
    onto: Ontology,
    frequencies: dict[str, int] | None = None,
) -> list[str]:
    """Union of the query node's members and all descendants' members.

    Deterministic order: (frequency desc, lexeme asc) when frequency data is
    attached, plain lexeme order otherwise.
    """
    if query not in onto.nodes:
        raise UnknownPath(format_class_path(query))
    found: set[str] = set()
    for path, node in onto.nodes.items():
        if path[: len(query)] == query:
            found.update(node.members)
    if frequencies is None:
        return sorted(found)
    return sorted(found, key=lambda lex: (-frequencies.get(lex, 0), lex))

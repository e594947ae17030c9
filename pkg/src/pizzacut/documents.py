"""JSON and CSV formats: pizza documents, partition trees, profiles."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List

from .errors import GeometryError
from .geom import ConvexPolygon, OrientedLine, Pizza, clip, MINUS, PLUS
from .partition import CutNode, PartitionTree, Slice

FORMAT_VERSION = "1"


def _vertex_list(raw, what: str) -> List[List[float]]:
    if not isinstance(raw, list):
        raise GeometryError(f"{what}: expected a list of [x, y] pairs")
    out = []
    for i, p in enumerate(raw):
        if not (isinstance(p, (list, tuple)) and len(p) == 2
                and all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in p)):
            raise GeometryError(f"{what}: vertex {i} is not a pair of numbers: {p!r}")
        out.append([float(p[0]), float(p[1])])
    return out


def _polygon(vertices, what: str) -> ConvexPolygon:
    try:
        return ConvexPolygon(vertices)
    except GeometryError as exc:
        raise GeometryError(f"{what}: {exc}") from None


@dataclass
class PizzaDocument:
    topping: List[List[float]]
    dough: List[List[float]]
    metadata: Dict[str, Any] = field(default_factory=dict)
    format_version: str = FORMAT_VERSION

    @classmethod
    def from_pizza(cls, pizza: Pizza, **metadata) -> "PizzaDocument":
        return cls(pizza.topping.as_list(), pizza.dough.as_list(), dict(metadata))

    def to_pizza(self) -> Pizza:
        return Pizza(_polygon(self.topping, "topping"), _polygon(self.dough, "dough"))

    def to_dict(self):
        d = {"format_version": self.format_version, "topping": self.topping,
             "dough": self.dough}
        if self.metadata:
            d["metadata"] = self.metadata
        return d

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d) -> "PizzaDocument":
        if not isinstance(d, dict):
            raise GeometryError("pizza document must be a JSON object")
        version = d.get("format_version")
        if version != FORMAT_VERSION:
            raise GeometryError(f"unsupported format_version {version!r}; "
                                f"expected {FORMAT_VERSION!r}")
        for key in ("topping", "dough"):
            if key not in d:
                raise GeometryError(f"pizza document lacks {key!r}")
        doc = cls(_vertex_list(d["topping"], "topping"), _vertex_list(d["dough"], "dough"),
                  dict(d.get("metadata") or {}), version)
        doc.to_pizza()
        return doc

    @classmethod
    def from_json(cls, text: str) -> "PizzaDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GeometryError(f"invalid JSON: {exc}") from None
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "PizzaDocument":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise GeometryError(f"cannot read {path}: {exc}") from None
        return cls.from_json(text)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def tree_to_dict(tree: PartitionTree):
    if isinstance(tree, Slice):
        return {"slice": tree.slice.as_list()}
    return {"cut": tree.cut.to_dict(), "left": tree_to_dict(tree.left),
            "right": tree_to_dict(tree.right)}


def count_leaves(node) -> int:
    if "slice" in node:
        return 1
    return count_leaves(node["left"]) + count_leaves(node["right"])


def tree_document(tree: PartitionTree):
    root = tree_to_dict(tree)
    return {"format_version": FORMAT_VERSION, "n": count_leaves(root), "root": root}


def tree_from_dict(d, dough: ConvexPolygon) -> PartitionTree:
    """Rebuild a tree; internal pieces are re-derived by clipping the dough."""
    root = d.get("root", d) if isinstance(d, dict) else d

    def build(node, piece, where):
        if not isinstance(node, dict):
            raise GeometryError(f"{where}: tree node must be an object")
        if "slice" in node:
            return Slice(_polygon(_vertex_list(node["slice"], where), where))
        try:
            cut = OrientedLine(float(node["cut"]["theta"]), float(node["cut"]["t"]))
        except (KeyError, TypeError, ValueError):
            raise GeometryError(f"{where}: node needs 'slice' or 'cut' with theta and t") \
                from None
        parts = []
        for side, key in ((PLUS, "left"), (MINUS, "right")):
            sub = clip(piece, cut, side) if piece is not None else None
            if key not in node:
                raise GeometryError(f"{where}: cut node lacks {key!r}")
            parts.append(build(node[key], sub, f"{where}.{key}"))
        if piece is None:
            raise GeometryError(f"{where}: cut applies to an empty piece")
        return CutNode(piece, cut, parts[0], parts[1])

    return build(root, dough, "root")


def profile_csv(profile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["theta", "t", "fraction"])
    for row in profile.rows():
        w.writerow([repr(float(x)) for x in row])
    return buf.getvalue()

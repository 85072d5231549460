"""Input documents: posets (JSON or ``a < b`` text) and finite spaces (JSON).

JSON poset::

    {"elements": [1, 2, 3], "relations": [[1, 2], [2, 3]], "name": "chain", "seed": null}

Text poset: one relation per line (``a < b``, chains ``a < b < c`` allowed),
a bare token declares an element, ``#`` starts a comment, and
``# @name: ...`` / ``# @seed: ...`` carry metadata.  Tokens that look like
integers are read as integers.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Any, Hashable

from .apps import FiniteSpace
from .errors import ParseError
from .poset import Poset

_INT = re.compile(r"^[+-]?\d+$")
_TOKEN = re.compile(r"^[^\s<#]+$")


def _atom(tok: str) -> Hashable:
    return int(tok) if _INT.match(tok) else tok


def _hashable(v) -> Hashable:
    if isinstance(v, (str, int)) and not isinstance(v, bool):
        return v
    raise ParseError(f"element ids must be strings or integers, got {v!r}")


@dataclass
class PosetDocument:
    elements: list = field(default_factory=list)
    relations: list = field(default_factory=list)
    name: str | None = None
    seed: int | None = None

    def to_poset(self) -> Poset:
        return Poset(self.elements, self.relations)

    @classmethod
    def from_poset(cls, p: Poset, name: str | None = None, seed: int | None = None) -> PosetDocument:
        order = {e: k for k, e in enumerate(p.elements)}
        rels = sorted(p.covers, key=lambda ab: (order[ab[0]], order[ab[1]]))
        return cls(list(p.elements), [list(r) for r in rels], name, seed)

    # -- JSON ---------------------------------------------------------------

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"elements": list(self.elements), "relations": [list(r) for r in self.relations]}
        if self.name is not None:
            d["name"] = self.name
        if self.seed is not None:
            d["seed"] = self.seed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, d) -> PosetDocument:
        if not isinstance(d, dict) or "elements" not in d:
            raise ParseError("poset document needs an 'elements' list")
        elements = d["elements"]
        relations = d.get("relations", [])
        if not isinstance(elements, list) or not isinstance(relations, list):
            raise ParseError("'elements' and 'relations' must be lists")
        els = [_hashable(e) for e in elements]
        rels = []
        for r in relations:
            if not isinstance(r, list) or len(r) != 2:
                raise ParseError(f"relation {r!r} is not a pair")
            rels.append([_hashable(r[0]), _hashable(r[1])])
        seed = d.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise ParseError("'seed' must be an integer")
        return cls(els, rels, d.get("name"), seed)

    @classmethod
    def from_json(cls, text: str) -> PosetDocument:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        return cls.from_dict(d)

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        lines = []
        if self.name is not None:
            lines.append(f"# @name: {self.name}")
        if self.seed is not None:
            lines.append(f"# @seed: {self.seed}")
        lines += [str(e) for e in self.elements]
        lines += [f"{a} < {b}" for a, b in self.relations]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PosetDocument:
        doc = cls()
        seen = set()

        def declare(tok: str, lineno: int):
            if not _TOKEN.match(tok):
                raise ParseError(f"line {lineno}: bad element {tok!r}")
            e = _atom(tok)
            if e not in seen:
                seen.add(e)
                doc.elements.append(e)
            return e

        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if line.startswith("# @"):
                key, _, val = line[3:].partition(":")
                key, val = key.strip(), val.strip()
                if key == "name":
                    doc.name = val
                elif key == "seed":
                    if not _INT.match(val):
                        raise ParseError(f"line {lineno}: seed must be an integer")
                    doc.seed = int(val)
                continue
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [t.strip() for t in line.split("<")]
            if any(not t for t in parts):
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
            ids = [declare(t, lineno) for t in parts]
            doc.relations += [[a, b] for a, b in zip(ids, ids[1:])]
        return doc

    @classmethod
    def parse(cls, text: str) -> PosetDocument:
        """JSON when the first non-blank character is ``{``, text otherwise."""
        return cls.from_json(text) if text.lstrip().startswith("{") else cls.from_text(text)


@dataclass
class SpaceDocument:
    points: list = field(default_factory=list)
    opens: list = field(default_factory=list)

    def to_space(self) -> FiniteSpace:
        return FiniteSpace(self.points, self.opens)

    def to_json(self) -> str:
        return json.dumps({"points": self.points, "opens": self.opens}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> SpaceDocument:
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(d, dict) or not isinstance(d.get("points"), list) or not isinstance(d.get("opens"), list):
            raise ParseError("space document needs 'points' and 'opens' lists")
        pts = [_hashable(x) for x in d["points"]]
        opens = []
        for u in d["opens"]:
            if not isinstance(u, list):
                raise ParseError(f"open set {u!r} is not a list")
            opens.append([_hashable(x) for x in u])
        return cls(pts, opens)


def random_poset(n: int, p: float, seed: int) -> PosetDocument:
    """Elements 1..n; each pair i < j is related independently with probability p.

    The stored relations are the covers of the resulting order.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    rng = random.Random(seed)
    rels = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    poset = Poset(range(1, n + 1), rels)
    return PosetDocument.from_poset(poset, name=f"random-{n}-{p:g}", seed=seed)

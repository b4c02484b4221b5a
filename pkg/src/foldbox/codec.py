"""JSON documents for every structure kind.

A document is a JSON object ``{"schema_version", "kind", "metadata", "payload"}``.
The payload mirrors the dataclass fields of the in-memory value: nested
structures become objects, id tuples become lists, and every table becomes
a list of ``[key, value]`` pairs sorted by key.  Canonical output uses sorted
object keys, two-space indentation and a trailing LF.
"""

from __future__ import annotations

import dataclasses
import json
import re
import types
import typing
from functools import cache

from . import algebra, dblcat, fincat, folding, pseudo, xmod
from .report import FoldboxError

SCHEMA_VERSION = 1

KINDS: dict[str, type] = {
    "category": fincat.FinCategory,
    "groupoid": fincat.FinGroupoid,
    "group": fincat.FinGroup,
    "functor": fincat.Functor,
    "nat_transform": fincat.NatTransform,
    "two_category": fincat.TwoCategory,
    "two_functor": fincat.TwoFunctor,
    "double_category": dblcat.DoubleCategory,
    "double_functor": dblcat.DoubleFunctor,
    "vertical_transformation": dblcat.VerticalTransformation,
    "horizontal_transformation": dblcat.HorizontalTransformation,
    "holonomy": folding.Holonomy,
    "folding": folding.Folding,
    "folded_double": folding.Folding,
    "connection_pair": folding.ConnectionPair,
    "thin_structure": folding.ThinStructure,
    "folding_morphism": folding.FoldingMorphism,
    "icat_algebra": algebra.ICatAlgebra,
    "algebra_morphism": algebra.AlgebraMorphism,
    "algebra_two_cell": algebra.AlgebraTwoCell,
    "two_functor_under_i": algebra.TwoFunctorUnderI,
    "crossed_module": xmod.CrossedModule,
    "xmod_morphism": xmod.XModMorphism,
    "homotopy": xmod.Homotopy,
    "two_group": xmod.TwoGroup,
    "conjugation_two_cell": xmod.ConjugationTwoCell,
    "xmod_under_group": xmod.XModUnderGroup,
    "pseudo_double": pseudo.PseudoDoubleCategory,
    "pseudo_icat": pseudo.PseudoICat,
    "pseudo_folding": pseudo.PseudoFolding,
}


class ParseError(FoldboxError):
    tag = "PARSE_ERROR"

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{message} (line {line}, column {col})", (line, col))
        self.line, self.col = line, col


class UnknownKind(FoldboxError):
    tag = "UNKNOWN_KIND"


class SchemaVersionMismatch(FoldboxError):
    tag = "SCHEMA_VERSION_MISMATCH"


@dataclasses.dataclass(frozen=True)
class StructureDocument:
    kind: str
    value: typing.Any
    metadata: dict = dataclasses.field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION


# encoding


def _sort_key(k):
    return json.dumps(k, ensure_ascii=False)


def encode(x):
    if dataclasses.is_dataclass(x):
        return {f.name: encode(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        pairs = [[encode(k), encode(v)] for k, v in x.items()]
        return sorted(pairs, key=lambda p: _sort_key(p[0]))
    if isinstance(x, (tuple, list)):
        return [encode(v) for v in x]
    return x


def _render(x, depth: int) -> str:
    """Objects one key per line; table rows and id lists on a single line each."""
    pad, inner = "  " * depth, "  " * (depth + 1)
    if isinstance(x, dict) and x:
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_render(x[k], depth + 1)}" for k in sorted(x)]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(x, list) and x and any(isinstance(v, dict) or _is_table(v) for v in x):
        return "[\n" + ",\n".join(inner + _render(v, depth + 1) for v in x) + "\n" + pad + "]"
    if isinstance(x, list) and _is_table(x):
        rows = [inner + json.dumps(v, ensure_ascii=False, sort_keys=True) if not isinstance(v[1], dict)
                else f"{inner}[{json.dumps(v[0], ensure_ascii=False)}, {_render(v[1], depth + 1)}]" for v in x]
        return "[\n" + ",\n".join(rows) + "\n" + pad + "]"
    return json.dumps(x, ensure_ascii=False, sort_keys=True)


def _is_table(x) -> bool:
    return isinstance(x, list) and bool(x) and all(isinstance(p, list) and len(p) == 2 for p in x)


def serialize(doc: StructureDocument) -> str:
    body = {"schema_version": doc.schema_version, "kind": doc.kind, "metadata": doc.metadata,
            "payload": encode(doc.value)}
    return _render(body, 0) + "\n"


def dump(kind: str, value, **metadata) -> str:
    return serialize(StructureDocument(kind, value, metadata))


# decoding


@cache
def _hints(cls) -> dict:
    return typing.get_type_hints(cls)


class _Duplicate(Exception):
    def __init__(self, what: str):
        self.what = what


def decode(j, hint):
    if j is None:
        return None
    origin = typing.get_origin(hint)
    if origin in (typing.Union, types.UnionType):
        args = [a for a in typing.get_args(hint) if a is not type(None)]
        return decode(j, args[0])
    if dataclasses.is_dataclass(hint):
        if not isinstance(j, dict):
            raise ValueError(f"expected an object for {hint.__name__}")
        hints = _hints(hint)
        missing = [f.name for f in dataclasses.fields(hint) if f.name not in j and f.default is dataclasses.MISSING]
        if missing:
            raise ValueError(f"{hint.__name__} is missing {', '.join(missing)}")
        extra = sorted(set(j) - {f.name for f in dataclasses.fields(hint)})
        if extra:
            raise ValueError(f"{hint.__name__} has unknown fields {', '.join(extra)}")
        kw = {f.name: decode(j[f.name], hints[f.name]) for f in dataclasses.fields(hint) if f.name in j}
        return hint(**kw)
    if origin is dict:
        kt, vt = typing.get_args(hint)
        if not isinstance(j, list) or not all(isinstance(p, list) and len(p) == 2 for p in j):
            raise ValueError("a table must be a list of [key, value] pairs")
        out = {}
        for k, v in j:
            key = decode(k, kt)
            if key in out:
                raise _Duplicate(json.dumps(k, ensure_ascii=False))
            out[key] = decode(v, vt)
        return out
    if origin is tuple or hint is tuple:
        if not isinstance(j, list):
            raise ValueError("expected a list")
        args = typing.get_args(hint)
        if len(args) == 2 and args[1] is Ellipsis:
            items = [decode(v, args[0]) for v in j]
            if len(set(items)) != len(items):
                dup = next(v for v in items if items.count(v) > 1)
                raise _Duplicate(json.dumps(dup, ensure_ascii=False))
            return tuple(items)
        if args and len(args) != len(j):
            raise ValueError(f"expected {len(args)} entries, got {len(j)}")
        return tuple(decode(v, a) for v, a in zip(j, args)) if args else tuple(j)
    if isinstance(hint, type) and issubclass(hint, tuple) and hasattr(hint, "_fields"):
        if not isinstance(j, list) or len(j) != len(hint._fields):
            raise ValueError(f"expected {len(hint._fields)} entries for {hint.__name__}")
        return hint(*j)
    if hint is str:
        if not isinstance(j, str):
            raise ValueError(f"expected a string id, got {j!r}")
        return j
    if hint is int:
        if not isinstance(j, int):
            raise ValueError(f"expected an integer, got {j!r}")
        return j
    return j


def _position(text: str, needle: str) -> tuple[int, int]:
    """Line and column of the second table row keyed by needle, else of its last occurrence."""
    hits = [m.start() + len(m.group(1)) for m in re.finditer(r"(?m)^(\s*)\[" + re.escape(needle) + ",", text)]
    if len(hits) < 2:
        hits = [m.start() for m in re.finditer(re.escape(needle), text)]
    if not hits:
        return 0, 0
    at = hits[1] if len(hits) > 1 else hits[0]
    line = text.count("\n", 0, at) + 1
    return line, at - (text.rfind("\n", 0, at) + 1) + 1


def _no_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise _Duplicate(json.dumps(k))
        out[k] = v
    return out


def parse_document(data: bytes | str) -> StructureDocument:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8: {e.reason}", 0, e.start) from None
    else:
        text = data
    try:
        raw = json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    except _Duplicate as e:
        raise ParseError(f"duplicate key {e.what}", *_position(text, e.what)) from None
    if not isinstance(raw, dict):
        raise ParseError("document must be an object", 1, 1)
    for field in ("schema_version", "kind", "payload"):
        if field not in raw:
            raise ParseError(f"missing {field!r}", 1, 1)
    if raw["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionMismatch(f"schema_version {raw['schema_version']!r}, expected {SCHEMA_VERSION}")
    kind = raw["kind"]
    if kind not in KINDS:
        raise UnknownKind(f"unknown kind {kind!r}")
    try:
        value = decode(raw["payload"], KINDS[kind])
    except _Duplicate as e:
        raise ParseError(f"duplicate id {e.what}", *_position(text, e.what)) from None
    except (ValueError, TypeError, KeyError) as e:
        raise ParseError(f"bad {kind} payload: {e}", 0, 0) from None
    meta = raw.get("metadata") or {}
    if not isinstance(meta, dict):
        raise ParseError("metadata must be an object", *_position(text, '"metadata"'))
    return StructureDocument(kind, value, meta)


def canonicalize(data: bytes | str) -> str:
    return serialize(parse_document(data))

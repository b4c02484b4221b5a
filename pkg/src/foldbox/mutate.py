"""Single-entry table mutations, for checking that the validators notice corruption."""

from __future__ import annotations

import dataclasses
import random
from typing import Any


def table_sites(value, path: tuple = ()) -> list[tuple[tuple, Any]]:
    """(field path, key) for every entry of every dict-valued field, recursing into nested dataclasses."""
    out = []
    for f in dataclasses.fields(value):
        v = getattr(value, f.name)
        if isinstance(v, dict):
            out.extend((path + (f.name,), k) for k in v)
        elif dataclasses.is_dataclass(v) and not isinstance(v, type):
            out.extend(table_sites(v, path + (f.name,)))
    return out


def _get(value, path):
    for p in path:
        value = getattr(value, p)
    return value


def _set(value, path, new):
    if len(path) == 1:
        return dataclasses.replace(value, **{path[0]: new})
    return dataclasses.replace(value, **{path[0]: _set(getattr(value, path[0]), path[1:], new)})


def _alternative(rng: random.Random, old, pool: list):
    """A value of the same shape as old that differs in exactly one component, or None."""
    if isinstance(old, str):
        choices = sorted({v for v in pool if isinstance(v, str)} - {old})
        return rng.choice(choices) if choices else None
    if isinstance(old, tuple):
        positions = list(range(len(old)))
        rng.shuffle(positions)
        for i in positions:
            choices = sorted({v[i] for v in pool if isinstance(v, tuple) and len(v) == len(old)} - {old[i]})
            if choices:
                parts = list(old)
                parts[i] = rng.choice(choices)
                return type(old)(*parts) if hasattr(old, "_fields") else tuple(parts)
    return None


def mutate(value, rng: random.Random):
    """Change one table entry to a different value of the same sort, or drop it if no other value exists.

    Returns (description, mutated value).
    """
    path, key = rng.choice(table_sites(value))
    table = _get(value, path)
    old = table[key]
    new = _alternative(rng, old, list(table.values()))
    changed = dict(table)
    if new is None:
        del changed[key]
        what = f"drop {'.'.join(path)}[{key!r}]"
    else:
        changed[key] = new
        what = f"{'.'.join(path)}[{key!r}]: {old!r} -> {new!r}"
    return what, _set(value, path, changed)

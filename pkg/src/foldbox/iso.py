"""Isomorphism search for finite many-sorted algebraic structures.

Every structure is flattened to a `Relational` value: named sorts of ids and
named operations (constants, unary maps, partial binary maps).  An isomorphism
is a bijection per sort commuting with every operation.  Search is
backtracking over color-refined candidates with forced propagation through
the operation tables.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field


@dataclass
class Relational:
    sorts: dict[str, list[str]]
    # name -> (argument sorts, result sort, table keyed by argument tuples)
    ops: dict[str, tuple[tuple[str, ...], str, dict[tuple, str]]] = field(default_factory=dict)

    def op(self, name: str, args: tuple[str, ...], result: str, table: dict) -> None:
        norm = {}
        for k, v in table.items():
            norm[k if isinstance(k, tuple) else (k,)] = v
        self.ops[name] = (tuple(args), result, norm)


@dataclass(frozen=True)
class IsoWitness:
    forward: dict[str, dict[str, str]]
    backward: dict[str, dict[str, str]]
    nodes: int = 0


@dataclass(frozen=True)
class NoIso:
    reason: str
    nodes: int = 0


@dataclass(frozen=True)
class BudgetExceeded:
    nodes: int


def relational(s) -> Relational:
    if isinstance(s, Relational):
        return s
    try:
        return s.relational()
    except AttributeError:
        raise TypeError(f"no relational form for {type(s).__name__}") from None


def preserves(a: Relational, b: Relational, maps: dict[str, dict[str, str]]) -> bool:
    """Replay check: maps are bijections per sort and commute with every operation."""
    if set(a.sorts) != set(b.sorts) or set(a.ops) != set(b.ops):
        return False
    for s, els in a.sorts.items():
        m = maps.get(s, {})
        if set(m) != set(els) or sorted(m.values()) != sorted(b.sorts[s]):
            return False
    for name, (args, res, table) in a.ops.items():
        btable = b.ops[name][2]
        if len(table) != len(btable):
            return False
        for key, val in table.items():
            img = tuple(maps[s][k] for s, k in zip(args, key))
            if btable.get(img) != maps[res][val]:
                return False
    return True


def _refine(a: Relational, b: Relational, rounds: int = 6):
    """Joint color refinement; returns color maps for both structures."""
    palette: dict = {}

    def initial(r):
        return {(s, x): palette.setdefault(("sort", s), len(palette)) for s, els in r.sorts.items() for x in els}

    ca, cb = initial(a), initial(b)
    for _ in range(rounds):
        new = []
        for r, col in ((a, ca), (b, cb)):
            sig = defaultdict(list)
            for name, (args, res, table) in r.ops.items():
                for key, val in table.items():
                    kc = tuple(col[(s, k)] for s, k in zip(args, key))
                    vc = col[(res, val)]
                    for i, (s, k) in enumerate(zip(args, key)):
                        sig[(s, k)].append((name, str(i), kc, vc))
                    sig[(res, val)].append((name, "=", kc, -1))
            new.append({e: palette.setdefault((c, tuple(sorted(sig[e]))), len(palette)) for e, c in col.items()})
        stable = len(set(new[0].values()) | set(new[1].values())) == len(set(ca.values()) | set(cb.values()))
        ca, cb = new
        if stable:
            break
    return ca, cb


def iso_search(a, b, budget: int = 200_000):
    """Search for an isomorphism a ≅ b; returns IsoWitness, NoIso or BudgetExceeded."""
    A, B = relational(a), relational(b)
    if set(A.sorts) != set(B.sorts) or set(A.ops) != set(B.ops):
        return NoIso("different signatures")
    for s in A.sorts:
        if len(A.sorts[s]) != len(B.sorts[s]):
            return NoIso(f"cardinality of {s} differs")
    for name in A.ops:
        if A.ops[name][:2] != B.ops[name][:2]:
            return NoIso(f"operation {name} has a different shape")
        if len(A.ops[name][2]) != len(B.ops[name][2]):
            return NoIso(f"operation {name} has a different number of entries")
    ca, cb = _refine(A, B)
    classes_a, classes_b = defaultdict(list), defaultdict(list)
    for e, c in ca.items():
        classes_a[c].append(e)
    for e, c in cb.items():
        classes_b[c].append(e)
    for c in set(classes_a) | set(classes_b):
        if len(classes_a[c]) != len(classes_b[c]):
            return NoIso("invariant color classes differ")

    occurs = defaultdict(list)  # (sort, x) -> [(op, key)]
    for name, (args, _, table) in A.ops.items():
        for key in table:
            for s, k in zip(args, key):
                occurs[(s, k)].append((name, key))
    constants = [(name, key) for name, (args, _, table) in A.ops.items() if not args for key in table]

    fwd: dict[tuple[str, str], str] = {}
    used: set[tuple[str, str]] = set()
    nodes = 0

    def assign(s, x, y, trail) -> bool:
        """Assign x↦y and propagate forced consequences; record on trail."""
        stack = [(s, x, y)]
        while stack:
            s, x, y = stack.pop()
            cur = fwd.get((s, x))
            if cur is not None:
                if cur != y:
                    return False
                continue
            if (s, y) in used or ca[(s, x)] != cb[(s, y)]:
                return False
            fwd[(s, x)] = y
            used.add((s, y))
            trail.append((s, x, y))
            for name, key in occurs[(s, x)]:
                args, res, table = A.ops[name]
                imgs = []
                for s2, k in zip(args, key):
                    v = fwd.get((s2, k))
                    if v is None:
                        break
                    imgs.append(v)
                else:
                    target = B.ops[name][2].get(tuple(imgs))
                    if target is None:
                        return False
                    stack.append((res, table[key], target))
        return True

    def undo(trail):
        for s, x, y in trail:
            del fwd[(s, x)]
            used.discard((s, y))

    trail0: list = []
    for name, key in constants:
        if not assign(A.ops[name][1], A.ops[name][2][key], B.ops[name][2][key], trail0):
            return NoIso("constants disagree")

    order = sorted(ca, key=lambda e: (len(classes_a[ca[e]]), e))

    class _Budget(Exception):
        pass

    def search(i) -> bool:
        nonlocal nodes
        while i < len(order) and order[i] in fwd:
            i += 1
        if i == len(order):
            return True
        s, x = order[i]
        for (s2, y) in classes_b[ca[(s, x)]]:
            if (s2, y) in used:
                continue
            nodes += 1
            if nodes > budget:
                raise _Budget
            trail: list = []
            if assign(s, x, y, trail) and search(i + 1):
                return True
            undo(trail)
        return False

    try:
        found = search(0)
    except _Budget:
        return BudgetExceeded(nodes)
    if not found:
        return NoIso("exhaustive search found no isomorphism", nodes)
    maps = {s: {} for s in A.sorts}
    for (s, x), y in fwd.items():
        maps[s][x] = y
    back = {s: {y: x for x, y in m.items()} for s, m in maps.items()}
    if not (preserves(A, B, maps) and preserves(B, A, back)):
        raise AssertionError("iso_search produced a witness that fails replay")
    return IsoWitness(maps, back, nodes)


def check_witness(a, b, maps: dict[str, dict[str, str]]) -> bool:
    """Replay an explicit witness in both directions."""
    A, B = relational(a), relational(b)
    back = {s: {y: x for x, y in m.items()} for s, m in maps.items()}
    return preserves(A, B, maps) and preserves(B, A, back)

"""Independent brute-force checkers used to derive and cross-check expected values.

These avoid the library's validators entirely; they only read the raw tables.
"""

from collections import defaultdict
from itertools import product


def category_ok(objects, morphisms, identity, comp) -> bool:
    """comp[(g, f)] = g after f."""
    for a in objects:
        i = identity.get(a)
        if morphisms.get(i) != (a, a):
            return False
    for g, f in product(morphisms, repeat=2):
        composable = morphisms[g][0] == morphisms[f][1]
        if composable != ((g, f) in comp):
            return False
        if composable and morphisms.get(comp[(g, f)]) != (morphisms[f][0], morphisms[g][1]):
            return False
    if len(comp) != sum(1 for g, f in product(morphisms, repeat=2) if morphisms[g][0] == morphisms[f][1]):
        return False
    for f, (a, b) in morphisms.items():
        if comp[(f, identity[a])] != f or comp[(identity[b], f)] != f:
            return False
    for h, g, f in product(morphisms, repeat=3):
        if morphisms[h][0] == morphisms[g][1] and morphisms[g][0] == morphisms[f][1]:
            if comp[(h, comp[(g, f)])] != comp[(comp[(h, g)], f)]:
                return False
    return True


def group_ok(elements, unit, mul, inv) -> bool:
    for a, b in product(elements, repeat=2):
        if mul.get((a, b)) not in elements:
            return False
    for a in elements:
        if mul[(a, unit)] != a or mul[(unit, a)] != a or mul[(a, inv[a])] != unit:
            return False
    return all(mul[(mul[(a, b)], c)] == mul[(a, mul[(b, c)])] for a, b, c in product(elements, repeat=3))


def crossed_module_ok(m) -> bool:
    H, G, d, act = m.H, m.G, m.boundary, m.action
    if not (group_ok(H.elements, H.unit, H.mul, H.inv) and group_ok(G.elements, G.unit, G.mul, G.inv)):
        return False
    if set(d) != set(H.elements) or set(act) != set(product(G.elements, H.elements)):
        return False
    if any(d[a] not in G.elements for a in H.elements) or any(v not in H.elements for v in act.values()):
        return False
    for a, b in product(H.elements, repeat=2):
        if d[H.mul[(a, b)]] != G.mul[(d[a], d[b])]:
            return False
        # Peiffer: ∂(a)b = a b a⁻¹
        if act[(d[a], b)] != H.mul[(H.mul[(a, b)], H.inv[a])]:
            return False
    for g, a in product(G.elements, H.elements):
        # ∂(ᵍa) = g ∂a g⁻¹
        if d[act[(g, a)]] != G.mul[(G.mul[(g, d[a])], G.inv[g])]:
            return False
    for g, h, a in product(G.elements, G.elements, H.elements):
        if act[(G.mul[(g, h)], a)] != act[(g, act[(h, a)])]:
            return False
    for g, a, b in product(G.elements, H.elements, H.elements):
        if act[(g, H.mul[(a, b)])] != H.mul[(act[(g, a)], act[(g, b)])]:
            return False
    return all(act[(G.unit, a)] == a for a in H.elements)


def double_ok(d) -> bool:
    """Every double category axiom, with diagrammatic composition tables."""
    hm, vm, sq = d.hmor, d.vmor, d.squares
    if not category_ok(d.objects, hm, d.h_id_mor, {(g, f): v for (f, g), v in d.hcomp_mor.items()}):
        return False
    if not category_ok(d.objects, vm, d.v_id_mor, {(g, f): v for (f, g), v in d.vcomp_mor.items()}):
        return False
    for s, (top, bottom, left, right) in sq.items():
        if top not in hm or bottom not in hm or left not in vm or right not in vm:
            return False
        if hm[top][0] != vm[left][0] or hm[top][1] != vm[right][0]:
            return False
        if hm[bottom][0] != vm[left][1] or hm[bottom][1] != vm[right][1]:
            return False
    by_left, by_top = defaultdict(list), defaultdict(list)
    for s, b in sq.items():
        by_left[b[2]].append(s)
        by_top[b[0]].append(s)
    n_h = n_v = 0
    for a, A in sq.items():
        for b in by_left[A[3]]:
            n_h += 1
            B = sq[b]
            ab = d.hcomp_sq.get((a, b))
            if ab not in sq or tuple(sq[ab]) != (d.hcomp_mor[(A[0], B[0])], d.hcomp_mor[(A[1], B[1])], A[2], B[3]):
                return False
        for c in by_top[A[1]]:
            n_v += 1
            C = sq[c]
            ac = d.vcomp_sq.get((a, c))
            if ac not in sq or tuple(sq[ac]) != (A[0], C[1], d.vcomp_mor[(A[2], C[2])], d.vcomp_mor[(A[3], C[3])]):
                return False
    if n_h != len(d.hcomp_sq) or n_v != len(d.vcomp_sq):
        return False
    for j, (x, y) in vm.items():
        s = d.h_id_sq.get(j)
        if s not in sq or tuple(sq[s]) != (d.h_id_mor[x], d.h_id_mor[y], j, j):
            return False
    for f, (x, y) in hm.items():
        s = d.v_id_sq.get(f)
        if s not in sq or tuple(sq[s]) != (f, f, d.v_id_mor[x], d.v_id_mor[y]):
            return False
    for a, A in sq.items():
        if d.hcomp_sq[(d.h_id_sq[A[2]], a)] != a or d.hcomp_sq[(a, d.h_id_sq[A[3]])] != a:
            return False
        if d.vcomp_sq[(d.v_id_sq[A[0]], a)] != a or d.vcomp_sq[(a, d.v_id_sq[A[1]])] != a:
            return False
    for x in d.objects:
        if d.h_id_sq[d.v_id_mor[x]] != d.v_id_sq[d.h_id_mor[x]]:
            return False
    for (j, k), jk in d.vcomp_mor.items():
        if d.h_id_sq[jk] != d.vcomp_sq[(d.h_id_sq[j], d.h_id_sq[k])]:
            return False
    for (f, g), fg in d.hcomp_mor.items():
        if d.v_id_sq[fg] != d.hcomp_sq[(d.v_id_sq[f], d.v_id_sq[g])]:
            return False
    hc, vc = d.hcomp_sq, d.vcomp_sq
    for (a, b), ab in hc.items():
        for c in by_left[sq[b][3]]:
            if hc[(ab, c)] != hc[(a, hc[(b, c)])]:
                return False
    for (a, b), ab in vc.items():
        for c in by_top[sq[b][1]]:
            if vc[(ab, c)] != vc[(a, vc[(b, c)])]:
                return False
    for (a, b), ab in hc.items():
        for c in by_top[sq[a][1]]:
            for e in by_top[sq[b][1]]:
                if sq[e][2] != sq[c][3]:
                    continue
                if vc[(ab, hc[(c, e)])] != hc[(vc[(a, c)], vc[(b, e)])]:
                    return False
    return True


def commutative_square_count(mul, elements) -> int:
    """Quadruples (f, j, k, g) in G⁴ with g∘j = k∘f, where x∘y = mul[(x, y)]."""
    return sum(1 for f, j, k, g in product(elements, repeat=4) if mul[(g, j)] == mul[(k, f)])

#!/usr/bin/env python3
"""Brute-force reference values for the test suite.

Everything here is computed from first definitions with exact rational
arithmetic and exhaustive enumeration: facets come from a candidate
hyperplane search over generator subsets, graded counts from set-valued
dynamic programming, saturation counts from bounding-box scans filtered
by facets and lattice membership. No code is shared with the Rust
implementation; run this script and paste the printed blocks into the
tests whenever a frozen constant needs to be refreshed.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

# ---------------------------------------------------------------------------
# exact linear algebra


def rank(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    cols = len(m[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def nullspace(rows, dim):
    """Basis of {x : row . x = 0 for all rows}, exact."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def primitive(vec):
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


# ---------------------------------------------------------------------------
# cones (full-dimensional only): facets by candidate hyperplane search


def cone_facets(gens):
    d = len(gens[0])
    assert rank(gens) == d, "oracle handles full-dimensional cones only"
    facets = set()
    for sub in combinations(gens, d - 1):
        ns = nullspace(sub, d)
        if len(ns) != 1:
            continue
        a = primitive(ns[0])
        vals = [sum(ai * gi for ai, gi in zip(a, g)) for g in gens]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            a = tuple(-x for x in a)
        else:
            continue
        facets.add(a)
    return sorted(facets)


def in_cone(facets, x, strict=False):
    for a in facets:
        v = sum(ai * xi for ai, xi in zip(a, x))
        if v < 0 or (strict and v == 0):
            return False
    return True


# ---------------------------------------------------------------------------
# integer lattices: row-space membership via exact elimination


def lattice_member(basis_rows, x):
    """Is x an integer combination of the rows? Exact, via column echelon."""
    rows = [list(r) for r in basis_rows]
    target = list(x)
    d = len(target)
    # integer row echelon by repeated gcd steps, column by column
    work = [r[:] for r in rows]
    t = target[:]
    row_at = 0
    for c in range(d):
        live = [i for i in range(row_at, len(work)) if work[i][c] != 0]
        while len(live) > 1:
            live.sort(key=lambda i: abs(work[i][c]))
            a, b = live[0], live[1]
            q = work[b][c] // work[a][c]
            work[b] = [x2 - q * x1 for x1, x2 in zip(work[a], work[b])]
            live = [i for i in live if work[i][c] != 0]
        if not live:
            if t[c] != 0:
                return False
            continue
        i = live[0]
        work[row_at], work[i] = work[i], work[row_at]
        p = work[row_at][c]
        if t[c] % p != 0:
            return False
        q = t[c] // p
        t = [xv - q * bv for xv, bv in zip(t, work[row_at])]
        row_at += 1
    return all(v == 0 for v in t)


# ---------------------------------------------------------------------------
# monoids


def slice_dp(gens, degree):
    """Counts and point sets of n-fold sums of the generators, n <= degree."""
    slices = [{tuple(0 for _ in gens[0])}]
    for _ in range(degree):
        prev = slices[-1]
        cur = set()
        for p in prev:
            for g in gens:
                cur.add(tuple(a + b for a, b in zip(p, g)))
        slices.append(cur)
    return slices


def saturation_slices(gens, degree, grading=None):
    """Lattice points of the cone in the generated lattice, degree by degree.

    The grading is inferred when every generator has equal coordinate sum;
    pass (weights, scale) otherwise.
    """
    facets = cone_facets(gens)
    d = len(gens[0])
    if grading is None:
        s = sum(gens[0])
        assert all(sum(g) == s for g in gens)
        weights, scale = [1] * d, s
    else:
        weights, scale = grading
    out = []
    for n in range(degree + 1):
        level = n * scale
        lows = [min(n * min(g[j] for g in gens), 0) for j in range(d)]
        highs = [max(n * max(g[j] for g in gens), 0) for j in range(d)]
        pts = set()

        def scan(j, prefix, acc):
            if j == d:
                if acc == level and in_cone(facets, prefix) and lattice_member(gens, prefix):
                    pts.add(tuple(prefix))
                return
            rest_max = sum(highs[t] * max(weights[t], 0) + lows[t] * min(weights[t], 0) for t in range(j, d))
            rest_min = sum(lows[t] * max(weights[t], 0) + highs[t] * min(weights[t], 0) for t in range(j, d))
            if acc + rest_max < level or acc + rest_min > level:
                return
            for v in range(lows[j], highs[j] + 1):
                scan(j + 1, prefix + [v], acc + weights[j] * v)

        scan(0, [], 0)
        out.append(pts)
    return out


def irreducibles(slices, max_degree):
    """Elements of the graded set not expressible as a sum of two nonzero ones."""
    basis = []
    for n in range(1, max_degree + 1):
        for x in sorted(slices[n]):
            red = False
            for i in range(1, n // 2 + 1):
                for a in slices[i]:
                    if tuple(xa - aa for xa, aa in zip(x, a)) in slices[n - i]:
                        red = True
                        break
                if red:
                    break
            if not red:
                basis.append((n, x))
    return basis


# ---------------------------------------------------------------------------
# graphs


def edge_gens(n, edges):
    out = []
    for u, v in edges:
        e = [0] * n
        e[u] += 1
        e[v] += 1
        out.append(tuple(e))
    return out


def simple_odd_cycles(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    cycles = []

    def extend(path, seen):
        head = path[-1]
        root = path[0]
        for w in sorted(adj[head]):
            if w == root and len(path) >= 3:
                if len(path) % 2 == 1 and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > root and w not in seen:
                seen.add(w)
                path.append(w)
                extend(path, seen)
                path.pop()
                seen.remove(w)

    for r in range(n):
        extend([r], {r})
    return cycles


def exceptional_pairs(n, edges, cycles):
    eset = {frozenset(e) for e in edges}
    pairs = []
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            a, b = set(cycles[i]), set(cycles[j])
            if a & b:
                continue
            if any(frozenset((u, v)) in eset for u in a for v in b):
                continue
            pairs.append((cycles[i], cycles[j]))
    return pairs


# ---------------------------------------------------------------------------
# named instances

G2_N = 10
G2_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4),
              (5, 6), (4, 7), (6, 7), (7, 8), (7, 9), (8, 9)]

G1_N = 8
G1_EDGES = [(0, 1), (0, 2), (1, 2), (5, 6), (5, 7), (6, 7), (2, 3), (3, 4),
            (2, 4), (4, 5)]

K4_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]

TWO_TRI_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]

RM1 = [(0, 5), (2, 3), (3, 2), (5, 0)]

TETRA = [(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)]


def polytope_lattice_points(vertices, ell, strict=False, coord_sum=None):
    """Lattice points of ell * conv(vertices); coord_sum prunes the box scan
    when every vertex has the same coordinate sum."""
    lifted = [tuple(v) + (1,) for v in vertices]
    facets = cone_facets(lifted) if rank(lifted) == len(lifted[0]) else None
    assert facets is not None, "oracle needs a full-dimensional lifted cone"
    d = len(vertices[0])
    lows = [ell * min(v[j] for v in vertices) for j in range(d)]
    highs = [ell * max(v[j] for v in vertices) for j in range(d)]
    target = None if coord_sum is None else ell * coord_sum
    pts = []

    def scan(j, prefix, acc):
        if j == d:
            if (target is None or acc == target) and in_cone(facets, tuple(prefix) + (ell,), strict=strict):
                pts.append(tuple(prefix))
            return
        if target is not None:
            rest_lo = sum(lows[j:])
            rest_hi = sum(highs[j:])
            if acc + rest_hi < target or acc + rest_lo > target:
                return
        for v in range(lows[j], highs[j] + 1):
            scan(j + 1, prefix + [v], acc + v)

    scan(0, [], 0)
    return pts


def edge_interior_counts(gens, max_ell):
    """Relative-interior lattice points of the dilated edge polytope, counted
    on the degree slice of the edge cone (all facets strict)."""
    facets = cone_facets(gens)
    d = len(gens[0])
    out = []
    for ell in range(1, max_ell + 1):
        level = 2 * ell
        count = 0

        def scan(j, prefix, acc):
            nonlocal count
            if j == d:
                if acc == level and in_cone(facets, prefix, strict=True) and lattice_member(gens, prefix):
                    count += 1
                return
            if acc > level or acc + (d - j) * level < level:
                return
            for v in range(0, level - acc + 1):
                scan(j + 1, prefix + [v], acc + v)

        scan(0, [], 0)
        out.append(count)
    return out


def block(title):
    print()
    print(f"== {title} ==")


def main():
    block("facets rm1")
    print(cone_facets(RM1))
    block("facets veronese3")
    print(cone_facets([(0, 3), (1, 2), (2, 1), (3, 0)]))
    block("facets cross4")
    print(cone_facets([(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1)]))
    block("facets simplicial3")
    print(cone_facets([(1, 0, 0), (1, 2, 0), (1, 1, 3)]))

    g2_gens = edge_gens(G2_N, G2_EDGES)
    g1_gens = edge_gens(G1_N, G1_EDGES)

    block("facets g2 edge cone")
    f = cone_facets(g2_gens)
    print(len(f))
    print(f)
    block("facets g1 edge cone")
    f = cone_facets(g1_gens)
    print(len(f))
    print(f)

    block("rm1 monoid counts to 4")
    sl = slice_dp(RM1, 4)
    print([len(s) for s in sl])
    print("slice1", sorted(sl[1]))
    print("slice2", sorted(sl[2]))
    block("rm1 saturation counts to 4 and holes")
    grading = ([1, 1], 5)
    sat = saturation_slices(RM1, 4, grading)
    print([len(s) for s in sat])
    for n in range(1, 5):
        print(n, sorted(sat[n] - sl[n]))
    print("irreducibles", irreducibles(sat, 3))

    block("g2 monoid counts to 5")
    sl = slice_dp(g2_gens, 5)
    print([len(s) for s in sl])
    block("g2 saturation counts to 5, hole counts, low holes")
    sat = saturation_slices(g2_gens, 5)
    print([len(s) for s in sat])
    print("holes", [len(sat[n] - sl[n]) for n in range(6)])
    print("deg3 holes", sorted(sat[3] - sl[3]))
    print("deg4 holes", sorted(sat[4] - sl[4]))
    print("irreducibles to 4", irreducibles(sat, 4))

    block("g1 monoid counts to 5")
    sl = slice_dp(g1_gens, 5)
    print([len(s) for s in sl])
    block("g1 saturation counts to 5, hole counts, low holes")
    sat = saturation_slices(g1_gens, 5)
    print([len(s) for s in sat])
    print("holes", [len(sat[n] - sl[n]) for n in range(6)])
    print("deg3 holes", sorted(sat[3] - sl[3]))
    block("g1 irreducibles of the saturation to degree 5")
    print(irreducibles(sat, 5))

    block("k4 saturation vs monoid to 4")
    k4 = edge_gens(4, K4_EDGES)
    sl = slice_dp(k4, 4)
    sat = saturation_slices(k4, 4)
    print([len(s) for s in sl], [len(s) for s in sat])

    block("two triangles (disconnected): needs blockwise grading")
    tt = edge_gens(6, TWO_TRI_EDGES)
    sl = slice_dp(tt, 4)
    sat = saturation_slices(tt, 4)
    print([len(s) for s in sl], [len(s) for s in sat])
    print("deg3 holes", sorted(sat[3] - sl[3]))
    print("irreducibles", irreducibles(sat, 4))

    block("odd cycles and exceptional pairs")
    for name, n, e in [("g2", G2_N, G2_EDGES), ("g1", G1_N, G1_EDGES),
                       ("k4", 4, K4_EDGES), ("twotri", 6, TWO_TRI_EDGES)]:
        cyc = simple_odd_cycles(n, e)
        pairs = exceptional_pairs(n, e, cyc)
        print(name, "cycles", len(cyc), "pairs", len(pairs))
        if name in ("g1", "twotri"):
            print(" cycles:", cyc)
        if pairs:
            print(" pairs:", pairs)

    block("tetrahedron: full-lattice dilation counts to 10")
    print([len(polytope_lattice_points(TETRA, l)) for l in range(11)])
    block("tetrahedron: interior counts to 4")
    print([len(polytope_lattice_points(TETRA, l, strict=True)) for l in range(1, 5)])

    block("g2 edge polytope: interior slice-lattice counts ell=1..6")
    print(edge_interior_counts(g2_gens, 6))
    block("g1 edge polytope: interior slice-lattice counts ell=1..5")
    print(edge_interior_counts(g1_gens, 5))

    block("g1 monoid and saturation counts to 12 with 8th differences")

    def diffs(seq, d):
        out = list(seq)
        for _ in range(d):
            out = [a - b for a, b in zip(out, [0] + out[:-1])]
        return out

    sl = slice_dp(g1_gens, 12)
    mcounts = [len(s) for s in sl]
    print(mcounts)
    sat = saturation_slices(g1_gens, 12)
    scounts = [len(s) for s in sat]
    print(scounts)
    print("h monoid", diffs(mcounts, 8))
    print("h saturation", diffs(scounts, 8))


if __name__ == "__main__":
    main()

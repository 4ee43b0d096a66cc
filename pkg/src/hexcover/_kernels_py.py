"""Pure-Python search kernels.

These are the reference versions of the routines in ``_kernels.pyx``; both
must return identical results for identical inputs (the compiled module is
only a faster route to the same answers).
"""

from __future__ import annotations

import struct
from itertools import combinations

# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


def _refine(adj, cell_of, ncells):
    """Iterate colour refinement until the number of cells is stable.

    ``cell_of[v]`` is the index of v's cell; cells are ordered, and new cells
    are ordered by (old cell, sorted neighbour cells) so the result commutes
    with relabeling.
    """
    n = len(adj)
    while True:
        sigs = [
            (cell_of[v], tuple(sorted(cell_of[w] for w in adj[v])))
            for v in range(n)
        ]
        order = sorted(set(sigs))
        if len(order) == ncells:
            return cell_of, ncells
        index = {s: i for i, s in enumerate(order)}
        cell_of = [index[s] for s in sigs]
        ncells = len(order)


def _cells(cell_of, ncells):
    cells = [[] for _ in range(ncells)]
    for v, c in enumerate(cell_of):
        cells[c].append(v)
    return cells


def _individualize(cell_of, v):
    c = cell_of[v]
    # v's cell splits into [v] (kept at index c) followed by the rest.
    out = [x + 1 if x > c else x for x in cell_of]
    for u in range(len(cell_of)):
        if cell_of[u] == c and u != v:
            out[u] = c + 1
    return out


def _orbit_reps(candidates, autos, fixed):
    parent = {v: v for v in candidates}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cand = set(candidates)
    for p in autos:
        if any(p[f] != f for f in fixed):
            continue
        for v in candidates:
            w = p[v]
            if w in cand:
                a, b = find(v), find(w)
                if a != b:
                    if a < b:
                        parent[b] = a
                    else:
                        parent[a] = b
    return parent, find


def canon_label(adj, colors):
    """Canonical labeling of a vertex-coloured simple graph.

    Returns ``(cert, lab)`` where ``lab[v]`` is the canonical position of v and
    ``cert`` is a byte string equal for two inputs iff they are isomorphic by
    a colour-preserving map.
    """
    n = len(adj)
    if n == 0:
        return struct.pack("<H", 0), []
    palette = sorted(set(colors))
    cidx = {c: i for i, c in enumerate(palette)}
    cell_of, ncells = _refine(adj, [cidx[c] for c in colors], len(palette))

    best = None  # (key, lab)
    autos = []

    def leaf_key(cell_of):
        inv = [0] * n
        for v, c in enumerate(cell_of):
            inv[c] = v
        key = tuple(tuple(sorted(cell_of[w] for w in adj[inv[i]])) for i in range(n))
        return key, list(cell_of)

    def search(cell_of, ncells, fixed):
        nonlocal best
        if ncells == n:
            key, lab = leaf_key(cell_of)
            if best is None or key < best[0]:
                best = (key, lab)
            elif key == best[0]:
                blab = best[1]
                binv = [0] * n
                for v, c in enumerate(blab):
                    binv[c] = v
                autos.append([binv[lab[v]] for v in range(n)])
            return
        cells = _cells(cell_of, ncells)
        target = min((c for c in cells if len(c) > 1), key=len)
        done = []
        for v in target:
            if done:
                _, find = _orbit_reps(target, autos, fixed)
                if any(find(v) == find(u) for u in done):
                    continue
            sub, nsub = _refine(adj, _individualize(cell_of, v), ncells + 1)
            search(sub, nsub, fixed + [v])
            done.append(v)

    search(cell_of, ncells, [])
    key, lab = best
    inv = [0] * n
    for v, c in enumerate(lab):
        inv[c] = v
    words = [n] + [cidx[colors[inv[i]]] for i in range(n)]
    for row in key:
        words.append(len(row))
        words.extend(row)
    return struct.pack(f"<{len(words)}H", *words), lab


# ---------------------------------------------------------------------------
# exact cover with multiplicity two
# ---------------------------------------------------------------------------


def exact_cover2(m, rows, find_all):
    """Choose rows (each a tuple of column indices) so that every column
    0..m-1 is covered exactly twice.

    Branches on the column with the fewest usable rows, taking each
    combination of the rows it still needs at once, so every solution is
    produced exactly once. Solutions are sorted lists of row indices.
    """
    need = [2] * m
    col_rows = [[] for _ in range(m)]
    for r, cols in enumerate(rows):
        for c in cols:
            col_rows[c].append(r)
    blocked = [0] * len(rows)
    chosen = []
    solutions = []

    def usable(c):
        return [r for r in col_rows[c] if not blocked[r]]

    def search():
        best_c, best_rows = -1, None
        for c in range(m):
            if need[c]:
                rs = usable(c)
                if best_rows is None or len(rs) < len(best_rows):
                    best_c, best_rows = c, rs
                    if len(rs) < need[c]:
                        return False
        if best_rows is None:
            solutions.append(sorted(chosen))
            return not find_all
        c = best_c
        for combo in combinations(best_rows, need[c]):
            load = {}
            ok = True
            for r in combo:
                for d in rows[r]:
                    load[d] = load.get(d, 0) + 1
                    if load[d] > need[d]:
                        ok = False
            if not ok:
                continue
            touched = []
            for r in combo:
                blocked[r] += 1
                touched.append(r)
                chosen.append(r)
            for d, k in load.items():
                need[d] -= k
            for d in load:
                if need[d] == 0:
                    for r in col_rows[d]:
                        blocked[r] += 1
                        touched.append(r)
            stop = search()
            for r in touched:
                blocked[r] -= 1
            for d, k in load.items():
                need[d] += k
            del chosen[-len(combo):]
            if stop:
                return True
        return False

    search()
    return solutions


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------


def ham_cycles(adj, limit):
    """Hamiltonian cycles through vertex 0 in DFS order (ascending
    neighbours), each reported once with ``cycle[1] < cycle[-1]``.

    Stops after ``limit`` cycles (``limit <= 0`` means no limit).
    """
    n = len(adj)
    if n < 3:
        return []
    visited = [False] * n
    visited[0] = True
    path = [0]
    out = []

    def viable():
        # every unvisited vertex needs two usable neighbours
        end = path[-1]
        for v in range(n):
            if not visited[v]:
                k = 0
                for w in adj[v]:
                    if not visited[w] or w == end or w == 0:
                        k += 1
                if k < 2:
                    return False
        return True

    def search(u):
        if len(path) == n:
            if 0 in adj[u] and path[1] < path[-1]:
                out.append(list(path))
                return 0 < limit <= len(out)
            return False
        if not viable():
            return False
        for w in adj[u]:
            if not visited[w]:
                visited[w] = True
                path.append(w)
                if search(w):
                    return True
                path.pop()
                visited[w] = False
        return False

    search(0)
    return out

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same algorithms and same tie-breaking as ``_kernels_py``; every function
returns exactly what its pure-Python twin returns.
"""

import struct

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef struct Ctx:
    int n
    int *off
    int *nb
    int *cell
    int *sig  # per-vertex sorted neighbour cells, CSR aligned with nb


cdef inline int _cmp_sig(Ctx *c, int a, int b) nogil:
    cdef int i, la, lb, x, y
    if c.cell[a] != c.cell[b]:
        return -1 if c.cell[a] < c.cell[b] else 1
    la = c.off[a + 1] - c.off[a]
    lb = c.off[b + 1] - c.off[b]
    i = 0
    while i < la and i < lb:
        x = c.sig[c.off[a] + i]
        y = c.sig[c.off[b] + i]
        if x != y:
            return -1 if x < y else 1
        i += 1
    if la != lb:
        return -1 if la < lb else 1
    return 0


cdef void _sort_ints(int *a, int k) nogil:
    cdef int i, j, t
    for i in range(1, k):
        t = a[i]
        j = i - 1
        while j >= 0 and a[j] > t:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = t


cdef void _merge_sort(Ctx *c, int *v, int *tmp, int k) nogil:
    cdef int h, i, j, o
    if k < 2:
        return
    h = k // 2
    _merge_sort(c, v, tmp, h)
    _merge_sort(c, v + h, tmp, k - h)
    i = 0
    j = h
    o = 0
    while i < h and j < k:
        if _cmp_sig(c, v[j], v[i]) < 0:
            tmp[o] = v[j]
            j += 1
        else:
            tmp[o] = v[i]
            i += 1
        o += 1
    while i < h:
        tmp[o] = v[i]
        i += 1
        o += 1
    while j < k:
        tmp[o] = v[j]
        j += 1
        o += 1
    memcpy(v, tmp, k * sizeof(int))


cdef int _refine(Ctx *c, int ncells, int *order, int *tmp, int *newcell) nogil:
    """Refine ``c.cell`` in place; returns the stable cell count."""
    cdef int n = c.n
    cdef int v, i, k
    while True:
        for v in range(n):
            for i in range(c.off[v], c.off[v + 1]):
                c.sig[i] = c.cell[c.nb[i]]
            _sort_ints(c.sig + c.off[v], c.off[v + 1] - c.off[v])
            order[v] = v
        _merge_sort(c, order, tmp, n)
        k = 0
        newcell[order[0]] = 0
        for i in range(1, n):
            if _cmp_sig(c, order[i - 1], order[i]) != 0:
                k += 1
            newcell[order[i]] = k
        k += 1
        if k == ncells:
            return ncells
        memcpy(c.cell, newcell, n * sizeof(int))
        ncells = k


cdef class _Canon:
    cdef Ctx ctx
    cdef int n
    cdef int *order
    cdef int *tmp
    cdef int *newcell
    cdef int *best_key   # rows concatenated, in position order
    cdef int *best_lab
    cdef int *cur_key
    cdef int have_best
    cdef list autos

    def __cinit__(self, adj):
        cdef int n = len(adj)
        cdef int m = 0, v, i
        self.n = n
        for a in adj:
            m += len(a)
        self.ctx.n = n
        self.ctx.off = <int *>malloc((n + 1) * sizeof(int))
        self.ctx.nb = <int *>malloc((m + 1) * sizeof(int))
        self.ctx.sig = <int *>malloc((m + 1) * sizeof(int))
        self.ctx.cell = <int *>malloc((n + 1) * sizeof(int))
        self.order = <int *>malloc((n + 1) * sizeof(int))
        self.tmp = <int *>malloc((n + 1) * sizeof(int))
        self.newcell = <int *>malloc((n + 1) * sizeof(int))
        self.best_key = <int *>malloc((m + 1) * sizeof(int))
        self.cur_key = <int *>malloc((m + 1) * sizeof(int))
        self.best_lab = <int *>malloc((n + 1) * sizeof(int))
        i = 0
        for v in range(n):
            self.ctx.off[v] = i
            for w in adj[v]:
                self.ctx.nb[i] = w
                i += 1
        self.ctx.off[n] = i
        self.have_best = 0
        self.autos = []

    def __dealloc__(self):
        free(self.ctx.off)
        free(self.ctx.nb)
        free(self.ctx.sig)
        free(self.ctx.cell)
        free(self.order)
        free(self.tmp)
        free(self.newcell)
        free(self.best_key)
        free(self.cur_key)
        free(self.best_lab)

    cdef int refine(self, int *cell, int ncells):
        memcpy(self.ctx.cell, cell, self.n * sizeof(int))
        ncells = _refine(&self.ctx, ncells, self.order, self.tmp, self.newcell)
        memcpy(cell, self.ctx.cell, self.n * sizeof(int))
        return ncells

    cdef int leaf_cmp(self, int *cell):
        """Build the leaf key into cur_key; compare with best_key."""
        cdef int n = self.n
        cdef int i, v, p, d, r, k
        cdef int *inv = self.tmp
        cdef int res = 0
        cdef int *off = self.ctx.off
        for v in range(n):
            inv[cell[v]] = v
        p = 0
        for i in range(n):
            v = inv[i]
            d = off[v + 1] - off[v]
            for k in range(d):
                self.cur_key[p + k] = cell[self.ctx.nb[off[v] + k]]
            _sort_ints(self.cur_key + p, d)
            p += d
        if not self.have_best:
            return -1
        # row lengths agree across leaves (degree is refinement-invariant)
        for r in range(p):
            if self.cur_key[r] != self.best_key[r]:
                return -1 if self.cur_key[r] < self.best_key[r] else 1
        return 0

    cdef void search(self, int *cell, int ncells, list fixed):
        cdef int n = self.n
        cdef int i, v, c, sz, best_c, best_sz, u, w, a, b, ok
        cdef int *sub
        cdef int nsub
        cdef int res
        if ncells == n:
            res = self.leaf_cmp(cell)
            if res < 0:
                memcpy(self.best_key, self.cur_key, self.ctx.off[n] * sizeof(int))
                memcpy(self.best_lab, cell, n * sizeof(int))
                self.have_best = 1
            elif res == 0:
                binv = [0] * n
                for v in range(n):
                    binv[self.best_lab[v]] = v
                self.autos.append([binv[cell[v]] for v in range(n)])
            return
        # smallest non-singleton cell, earliest index on ties
        counts = [0] * ncells
        for v in range(n):
            counts[cell[v]] += 1
        best_c = -1
        best_sz = n + 1
        for c in range(ncells):
            sz = counts[c]
            if sz > 1 and sz < best_sz:
                best_c = c
                best_sz = sz
        target = [v for v in range(n) if cell[v] == best_c]
        done = []
        sub = <int *>malloc(n * sizeof(int))
        try:
            for v in target:
                if done:
                    find = _orbit_find(target, self.autos, fixed)
                    fv = find(v)
                    skip = False
                    for u in done:
                        if find(u) == fv:
                            skip = True
                            break
                    if skip:
                        continue
                for i in range(n):
                    a = cell[i]
                    if a > best_c:
                        sub[i] = a + 1
                    elif a == best_c and i != v:
                        sub[i] = best_c + 1
                    else:
                        sub[i] = a
                nsub = self.refine(sub, ncells + 1)
                fixed.append(v)
                self.search(sub, nsub, fixed)
                fixed.pop()
                done.append(v)
        finally:
            free(sub)


def _orbit_find(candidates, autos, fixed):
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
    return find


def canon_label(adj, colors):
    cdef int n = len(adj)
    cdef int v, ncells
    cdef int *cell
    cdef _Canon st
    if n == 0:
        return struct.pack("<H", 0), []
    palette = sorted(set(colors))
    cidx = {c: i for i, c in enumerate(palette)}
    st = _Canon(adj)
    cell = <int *>malloc(n * sizeof(int))
    try:
        for v in range(n):
            cell[v] = cidx[colors[v]]
        ncells = st.refine(cell, len(palette))
        st.search(cell, ncells, [])
    finally:
        free(cell)
    lab = [st.best_lab[v] for v in range(n)]
    inv = [0] * n
    for v in range(n):
        inv[lab[v]] = v
    words = [n] + [cidx[colors[inv[i]]] for i in range(n)]
    p = 0
    for i in range(n):
        d = len(adj[inv[i]])
        words.append(d)
        words.extend(st.best_key[p + k] for k in range(d))
        p += d
    return struct.pack(f"<{len(words)}H", *words), lab


# ---------------------------------------------------------------------------
# exact cover with multiplicity two
# ---------------------------------------------------------------------------


cdef class _Cover:
    cdef int m, nrows
    cdef int *need
    cdef int *blocked
    cdef int *row_off
    cdef int *row_cols
    cdef int *col_off
    cdef int *col_rows
    cdef int *load
    cdef list chosen
    cdef list solutions
    cdef bint find_all

    def __cinit__(self, int m, rows, bint find_all):
        cdef int r, c, i, total = 0
        self.m = m
        self.nrows = len(rows)
        self.find_all = find_all
        for cols in rows:
            total += len(cols)
        self.need = <int *>malloc((m + 1) * sizeof(int))
        self.load = <int *>malloc((m + 1) * sizeof(int))
        self.blocked = <int *>malloc((self.nrows + 1) * sizeof(int))
        self.row_off = <int *>malloc((self.nrows + 1) * sizeof(int))
        self.row_cols = <int *>malloc((total + 1) * sizeof(int))
        self.col_off = <int *>malloc((m + 2) * sizeof(int))
        self.col_rows = <int *>malloc((total + 1) * sizeof(int))
        for c in range(m + 2):
            self.col_off[c] = 0
        i = 0
        for r in range(self.nrows):
            self.row_off[r] = i
            self.blocked[r] = 0
            for c in rows[r]:
                self.row_cols[i] = c
                self.col_off[c + 2] += 1
                i += 1
        self.row_off[self.nrows] = i
        for c in range(m):
            self.col_off[c + 2] += self.col_off[c + 1]
            self.need[c] = 2
            self.load[c] = 0
        for r in range(self.nrows):
            for i in range(self.row_off[r], self.row_off[r + 1]):
                c = self.row_cols[i]
                self.col_rows[self.col_off[c + 1]] = r
                self.col_off[c + 1] += 1
        self.chosen = []
        self.solutions = []

    def __dealloc__(self):
        free(self.need)
        free(self.load)
        free(self.blocked)
        free(self.row_off)
        free(self.row_cols)
        free(self.col_off)
        free(self.col_rows)

    cdef int usable(self, int c, int *out):
        cdef int i, r, k = 0
        for i in range(self.col_off[c], self.col_off[c + 1]):
            r = self.col_rows[i]
            if not self.blocked[r]:
                out[k] = r
                k += 1
        return k

    cdef bint search(self):
        cdef int c, k, best_c = -1, best_k = -1, i, j, a, b, r, d, x
        cdef int need, ncombo, ntouch, ndl, total
        cdef bint ok, stop
        cdef int combo[2]
        cdef int dl_col[64]
        cdef int dl_amt[64]
        cdef int *rs
        cdef int *buf
        cdef int *touched
        total = self.row_off[self.nrows]
        buf = <int *>malloc((self.nrows + 1) * sizeof(int))
        rs = <int *>malloc((self.nrows + 1) * sizeof(int))
        touched = <int *>malloc((total + 3) * sizeof(int))
        try:
            for c in range(self.m):
                if self.need[c]:
                    k = self.usable(c, buf)
                    if best_k < 0 or k < best_k:
                        best_c = c
                        best_k = k
                        memcpy(rs, buf, k * sizeof(int))
                        if k < self.need[c]:
                            return False
            if best_k < 0:
                self.solutions.append(sorted(self.chosen))
                return not self.find_all
            need = self.need[best_c]
            ncombo = best_k if need == 1 else best_k * best_k
            for x in range(ncombo):
                if need == 1:
                    combo[0] = rs[x]
                    k = 1
                else:
                    a = x // best_k
                    b = x % best_k
                    if b <= a:
                        continue
                    combo[0] = rs[a]
                    combo[1] = rs[b]
                    k = 2
                # column loads of the combo
                ndl = 0
                for j in range(k):
                    for i in range(self.row_off[combo[j]], self.row_off[combo[j] + 1]):
                        d = self.row_cols[i]
                        if self.load[d] == 0:
                            dl_col[ndl] = d
                            ndl += 1
                        self.load[d] += 1
                ok = True
                for j in range(ndl):
                    d = dl_col[j]
                    dl_amt[j] = self.load[d]
                    if self.load[d] > self.need[d]:
                        ok = False
                    self.load[d] = 0
                if not ok:
                    continue
                ntouch = 0
                for j in range(k):
                    self.blocked[combo[j]] += 1
                    touched[ntouch] = combo[j]
                    ntouch += 1
                    self.chosen.append(combo[j])
                for j in range(ndl):
                    self.need[dl_col[j]] -= dl_amt[j]
                for j in range(ndl):
                    d = dl_col[j]
                    if self.need[d] == 0:
                        for i in range(self.col_off[d], self.col_off[d + 1]):
                            r = self.col_rows[i]
                            self.blocked[r] += 1
                            touched[ntouch] = r
                            ntouch += 1
                stop = self.search()
                for j in range(ntouch):
                    self.blocked[touched[j]] -= 1
                for j in range(ndl):
                    self.need[dl_col[j]] += dl_amt[j]
                del self.chosen[-k:]
                if stop:
                    return True
            return False
        finally:
            free(buf)
            free(rs)
            free(touched)


def exact_cover2(m, rows, find_all):
    st = _Cover(m, rows, find_all)
    st.search()
    return st.solutions


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------


cdef class _Ham:
    cdef int n, limit, plen
    cdef int *off
    cdef int *nb
    cdef char *visited
    cdef int *path
    cdef list out

    def __cinit__(self, adj, int limit):
        cdef int n = len(adj), i = 0, v, total = 0
        self.n = n
        self.limit = limit
        for a in adj:
            total += len(a)
        self.off = <int *>malloc((n + 1) * sizeof(int))
        self.nb = <int *>malloc((total + 1) * sizeof(int))
        self.visited = <char *>malloc(n + 1)
        self.path = <int *>malloc((n + 1) * sizeof(int))
        for v in range(n):
            self.off[v] = i
            self.visited[v] = 0
            for w in adj[v]:
                self.nb[i] = w
                i += 1
        self.off[n] = i
        self.out = []

    def __dealloc__(self):
        free(self.off)
        free(self.nb)
        free(self.visited)
        free(self.path)

    cdef bint viable(self):
        cdef int v, i, w, k
        cdef int end = self.path[self.plen - 1]
        for v in range(self.n):
            if not self.visited[v]:
                k = 0
                for i in range(self.off[v], self.off[v + 1]):
                    w = self.nb[i]
                    if not self.visited[w] or w == end or w == 0:
                        k += 1
                if k < 2:
                    return False
        return True

    cdef bint search(self, int u):
        cdef int i, w
        cdef bint closes
        if self.plen == self.n:
            closes = False
            for i in range(self.off[u], self.off[u + 1]):
                if self.nb[i] == 0:
                    closes = True
            if closes and self.path[1] < self.path[self.plen - 1]:
                self.out.append([self.path[i] for i in range(self.plen)])
                return 0 < self.limit <= len(self.out)
            return False
        if not self.viable():
            return False
        for i in range(self.off[u], self.off[u + 1]):
            w = self.nb[i]
            if not self.visited[w]:
                self.visited[w] = 1
                self.path[self.plen] = w
                self.plen += 1
                if self.search(w):
                    return True
                self.plen -= 1
                self.visited[w] = 0
        return False


def ham_cycles(adj, limit):
    if len(adj) < 3:
        return []
    st = _Ham(adj, limit)
    st.visited[0] = 1
    st.path[0] = 0
    st.plen = 1
    st.search(0)
    return st.out

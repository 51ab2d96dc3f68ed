# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Statement-for-statement mirror of ``_pykernel.enumerate_labelings``; see that
module for the semantics. Candidate order, pruning order and result fields are
kept identical so the two backends are interchangeable.
"""

from array import array as _array

from cpython.bytes cimport PyBytes_AsString

cdef enum:
    FINAL_NONE = 0
    FINAL_ALL = 1
    FINAL_EXISTS_FAIL = 2
    FINAL_K_NOT_ALL_EQUAL = 3
    FINAL_K_MIXED = 4
    RUN_FIRST = 0
    RUN_COUNT = 1
    RUN_COLLECT = 2

_EMPTY_SLOT = _array("i", [0])


cdef class _Scan:
    cdef int n_vertices, P, n_edges, n_sids
    cdef int final_mode, run_mode, max_collect
    cdef bint track_identical
    cdef const int[::1] lower_ptr, lower_nbr, edges_u, edges_v, kvals, sids
    cdef const unsigned char* allow
    cdef const unsigned char* check
    cdef unsigned char[::1] used_prof, sid_used
    cdef int[::1] assign
    cdef unsigned long long n_complete, n_pass
    cdef object first, first_fail
    cdef list witnesses
    cdef bint truncated

    cdef bint final_ok(self):
        cdef int i, k, kmin, kmax
        cdef bint has_one, has_more
        cdef int P = self.P
        if self.final_mode == FINAL_NONE:
            return True
        if self.final_mode == FINAL_ALL:
            for i in range(self.n_edges):
                if not self.check[self.assign[self.edges_u[i]] * P
                                  + self.assign[self.edges_v[i]]]:
                    return False
            return True
        if self.final_mode == FINAL_EXISTS_FAIL:
            for i in range(self.n_edges):
                if not self.check[self.assign[self.edges_u[i]] * P
                                  + self.assign[self.edges_v[i]]]:
                    return True
            return False
        if self.final_mode == FINAL_K_NOT_ALL_EQUAL:
            if self.n_edges == 0:
                return False
            kmin = kmax = self.kvals[self.assign[self.edges_u[0]] * P
                                     + self.assign[self.edges_v[0]]]
            for i in range(1, self.n_edges):
                k = self.kvals[self.assign[self.edges_u[i]] * P
                               + self.assign[self.edges_v[i]]]
                if k < kmin:
                    kmin = k
                if k > kmax:
                    kmax = k
            return kmin != kmax
        if self.final_mode == FINAL_K_MIXED:
            has_one = has_more = False
            for i in range(self.n_edges):
                k = self.kvals[self.assign[self.edges_u[i]] * P
                               + self.assign[self.edges_v[i]]]
                if k == 1:
                    has_one = True
                elif k > 1:
                    has_more = True
            return has_one and has_more
        raise ValueError(f"bad final mode {self.final_mode}")

    cdef bint visit(self, int v, int cur_k):
        cdef int P = self.P
        cdef int lo = self.lower_ptr[v]
        cdef int hi = self.lower_ptr[v + 1]
        cdef int p, idx, u, row, k, s, new_k, marked
        cdef bint ok, abort
        for p in range(P):
            if self.used_prof[p]:
                continue
            new_k = cur_k
            marked = 0
            ok = True
            for idx in range(lo, hi):
                u = self.lower_nbr[idx]
                row = self.assign[u] * P
                if not self.allow[row + p]:
                    ok = False
                    break
                if self.track_identical:
                    k = self.kvals[row + p]
                    if new_k == 0:
                        new_k = k
                    elif k != new_k:
                        ok = False
                        break
                s = self.sids[row + p]
                if self.sid_used[s]:
                    ok = False
                    break
                self.sid_used[s] = 1
                marked += 1
            if not ok:
                for idx in range(lo, lo + marked):
                    self.sid_used[self.sids[self.assign[self.lower_nbr[idx]] * P + p]] = 0
                continue
            self.assign[v] = p
            self.used_prof[p] = 1
            abort = False
            if v + 1 == self.n_vertices:
                self.n_complete += 1
                if self.final_ok():
                    self.n_pass += 1
                    if self.first is None:
                        self.first = tuple(self.assign)
                    if self.run_mode == RUN_COLLECT:
                        self.witnesses.append(tuple(self.assign))
                        if 0 < self.max_collect <= len(self.witnesses):
                            self.truncated = True
                            abort = True
                    elif self.run_mode == RUN_FIRST:
                        abort = True
                elif self.first_fail is None:
                    self.first_fail = tuple(self.assign)
            else:
                abort = self.visit(v + 1, new_k)
            self.used_prof[p] = 0
            for idx in range(lo, hi):
                self.sid_used[self.sids[self.assign[self.lower_nbr[idx]] * P + p]] = 0
            if abort:
                return True
        return False


def enumerate_labelings(
    int n_vertices,
    lower_ptr,
    lower_nbr,
    edges_u,
    edges_v,
    int n_profiles,
    bytes allow,
    kvals,
    sids,
    int n_sids,
    bint track_identical,
    int final_mode,
    bytes check,
    int run_mode,
    int max_collect,
):
    cdef _Scan sc = _Scan()
    sc.n_vertices = n_vertices
    sc.P = n_profiles
    sc.n_sids = n_sids
    sc.track_identical = track_identical
    sc.final_mode = final_mode
    sc.run_mode = run_mode
    sc.max_collect = max_collect
    # zero-length buffers cannot back a typed memoryview, so substitute a
    # one-slot dummy; the loops never read past the recorded lengths
    sc.lower_ptr = lower_ptr if len(lower_ptr) else _EMPTY_SLOT
    sc.lower_nbr = lower_nbr if len(lower_nbr) else _EMPTY_SLOT
    sc.edges_u = edges_u if len(edges_u) else _EMPTY_SLOT
    sc.edges_v = edges_v if len(edges_v) else _EMPTY_SLOT
    sc.kvals = kvals if len(kvals) else _EMPTY_SLOT
    sc.sids = sids if len(sids) else _EMPTY_SLOT
    sc.n_edges = len(edges_u)
    sc.allow = <const unsigned char*> PyBytes_AsString(allow)
    sc.check = <const unsigned char*> PyBytes_AsString(check) if len(check) else sc.allow
    sc.used_prof = bytearray(n_profiles if n_profiles > 0 else 1)
    sc.sid_used = bytearray(n_sids if n_sids > 0 else 1)
    sc.assign = _array("i", [0] * n_vertices) if n_vertices else _EMPTY_SLOT
    sc.n_complete = 0
    sc.n_pass = 0
    sc.first = None
    sc.first_fail = None
    sc.witnesses = []
    sc.truncated = False
    if n_vertices > 0:
        sc.visit(0, 0)
    return {
        "n_complete": sc.n_complete,
        "n_pass": sc.n_pass,
        "first": sc.first,
        "first_fail": sc.first_fail,
        "witnesses": sc.witnesses,
        "truncated": sc.truncated,
    }

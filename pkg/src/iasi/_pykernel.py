"""Pure-Python enumeration kernel.

Reference implementation of the backtracking scan over per-vertex profile
assignments. The compiled kernel in ``_kernel.pyx`` mirrors this function
statement for statement; both must visit candidates in the same order so that
first-witness results are identical across backends.

Profile assignments are pruned as vertices are placed:

* a profile already used on another vertex is skipped (vertex labels are
  distinct sets exactly when their profiles differ),
* every edge to an already-placed neighbor must satisfy the ``allow`` table,
* the sumset id of every new edge must be unused (edge-label injectivity),
* with ``track_identical``, all edge k-ratios seen so far must agree.

Final modes decide what a complete assignment must satisfy:

* 0: nothing
* 1: every edge satisfies ``check``
* 2: at least one edge fails ``check``
* 3: edge k-ratios are not all equal
* 4: some edge ratio is 1 and some is greater
"""

from __future__ import annotations

from typing import Optional, Sequence

FINAL_NONE = 0
FINAL_ALL = 1
FINAL_EXISTS_FAIL = 2
FINAL_K_NOT_ALL_EQUAL = 3
FINAL_K_MIXED = 4

RUN_FIRST = 0
RUN_COUNT = 1
RUN_COLLECT = 2


def enumerate_labelings(
    n_vertices: int,
    lower_ptr: Sequence[int],
    lower_nbr: Sequence[int],
    edges_u: Sequence[int],
    edges_v: Sequence[int],
    n_profiles: int,
    allow: bytes,
    kvals: Sequence[int],
    sids: Sequence[int],
    n_sids: int,
    track_identical: bool,
    final_mode: int,
    check: bytes,
    run_mode: int,
    max_collect: int,
) -> dict:
    P = n_profiles
    n_edges = len(edges_u)
    used_prof = bytearray(P)
    sid_used = bytearray(n_sids)
    assign = [0] * n_vertices

    n_complete = 0
    n_pass = 0
    first: Optional[tuple[int, ...]] = None
    first_fail: Optional[tuple[int, ...]] = None
    witnesses: list[tuple[int, ...]] = []
    truncated = False

    def final_ok() -> bool:
        if final_mode == FINAL_NONE:
            return True
        if final_mode == FINAL_ALL:
            for i in range(n_edges):
                if not check[assign[edges_u[i]] * P + assign[edges_v[i]]]:
                    return False
            return True
        if final_mode == FINAL_EXISTS_FAIL:
            for i in range(n_edges):
                if not check[assign[edges_u[i]] * P + assign[edges_v[i]]]:
                    return True
            return False
        if final_mode == FINAL_K_NOT_ALL_EQUAL:
            if n_edges == 0:
                return False
            kmin = kmax = kvals[assign[edges_u[0]] * P + assign[edges_v[0]]]
            for i in range(1, n_edges):
                k = kvals[assign[edges_u[i]] * P + assign[edges_v[i]]]
                kmin = min(kmin, k)
                kmax = max(kmax, k)
            return kmin != kmax
        if final_mode == FINAL_K_MIXED:
            has_one = has_more = False
            for i in range(n_edges):
                k = kvals[assign[edges_u[i]] * P + assign[edges_v[i]]]
                if k == 1:
                    has_one = True
                elif k > 1:
                    has_more = True
            return has_one and has_more
        raise ValueError(f"bad final mode {final_mode}")

    def visit(v: int, cur_k: int) -> bool:
        """Returns True to abort the whole scan."""
        nonlocal n_complete, n_pass, first, first_fail, truncated
        lo, hi = lower_ptr[v], lower_ptr[v + 1]
        for p in range(P):
            if used_prof[p]:
                continue
            new_k = cur_k
            marked = 0
            ok = True
            for idx in range(lo, hi):
                u = lower_nbr[idx]
                row = assign[u] * P
                if not allow[row + p]:
                    ok = False
                    break
                if track_identical:
                    k = kvals[row + p]
                    if new_k == 0:
                        new_k = k
                    elif k != new_k:
                        ok = False
                        break
                s = sids[row + p]
                if sid_used[s]:
                    ok = False
                    break
                sid_used[s] = 1
                marked += 1
            if not ok:
                for idx in range(lo, lo + marked):
                    sid_used[sids[assign[lower_nbr[idx]] * P + p]] = 0
                continue
            assign[v] = p
            used_prof[p] = 1
            abort = False
            if v + 1 == n_vertices:
                n_complete += 1
                if final_ok():
                    n_pass += 1
                    if first is None:
                        first = tuple(assign)
                    if run_mode == RUN_COLLECT:
                        witnesses.append(tuple(assign))
                        if 0 < max_collect <= len(witnesses):
                            truncated = True
                            abort = True
                    elif run_mode == RUN_FIRST:
                        abort = True
                elif first_fail is None:
                    first_fail = tuple(assign)
            else:
                abort = visit(v + 1, new_k)
            used_prof[p] = 0
            for idx in range(lo, hi):
                sid_used[sids[assign[lower_nbr[idx]] * P + p]] = 0
            if abort:
                return True
        return False

    if n_vertices > 0:
        visit(0, 0)
    return {
        "n_complete": n_complete,
        "n_pass": n_pass,
        "first": first,
        "first_fail": first_fail,
        "witnesses": witnesses,
        "truncated": truncated,
    }

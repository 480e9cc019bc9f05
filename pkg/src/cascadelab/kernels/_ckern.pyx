# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled kernels; a line-for-line translation of ``pure.py``.

Uniform deviates are pulled with ``next_double`` straight from a PCG64 bit
generator, i.e. the identical stream the pure backend consumes through
``Generator.random``, so both backends give bit-identical results per seed.
"""

import numpy as np

cimport numpy as cnp
from cpython.pycapsule cimport PyCapsule_GetPointer
from numpy.random cimport bitgen_t

cnp.import_array()


cdef const char *_CAPSULE_NAME = "BitGenerator"


def ba_edge_list(n, m, seed):
    """See ``cascadelab.kernels.pure.ba_edge_list``."""
    cdef Py_ssize_t cn = n, cm = m
    cdef object pcg = np.random.PCG64(seed)
    cdef bitgen_t *bg = <bitgen_t *> PyCapsule_GetPointer(pcg.capsule, _CAPSULE_NAME)

    cdef Py_ssize_t n_edges = cm * (cm + 1) // 2 + (cn - cm - 1) * cm
    us_arr = np.empty(n_edges, dtype=np.int32)
    vs_arr = np.empty(n_edges, dtype=np.int32)
    rep_arr = np.empty(2 * n_edges, dtype=np.int32)
    tgt_arr = np.empty(cm, dtype=np.int32)
    cdef cnp.int32_t[::1] us = us_arr
    cdef cnp.int32_t[::1] vs = vs_arr
    cdef cnp.int32_t[::1] rep = rep_arr
    cdef cnp.int32_t[::1] targets = tgt_arr

    cdef Py_ssize_t e = 0, rp = 0, i, j, t, k, v
    cdef cnp.int32_t cand
    cdef bint dup
    for i in range(cm + 1):
        for j in range(i + 1, cm + 1):
            us[e] = <cnp.int32_t> i
            vs[e] = <cnp.int32_t> j
            e += 1
            rep[rp] = <cnp.int32_t> i
            rp += 1
            rep[rp] = <cnp.int32_t> j
            rp += 1
    for v in range(cm + 1, cn):
        t = 0
        while t < cm:
            cand = rep[<Py_ssize_t> (bg.next_double(bg.state) * rp)]
            dup = False
            for k in range(t):
                if targets[k] == cand:
                    dup = True
                    break
            if dup:
                continue
            targets[t] = cand
            t += 1
        for t in range(cm):
            us[e] = targets[t]
            vs[e] = <cnp.int32_t> v
            e += 1
        for t in range(cm):
            rep[rp] = targets[t]
            rp += 1
        for t in range(cm):
            rep[rp] = <cnp.int32_t> v
            rp += 1
    return us_arr, vs_arr


def cascade_events(indptr, indices, seeds, p_sched, max_steps, seed):
    """See ``cascadelab.kernels.pure.cascade_events``."""
    cdef cnp.int64_t[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int32_t[::1] ind = np.ascontiguousarray(indices, dtype=np.int32)
    cdef cnp.int32_t[::1] seed_nodes = np.ascontiguousarray(seeds, dtype=np.int32)
    cdef cnp.float64_t[::1] p_list = np.ascontiguousarray(p_sched, dtype=np.float64)
    cdef Py_ssize_t n = ptr.shape[0] - 1
    cdef Py_ssize_t horizon = p_list.shape[0]
    cdef Py_ssize_t cap = max_steps

    cdef object pcg = np.random.PCG64(seed)
    cdef bitgen_t *bg = <bitgen_t *> PyCapsule_GetPointer(pcg.capsule, _CAPSULE_NAME)

    exposure_arr = np.full(n, -1, dtype=np.int32)
    root_arr = np.full(n, -1, dtype=np.int32)
    hit_step_arr = np.full(n, -1, dtype=np.int32)
    hit_cnt_arr = np.zeros(n, dtype=np.int32)
    pend_src_arr = np.zeros(n, dtype=np.int32)
    active_arr = np.empty(n, dtype=np.int32)
    pending_arr = np.empty(n, dtype=np.int32)
    ev_step_arr = np.empty(n, dtype=np.int32)
    ev_src_arr = np.empty(n, dtype=np.int32)
    ev_tgt_arr = np.empty(n, dtype=np.int32)
    ev_root_arr = np.empty(n, dtype=np.int32)

    cdef cnp.int32_t[::1] exposure_step = exposure_arr
    cdef cnp.int32_t[::1] root = root_arr
    cdef cnp.int32_t[::1] hit_step = hit_step_arr
    cdef cnp.int32_t[::1] hit_cnt = hit_cnt_arr
    cdef cnp.int32_t[::1] pend_src = pend_src_arr
    cdef cnp.int32_t[::1] active = active_arr
    cdef cnp.int32_t[::1] pending = pending_arr
    cdef cnp.int32_t[::1] ev_step = ev_step_arr
    cdef cnp.int32_t[::1] ev_src = ev_src_arr
    cdef cnp.int32_t[::1] ev_tgt = ev_tgt_arr
    cdef cnp.int32_t[::1] ev_root = ev_root_arr

    cdef Py_ssize_t ne = 0, act_len = 0, act_start = 0, n_pending
    cdef Py_ssize_t ai, k, i, step, unchanged
    cdef cnp.int32_t node, nbr, src, tgt, s
    cdef double p
    cdef bint truncated = True

    for i in range(seed_nodes.shape[0]):
        s = seed_nodes[i]
        exposure_step[s] = 0
        root[s] = s
        ev_step[ne] = 0
        ev_src[ne] = -1
        ev_tgt[ne] = s
        ev_root[ne] = s
        ne += 1
        active[act_len] = s
        act_len += 1

    step = 0
    unchanged = 0
    while step < cap:
        step += 1
        while act_start < act_len and step - exposure_step[active[act_start]] - 1 >= horizon:
            act_start += 1
        n_pending = 0
        for ai in range(act_start, act_len):
            node = active[ai]
            p = p_list[step - exposure_step[node] - 1]
            for k in range(ptr[node], ptr[node + 1]):
                nbr = ind[k]
                if exposure_step[nbr] != -1:
                    continue
                if bg.next_double(bg.state) < p:
                    if hit_step[nbr] == step:
                        hit_cnt[nbr] += 1
                        if bg.next_double(bg.state) * hit_cnt[nbr] < 1.0:
                            pend_src[nbr] = node
                    else:
                        hit_step[nbr] = <cnp.int32_t> step
                        hit_cnt[nbr] = 1
                        pend_src[nbr] = node
                        pending[n_pending] = nbr
                        n_pending += 1
        for i in range(n_pending):
            tgt = pending[i]
            src = pend_src[tgt]
            exposure_step[tgt] = <cnp.int32_t> step
            root[tgt] = root[src]
            ev_step[ne] = <cnp.int32_t> step
            ev_src[ne] = src
            ev_tgt[ne] = tgt
            ev_root[ne] = root[tgt]
            ne += 1
            active[act_len] = tgt
            act_len += 1
        if n_pending == 0:
            unchanged += 1
        else:
            unchanged = 0
        if unchanged >= 2:
            truncated = False
            break
    return (
        ev_step_arr[:ne].copy(),
        ev_src_arr[:ne].copy(),
        ev_tgt_arr[:ne].copy(),
        ev_root_arr[:ne].copy(),
        step,
        truncated,
    )

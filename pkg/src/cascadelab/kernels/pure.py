"""Pure-Python reference kernels.

These define the exact semantics (including the order in which uniform
deviates are consumed); ``_ckern.pyx`` is a line-for-line translation.  Any
change here must be mirrored there, and the parity tests compare the two
backends for bit-identical output.
"""

from __future__ import annotations

import numpy as np

from cascadelab.rngutil import DoubleStream


def ba_edge_list(n: int, m: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Preferential-attachment edge list: complete seed graph on ``m + 1``
    nodes, then each new node attaches ``m`` edges to distinct existing nodes
    picked with probability proportional to current degree.

    Returns parallel int32 arrays (u, v) in construction order.
    """
    stream = DoubleStream(seed)
    n_edges = m * (m + 1) // 2 + (n - m - 1) * m
    us = np.empty(n_edges, dtype=np.int32)
    vs = np.empty(n_edges, dtype=np.int32)
    # One endpoint entry per unit of degree; uniform draws from this list
    # give degree-proportional selection.
    rep: list[int] = []
    e = 0
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            us[e] = i
            vs[e] = j
            e += 1
            rep.append(i)
            rep.append(j)
    targets = [0] * m
    for v in range(m + 1, n):
        # Sample m distinct targets; duplicates are redrawn, which keeps each
        # successive draw degree-proportional over the remaining nodes.
        t = 0
        while t < m:
            cand = rep[int(stream.next() * len(rep))]
            if cand in targets[:t]:
                continue
            targets[t] = cand
            t += 1
        for t in range(m):
            us[e] = targets[t]
            vs[e] = v
            e += 1
        rep.extend(targets)
        rep.extend([v] * m)
    return us, vs


def cascade_events(
    indptr: np.ndarray,
    indices: np.ndarray,
    seeds: np.ndarray,
    p_sched: np.ndarray,
    max_steps: int,
    seed: int,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, int, bool]:
    """Synchronous retention-decay cascade over a CSR adjacency.

    At step ``s`` every exposed, non-dormant node of exposure age ``a``
    (``a = s - exposure_step - 1``) attempts each neighbor that was still
    unexposed at the start of the step, independently, with probability
    ``p_sched[a]``; ages past the schedule end mean the node is dormant.
    A target hit by several transmitters in one step records a uniformly
    random one of them as source (reservoir choice) and inherits that
    source's root.  The process stops after two consecutive steps without a
    new exposure, or truncates at ``max_steps``.

    Returns (steps, sources, targets, roots, final_step, truncated); seeds
    come first with step 0, source -1 and root = self.
    """
    stream = DoubleStream(seed)
    n = len(indptr) - 1
    horizon = len(p_sched)
    p_list = [float(p) for p in p_sched]
    ind = indices.tolist()
    ptr = indptr.tolist()

    exposure_step = [-1] * n
    root = [-1] * n
    hit_step = [-1] * n
    hit_cnt = [0] * n
    pend_src = [0] * n

    ev_step: list[int] = []
    ev_src: list[int] = []
    ev_tgt: list[int] = []
    ev_root: list[int] = []

    active: list[int] = []
    for s in seeds:
        s = int(s)
        exposure_step[s] = 0
        root[s] = s
        ev_step.append(0)
        ev_src.append(-1)
        ev_tgt.append(s)
        ev_root.append(s)
        active.append(s)

    act_start = 0
    unchanged = 0
    step = 0
    truncated = True
    while step < max_steps:
        step += 1
        # Exposure steps are non-decreasing along the active list, so ages
        # only fall; dormant nodes always form a prefix.
        while act_start < len(active) and step - exposure_step[active[act_start]] - 1 >= horizon:
            act_start += 1
        pending: list[int] = []
        for ai in range(act_start, len(active)):
            node = active[ai]
            p = p_list[step - exposure_step[node] - 1]
            for k in range(ptr[node], ptr[node + 1]):
                nbr = ind[k]
                if exposure_step[nbr] != -1:
                    continue
                if stream.next() < p:
                    if hit_step[nbr] == step:
                        hit_cnt[nbr] += 1
                        if stream.next() * hit_cnt[nbr] < 1.0:
                            pend_src[nbr] = node
                    else:
                        hit_step[nbr] = step
                        hit_cnt[nbr] = 1
                        pend_src[nbr] = node
                        pending.append(nbr)
        for tgt in pending:
            src = pend_src[tgt]
            exposure_step[tgt] = step
            root[tgt] = root[src]
            ev_step.append(step)
            ev_src.append(src)
            ev_tgt.append(tgt)
            ev_root.append(root[tgt])
            active.append(tgt)
        unchanged = unchanged + 1 if not pending else 0
        if unchanged >= 2:
            truncated = False
            break
    return (
        np.asarray(ev_step, dtype=np.int32),
        np.asarray(ev_src, dtype=np.int32),
        np.asarray(ev_tgt, dtype=np.int32),
        np.asarray(ev_root, dtype=np.int32),
        step,
        truncated,
    )

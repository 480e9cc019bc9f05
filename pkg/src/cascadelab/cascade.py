"""Seed selection policies and the retention-decay independent cascade.

A node that receives the message at step ``t`` attempts to transmit to each
still-unexposed neighbor at every later step, with probability ``p0`` on the
first attempt and ``p(a+1) = p(a) / c`` thereafter; once ``p`` falls below
``p_floor`` the node goes dormant for good.  The run stops when the exposed
count is unchanged for two consecutive steps (or at ``max_steps``, flagged
as truncated).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Sequence

import numpy as np

from cascadelab import kernels
from cascadelab.errors import InsufficientGroupError, ParameterError
from cascadelab.netgen import Graph, eigenvector_centrality
from cascadelab.rngutil import generator

NO_SOURCE = -1


class Policy(enum.Enum):
    """How the initial seed set is chosen."""

    RANDOM_ALL = "random_all"
    RANDOM_GROUP = "random_group"
    TOP_CENTRALITY = "top_centrality"


@dataclass(frozen=True)
class CascadeParams:
    p0: float
    c: float
    seed_count: int
    policy: Policy = Policy.RANDOM_ALL
    max_steps: int = 10_000
    p_floor: float = 1e-6
    rng_seed: int = 0

    def validate(self) -> None:
        if not 0.0 <= self.p0 <= 1.0:
            raise ParameterError(f"p0 must be in [0, 1], got {self.p0}")
        if not self.c > 1.0:
            raise ParameterError(f"c must be > 1, got {self.c}")
        if self.p0 > 0.0 and not 0.0 < self.p_floor < self.p0:
            raise ParameterError(f"p_floor must be in (0, p0), got {self.p_floor}")
        if self.seed_count < 1:
            raise ParameterError(f"seed_count must be positive, got {self.seed_count}")
        if self.max_steps < 1:
            raise ParameterError(f"max_steps must be positive, got {self.max_steps}")


class CascadeEvent(NamedTuple):
    step: int
    source: int  # NO_SOURCE for seeds
    target: int
    root: int


@dataclass
class CascadeTrace:
    """First-exposure events of one run, in commit order (seeds first)."""

    steps: np.ndarray
    sources: np.ndarray
    targets: np.ndarray
    roots: np.ndarray
    final_step: int
    truncated: bool = False
    seed_count: int = field(default=0)

    @property
    def exposed_count(self) -> int:
        return len(self.targets)

    def events(self) -> Iterator[CascadeEvent]:
        for s, src, tgt, root in zip(self.steps, self.sources, self.targets, self.roots):
            yield CascadeEvent(int(s), int(src), int(tgt), int(root))

    def seed_ids(self) -> list[int]:
        return [int(t) for t in self.targets[: self.seed_count]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CascadeTrace):
            return NotImplemented
        return (
            self.final_step == other.final_step
            and self.truncated == other.truncated
            and self.seed_count == other.seed_count
            and np.array_equal(self.steps, other.steps)
            and np.array_equal(self.sources, other.sources)
            and np.array_equal(self.targets, other.targets)
            and np.array_equal(self.roots, other.roots)
        )


def decay_schedule(p0: float, c: float, p_floor: float) -> np.ndarray:
    """Transmission probability by exposure age, by iterated division:
    ``p(0) = p0``, ``p(a+1) = p(a) / c``, cut at the first value below
    ``p_floor``.  Empty for ``p0 = 0``."""
    if not c > 1.0:
        raise ParameterError(f"c must be > 1, got {c}")
    if p_floor <= 0.0:
        raise ParameterError(f"p_floor must be positive, got {p_floor}")
    sched = []
    p = float(p0)
    while p >= p_floor:
        sched.append(p)
        p /= c
    return np.asarray(sched, dtype=np.float64)


def select_seeds(graph: Graph, policy: Policy, k: int, rng_seed: int) -> list[int]:
    """Pick ``k`` distinct seed nodes.

    RANDOM_ALL samples uniformly from all nodes, RANDOM_GROUP from the
    spreading group, TOP_CENTRALITY takes the k highest eigenvector
    centrality scores (ties broken by ascending node id, highest first).
    """
    if not 1 <= k <= graph.n:
        raise ParameterError(f"k must be in [1, n], got {k}")
    if policy is Policy.RANDOM_ALL:
        rng = generator(rng_seed)
        return [int(v) for v in rng.choice(graph.n, size=k, replace=False)]
    if policy is Policy.RANDOM_GROUP:
        members = sorted(graph.group_members)
        if k > len(members):
            raise InsufficientGroupError(
                f"need {k} group seeds but the spreading group has {len(members)} members"
            )
        rng = generator(rng_seed)
        return [members[int(i)] for i in rng.choice(len(members), size=k, replace=False)]
    if policy is Policy.TOP_CENTRALITY:
        scores = eigenvector_centrality(graph)
        order = np.lexsort((np.arange(graph.n), -scores))
        return [int(v) for v in order[:k]]
    raise ParameterError(f"unknown policy {policy!r}")


def run_cascade(graph: Graph, seeds: Sequence[int], params: CascadeParams) -> CascadeTrace:
    """Run one cascade from ``seeds``; deterministic in
    (graph, seeds, params.rng_seed)."""
    params.validate()
    if len(seeds) == 0:
        raise ParameterError("seed set must not be empty")
    seed_arr = np.asarray(list(seeds), dtype=np.int32)
    if len(np.unique(seed_arr)) != len(seed_arr):
        raise ParameterError("seed set contains duplicates")
    if seed_arr.min() < 0 or seed_arr.max() >= graph.n:
        raise ParameterError("seed id out of range")
    sched = decay_schedule(params.p0, params.c, params.p_floor)
    indptr, indices = graph.csr()
    steps, sources, targets, roots, final_step, truncated = kernels.cascade_events(
        indptr, indices, seed_arr, sched, params.max_steps, params.rng_seed
    )
    return CascadeTrace(
        steps=steps,
        sources=sources,
        targets=targets,
        roots=roots,
        final_step=final_step,
        truncated=truncated,
        seed_count=len(seed_arr),
    )

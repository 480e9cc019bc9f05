"""Network construction: preferential-attachment graphs with a planted
high-connectivity spreading group, plus eigenvector centrality.

Graphs are undirected, simple, and immutable once built; node ids are
``0..n-1``.  All randomness is PCG64 seeded, so identical parameters give
bit-identical graphs.
"""

from __future__ import annotations

import math
from bisect import bisect_left, insort
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np
from scipy import sparse

from cascadelab import kernels
from cascadelab.errors import ConvergenceError, ParameterError
from cascadelab.rngutil import TAG_GRAPH, TAG_PLANT, generator, mix64


class Graph:
    """Undirected simple graph with sorted per-node neighbor lists and an
    optional set of spreading-group members."""

    __slots__ = ("n", "adjacency", "group_members", "_csr")

    def __init__(self, n: int, adjacency: list[list[int]], group_members: Iterable[int] = ()):
        if n < 1:
            raise ParameterError(f"node count must be positive, got {n}")
        if len(adjacency) != n:
            raise ParameterError("adjacency length does not match node count")
        self.n = n
        self.adjacency = adjacency
        self.group_members = frozenset(int(g) for g in group_members)
        self._csr: tuple[np.ndarray, np.ndarray] | None = None

    @classmethod
    def from_edges(
        cls, n: int, us: Iterable[int], vs: Iterable[int], group_members: Iterable[int] = ()
    ) -> "Graph":
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in zip(us, vs):
            adjacency[u].append(int(v))
            adjacency[v].append(int(u))
        for nbrs in adjacency:
            nbrs.sort()
        return cls(n, adjacency, group_members)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self) -> np.ndarray:
        return np.array([len(nbrs) for nbrs in self.adjacency], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each undirected edge once, as (u, v) with u < v, lexicographic."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if v > u:
                    yield u, v

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr int64, indices int32) over the sorted adjacency; cached."""
        if self._csr is None:
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            for u, nbrs in enumerate(self.adjacency):
                indptr[u + 1] = indptr[u] + len(nbrs)
            indices = np.empty(indptr[-1], dtype=np.int32)
            for u, nbrs in enumerate(self.adjacency):
                indices[indptr[u] : indptr[u + 1]] = nbrs
            self._csr = (indptr, indices)
        return self._csr

    def validate(self) -> None:
        """Check structural invariants; raises ParameterError on violation."""
        seen_edges = 0
        for u, nbrs in enumerate(self.adjacency):
            if any(nbrs[i] >= nbrs[i + 1] for i in range(len(nbrs) - 1)):
                raise ParameterError(f"neighbors of {u} not sorted/unique")
            for v in nbrs:
                if v == u:
                    raise ParameterError(f"self-loop at {u}")
                if not 0 <= v < self.n:
                    raise ParameterError(f"neighbor {v} of {u} out of range")
                if not self.has_edge(v, u):
                    raise ParameterError(f"asymmetric edge {u}-{v}")
            seen_edges += len(nbrs)
        if any(not 0 <= g < self.n for g in self.group_members):
            raise ParameterError("group member out of range")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and self.adjacency == other.adjacency
            and self.group_members == other.group_members
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()}, group={len(self.group_members)})"


@dataclass(frozen=True)
class GenParams:
    """Parameters for one network build: size, attachment count, group ratio,
    intra-group overlay probability, and the master seed."""

    n: int
    m_attach: int = 2
    r: float = 0.0
    q_intra: float = 0.1
    rng_seed: int = 0

    def validate(self) -> None:
        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if not 1 <= self.m_attach < self.n:
            raise ParameterError(f"m_attach must be in [1, n), got {self.m_attach}")
        if not 0.0 <= self.r < 1.0:
            raise ParameterError(f"r must be in [0, 1), got {self.r}")
        if not 0.0 <= self.q_intra <= 1.0:
            raise ParameterError(f"q_intra must be in [0, 1], got {self.q_intra}")


def group_size(n: int, r: float) -> int:
    """ceil(n*r) with a guard against float noise just above an integer."""
    return max(0, math.ceil(n * r - 1e-9))


def generate_ba(params: GenParams) -> Graph:
    """Preferential-attachment graph: complete seed graph on ``m_attach + 1``
    nodes, then degree-proportional attachment of ``m_attach`` distinct edges
    per new node.  The group is not planted here (``group_members`` empty)."""
    params.validate()
    us, vs = kernels.ba_edge_list(params.n, params.m_attach, mix64(params.rng_seed, TAG_GRAPH))
    return Graph.from_edges(params.n, us.tolist(), vs.tolist())


def plant_group(graph: Graph, r: float, q_intra: float, rng_seed: int) -> Graph:
    """Mark ``ceil(n*r)`` uniformly chosen nodes as the spreading group and
    add each missing intra-group edge independently with probability
    ``q_intra``.  Existing edges are never removed; returns a new Graph."""
    if not 0.0 <= r < 1.0:
        raise ParameterError(f"r must be in [0, 1), got {r}")
    if not 0.0 <= q_intra <= 1.0:
        raise ParameterError(f"q_intra must be in [0, 1], got {q_intra}")
    size = group_size(graph.n, r)
    if size == 0:
        return Graph(graph.n, [list(nbrs) for nbrs in graph.adjacency])
    rng = generator(rng_seed)
    members = np.sort(rng.choice(graph.n, size=size, replace=False))
    adjacency = [list(nbrs) for nbrs in graph.adjacency]
    if size >= 2 and q_intra > 0.0:
        # One uniform per unordered pair in lexicographic order; draws for
        # already-adjacent pairs are discarded, which leaves each missing
        # pair an independent Bernoulli(q_intra).
        n_pairs = size * (size - 1) // 2
        hits = np.nonzero(rng.random(n_pairs) < q_intra)[0]
        if len(hits) > 0:
            ii, jj = np.triu_indices(size, k=1)
            for flat in hits:
                a = int(members[ii[flat]])
                b = int(members[jj[flat]])
                if not graph.has_edge(a, b):
                    insort(adjacency[a], b)
                    insort(adjacency[b], a)
    return Graph(graph.n, adjacency, members.tolist())


def build_graph(params: GenParams) -> Graph:
    """generate_ba followed by plant_group, with stage seeds derived from
    ``params.rng_seed``."""
    graph = generate_ba(params)
    if params.r > 0.0:
        graph = plant_group(graph, params.r, params.q_intra, mix64(params.rng_seed, TAG_PLANT))
    return graph


def eigenvector_centrality(graph: Graph, tol: float = 1e-8, max_iter: int = 1000) -> np.ndarray:
    """Unit-L2-norm nonnegative dominant eigenvector of the adjacency matrix
    by power iteration, started from a uniform vector.

    Iterates (A + I) x, which leaves the dominant eigenvector unchanged but
    keeps bipartite structures from oscillating.  Isolated nodes are pinned
    at zero.  Raises ConvergenceError if successive iterates still differ by
    ``tol`` or more (L2) after ``max_iter`` rounds.
    """
    if tol <= 0 or max_iter < 1:
        raise ParameterError("tol must be positive and max_iter at least 1")
    n = graph.n
    indptr, indices = graph.csr()
    if len(indices) == 0:
        return np.zeros(n)
    mat = sparse.csr_array((np.ones(len(indices)), indices, indptr), shape=(n, n))
    x = (np.diff(indptr) > 0).astype(np.float64)
    x /= np.linalg.norm(x)
    residual = math.inf
    for _ in range(max_iter):
        y = mat @ x + x
        y /= np.linalg.norm(y)
        residual = float(np.linalg.norm(y - x))
        x = y
        if residual < tol:
            return x
    raise ConvergenceError(
        f"power iteration stopped after {max_iter} iterations (residual {residual:.3e})",
        residual=residual,
        iterations=max_iter,
    )


def write_edgelist(graph: Graph, dest: str | IO[str], meta: str | None = None) -> None:
    """Plain-text edge list: a ``# n=<n> group=<ids>`` header, one ``u v``
    line per edge (u < v, lexicographic).  Extra ``# ...`` lines are allowed
    and ignored by the reader."""

    def _write(fh: IO[str]) -> None:
        members = ",".join(str(g) for g in sorted(graph.group_members))
        fh.write(f"# n={graph.n} group={members}\n")
        if meta:
            fh.write(f"# {meta}\n")
        for u, v in graph.edges():
            fh.write(f"{u} {v}\n")

    if isinstance(dest, str):
        with open(dest, "w", encoding="utf-8") as fh:
            _write(fh)
    else:
        _write(dest)


def read_edgelist(src: str | IO[str]) -> Graph:
    """Inverse of write_edgelist; round-trips exactly."""

    def _read(fh: IO[str]) -> Graph:
        header = fh.readline()
        if not header.startswith("# n="):
            raise ParameterError("missing '# n=... group=...' header")
        body = header[2:].strip()
        fields = dict(part.split("=", 1) for part in body.split(" ") if "=" in part)
        n = int(fields["n"])
        group = [int(g) for g in fields.get("group", "").split(",") if g != ""]
        us: list[int] = []
        vs: list[int] = []
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            a, b = line.split()
            us.append(int(a))
            vs.append(int(b))
        return Graph.from_edges(n, us, vs, group)

    if isinstance(src, str):
        with open(src, "r", encoding="utf-8") as fh:
            return _read(fh)
    return _read(src)

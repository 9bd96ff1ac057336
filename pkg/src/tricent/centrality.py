"""Classical comparison centralities on the shared Graph type.

Degree (DC), eigenvector (EC), Burkhardt triangle (TC), Brandes betweenness
(BC), Estrada subgraph (SC) centrality, and the Fiedler vector. DC, TC, BC
and SC report raw values (call .unit_euclidean() for the normalized column);
EC is inherently unit-Euclidean. All functions are pure and safe to run
concurrently on the same graph.
"""

from __future__ import annotations

import warnings
from collections import deque
from fractions import Fraction

import numpy as np

from .graph import Graph, TriangleSet, is_connected
from .report import CentralityReport, make_report
from .tensor import ConvergenceError, NotConnectedError

SC_SIZE_LIMIT = 5000


def adjacency_matrix(graph: Graph) -> np.ndarray:
    a = np.zeros((graph.n, graph.n))
    for i, j in graph.edges:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def laplacian_matrix(graph: Graph) -> np.ndarray:
    a = adjacency_matrix(graph)
    return np.diag(a.sum(axis=1)) - a


def degree_centrality(graph: Graph) -> CentralityReport:
    """DC(i) = number of edges containing i (raw)."""
    return make_report(
        "dc", {}, graph.labels, np.array(graph.degrees(), dtype=float), "raw"
    )


def eigenvector_centrality(
    graph: Graph, tol: float = 1e-10, max_iter: int = 100_000
) -> CentralityReport:
    """Positive unit-Euclidean Perron vector of the adjacency matrix.

    Power iteration on A + I: the +1 diagonal shift makes the matrix primitive
    for every connected graph (bipartite graphs included), so the iteration
    always converges. Collatz-Wielandt ratios bracket the eigenvalue and the
    loop stops when the bracket is narrower than tol.
    """
    if not is_connected(graph):
        raise NotConnectedError("eigenvector centrality needs a connected graph")
    n = graph.n
    a = adjacency_matrix(graph)
    x = np.full(n, 1.0 / np.sqrt(n))
    lo = hi = np.nan
    for iteration in range(1, max_iter + 1):
        y = a @ x + x
        ratios = y / x
        lo = float(ratios.min()) - 1.0
        hi = float(ratios.max()) - 1.0
        if hi - lo < tol:
            lam = 0.5 * (lo + hi)
            return make_report(
                "ec",
                {},
                graph.labels,
                x,
                "unit-euclidean",
                meta={
                    "eigenvalue": lam,
                    "iterations": iteration,
                    "residual": float(np.max(np.abs(a @ x - lam * x))),
                },
            )
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f"eigenvector centrality: no convergence after {max_iter} iterations",
        bracket=(lo, hi),
        iterations=max_iter,
    )


def triangle_centrality(graph: Graph, triangles: TriangleSet) -> CentralityReport:
    """Burkhardt triangle centrality (raw).

    TC(v) = ( (1/3) * sum_{u in N_tri(v)+} T(u)
              + sum_{w in N(v) \\ N_tri(v)} T(w) ) / T(G),
    where N_tri(v) are the neighbors sharing a triangle with v, N_tri(v)+
    additionally includes v itself, and T counts triangles. Vertices with no
    triangle anywhere in their closed neighborhood score 0. A triangle-free
    graph yields all zeros with a warning instead of dividing by T(G) = 0.
    """
    n = graph.n
    t = triangles.count_per_vertex()
    total = len(triangles)
    if total == 0:
        warnings.warn("graph has no triangles; triangle centrality is all-zero")
        return make_report("tc", {}, graph.labels, np.zeros(n), "raw")
    tri_neighbors: list[set[int]] = [set() for _ in range(n)]
    for p, q, r in triangles.triangles:
        tri_neighbors[p].update((q, r))
        tri_neighbors[q].update((p, r))
        tri_neighbors[r].update((p, q))
    scores = np.zeros(n)
    for v in range(n):
        core = t[v] + sum(t[u] for u in sorted(tri_neighbors[v]))
        outside = sum(t[w] for w in graph.adjacency[v] if w not in tri_neighbors[v])
        scores[v] = (core / 3.0 + outside) / total
    return make_report("tc", {}, graph.labels, scores, "raw")


def betweenness_centrality(graph: Graph, *, exact: bool = False) -> CentralityReport:
    """Brandes betweenness over unordered vertex pairs, endpoints excluded (raw).

    BC(v) = sum over pairs {s, t} (v distinct from both) of the fraction of
    shortest s-t paths passing through v. With exact=True the dependency
    accumulation runs over rationals, so the reported floats are the correctly
    rounded exact values (slower; meant for small graphs and oracle checks).
    """
    n = graph.n
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0
    bc = [zero] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        queue = deque([s])
        stack: list[int] = []
        while queue:
            v = queue.popleft()
            stack.append(v)
            for w in graph.adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [zero] * n
        while stack:
            w = stack.pop()
            for v in preds[w]:
                if exact:
                    delta[v] += Fraction(sigma[v], sigma[w]) * (one + delta[w])
                else:
                    delta[v] += sigma[v] / sigma[w] * (one + delta[w])
            if w != s:
                bc[w] += delta[w]
    # every unordered pair was accumulated from both endpoints
    scores = np.array([float(b / 2) for b in bc])
    return make_report("bc", {}, graph.labels, scores, "raw")


def subgraph_centrality(graph: Graph) -> CentralityReport:
    """Estrada subgraph centrality SC(i) = sum_j phi_j(i)^2 * exp(lambda_j) (raw).

    Full symmetric eigendecomposition of the adjacency matrix; counts closed
    walks of every length from i weighted by 1/k!.
    """
    if graph.n > SC_SIZE_LIMIT:
        raise ValueError(
            f"subgraph centrality is dense-eigendecomposition bound; "
            f"n = {graph.n} exceeds the {SC_SIZE_LIMIT} limit"
        )
    eigenvalues, vectors = np.linalg.eigh(adjacency_matrix(graph))
    scores = (vectors**2) @ np.exp(eigenvalues)
    return make_report("sc", {}, graph.labels, scores, "raw")


def fiedler_vector(graph: Graph, tol: float = 1e-8) -> np.ndarray:
    """Unit eigenvector of the second-smallest Laplacian eigenvalue.

    Requires a connected graph (otherwise lambda_2 = 0 is degenerate with the
    constant vector). The sign is fixed so the first component larger than
    tol in magnitude is positive. The residual ||L v - lambda_2 v||_inf is
    checked against tol; lambda_2 is recoverable as v @ L @ v.
    """
    if not is_connected(graph):
        raise NotConnectedError("Fiedler vector needs a connected graph")
    lap = laplacian_matrix(graph)
    eigenvalues, vectors = np.linalg.eigh(lap)
    lam2 = float(eigenvalues[1])
    v = vectors[:, 1].copy()
    v /= np.linalg.norm(v)
    residual = float(np.max(np.abs(lap @ v - lam2 * v)))
    if residual >= tol:
        raise ConvergenceError(
            f"Fiedler residual {residual:.3e} exceeds tol {tol:.3e}",
            bracket=(lam2, lam2),
            iterations=0,
        )
    for value in v:
        if abs(value) > tol:
            if value < 0:
                v = -v
            break
    return v

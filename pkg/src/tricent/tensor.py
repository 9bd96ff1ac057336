"""The alpha-triangle operator and its spectral solver.

For an undirected graph with edge set E and triangle set V_tri, the order-3
tensor A = alpha * A_E + (1 - alpha) * A_tri acts on a vector x through

    (A x^2)_i = alpha * sum_{{i,j} in E} x_j^2
              + (1 - alpha) * sum_{{i,j,k} in V_tri} x_j * x_k,

where the edge tensor has b_ijk = 1 when {i,j} in E and k = j, and the
triangle tensor has value 1/2 at all six index permutations of each triangle.
The spectral radius rho and its positive eigenvector x (A x^2 = rho x^[2],
x^[2] the componentwise square) are found by the Ng-Qi-Zhou power iteration
with an additive diagonal shift, which converges for every weakly irreducible
nonnegative tensor; connectivity of the graph guarantees weak irreducibility
for alpha in (0, 1].

The tensor is never materialized in the production path: the operator stores
flattened (i, j, k, coefficient) contribution arrays in lexicographic (i, j, k)
order and accumulates them strictly in that order, so apply() is bitwise equal
to a naive triple-loop contraction of the dense tensor.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, TriangleSet, connected_components, enumerate_triangles
from .report import CentralityReport, make_report

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 100_000
DEFAULT_SHIFT = 1.0
MATERIALIZE_LIMIT = 64


class AlphaDomainError(ValueError):
    """alpha outside the permitted interval (0, 1]."""


class NotConnectedError(ValueError):
    """Operation requires a connected graph (unique positive eigenvector)."""


class ConvergenceError(RuntimeError):
    """Iteration budget exhausted; carries the final eigenvalue bracket."""

    def __init__(self, message: str, bracket: tuple[float, float], iterations: int):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha <= 1.0:
        raise AlphaDomainError(
            f"alpha must lie in (0, 1], got {alpha}; alpha = 0 would zero out "
            "vertices that sit in no triangle"
        )
    return alpha


class AlphaTriangleOperator:
    """Matrix-free x -> A x^2 for the alpha-triangle tensor of a graph.

    Immutable after construction and safe to share across threads. apply()
    is order-2 homogeneous: op(t*x) = t^2 * op(x) for t >= 0.
    """

    def __init__(
        self,
        graph: Graph,
        triangles: TriangleSet,
        alpha: float,
        *,
        allow_disconnected: bool = False,
    ):
        self.alpha = _check_alpha(alpha)
        self.graph = graph
        self.triangles = triangles
        self.n = graph.n
        if not allow_disconnected:
            ncomp = len(connected_components(graph))
            if ncomp != 1:
                raise NotConnectedError(
                    f"graph has {ncomp} components; the positive eigenvector is "
                    "only unique on connected graphs (pass allow_disconnected "
                    "to bypass, or solve per component)"
                )

        edge_coeff = self.alpha
        tri_coeff = (1.0 - self.alpha) * 0.5
        rows: list[int] = []
        cols_j: list[int] = []
        cols_k: list[int] = []
        coeffs: list[float] = []
        for i in range(self.n):
            entries: list[tuple[int, int, float]] = [
                (j, j, edge_coeff) for j in graph.adjacency[i]
            ]
            for j, k in triangles.incidence[i]:
                entries.append((j, k, tri_coeff))
                entries.append((k, j, tri_coeff))
            entries.sort(key=lambda e: (e[0], e[1]))
            for j, k, c in entries:
                rows.append(i)
                cols_j.append(j)
                cols_k.append(k)
                coeffs.append(c)
        self._rows = np.asarray(rows, dtype=np.intp)
        self._cols_j = np.asarray(cols_j, dtype=np.intp)
        self._cols_k = np.asarray(cols_k, dtype=np.intp)
        self._coeffs = np.asarray(coeffs, dtype=float)

    def apply(self, x: np.ndarray) -> np.ndarray:
        """(A x^2)_i, accumulated per component in ascending (j, k) order."""
        x = np.asarray(x, dtype=float)
        if x.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}, got shape {x.shape}")
        contributions = self._coeffs * x[self._cols_j] * x[self._cols_k]
        out = np.zeros(self.n)
        np.add.at(out, self._rows, contributions)
        return out


def build_operator(
    graph: Graph,
    triangles: TriangleSet,
    alpha: float,
    *,
    allow_disconnected: bool = False,
) -> AlphaTriangleOperator:
    """Construct the implicit alpha-triangle operator of a connected graph."""
    return AlphaTriangleOperator(
        graph, triangles, alpha, allow_disconnected=allow_disconnected
    )


def materialize_tensor(
    graph: Graph, triangles: TriangleSet, alpha: float
) -> np.ndarray:
    """Dense n*n*n tensor alpha*A_E + (1-alpha)*A_tri (test oracle only).

    Unlike the operator path, alpha = 0 is accepted here so the blend itself
    can be exercised. Refuses n > 64.
    """
    if graph.n > MATERIALIZE_LIMIT:
        raise ValueError(
            f"dense tensor needs n^3 floats; refusing n = {graph.n} > {MATERIALIZE_LIMIT}"
        )
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise AlphaDomainError(f"alpha must lie in [0, 1] for the oracle, got {alpha}")
    n = graph.n
    tensor = np.zeros((n, n, n))
    edge_coeff = alpha
    tri_coeff = (1.0 - alpha) * 0.5
    for i, j in graph.edges:
        tensor[i, j, j] = edge_coeff
        tensor[j, i, i] = edge_coeff
    for p, q, r in triangles.triangles:
        for a, b, c in ((p, q, r), (p, r, q), (q, p, r), (q, r, p), (r, p, q), (r, q, p)):
            tensor[a, b, c] = tri_coeff
    return tensor


def contract_tensor(tensor: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Naive triple-loop contraction (T x^2)_i = sum_jk T[i,j,k] x_j x_k.

    Reference implementation: accumulates in exact (j, k) lexicographic order,
    which pins the floating-point result apply() must reproduce bitwise.
    """
    n = len(x)
    out = np.zeros(n)
    for i in range(n):
        acc = 0.0
        for j in range(n):
            for k in range(n):
                acc += tensor[i, j, k] * x[j] * x[k]
        out[i] = acc
    return out


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Converged spectral-radius estimate with its positive unit eigenvector.

    bracket is the final (lambda_min, lambda_max) enclosure of rho for the
    unshifted operator; rho is its midpoint. residual is the max-norm of
    A x^2 - rho * x^[2]. bracket_history, when recorded, holds the enclosure
    after every iteration.
    """

    rho: float
    x: np.ndarray
    iterations: int
    residual: float
    bracket: tuple[float, float]
    bracket_history: tuple[tuple[float, float], ...] | None = None


def solve_spectral(
    op: AlphaTriangleOperator,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    shift: float = DEFAULT_SHIFT,
    x0: np.ndarray | None = None,
    record_history: bool = False,
) -> SpectralResult:
    """Shifted higher-order power iteration for rho(A) and its eigenvector.

    Iterates y = A x^2 + shift * x^[2]; x <- sqrt(y) / ||sqrt(y)||_2. The
    Collatz-Wielandt ratios y_i / x_i^2 bracket rho + shift from both sides,
    the bracket tightens monotonically, and iteration stops when its width
    falls below tol. Raises ConvergenceError with the final bracket if the
    budget runs out.
    """
    n = op.n
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if shift <= 0:
        raise ValueError("shift must be positive for guaranteed convergence")
    if x0 is None:
        x = np.full(n, 1.0 / np.sqrt(n))
    else:
        x = np.asarray(x0, dtype=float)
        if x.shape != (n,):
            raise ValueError(f"seed vector must have length {n}")
        if np.any(x <= 0):
            raise ValueError("seed vector must be strictly positive")
        x = x / np.linalg.norm(x)

    history: list[tuple[float, float]] = []
    lo = hi = np.nan
    for iteration in range(1, max_iter + 1):
        x_sq = x * x
        y = op.apply(x) + shift * x_sq
        if np.any(y <= 0):
            raise RuntimeError(
                "nonpositive iterate component: operator is not weakly "
                "irreducible (disconnected input?) or the seed was invalid"
            )
        ratios = y / x_sq
        lo = float(ratios.min()) - shift
        hi = float(ratios.max()) - shift
        if record_history:
            history.append((lo, hi))
        if hi - lo < tol:
            rho = 0.5 * (lo + hi)
            residual = float(np.max(np.abs(op.apply(x) - rho * x_sq)))
            return SpectralResult(
                rho=rho,
                x=x,
                iterations=iteration,
                residual=residual,
                bracket=(lo, hi),
                bracket_history=tuple(history) if record_history else None,
            )
        x = np.sqrt(y)
        x /= np.linalg.norm(x)

    raise ConvergenceError(
        f"no convergence after {max_iter} iterations; bracket width "
        f"{hi - lo:.3e} > tol {tol:.3e}",
        bracket=(lo, hi),
        iterations=max_iter,
    )


def atec(
    graph: Graph,
    alpha: float,
    *,
    triangles: TriangleSet | None = None,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    shift: float = DEFAULT_SHIFT,
) -> CentralityReport:
    """Alpha-triangle eigenvector centrality of a connected graph.

    Scores are the entries of the positive unit-Euclidean eigenvector of the
    alpha-triangle tensor at its spectral radius; larger alpha weighs edge
    structure more, smaller alpha weighs triangle structure more.
    """
    if triangles is None:
        triangles = enumerate_triangles(graph)
    op = build_operator(graph, triangles, alpha)
    result = solve_spectral(op, tol=tol, max_iter=max_iter, shift=shift)
    return make_report(
        "atec",
        {"alpha": op.alpha},
        graph.labels,
        result.x,
        normalization="unit-euclidean",
        meta={
            "rho": result.rho,
            "iterations": result.iterations,
            "residual": result.residual,
            "tolerance": tol,
        },
    )


def atec_per_component(
    graph: Graph,
    alpha: float,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    shift: float = DEFAULT_SHIFT,
) -> CentralityReport:
    """atec computed independently on every connected component.

    Each component's score block has unit Euclidean norm on its own, so an
    isolated vertex scores 1.0 and a single edge scores 0.7071 per endpoint.
    Rankings mix all components.
    """
    components = connected_components(graph)
    scores = np.zeros(graph.n)
    total_iters = 0
    worst_residual = 0.0
    for comp in components:
        keep = sorted(comp)
        sub = graph if len(comp) == graph.n else _induced(graph, keep)
        tri = enumerate_triangles(sub)
        op = build_operator(sub, tri, alpha)
        res = solve_spectral(op, tol=tol, max_iter=max_iter, shift=shift)
        for local, orig in enumerate(keep):
            scores[orig] = res.x[local]
        total_iters += res.iterations
        worst_residual = max(worst_residual, res.residual)
    return make_report(
        "atec",
        {"alpha": _check_alpha(alpha)},
        graph.labels,
        scores,
        normalization="unit-euclidean-per-component",
        meta={
            "components": len(components),
            "iterations": total_iters,
            "residual": worst_residual,
            "tolerance": tol,
        },
    )


def _induced(graph: Graph, keep: list[int]) -> Graph:
    new_id = {old: new for new, old in enumerate(keep)}
    keep_set = set(keep)
    edges = [
        (new_id[u], new_id[v])
        for u, v in graph.edges
        if u in keep_set and v in keep_set
    ]
    adj: list[list[int]] = [[] for _ in keep]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(
        labels=tuple(graph.labels[i] for i in keep),
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edges=tuple(sorted(edges)),
    )


@dataclass(frozen=True, eq=False)
class IrreducibilityCheck:
    """Outcome of the weak-irreducibility test on an operator's digraph.

    The digraph D has an arc (i, j) whenever some nonzero tensor entry
    a_{i, i2, i3} has j in {i2, i3}; the tensor is weakly irreducible iff D is
    strongly connected. For a positive result the two parent arrays are BFS
    certificates that vertex 0 reaches everything and everything reaches
    vertex 0; otherwise witness names an ordered pair with no directed path.
    """

    strongly_connected: bool
    witness: tuple[str, str] | None
    forward_parents: tuple[int, ...]
    backward_parents: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.strongly_connected


def verify_weak_irreducibility(op: AlphaTriangleOperator) -> IrreducibilityCheck:
    """Build the operator's associated digraph and check strong connectivity."""
    n = op.n
    out_arcs: list[set[int]] = [set() for _ in range(n)]
    if op.alpha > 0.0:
        for i, j in op.graph.edges:
            out_arcs[i].add(j)
            out_arcs[j].add(i)
    if op.alpha < 1.0:
        for p, q, r in op.triangles.triangles:
            out_arcs[p].update((q, r))
            out_arcs[q].update((p, r))
            out_arcs[r].update((p, q))
    in_arcs: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in out_arcs[i]:
            in_arcs[j].add(i)

    def bfs(arcs: list[set[int]]) -> list[int]:
        parent = [-2] * n  # -2 unreached, -1 root
        parent[0] = -1
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for w in sorted(arcs[u]):
                    if parent[w] == -2:
                        parent[w] = u
                        nxt.append(w)
            frontier = nxt
        return parent

    fwd = bfs(out_arcs)
    bwd = bfs(in_arcs)
    witness = None
    for v in range(n):
        if fwd[v] == -2:
            witness = (op.graph.labels[0], op.graph.labels[v])
            break
        if bwd[v] == -2:
            witness = (op.graph.labels[v], op.graph.labels[0])
            break
    return IrreducibilityCheck(
        strongly_connected=witness is None,
        witness=witness,
        forward_parents=tuple(fwd),
        backward_parents=tuple(bwd),
    )

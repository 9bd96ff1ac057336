"""Score reports: per-vertex values plus a deterministic tie-aware ranking."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

VERTEX_TIE_TOL = 1e-9


def label_sort_key(label: str):
    """Ascending label order, numeric when the label parses as an integer."""
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


@dataclass(frozen=True)
class RankedVertex:
    label: str
    score: float
    rank: int
    tie_group: int


@dataclass(frozen=True, eq=False)
class CentralityReport:
    """Scores of one measure over one graph.

    scores[i] belongs to labels[i] (the graph's internal order). The ranking
    is descending by score with competition ranks: scores within tie_tol form
    a tie group sharing the smallest rank, ordered by ascending label inside
    the group, and the next distinct score skips the swallowed ranks.
    """

    measure: str
    params: dict
    labels: tuple[str, ...]
    scores: np.ndarray
    normalization: str  # "unit-euclidean" | "raw"
    ranking: tuple[RankedVertex, ...]
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.labels)

    def score_of(self, label: str) -> float:
        try:
            return float(self.scores[self.labels.index(label)])
        except ValueError:
            raise KeyError(f"no vertex labeled {label!r} in this report") from None

    def scores_by_label(self) -> dict[str, float]:
        return {lab: float(s) for lab, s in zip(self.labels, self.scores)}

    def top(self, k: int) -> list[str]:
        return [entry.label for entry in self.ranking[:k]]

    def unit_euclidean(self) -> "CentralityReport":
        """The same report rescaled to unit Euclidean norm."""
        if self.normalization == "unit-euclidean":
            return self
        norm = float(np.linalg.norm(self.scores))
        if norm == 0.0:
            raise ValueError("cannot normalize an all-zero score vector")
        return make_report(
            self.measure,
            self.params,
            self.labels,
            self.scores / norm,
            normalization="unit-euclidean",
            meta=self.meta,
        )


def rank_scores(
    labels: Sequence[str],
    scores: np.ndarray,
    tie_tol: float = VERTEX_TIE_TOL,
) -> tuple[RankedVertex, ...]:
    """Competition-rank scores descending with tie groups of width tie_tol."""
    order = sorted(range(len(labels)), key=lambda i: (-scores[i], label_sort_key(labels[i])))
    groups: list[list[int]] = []
    prev_score = None
    for i in order:
        s = float(scores[i])
        if prev_score is None or prev_score - s > tie_tol:
            groups.append([])
        groups[-1].append(i)
        prev_score = s
    ranked: list[RankedVertex] = []
    position = 1
    for gid, members in enumerate(groups):
        members.sort(key=lambda i: label_sort_key(labels[i]))
        for i in members:
            ranked.append(RankedVertex(labels[i], float(scores[i]), position, gid))
        position += len(members)
    return tuple(ranked)


def make_report(
    measure: str,
    params: Mapping[str, object] | None,
    labels: Sequence[str],
    scores: np.ndarray,
    normalization: str,
    meta: Mapping[str, object] | None = None,
    tie_tol: float = VERTEX_TIE_TOL,
) -> CentralityReport:
    scores = np.asarray(scores, dtype=float)
    if scores.shape != (len(labels),):
        raise ValueError("scores and labels differ in length")
    return CentralityReport(
        measure=measure,
        params=dict(params or {}),
        labels=tuple(labels),
        scores=scores,
        normalization=normalization,
        ranking=rank_scores(labels, scores, tie_tol),
        meta=dict(meta or {}),
    )

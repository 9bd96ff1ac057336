"""Degree and triangle statistics on the dolphin social network.

D(i) varies mildly across dolphins, but T(i) and especially the neighbor
triangle count NT(i) spread out much more; that spread is what the small-alpha
regime amplifies, which is why only a few vertices keep high scores there.
"""

import numpy as np

from tricent import (
    atec,
    degree_and_triangle_stats,
    enumerate_triangles,
    load_dataset,
    rank_correlation,
)

g = load_dataset("dolphins")
tris = enumerate_triangles(g)
stats = degree_and_triangle_stats(g, tris)

def five_numbers(values):
    q = np.percentile(np.asarray(values, dtype=float), [0, 25, 50, 75, 100])
    return "min {:4.0f}  q1 {:5.1f}  median {:5.1f}  q3 {:5.1f}  max {:5.0f}  spread {:4.0f}".format(
        q[0], q[1], q[2], q[3], q[4], q[4] - q[0]
    )

print(f"dolphins: {g.n} vertices, {g.m} edges, {len(tris)} triangles\n")
print("box-plot summaries:")
print(f"  D  (degree)             {five_numbers(stats.degree)}")
print(f"  T  (own triangles)      {five_numbers(stats.triangle_count)}")
print(f"  NT (neighbor triangles) {five_numbers(stats.neighbor_triangles)}")

reports = {alpha: atec(g, alpha) for alpha in (1.0, 0.5, 0.01)}
print("\nscore concentration as alpha falls (unit-Euclidean scores):")
for alpha, rep in reports.items():
    share = float(np.sort(rep.scores)[-6:].sum() / rep.scores.sum())
    print(f"  alpha {alpha:>5.2f}: top-6 vertices hold {share:5.1%} of the total score mass")

nt = np.asarray(stats.neighbor_triangles, dtype=float)
print("\ncorrelation of scores with the NT statistic (spearman):")
for alpha, rep in reports.items():
    print(f"  alpha {alpha:>5.2f}: {rank_correlation(rep.scores, nt):.3f}")

print("\nthe wide NT spread explains the concentration: at small alpha only "
      "vertices sitting in triangle-rich neighborhoods keep meaningful scores, "
      "and most of this network is triangle-poor.")

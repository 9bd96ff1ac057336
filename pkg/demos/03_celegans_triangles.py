"""Rank triangles in the C. elegans metabolic network and break the graph.

Two triangle indices are compared: the score-sum importance built on the
centrality scores (alpha = 0.2) and the Fiedler cycle index built on squared
Fiedler-vector gaps. The punchline is a removal experiment: deleting the
vertices of a top importance triangle shatters the network into far more
pieces than deleting a top cycle-index triangle.
"""

from tricent import (
    atec,
    cycle_index_fiedler,
    enumerate_triangles,
    load_dataset,
    removal_experiment,
    triangle_importance,
)

g = load_dataset("celegans-metabolic")
tris = enumerate_triangles(g)
print(f"celegans metabolic: {g.n} vertices, {g.m} edges, {len(tris)} triangles")

scores = atec(g, 0.2, triangles=tris)
importance = triangle_importance(g, tris, scores.scores / scores.scores.sum())
cycle = cycle_index_fiedler(g, tris)

print("\ntop-5 by score-sum importance (alpha = 0.2, sum-normalized scores):")
for e in importance.entries[:5]:
    print(f"  [{','.join(e.vertices):>13s}]  I = {e.score:.4f}  rank {e.rank}")

print("\ntop-5 by Fiedler cycle index:")
for e in cycle.entries[:5]:
    print(f"  [{','.join(e.vertices):>13s}]  I = {e.score:.4f}  rank {e.rank}")

print("\nremoval experiments (component count 1 -> ?):")
for title, ranking in (("importance", importance), ("cycle index", cycle)):
    for tri in ranking.top(3):
        result = removal_experiment(g, tri)
        sizes = ", ".join(map(str, result.sizes_after[:6]))
        more = " ..." if len(result.sizes_after) > 6 else ""
        print(f"  {title:>12s} [{','.join(tri):>13s}]  {result.summary}"
              f"  sizes: {sizes}{more}")

print("""
The cycle index rewards triangles whose vertices straddle the Fiedler cut,
which tends to find one bridge; the importance index concentrates on the
triangle-dense core whose vertices hold several fragments together at once,
so removing them fragments the network much harder.
""")

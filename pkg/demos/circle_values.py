"""
Ladders as matrices
===================

Build a few ladder words, evaluate them on tensor products of exterior
powers and watch closed loops turn into quantum integers.
"""

from skewhowe import word, eval_ladder, render, verify_ladder_relations

# E F on the weight (N, 0) is a loop of thickness N: a scalar [N]
for N in range(1, 5):
    M = eval_ladder(word((N, 0), "E1", "F1"), N, 0)
    print("E1 F1 on (%d,0):  %s x identity of size %d" % (N, render(M[0, 0]), M.nrows))

# the same word over a superspace C^{1|1}; exterior powers never vanish there
M = eval_ladder(word((3, 0), "E1", "F1"), 1, 1)
print("over C^{1|1}:", M.shape, render(M[0, 0]))

# thicker rungs: F^(2) lands in (0, 2)
F2 = eval_ladder(word((2, 0), "F1^(2)"), 2, 1)
print("F1^(2) from (2,0) to (0,2) has shape", F2.shape)

# spot check of every relation family on random instances
for fam in range(1, 7):
    res = verify_ladder_relations(fam, trials=10, seed=1)
    print("family %d: %d/%d" % (fam, res["passed"], res["trials"]))

"""Spurious real pole of the k = 5 cosine interpolant and its removal."""
import numpy as np

from _common import write_csv
from padetype import rational
from padetype.functions import known
from padetype.nodes import equidistant
from padetype.polecontrol import FitProblem, remove_poles_iterate

c, f = known("cos", 12)
tau = equidistant(-np.pi / 2, np.pi / 8, 5)
prob = FitProblem(c, tau, f(tau), 5, func=f)
before = prob.fit()
after, _, history = remove_poles_iterate(prob, (-np.pi, np.pi))
print("real poles before:", rational.real_poles(before))
print("limit at infinity: %.5f" % (before.num[-1] / before.den[-1]).real)
for step in history:
    print("replaced node %d (%.4f) by %.6f" % (step.replaced_index, step.old_node.real, step.new_node.real))
print("real poles after:", rational.real_poles(after))
t = np.linspace(-np.pi, np.pi, 1001)
write_csv("cos_poles.csv", ["t", "cos", "R_before", "R_after"],
          zip(t, np.cos(t), before(t).real, after(t).real))

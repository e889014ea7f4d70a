"""Two k = 2 pieces of log(1 + t)/t joined at the origin."""
import numpy as np

from _common import write_csv
from padetype import rational
from padetype.apps import Piece, piecewise_fit
from padetype.functions import known

c, f = known("log1p_over_t", 12)
left, right = np.array([-0.9, -0.1]), np.array([0.1, 1.0])
res = piecewise_fit([Piece((-0.9, -0.1), left, f(left)), Piece((0.1, 1.0), right, f(right))], c, 2)
print("piece condition numbers: %.3g, %.3g" % tuple(res.conditions))
tau = np.concatenate([left, right])
print("single fit, k=2: %.3g" % rational.system_condition(c, tau, f(tau), 2, scaled=False))
print("single fit, k=3: %.3g" % rational.system_condition(c, tau, f(tau), 3, scaled=False))
print("junction Taylor coefficients:", np.real(res.taylor))
t = np.linspace(-0.9, 1.0, 400)
write_csv("piecewise_log.csv", ["t", "f", "R", "abs_err"],
          zip(t, f(t).real, res(t).real, np.abs(res(t) - f(t))))

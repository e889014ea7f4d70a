"""Inverse Laplace transform of log(1 + 1/p^2) from a k = 5 interpolant."""
import numpy as np

from _common import write_csv
from padetype import fit
from padetype.apps import evaluate_inverse, invert_from_interpolant
from padetype.functions import known

c, G = known("log1p", 12)
p = 0.1 + 0.5 * np.arange(5)
tau = 1 / p**2
model = fit(c, tau, G(tau), 5)
s = np.linspace(0.01, 8, 800)
ref = 2 * (1 - np.cos(s)) / s
cols = [s, ref]
for n in (12, 30):
    fhat = evaluate_inverse(invert_from_interpolant(model, 1.0, 2, n), s).real
    cols += [fhat, np.abs(fhat - ref)]
    print("%d terms: max error on [1, 8] = %.4g" % (n, np.max(np.abs(fhat - ref)[s >= 1])))
write_csv("laplace_inversion.csv", ["s", "f_ref", "f_hat_12", "err_12", "f_hat_30", "err_30"], zip(*cols))

"""Error curves of plain and partial k = 8 interpolants of tan(4t)/(4t)
for three node families on [-1.5, 1.5]."""
import numpy as np

from _common import write_csv
from padetype import fit, fit_partial
from padetype.functions import known
from padetype.nodes import chebyshev_zeros, equidistant, roots_of_unity

c, f = known("tan_over", 17, omega=4.0)
t = np.linspace(-1.5, 1.5, 1001)
zeros, poles = [np.pi / 4, -np.pi / 4], [np.pi / 8, -np.pi / 8]
families = {"equidistant": equidistant(-1, 1, 8), "unity": roots_of_unity(8), "chebyshev": chebyshev_zeros(8)}
cols, header = [t], ["t"]
for name, tau in families.items():
    plain = fit(c, tau, f(tau), 8)
    part = fit_partial(c, tau, f(tau), 8, zeros, poles)
    cols += [np.abs(plain(t) - f(t)), np.abs(part(t) - f(t))]
    header += [name + "_plain", name + "_partial"]
write_csv("tan_errors.csv", header, zip(*cols))

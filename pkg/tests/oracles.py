"""Independent reference computations used by the tests.

Nothing here calls the fitting code; each oracle follows a different route
(determinants, triangular Toeplitz solves, partial fractions, quadrature).
"""
import numpy as np
import scipy.linalg


def series_of_rational(num, den, n):
    """Taylor coefficients of num/den from the lower-triangular Toeplitz system den * r = num."""
    col = np.zeros(n, dtype=complex)
    col[: min(n, len(den))] = den[:n]
    T = scipy.linalg.toeplitz(col, np.zeros(n))
    rhs = np.zeros(n, dtype=complex)
    rhs[: min(n, len(num))] = num[:n]
    return scipy.linalg.solve_triangular(T, rhs, lower=True)


def polyval_inc(coeffs, t):
    return np.polyval(np.asarray(coeffs)[::-1], t)


def psum(c, n, t):
    if n < 0:
        return 0.0
    return sum(c[i] * t**i for i in range(min(n + 1, len(c))))


def det_rational(c, tau, f, k, t):
    """Ratio of determinants for the l = k coefficient-form interpolant."""
    rows = [[tau_i ** (j - k) * (psum(c, k - j, tau_i) - f_i) for j in range(k + 1)]
            for tau_i, f_i in zip(tau, f)]
    top_num = [t**j * psum(c, k - j, t) for j in range(k + 1)]
    top_den = [t**j for j in range(k + 1)]
    return np.linalg.det(np.array([top_num] + rows)) / np.linalg.det(np.array([top_den] + rows))


def det_barycentric(c, tau, f, k, t):
    """Ratio of determinants for the barycentric interpolant, rows a_ji built by
    a_1i = (f_i - c_0)/tau_i, a_ji = (a_{j-1,i} - c_{j-1})/tau_i."""
    tau = np.asarray(tau, dtype=complex)
    f = np.asarray(f, dtype=complex)
    rows = []
    a = (f - c[0]) / tau
    rows.append(a)
    for j in range(2, k + 1):
        a = (a - c[j - 1]) / tau
        rows.append(a)
    num = np.array([f / (t - tau)] + rows)
    den = np.array([1 / (t - tau)] + rows)
    return np.linalg.det(num) / np.linalg.det(den)


def partial_fraction_inverse(A, alpha, beta, s):
    """Inverse Laplace transform of A p^m+... / p^n+... with simple poles via residues."""
    num = np.concatenate([[1.0], alpha])
    den = np.concatenate([[1.0], beta])
    roots = np.roots(den)
    dden = np.polyder(den)
    s = np.asarray(s, dtype=complex)
    out = np.zeros_like(s)
    for r in roots:
        out = out + np.polyval(num, r) / np.polyval(dden, r) * np.exp(r * s)
    return A * out


def annulus_points(rng, n, rmin=0.2, rmax=2.0, min_gap=0.1, real=False):
    pts = []
    while len(pts) < n:
        if real:
            x = rng.uniform(rmin, rmax) * rng.choice([-1, 1])
            z = complex(x)
        else:
            rad = rng.uniform(rmin, rmax)
            z = rad * np.exp(2j * np.pi * rng.uniform())
        if all(abs(z - p) >= min_gap for p in pts):
            pts.append(z)
    return np.array(pts)


def random_rational(rng, max_deg=6, pole_radius=(3.0, 5.0), zero_radius=(0.3, 3.0)):
    """Random N/D with D(0) = 1, poles away from the annulus |t| <= 2."""
    dn = rng.integers(0, max_deg + 1)
    dd = rng.integers(0, max_deg + 1)
    if max(dn, dd) == 0:
        dd = 1
    poles = rng.uniform(*pole_radius, dd) * np.exp(2j * np.pi * rng.uniform(size=dd))
    zeros = rng.uniform(*zero_radius, dn) * np.exp(2j * np.pi * rng.uniform(size=dn))
    den = np.polynomial.polynomial.polyfromroots(poles) if dd else np.ones(1, complex)
    num = np.polynomial.polynomial.polyfromroots(zeros) if dn else np.ones(1, complex)
    den = den / den[0]
    num = num * (rng.uniform(0.5, 2.0) / num[0])
    return np.asarray(num, complex), np.asarray(den, complex)

"""Independent reference implementations the tests check against.

Everything here deliberately takes a different computational route from the
package: Gram-Schmidt instead of Householder reflections, explicit normal
equations and matrix inverses instead of triangular solves, numerical
quadrature instead of series/continued fractions.  Values asserted in the
test modules were computed with these oracles (or by hand) and then frozen.
"""
from __future__ import annotations

import math

import numpy as np
from scipy import integrate


def gram_schmidt_qr(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Modified Gram-Schmidt QR of a full-column-rank matrix."""
    a = np.array(a, dtype=float)
    n, p = a.shape
    q = np.zeros((n, p))
    r = np.zeros((p, p))
    v = a.copy()
    for j in range(p):
        r[j, j] = np.linalg.norm(v[:, j])
        q[:, j] = v[:, j] / r[j, j]
        for k in range(j + 1, p):
            r[j, k] = q[:, j] @ v[:, k]
            v[:, k] = v[:, k] - r[j, k] * q[:, j]
    return q, r


def normal_equations_summary(x: np.ndarray, y: np.ndarray, has_bias: bool) -> dict:
    """Full OLS summary via explicit (X'X)^{-1}; requires full column rank."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    n, p = x.shape
    xtx_inv = np.linalg.inv(x.T @ x)
    beta = xtx_inv @ (x.T @ y)
    fitted = x @ beta
    resid = y - fitted
    rss = float(resid @ resid)
    tss = float(np.sum((y - y.mean()) ** 2)) if has_bias else float(y @ y)
    df_resid = n - p
    df_model = p - (1 if has_bias else 0)
    sigma2 = rss / df_resid
    std_errors = np.sqrt(sigma2 * np.diag(xtx_inv))
    r2 = 1.0 - rss / tss
    c = 1 if has_bias else 0
    adj = 1.0 - (1.0 - r2) * (n - c) / df_resid
    f_stat = (r2 / df_model) / ((1.0 - r2) / df_resid)
    log_l = -0.5 * n * (math.log(2.0 * math.pi) + 1.0 + math.log(rss / n))
    aic = -2.0 * log_l + 2.0 * p
    bic = -2.0 * log_l + p * math.log(n)
    return {
        "coefficients": beta,
        "std_errors": std_errors,
        "fitted": fitted,
        "residuals": resid,
        "rss": rss,
        "r_squared": r2,
        "adj_r_squared": adj,
        "f_statistic": f_stat,
        "log_likelihood": log_l,
        "aic": aic,
        "bic": bic,
        "cov_unscaled": xtx_inv,
    }


def gaussian_density_log_product(resid: np.ndarray) -> float:
    """Sum of log N(0, rss/n) densities over the residuals."""
    resid = np.asarray(resid, dtype=float)
    n = resid.size
    sigma2 = float(resid @ resid) / n
    return float(
        np.sum(-0.5 * np.log(2.0 * math.pi * sigma2) - resid**2 / (2.0 * sigma2))
    )


_QUAD_OPTS = {"limit": 500, "epsabs": 1e-13, "epsrel": 1e-13}


def reg_inc_gamma_lower_quad(s: float, x: float) -> float:
    """P(s, x) by adaptive quadrature of the gamma density.

    Integrates whichever tail is smaller so the quadrature error stays
    absolute-small in the returned probability.
    """
    lg = math.lgamma(s)
    density = lambda t: math.exp((s - 1.0) * math.log(t) - t - lg)
    if x < s:
        value, _ = integrate.quad(density, 0.0, x, **_QUAD_OPTS)
        return value
    upper, _ = integrate.quad(density, x, math.inf, **_QUAD_OPTS)
    return 1.0 - upper


def reg_inc_beta_quad(a: float, b: float, x: float) -> float:
    """I_x(a, b) by adaptive quadrature of the beta density (smaller tail)."""
    lbeta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
    density = lambda t: math.exp(
        (a - 1.0) * math.log(t) + (b - 1.0) * math.log1p(-t) - lbeta
    )
    mean = a / (a + b)
    if x <= mean:
        value, _ = integrate.quad(density, 0.0, x, **_QUAD_OPTS)
        return value
    upper, _ = integrate.quad(density, x, 1.0, **_QUAD_OPTS)
    return 1.0 - upper


def t_two_sided_quad(t: float, df: int) -> float:
    """P(|T| >= |t|) by quadrature of the Student-t density over the tail."""
    t = abs(t)
    const = math.exp(
        math.lgamma((df + 1) / 2.0)
        - math.lgamma(df / 2.0)
        - 0.5 * math.log(df * math.pi)
    )
    density = lambda u: const * (1.0 + u * u / df) ** (-(df + 1) / 2.0)
    value, _ = integrate.quad(density, t, math.inf, **_QUAD_OPTS)
    return 2.0 * value


def chi2_sf_quad(x: float, df: int) -> float:
    """P(X >= x) for chi-square by quadrature of the lower tail."""
    return 1.0 - reg_inc_gamma_lower_quad(df / 2.0, x / 2.0)


def f_sf_quad(f: float, df1: int, df2: int) -> float:
    """P(F >= f) by quadrature of the F density over the upper tail."""
    const = (
        math.lgamma((df1 + df2) / 2.0)
        - math.lgamma(df1 / 2.0)
        - math.lgamma(df2 / 2.0)
        + 0.5 * df1 * math.log(df1 / df2)
    )

    def density(u: float) -> float:
        return math.exp(
            const
            + (df1 / 2.0 - 1.0) * math.log(u)
            - (df1 + df2) / 2.0 * math.log(1.0 + df1 * u / df2)
        )

    value, _ = integrate.quad(density, f, math.inf, **_QUAD_OPTS)
    return value

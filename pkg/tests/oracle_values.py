"""Independent oracles for the frozen expected values used in the tests.

Run directly (``python tests/oracle_values.py``).  Nothing here imports the
package's numerical code: the x-integrals use mpmath on the original
variable, the Matsubara term and Kramers-Kronig values use dense
trapezoid rules.
"""
import math

import mpmath as mp
import numpy as np

mp.mp.dps = 30
ALPHA = mp.mpf(1) / mp.mpf("137.035999")
VF = mp.mpf(9e5) / mp.mpf(299792458)
HC = 197.327
KB = 8.617333e-5


def pi00_thermal(y, tau):
    y, tau = mp.mpf(y), mp.mpf(tau)
    f = lambda x: mp.log(2 * mp.cosh(mp.pi * VF * y * mp.sqrt(x * (1 - x)) / tau))
    return 8 * ALPHA * tau / (mp.pi * VF ** 2) * mp.quad(f, [0, 0.5, 1])


def pi_tr_minus_pi00_thermal(y, tau):
    y, tau = mp.mpf(y), mp.mpf(tau)

    def f(x):
        th = VF * y * mp.sqrt(x * (1 - x))
        return x * (1 - x) / th * mp.tanh(mp.pi * th / tau)
    return 8 * ALPHA * VF ** 2 * y ** 2 * mp.quad(f, [0, 0.5, 1])


def r_tm_coated(eps, zeta, y):
    eps, zeta, y = mp.mpf(eps), mp.mpf(zeta), mp.mpf(y)
    f = mp.sqrt(VF ** 2 * y ** 2 + (1 - VF ** 2) * zeta ** 2)
    pi00 = mp.pi * ALPHA * (y ** 2 - zeta ** 2) / f
    k = mp.sqrt(y ** 2 + (eps - 1) * zeta ** 2)
    g = y * pi00 / (y ** 2 - zeta ** 2)
    return (eps * y + k * (g - 1)) / (eps * y + k * (g + 1))


def matsubara_term_sio2_rb(a_nm=1000.0, T=300.0, l=1, n=4_000_001):
    """Coated SiO2, Rb, energy kind; dense trapezoid on [zeta, zeta + 60]."""
    tau = 4 * math.pi * a_nm * KB * T / HC
    zeta = l * tau
    xi = zeta * HC / (2 * a_nm)
    # resonances 2.033e16 and 1.88e14 rad/s, in eV as rounded in the materials file
    eps = 1 + 1.098 / (1 + (xi / 13.38145) ** 2) + 1.703 / (1 + (xi / 0.123744) ** 2)
    alpha_ratio = 1 / (1 + (xi / 5.46) ** 2)
    vf = float(VF)
    al = float(ALPHA)
    t = np.linspace(0.0, 60.0, n)[1:]
    y = zeta + t
    f = np.sqrt(vf ** 2 * y ** 2 + (1 - vf ** 2) * zeta ** 2)
    k = np.sqrt(y ** 2 + (eps - 1) * zeta ** 2)
    g = math.pi * al * y / f
    q = math.pi * al * f
    rtm = (eps * y + k * (g - 1)) / (eps * y + k * (g + 1))
    rte = (y - k - q) / (y + k + q)
    vals = np.exp(-y) * (2 * y ** 2 * rtm - zeta ** 2 * (rtm + rte))
    # integrand at t = 0 is finite: add it explicitly for the trapezoid
    y0 = zeta
    k0 = math.sqrt(y0 ** 2 + (eps - 1) * zeta ** 2)
    f0 = y0
    rtm0 = (eps * y0 + k0 * (math.pi * al - 1)) / (eps * y0 + k0 * (math.pi * al + 1))
    rte0 = (y0 - k0 - math.pi * al * f0) / (y0 + k0 + math.pi * al * f0)
    v0 = math.exp(-y0) * (2 * y0 ** 2 * rtm0 - zeta ** 2 * (rtm0 + rte0))
    vals = np.concatenate([[v0], vals])
    return alpha_ratio * np.trapezoid(vals, dx=60.0 / (n - 1))


def kk_drude_table(xi, wp=9.0, gamma=0.035, lo=0.1, hi=1000.0, n=2_000_001):
    """KK of a Drude Im-epsilon on [lo, hi] plus Drude below lo (log-variable trapezoid)."""
    s = np.linspace(math.log(lo), math.log(hi), n)
    w = np.exp(s)
    im = wp ** 2 * gamma / (w * (w ** 2 + gamma ** 2))
    inside = np.trapezoid(w * w * im / (w ** 2 + xi ** 2), s)
    s2 = np.linspace(math.log(1e-12), math.log(lo), n)
    w2 = np.exp(s2)
    below = np.trapezoid(w2 * wp ** 2 * gamma / ((w2 ** 2 + gamma ** 2) * (w2 ** 2 + xi ** 2)), s2)
    return 1 + 2 / math.pi * (inside + below)


if __name__ == "__main__":
    tau100 = 4 * math.pi * 100 * KB * 300 / HC
    print("tau(100nm,300K)", tau100)
    print("pi00_thermal(1, 0.164)", mp.nstr(pi00_thermal(1, 0.164), 17))
    print("pi00_thermal(1e3, 0.164)", mp.nstr(pi00_thermal(1000, 0.164), 17))
    print("pi00_thermal(1, 1e-4)", mp.nstr(pi00_thermal(1, 1e-4), 17))
    print("pitr_minus_pi00(1, 0.164)", mp.nstr(pi_tr_minus_pi00_thermal(1, 0.164), 17))
    print("pitr_minus_pi00(1e-3, 0.164)", mp.nstr(pi_tr_minus_pi00_thermal(1e-3, 0.164), 17))
    print("r_tm coated eps=2 zeta=0.5 y=1", mp.nstr(r_tm_coated(2, 0.5, 1), 17))
    p = pi00_thermal(1, 0.164)
    # shipped SiO2 model: eps0 = 1 + 1.098 + 1.703
    print("r_tm_zero coated SiO2 y=1 tau=0.164", mp.nstr(1 - 2 / (p + mp.mpf("4.801")), 17))
    q = pi_tr_minus_pi00_thermal(1, 0.164)
    print("r_te_zero coated y=1 tau=0.164", mp.nstr(-q / (2 + q), 17))
    print("matsubara term coated SiO2 Rb 1um l=1", repr(matsubara_term_sio2_rb()))
    xi1 = tau100 * HC / 200
    print("xi1(100nm)", xi1)
    print("KK Drude table at xi1", repr(kk_drude_table(xi1)))
    print("Drude closed form at xi1", 1 + 81 / (xi1 * (xi1 + 0.035)))

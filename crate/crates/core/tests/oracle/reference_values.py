#!/usr/bin/env python3
"""Arbitrary-precision reference values frozen into the Rust test suite.

Run with `python3 reference_values.py`; every printed constant appears
verbatim in a test. Evaluation paths here are independent of the crate:
mpmath's own gamma/loggamma/hypergeometric routines at 50 digits.
"""
import mpmath as mp

mp.mp.dps = 50


def show(name, value):
    if isinstance(value, mp.mpc):
        print(f"{name} = {mp.nstr(value.real, 20)} {mp.nstr(value.imag, 20)}i")
    else:
        print(f"{name} = {mp.nstr(value, 20)}")


def cdh(mu, a, b, n, y):
    mu, a, b, y = map(mp.mpf, (mu, a, b, y))
    pref = mp.rf(mu + a, n) * mp.rf(mu + b, n) / (mp.factorial(n) * mp.rf(a + b, n))
    s = mp.mpf(0)
    for k in range(n + 1):
        s += (mp.rf(-n, k) * mp.rf(mu + 1j * y, k) * mp.rf(mu - 1j * y, k)
              / (mp.rf(mu + a, k) * mp.rf(mu + b, k) * mp.factorial(k)))
    return pref * s.real


def weight(mu, a, b, y):
    mu, a, b, y = map(mp.mpf, (mu, a, b, y))
    num = abs(mp.gamma(mu + 1j * y) * mp.gamma(a + 1j * y) * mp.gamma(b + 1j * y) / mp.gamma(2j * y)) ** 2
    return num / (2 * mp.pi * mp.gamma(mu + a) * mp.gamma(mu + b) * mp.gamma(a + b))


def phase(mu, a, b, y):
    lg = mp.loggamma
    return (lg(2j * y) - lg(mu + 1j * y) - lg(a + 1j * y) - lg(b + 1j * y)).imag


def amplitude(mu, a, b, y, n):
    g = mp.gamma
    return (2 * g(a + b) * abs(g(2j * y)) * mp.mpf(n) ** (mu - 1)
            / abs(g(mu + 1j * y) * g(a + 1j * y) * g(b + 1j * y)))


def comparison(mu, a, b, y, t):
    g = mp.gamma
    big = g(a + b) * g(2j * y) / (g(a + 1j * y) * g(b + 1j * y))
    return (1 - t) ** (-mu - 1j * y) * big + (1 - t) ** (-mu + 1j * y) * mp.conj(big)


def gf_rhs(mu, a, b, y, t):
    return (1 - t) ** (-mu + 1j * y) * mp.hyp2f1(a + 1j * y, b + 1j * y, a + b, t)


show("abs_gamma_i", abs(mp.gamma(1j)))
show("loggamma_half_re", mp.loggamma(0.5).real)
show("arg_gamma_1p1i", mp.loggamma(1 + 1j).imag)
show("gamma_3p4i", mp.gamma(3 + 4j))
show("gamma_m2.5p0.5i", mp.gamma(-2.5 + 0.5j))
show("gamma_0.1m7i", mp.gamma(0.1 - 7j))
show("loggamma_20p30i", mp.loggamma(20 + 30j))
show("loggamma_m7.3p0.2i", mp.loggamma(-7.3 + 0.2j))
show("loggamma_0.25p45i", mp.loggamma(0.25 + 45j))
show("cdh_20_y0.5", cdh(1, 1.5, 2, 20, 0.5))
show("cdh_50_y2_set2", cdh(0.8, 1.2, 2.5, 50, 2))
show("weight_y1", weight(1, 1.5, 2, 1))
show("phase_y1", phase(1, 1.5, 2, 1))
show("phase_y10", phase(1, 1.5, 2, 10))
show("amplitude_y1_n100", amplitude(1, 1.5, 2, 1, 100))
show("comparison_t0.9", comparison(1, 1.5, 2, 1, mp.mpf("0.9")))
show("gf_rhs_t0.3", gf_rhs(1, 1.5, 2, 1, mp.mpf("0.3")))
mp.mp.dps = 400
show("cdh_1000_y1", cdh(1, 1.5, 2, 1000, 1))
mp.mp.dps = 30
show("norm_1", mp.quad(lambda y: cdh(1, 1.5, 2, 1, y) ** 2 * weight(1, 1.5, 2, y), [0, 5, 20, mp.inf]))
show("norm_2", mp.quad(lambda y: cdh(1, 1.5, 2, 2, y) ** 2 * weight(1, 1.5, 2, y), [0, 5, 20, mp.inf]))
show("weight_mass", mp.quad(lambda y: weight(1, 1.5, 2, y), [0, 5, 20, mp.inf]))


def scaled_remainder(mu, a, b, y, k):
    mu, a, b, y = map(mp.mpf, (mu, a, b, y))
    t = 1 - mp.mpf(10) ** (-k)
    return abs(gf_rhs(mu, a, b, y, t) - comparison(mu, a, b, y, t)) * (1 - t) ** mu


# The remainder after the comparison function oscillates in ln(1-t); here it
# rises between k = 3 and k = 4.
show("remainder_set2_y0.5_k3", scaled_remainder(0.8, 1.2, 2.5, 0.5, 3))
show("remainder_set2_y0.5_k4", scaled_remainder(0.8, 1.2, 2.5, 0.5, 4))

# Degree 200 needs ~60 extra digits to survive the alternating sum.
with mp.workdps(150):
    show("cdh_200_y1", cdh(1, 1.5, 2, 200, 1))

"""Regenerates tests/oracle_values.hpp with mpmath at 40 digits.

Every value is computed from a formulation independent of the C++ code:
spherical Bessel functions from mpmath's half-integer J and Y, forward
transforms as integrals over the angle variable s in [-1, 1], zeros from
mpmath.besseljzero, Gegenbauer values from mpmath.gegenbauer.

    python tests/oracles/gen_oracles.py > tests/oracle_values.hpp
"""

import mpmath as mp

mp.mp.dps = 40


def num(x):
    s = mp.nstr(mp.mpf(x), 20)
    if "e" not in s and "." not in s:
        s += ".0"
    return s


def raw_j(k, x):
    # D^k (sin x / x) = j_k(x) / (-x)^k with j_k the unnormalized spherical Bessel function.
    jk = mp.sqrt(mp.pi / (2 * x)) * mp.besselj(k + mp.mpf(1) / 2, x)
    return jk / (-x) ** k


def raw_y(k, x):
    # D^k (cos x / x) = -y_k(x) / (-x)^k.
    yk = mp.sqrt(mp.pi / (2 * x)) * mp.bessely(k + mp.mpf(1) / 2, x)
    return -yk / (-x) ** k


def omega(n):
    return 2 * mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2)


def bump(c, w):
    def f(r):
        s = (r - c) / w
        if abs(s) >= 1:
            return mp.mpf(0)
        return mp.exp(-1 / (1 - s * s))

    return f


def forward_g(f, lo, hi, n, m, t):
    """Spherical mean over the unit-center sphere of radius t, angle form."""
    k = (n - 3) // 2
    alpha = mp.mpf(n - 2) / 2
    c1 = mp.gegenbauer(m, alpha, 1) if m > 0 else 1

    def integrand(s):
        u = mp.sqrt(1 + t * t + 2 * t * s)
        if u <= lo or u >= hi:
            return mp.mpf(0)
        x = (1 + t * s) / u
        y = mp.gegenbauer(m, alpha, x) / c1 if m > 0 else 1
        return f(u) * y * (1 - s * s) ** k

    # breakpoints where u crosses the support ends
    pts = [mp.mpf(-1)]
    for e in (lo, hi):
        s = (e * e - 1 - t * t) / (2 * t)
        if -1 < s < 1:
            pts.append(s)
    pts.append(mp.mpf(1))
    pts = sorted(pts)
    return omega(n - 1) / omega(n) * mp.quad(integrand, pts)


def main():
    out = []
    w = out.append
    w("#pragma once")
    w("// Generated by tests/oracles/gen_oracles.py (mpmath, 40 digits). Do not edit.")
    w("")
    w("namespace oracle {")
    w("")
    w("struct KX { int k; double x; double value; };")
    w("struct Gegen { int m; double alpha; double x; double value; };")
    w("struct Zero { int k; int i; double value; };")
    w("struct Forward { int n; int m; double t; double value; };")
    w("")

    ks = [0, 1, 2, 3, 5, 8]
    xs = [mp.mpf("0.3"), mp.mpf(1), mp.mpf("2.5"), mp.mpf(7), mp.mpf(20), mp.mpf(50)]
    w("inline constexpr KX raw_j[] = {")
    for k in ks:
        for x in xs:
            w(f"    {{{k}, {num(x)}, {num(raw_j(k, x))}}},")
    w("};")
    w("inline constexpr KX raw_y[] = {")
    for k in ks:
        for x in xs:
            w(f"    {{{k}, {num(x)}, {num(raw_y(k, x))}}},")
    w("};")

    w("inline constexpr Zero zeros[] = {")
    for k in range(4):
        for i in range(1, 6):
            w(f"    {{{k}, {i}, {num(mp.besseljzero(k + mp.mpf(1) / 2, i))}}},")
    w("};")

    w("inline constexpr Gegen gegenbauer[] = {")
    for m, a, x in [(0, 0.5, 0.3), (1, 0.5, 0.3), (2, 0.5, -0.7), (3, 1.5, 0.25), (4, 1.5, 0.9), (5, 2.5, -0.4)]:
        w(f"    {{{m}, {a}, {x}, {num(mp.gegenbauer(m, mp.mpf(a), mp.mpf(x)))}}},")
    w("};")

    w("inline constexpr double omega[] = {  // n = 2..9")
    w("    " + ", ".join(num(omega(n)) for n in range(2, 10)) + ",")
    w("};")

    f = bump(mp.mpf("0.5"), mp.mpf("0.3"))
    w("// g for the bump (center 0.5, width 0.3); m > 0 is the single-harmonic mean")
    w("inline constexpr Forward forward_bump[] = {")
    for n, m in [(3, 0), (5, 0), (7, 0), (9, 0), (3, 1), (3, 2), (5, 1)]:
        for t in [mp.mpf("0.35"), mp.mpf("0.75"), mp.mpf(1), mp.mpf("1.4")]:
            w(f"    {{{n}, {m}, {num(t)}, {num(forward_g(f, mp.mpf('0.2'), mp.mpf('0.8'), n, m, t))}}},")
    w("};")
    w("")
    w("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()

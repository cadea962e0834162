"""Regenerates reference_values.hpp from direct high-precision evaluation.

Every value here comes from the defining integral or definition, evaluated
with mpmath (30 digits) or sympy; nothing is taken from the C++ sources.

    python3 tests/reference/generate.py > tests/reference/reference_values.hpp
"""

import itertools
import sys

import mpmath as mp
import sympy

mp.mp.dps = 30


def c_beta(beta):
    return mp.mpf(1) / 2 if beta == 1 else mp.mpf(1)


def gauss(r, s2, c):
    return mp.exp(-c * r * r / s2) / mp.sqrt(mp.pi * s2)


def pair_a(a, b, beta):
    return abs(2 * mp.sinh((a - b) / 2)) ** beta


# z over the ordered chamber r1 > r2 (family a). For m = 2 the centre of mass
# v = r1 + r2 integrates out, leaving the gap u = r1 - r2 > 0.
_za_cache = {}


def z_a(beta, m, s2):
    key = (beta, m, s2)
    if key in _za_cache:
        return _za_cache[key]
    c = c_beta(beta)
    if m == 1:
        v = mp.quad(lambda r: gauss(r, s2, c), [-mp.inf, 0, mp.inf])
    else:
        assert m == 2
        com = mp.sqrt(2 * mp.pi * s2 / c)
        gap = mp.quad(lambda u: mp.exp(-c * u * u / (2 * s2)) * pair_a(u, 0, beta), [0, 1, mp.inf])
        v = com * gap / (2 * mp.pi * s2)
    _za_cache[key] = v
    return v


def half_gauss_exp(k, upper, s2):
    """int_0^upper e^{-r^2/(2 s2) + k r} dr"""
    a = mp.sqrt(2 * s2)
    return mp.sqrt(mp.pi * s2 / 2) * mp.exp(s2 * k * k / 2) * (mp.erf((upper - s2 * k) / a) + mp.erf(s2 * k / a))


def z_bc(kind, m, s2):
    """Chamber 0 < r2 < r1; the pair factor 4 sinh((r1-r2)/2) sinh((r1+r2)/2) is 2 cosh r1 - 2 cosh r2."""
    extra = (lambda r: 2 * mp.sinh(r)) if kind == "sp" else (lambda r: 1)
    norm = 1 / mp.sqrt(mp.pi * s2)
    if m == 1:
        return mp.quad(lambda r: norm * mp.exp(-r * r / (2 * s2)) * extra(r), [0, 1, mp.inf])
    assert m == 2

    def inner(r1):
        i = lambda k: half_gauss_exp(k, r1, s2)
        if kind == "so":
            return 2 * mp.cosh(r1) * i(0) - i(1) - i(-1)
        return 2 * mp.cosh(r1) * (i(1) - i(-1)) - (i(2) - i(-2))

    return mp.quad(lambda r1: norm * norm * mp.exp(-r1 * r1 / (2 * s2)) * extra(r1) * inner(r1), [0, 1, 3, mp.inf])


def rho_m2(beta, s2, r):
    c = c_beta(beta)
    num = mp.quad(lambda y: gauss(r, s2, c) * gauss(y, s2, c) * pair_a(r, y, beta), [-mp.inf, r, mp.inf])
    return num / z_a(beta, 2, s2)


def sw_moment(k, s2):
    return mp.exp(s2 * mp.mpf(k + 1) ** 2 / 4)


def sw_monic(n, s2):
    """Monic orthogonal polynomials from the moment Hankel matrix."""
    polys, norms = [], []
    for d in range(n + 1):
        h = mp.matrix(d + 1, d + 1)
        for i in range(d + 1):
            for j in range(d + 1):
                h[i, j] = sw_moment(i + j, s2)
        # solve for p_d = x^d + sum a_k x^k orthogonal to x^0..x^{d-1}
        if d == 0:
            coeffs = [mp.mpf(1)]
        else:
            a = mp.matrix(d, d)
            rhs = mp.matrix(d, 1)
            for i in range(d):
                for k in range(d):
                    a[i, k] = sw_moment(i + k, s2)
                rhs[i] = -sw_moment(i + d, s2)
            sol = mp.lu_solve(a, rhs)
            coeffs = [sol[k] for k in range(d)] + [mp.mpf(1)]
        norm = sum(coeffs[k] * coeffs[l] * sw_moment(k + l, s2) for k in range(d + 1) for l in range(d + 1))
        polys.append(coeffs)
        norms.append(norm)
    return polys, norms


def sw_recurrence(n, s2):
    polys, norms = sw_monic(n + 1, s2)
    b, c = [], []
    for d in range(n + 1):
        p = polys[d]
        xpp = sum(p[k] * p[l] * sw_moment(k + l + 1, s2) for k in range(len(p)) for l in range(len(p)))
        b.append(xpp / norms[d])
        c.append(norms[d] / norms[d - 1] if d > 0 else mp.mpf(0))
    return b, c


def q_binomial(n, nu, q):
    v = mp.mpf(1)
    for j in range(1, nu + 1):
        v *= (1 - q ** (n - j + 1)) / (1 - q ** j)
    return v


def q_gamma(j, q):
    v = mp.mpf(1)
    for n in range(1, j + 1):
        v *= (1 - q ** n) / (1 - q)
    return v


def mv_gamma(m, a):
    v = mp.pi ** (mp.mpf(m * (m - 1)) / 4)
    for j in range(1, m + 1):
        v *= mp.gamma(a - mp.mpf(j - 1) / 2)
    return v


def kernel_a(x, eta, t):
    m = len(x)
    g = mp.matrix(m, m)
    for i in range(m):
        for j in range(m):
            g[i, j] = mp.exp(-(x[i] - eta[j]) ** 2 / (2 * t)) / mp.sqrt(2 * mp.pi * t)
    return mp.det(g)


def kernel_b(x, eta, t):
    m = len(x)
    g = mp.matrix(m, m)
    for i in range(m):
        for j in range(m):
            g[i, j] = (mp.exp(-(x[i] - eta[j]) ** 2 / (2 * t)) - mp.exp(-(x[i] + eta[j]) ** 2 / (2 * t))) / mp.sqrt(
                2 * mp.pi * t
            )
    return mp.det(g)


def fmt(v):
    s = mp.nstr(mp.mpf(v), 20) if v != 0 else "0.0"
    return s if any(ch in s for ch in ".e") else s + ".0"


def log_of(v):
    return fmt(mp.log(abs(v)))


out = []
emit = out.append
emit("#pragma once")
emit("")
emit("// Generated by generate.py; do not edit by hand.")
emit("")
emit("namespace refvals {")
emit("")
emit("struct ZCell {")
emit("    int beta;")
emit("    int m;")
emit("    double sigma2;")
emit("    double logZ;")
emit("};")
emit("")

sig = [mp.mpf("0.3"), mp.mpf(1), mp.mpf(2)]

emit("// log z over the ordered chamber, family a, paper convention")
emit("inline constexpr ZCell kZa[] = {")
for beta, m, s2 in itertools.product([1, 2, 4], [1, 2], sig):
    emit(f"    {{{beta}, {m}, {fmt(s2)}, {log_of(z_a(beta, m, s2))}}},")
emit("};")
emit("")
for kind in ["so", "sp"]:
    emit(f"inline constexpr ZCell kZ{kind.upper()}[] = {{")
    for m, s2 in itertools.product([1, 2], sig):
        emit(f"    {{1, {m}, {fmt(s2)}, {log_of(z_bc(kind, m, s2))}}},")
    emit("};")
    emit("")

emit("struct RhoCell {")
emit("    int beta;")
emit("    double sigma2;")
emit("    double r;")
emit("    double rho;")
emit("};")
emit("")
emit("// m = 2 densities, normalised to total mass 2")
emit("inline constexpr RhoCell kRhoM2[] = {")
for beta, s2, r in itertools.product([1, 2, 4], [mp.mpf("0.5"), mp.mpf(1)], [mp.mpf(-1), mp.mpf(0), mp.mpf("0.7"), mp.mpf(2)]):
    emit(f"    {{{beta}, {fmt(s2)}, {fmt(r)}, {fmt(rho_m2(beta, s2, r))}}},")
emit("};")
emit("")

s2 = mp.mpf("0.5")
polys, norms = sw_monic(4, s2)
emit("// monic Stieltjes-Wigert polynomials at sigma^2 = 0.5, coefficients low to high")
emit("inline constexpr double kSwSigma2 = 0.5;")
emit("inline constexpr double kSwMonic[5][5] = {")
for p in polys:
    emit("    {" + ", ".join(fmt(c) for c in p + [0] * (5 - len(p))) + "},")
emit("};")
emit("inline constexpr double kSwLogNorm[5] = {" + ", ".join(log_of(h) for h in norms) + "};")
b, c = sw_recurrence(3, s2)
emit("inline constexpr double kSwB[4] = {" + ", ".join(fmt(v) for v in b) + "};")
emit("inline constexpr double kSwC[4] = {" + ", ".join(fmt(v) for v in c) + "};")
emit("")

q = mp.exp(-s2 / 2)
emit("// q = e^{-sigma^2/2} at sigma^2 = 0.5")
emit("inline constexpr double kQBinomial63 = " + fmt(q_binomial(6, 3, q)) + ";")
emit("inline constexpr double kQGamma5 = " + fmt(q_gamma(5, q)) + ";")
x = mp.mpf("2.5")
emit("inline constexpr double kQNumber25 = " + fmt((q ** (-x / 2) - q ** (x / 2)) / (q ** (-0.5) - q ** 0.5)) + ";")
emit("")

emit("struct ErfCell {")
emit("    double x;")
emit("    double erf;")
emit("    double erfc;")
emit("};")
emit("inline constexpr ErfCell kErf[] = {")
for xv in ["-3.5", "-0.7", "1e-8", "0.3", "1.0", "2.2", "4.0", "6.5", "12.0"]:
    xx = mp.mpf(xv)
    emit(f"    {{{xv}, {fmt(mp.erf(xx))}, {fmt(mp.erfc(xx))}}},")
emit("};")
emit("")

emit("// log Gamma_m(a)")
emit("inline constexpr double kLogMvGamma[][3] = {")
for m, a in [(1, mp.mpf("0.5")), (3, mp.mpf("1.5")), (5, mp.mpf("2.5")), (8, mp.mpf(4))]:
    emit(f"    {{{m}, {fmt(a)}, {log_of(mv_gamma(m, a))}}},")
emit("};")
emit("")

xs = [mp.mpf("1.2"), mp.mpf("-0.3")]
es = [mp.mpf(1), mp.mpf(0)]
emit("// det[N_t(x_i - eta_j)] at x = (1.2, -0.3), eta = (1, 0), t = 0.7")
emit("inline constexpr double kKernelALog = " + log_of(kernel_a(xs, es, mp.mpf("0.7"))) + ";")
xs = [mp.mpf("1.5"), mp.mpf("0.4")]
es = [mp.mpf("0.9"), mp.mpf("0.2")]
emit("// image-method kernel at x = (1.5, 0.4), eta = (0.9, 0.2), t = 0.6")
emit("inline constexpr double kKernelBLog = " + log_of(kernel_b(xs, es, mp.mpf("0.6"))) + ";")
emit("")

# Pfaffian of a fixed integer skew matrix, exactly
n = 6
entries = [[0] * n for _ in range(n)]
vals = iter([3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, -7, 9])
for i in range(n):
    for j in range(i + 1, n):
        v = next(vals)
        entries[i][j], entries[j][i] = v, -v
mat = sympy.Matrix(entries)


def pf(idx):
    if not idx:
        return sympy.Integer(1)
    i, rest = idx[0], idx[1:]
    total = sympy.Integer(0)
    for k, j in enumerate(rest):
        total += (-1) ** k * mat[i, j] * pf(rest[:k] + rest[k + 1 :])
    return total


emit("inline constexpr int kPfMatrix[6][6] = {")
for row in entries:
    emit("    {" + ", ".join(str(v) for v in row) + "},")
emit("};")
emit(f"inline constexpr double kPfValue = {pf(list(range(n)))};")
emit(f"inline constexpr double kDetValue = {mat.det()};")
emit("")
emit("}  // namespace refvals")

sys.stdout.write("\n".join(out) + "\n")

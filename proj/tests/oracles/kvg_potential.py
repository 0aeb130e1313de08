# Stepwise Darboux recursion for the neutron-proton chain in 50-digit
# arithmetic. Jets come from mpmath's Taylor expansion of the closed-form
# solutions, so nothing here shares code with the determinant route.
import sys
import mpmath as mp

mp.mp.dps = 50
k1, k2, chi = mp.mpf("0.944"), mp.mpf("0.232"), mp.mpf("1.22")
kappa = mp.mpc(chi, chi)
I = mp.mpc(0, 1)


def norm(k):
    return 1 / ((k1 - I * k) * (k2 - I * k))


def phi_s(k):
    return lambda r: I * mp.sin(k * r)


def f_s(k):
    return lambda r: mp.exp(I * k * r)


def phi_d(k):
    return lambda r: I * ((3 - (k * r) ** 2) * mp.sin(k * r) - 3 * k * r * mp.cos(k * r)) / (k * r) ** 2


def f_d(k):
    return lambda r: mp.exp(I * k * r) * (1 + 3 * I / (k * r) - 3 / (k * r) ** 2)


def scaled(c, f):
    return lambda r: c * f(r)


one = lambda r: mp.mpf(1)
zero = lambda r: mp.mpf(0)

u3 = [[scaled(-norm(-kappa), phi_s(kappa)), scaled(I * norm(kappa), f_s(kappa))],
      [scaled(-I, phi_d(kappa)), f_d(kappa)]]
kc = mp.conj(kappa)
u4 = [[scaled(mp.conj(-norm(-kappa)), lambda r: mp.conj(phi_s(kappa)(r))),
       scaled(mp.conj(I * norm(kappa)), lambda r: mp.conj(f_s(kappa)(r)))],
      [scaled(I, lambda r: mp.conj(phi_d(kappa)(r))), lambda r: mp.conj(f_d(kappa)(r))]]
links = [("s", [[phi_s(I * k1), zero], [zero, one]]),
         ("s", [[f_s(-I * k2), zero], [zero, one]]),
         ("r", u3),
         ("r", u4)]
K = 6


def jet(u, r):
    cols = [[mp.taylor(u[i][j], r, K) for j in range(2)] for i in range(2)]
    return [mp.matrix([[cols[i][j][p] for j in range(2)] for i in range(2)]) for p in range(K + 1)]


def mul(a, b):
    n = min(len(a), len(b))
    return [sum((a[q] * b[p - q] for q in range(p + 1)), mp.zeros(2, 2)) for p in range(n)]


def inv(a):
    a0 = a[0] ** -1
    b = [a0]
    for p in range(1, len(a)):
        acc = mp.zeros(2, 2)
        for q in range(1, p + 1):
            acc += a[q] * b[p - q]
        b.append(-a0 * acc)
    return b


def diff(a):
    return [a[p + 1] * (p + 1) for p in range(len(a) - 1)]


def dm(a):
    d = diff(a)
    for p in range(len(d)):
        d[p] = d[p].copy()
        d[p][1, 0] = a[p][1, 0]
        d[p][1, 1] = a[p][1, 1]
    return d


def potential(r):
    pending = [jet(u, r) for _, u in links]
    F = [mp.zeros(2, 2)] * (K + 1)
    for k, (kind, _) in enumerate(links):
        y = pending[k]
        w = mul(diff(y), inv(y))
        F = [F[p] + w[p] for p in range(len(w))]
        for l in range(k + 1, len(links)):
            x = pending[l]
            lead = dm(x) if kind == "s" else diff(x)
            pending[l] = [lead[p] - mul(w, x)[p] for p in range(len(lead))]
    v = -2 * F[1]
    v[1, 1] += 6 / r**2
    return v


for arg in sys.argv[1:]:
    r = mp.mpf(arg)
    v = potential(r)
    print(arg, " ".join(mp.nstr(mp.re(v[i, j]), 17) for i in range(2) for j in range(2)),
          "| max imag", mp.nstr(max(abs(mp.im(v[i, j])) for i in range(2) for j in range(2)), 3))

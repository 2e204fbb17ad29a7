"""Independent oracles used by the tests.

Everything here is computed from first principles (recurrences, brute
sums, schoolbook polynomial arithmetic) without touching the library's
series machinery, so agreement between the two is a real check.
"""

from fractions import Fraction
from math import comb

from bernsym.cyclotomic import CycloElement


def bernoulli_recurrence(n_max):
    """B_0..B_n_max from sum_{k=0}^{n} C(n+1,k) B_k = 0 (B_1 = -1/2)."""
    table = [Fraction(1)]
    for m in range(1, n_max + 1):
        s = Fraction(0)
        for k in range(m):
            s += comb(m + 1, k) * table[k]
        table.append(-s / (m + 1))
    return table


def bernoulli_poly(n, x, table=None):
    """Ordinary Bernoulli polynomial via the recurrence table."""
    x = Fraction(x)
    if table is None:
        table = bernoulli_recurrence(n)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += comb(n, k) * table[k] * x ** (n - k)
    return acc


def gen_bernoulli_number(chi, n, table=None):
    """B_{n,chi} via d^(n-1) * sum_a chi(a) B_n(a/d)."""
    d = chi.modulus
    if table is None:
        table = bernoulli_recurrence(n)
    acc = CycloElement.zero(chi.order)
    for a in range(d):
        v = chi.values[a]
        if not v.is_zero():
            acc = acc + v.scale(bernoulli_poly(n, Fraction(a, d), table))
    return acc.scale(Fraction(d) ** (n - 1))


def power_sum_direct(chi, k, n):
    """S_k(n, chi) summed term by term, 0^0 = 1."""
    acc = CycloElement.zero(chi.order)
    for a in range(n + 1):
        v = chi.values[a % chi.modulus]
        if not v.is_zero():
            acc = acc + v.scale(a**k)
    return acc


def cauchy_product(a_coeffs, b_coeffs, order):
    """Schoolbook truncated product of ordinary coefficient lists."""
    out = []
    for n in range(order + 1):
        s = None
        for i in range(n + 1):
            term = a_coeffs[i] * b_coeffs[n - i]
            s = term if s is None else s + term
        out.append(s)
    return out


def poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out

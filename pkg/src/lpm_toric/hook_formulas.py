"""Closed forms for hook-shape matroid polytopes and the coefficient machinery
behind them.

Notation: a hook has sides ``alpha >= beta >= 1``; ``m = alpha - 1`` and
``n = beta - 1`` index the product of simplices ``Delta_m x Delta_n`` that
forms the base of the pyramid.  All arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .poly import Poly, X


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    """Binomial coefficient for any integer ``n`` and integer ``k``.

    Zero for ``k < 0``; for negative ``n`` the generalized value
    ``(-1)^k C(k - n - 1, k)``, so ``binom(-1, k) == (-1)**k``.
    """
    if k < 0:
        return 0
    if n < 0:
        return (-1) ** k * binom(k - n - 1, k)
    if k > n:
        return 0
    out = 1
    for i in range(1, k + 1):
        out = out * (n - i + 1) // i
    return out


def _ordered(alpha: int, beta: int) -> tuple[int, int]:
    if alpha < 1 or beta < 1:
        raise ValueError("hook sides must be at least 1")
    return (alpha, beta) if alpha >= beta else (beta, alpha)


@dataclass(frozen=True)
class HookQuantities:
    alpha: int
    beta: int

    @property
    def m(self) -> int:
        return self.alpha - 1

    @property
    def n(self) -> int:
        return self.beta - 1

    def r(self, i: int) -> int:
        return r_i(self.alpha, self.beta, i)

    def S(self, ell: int) -> int:
        return s_ell(self.m, self.n, ell)

    def C(self, a: int, b: int) -> int:
        return binom(self.alpha, a) * binom(self.beta, b)


def r_i(alpha: int, beta: int, i: int) -> int:
    """Number of i-dimensional faces of ``Delta_(alpha-1) x Delta_(beta-1)``; 1 at ``i = -1``."""
    if i < -1:
        raise ValueError("r_i is defined for i >= -1")
    if i == -1:
        return 1
    return sum(binom(alpha, k) * binom(beta, i + 2 - k) for k in range(1, i + 2))


def f_vector_hook(alpha: int, beta: int) -> tuple[int, ...]:
    return tuple(r_i(alpha, beta, i) + r_i(alpha, beta, i - 1) for i in range(alpha + beta))


def s_ell(m: int, n: int, ell: int) -> int:
    return sum(binom(m, k) * binom(n, k) for k in range(ell + 1))


def gtilde_closed(m: int, n: int) -> Poly:
    """``sum_k C(m,k) C(n,k) x^k``, the toric g of ``Delta_m x Delta_n``."""
    return Poly.from_coeffs(binom(m, k) * binom(n, k) for k in range(min(m, n) + 1))


def g_hook(alpha: int, beta: int) -> Poly:
    alpha, beta = _ordered(alpha, beta)
    return gtilde_closed(alpha - 1, beta - 1)


def f_hook(alpha: int, beta: int) -> Poly:
    alpha, beta = _ordered(alpha, beta)
    m, n = alpha - 1, beta - 1
    coeffs = [0] * (alpha + beta)
    for k in range(beta):
        coeffs[k] = s_ell(m, n, k)
    for k in range(beta, alpha):
        coeffs[k] = s_ell(m, n, beta - 1)
    for k in range(alpha, alpha + beta):
        coeffs[k] = s_ell(m, n, alpha + beta - 1 - k)
    return Poly.from_coeffs(coeffs)


def ftilde_closed(m: int, n: int) -> Poly:
    """Palindromic toric f of ``Delta_m x Delta_n`` built from the partial sums S."""
    if m < n:
        m, n = n, m
    coeffs = [0] * (m + n + 1)
    for k in range(n):
        coeffs[k] = s_ell(m, n, k)
    for k in range(n, m + 1):
        coeffs[k] = s_ell(m, n, n)
    for k in range(m + 1, m + n + 1):
        coeffs[k] = s_ell(m, n, m + n - k)
    return Poly.from_coeffs(coeffs)


def ghat_neg(t: int) -> Poly:
    """``(-x)^(t-1)``: the g-formula evaluated at ``x+1`` with upper index -1."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return Poly.monomial(t - 1, (-1) ** (t - 1))


def ghat_shifted(p: int, q: int) -> Poly:
    """``sum_{k=0}^{q} C(p,k) C(q,k) (x+1)^k`` with generalized binomials."""
    out = Poly()
    step = Poly((1, 1))
    for k in range(q + 1):
        c = binom(p, k) * binom(q, k)
        if c:
            out = out + c * step**k
    return out


def mhat_entry(m: int, n: int, s: int, t: int) -> Poly:
    """Entry ``(s, t)`` of the modified coefficient matrix, a polynomial in x."""
    if not 0 <= n <= m:
        raise ValueError("need 0 <= n <= m")
    if not (-1 <= s <= m + n and 1 <= t <= n + 1):
        raise IndexError(f"(s, t) = ({s}, {t}) outside -1..{m + n} x 1..{n + 1}")
    a = m + n + 1 - s - t
    c = binom(m + 1, a) * binom(n + 1, t)
    if c == 0:
        return Poly()
    if a == 0:
        inner = ghat_neg(t)
    else:
        inner = ghat_shifted(a - 1, t - 1)
    return c * inner


def fhat(m: int, n: int) -> Poly:
    """Laurent polynomial ``sum_{s,t} Mhat[s,t] x^s`` (that is, fhat(x+1) in x)."""
    out = Poly()
    for s in range(-1, m + n + 1):
        for t in range(1, n + 2):
            out = out + mhat_entry(m, n, s, t).shift(s)
    return out


def coeff_fhat(m: int, n: int, r: int) -> int:
    """Closed triple sum for the coefficient of ``x^r`` in fhat(x+1)."""
    top = m + n - r
    total = 0
    for k in range(n + 1):
        outer = binom(m + 1, top - k)
        if not outer:
            continue
        inner = 0
        for i in range(n - k + 1):
            inner += binom(n + 1, i + k + 1) * sum(
                binom(i + j, i) * binom(top - k - 1, i + j) * binom(i + k, i + j)
                for j in range(k + 1)
            )
        total += outer * inner
    return total


def _correction(m: int, n: int, r: int) -> int:
    return sum(binom(m, k) * binom(n, k) * binom(k, r + 1) for k in range(n + 1))


def coeff_ftilde_via_fhat(m: int, n: int, r: int) -> int:
    """Coefficient of ``x^r`` in ftilde(x+1) via the fhat route."""
    return coeff_fhat(m, n, r) - _correction(m, n, r)


def coeff_ftilde_direct(m: int, n: int, r: int) -> int:
    """Coefficient of ``x^r`` in ftilde(x+1) from the S-block expansion."""
    return sum(
        binom(m, k) * binom(n, k) * (binom(m + n - k + 1, r + 1) - binom(k, r + 1))
        for k in range(n + 1)
    )


def fhat_bridge(m: int, n: int) -> tuple[Poly, Poly]:
    """Both sides of ``ftilde(x+1) = fhat(x+1) - x^-1 sum_k C(m,k)C(n,k)(x+1)^k``."""
    lhs = ftilde_closed(m, n).substitute_shift(1)
    rhs = fhat(m, n) - ghat_shifted(m, n).shift(-1)
    return lhs, rhs


def telescoping_sum(m: int, n: int) -> Poly:
    """``sum_{k=0}^{n} x^(m+n-k) C(n+1,k+1) (-x)^k``; equals ``x^(m+n)``."""
    out = Poly()
    for k in range(n + 1):
        out = out + binom(n + 1, k + 1) * X ** (m + n - k) * (-X) ** k
    return out


def triple_sum_lhs(m: int, n: int, q: int) -> int:
    total = 0
    for k in range(n + 1):
        outer = binom(m + 1, q - k + 1)
        if not outer:
            continue
        for i in range(n - k + 1):
            mid = binom(n + 1, i + k + 1)
            if not mid:
                continue
            total += outer * mid * sum(
                binom(i + j, j) * binom(q - k, i + j) * binom(k + i, k - j) for j in range(k + 1)
            )
    return total


def triple_sum_rhs(m: int, n: int, q: int) -> int:
    return sum(binom(m, k) * binom(n, k) * binom(m + n - k + 1, q - k + 1) for k in range(n + 1))


def triple_sum_identity(m: int, n: int, q: int) -> tuple[int, int]:
    return triple_sum_lhs(m, n, q), triple_sum_rhs(m, n, q)


def sub_identity_inner(q: int, k: int, i: int) -> tuple[int, int]:
    lhs = sum(binom(i + j, j) * binom(q - k, i + j) * binom(k + i, k - j) for j in range(k + 1))
    return lhs, binom(k + i, k) * binom(q, k + i)


def sub_identity_middle(n: int, q: int, k: int) -> tuple[int, int]:
    lhs = sum(
        binom(n + 1, i + k + 1) * binom(k + i, k) * binom(q, k + i) for i in range(n - k + 1)
    )
    return lhs, binom(q, k) * binom(q + n - k + 1, n - k)


def sub_identity_outer(m: int, n: int, q: int) -> tuple[int, int]:
    lhs = sum(
        binom(m + 1, q - k + 1) * binom(q, k) * binom(q + n - k + 1, n - k) for k in range(n + 1)
    )
    return lhs, triple_sum_rhs(m, n, q)


def sub_identities(m: int, n: int, q: int, k: int, i: int) -> dict[str, tuple[int, int]]:
    """The three summation-from-inside steps, each as ``(lhs, rhs)``."""
    return {
        "inner": sub_identity_inner(q, k, i),
        "middle": sub_identity_middle(n, q, k),
        "outer": sub_identity_outer(m, n, q),
    }

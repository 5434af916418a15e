"""B-sequences of pseudo-involutions and the expansion of g in terms of B.

The central objects: a series g with g(0) = 1 such that the array (f, xg) is
a pseudo-involution, its B-sequence (the unique B with
``g = 1 + x*g*B(x^2*g)``), the square-root decomposition
(1, xg) = (1, x*sqrt(g)) (1, xh) with h(x)*h(-x) = 1, and the closed-form
coefficient expansion of the one-parameter family g obtained by scaling B.

``g_from_b`` is the workhorse oracle: it solves the defining functional
equation coefficient by coefficient, so every closed-form claim elsewhere can
be checked against it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinat import odd_partitions
from .errors import InsufficientOrder, NotPseudoInvolution
from .riordan import RiordanPair
from .series import Coeff, Poly, Series, falling_factorial

__all__ = [
    "g_from_b",
    "b_from_g",
    "SqrtDecomposition",
    "sqrt_decompose",
    "b_expansion",
    "b_expansion_monomials",
    "arcsinh_row_poly",
    "example6_series",
    "example6_b_pair",
    "lucas_pair",
    "fibonacci_pair",
]


def g_from_b(b_fun: Series, phi: Coeff, order: int) -> Series:
    """Solve g = 1 + x*g*(phi*B)(x^2*g) for g, truncated at ``order``.

    Coefficient n of g depends only on coefficients below n, so a growing
    fixed point converges in ``order`` sweeps.  This is the independent
    oracle the closed-form expansions are tested against.
    """
    need = (order - 1) // 2
    if b_fun.order < need:
        raise InsufficientOrder(
            "B carries %d coefficients, need %d for order %d"
            % (b_fun.order + 1, need + 1, order))
    pb = (b_fun * phi).zero_extended(max(order, b_fun.order))
    g = Series.one(0)
    for m in range(1, order + 1):
        gm = g.zero_extended(m)
        inner = gm.x_mul(2).truncate(m)
        # evaluate (phi*B)(x^2 g) to order m; only b_k with 2k <= m contribute
        acc = Series.zero(m)
        for k in range(m // 2, -1, -1):
            acc = acc * inner
            c = pb.coeff(k)
            if c != 0:
                acc = acc + c
        g = gm.x_mul(1).truncate(m) * acc + 1
    return g.zero_extended(order) if order == 0 else g


def b_from_g(g: Series) -> Series:
    """Extract the B-sequence of g, i.e. the unique B with g = 1 + x*g*B(x^2*g).

    Raises :class:`NotPseudoInvolution` when no such B exists (the functional
    equation is overdetermined: every second coefficient is a consistency
    condition, and all of them are checked).
    """
    if g.constant != 1:
        raise NotPseudoInvolution("g(0) must be 1, got %r" % (g.constant,))
    n = g.order
    assert n >= 1, "need at least order 1 to extract anything"
    kmax = (n - 1) // 2
    xg = g.x_mul(1).truncate(n)
    inner = g.x_mul(2).truncate(n)
    power = Series.one(n)
    residual = g - 1
    bs: list[Coeff] = []
    for k in range(kmax + 1):
        c = residual.coeff(2 * k + 1)
        bs.append(c)
        if c != 0:
            residual = residual - (xg * power) * c
        power = power * inner
    if not residual.is_zero():
        bad = residual.valuation()
        raise NotPseudoInvolution(
            "no B-sequence: functional equation fails first at x^%d" % bad)
    return Series(bs, kmax)


# ─────────────────────────────────────────────────────────────────────────────
# Square-root decomposition (1, xg) = (1, x*sqrt(g)) (1, xh)
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SqrtDecomposition:
    """Factorization data: g = sqrt_g**2, h = sqrt_g(revert(x*sqrt_g)),
    and s = (h - 1/h)/2, which is odd exactly for pseudo-involutions."""

    sqrt_g: Series
    h: Series
    s: Series

    @property
    def b_fun(self) -> Series:
        """B recovered through x*B(x^2) = 2*s(x)."""
        kmax = (self.s.order - 1) // 2
        return Series([2 * self.s.coeff(2 * k + 1) for k in range(kmax + 1)], kmax)


def sqrt_decompose(g: Series) -> SqrtDecomposition:
    """Split (1, xg) into the Bell square root (1, x*sqrt(g)) and its
    cofactor (1, xh); requires the input to be a pseudo-involution."""
    r = g.sqrt()
    w = r.x_mul(1)
    h = r.compose(w.revert().truncate(r.order))
    s = (h - h.inverse()) / 2
    for m in range(0, s.order + 1, 2):
        if s.coeff(m) != 0:
            raise NotPseudoInvolution(
                "even coefficient x^%d of s is %r, expected 0" % (m, s.coeff(m)))
    return SqrtDecomposition(sqrt_g=r, h=h, s=s)


# ─────────────────────────────────────────────────────────────────────────────
# Closed-form expansion of g in the B coefficients
# ─────────────────────────────────────────────────────────────────────────────

def b_expansion(b_fun: Series, n: int, param: str = "phi") -> Poly:
    """Coefficient of x^n in the B-scaled family, as a polynomial in the
    scaling parameter.

    Summed over partitions of n into odd parts 2i+1 with multiplicities m_i:
    contribution  p * (p+k-1)*(p+k-2)*...*(p+k-q+1) / prod(m_i!) * prod(b_i**m_i)
    with q parts in total and k = (n+q)/2.
    """
    if n == 0:
        return Poly.const(param, 1)
    p = (n - 1) // 2
    if b_fun.order < p:
        raise InsufficientOrder("need %d B coefficients, have %d" % (p + 1, b_fun.order + 1))
    phi = Poly.var(param)
    total = Poly(param)
    for part in odd_partitions(n):
        weight = Fraction(1)
        for i, m in enumerate(part.mults):
            if m:
                weight *= Fraction(b_fun.coeff(i)) ** m / factorial(m)
        if weight == 0:
            continue
        total = total + phi * falling_factorial(phi + (part.k - 1), part.q - 1) * weight
    return total


def b_expansion_monomials(n: int) -> dict[tuple[int, ...], Fraction]:
    """The expansion of [x^n] g at scaling 1, kept symbolic in the B
    coefficients: maps multiplicity tuples (m_0, m_1, ...) of odd partitions
    to the rational coefficient of prod(b_i**m_i)."""
    if n == 0:
        return {(): Fraction(1)}
    out: dict[tuple[int, ...], Fraction] = {}
    for part in odd_partitions(n):
        denom = 1
        for m in part.mults:
            denom *= factorial(m)
        out[part.mults] = Fraction(falling_factorial(part.k, part.q - 1), denom)
    return out


def arcsinh_row_poly(q: int, param: str = "x") -> Poly:
    """Row q of the exponential array (1, log(x + sqrt(1+x^2))):
    the closed product x * (x+q-2) * (x+q-4) * ... * (x-q+2)."""
    assert q >= 0
    if q == 0:
        return Poly.const(param, 1)
    x = Poly.var(param)
    out = x
    for i in range(1, q):
        out = out * (x + (q - 2 * i))
    return out


# ─────────────────────────────────────────────────────────────────────────────
# The two-parameter worked family and its Lucas/Fibonacci companions
# ─────────────────────────────────────────────────────────────────────────────

def example6_series(m: int, order: int) -> Series:
    """g with coefficients (2m+1)/(2m+1+(m+1)n) * C(2m+1+(m+1)n, n)."""
    assert m >= 0
    cs = []
    for n in range(order + 1):
        top = 2 * m + 1 + (m + 1) * n
        cs.append(Fraction((2 * m + 1) * comb(top, n), top))
    return Series(cs, order)


def example6_b_pair(order: int) -> RiordanPair:
    """((1+x)/(1-x)^2, x/(1-x)^2): row m is the B-sequence of
    ``example6_series(m)``."""
    inv2 = Series([1, -1], order) ** (-2)
    return RiordanPair(Series([1, 1], order) * inv2, inv2)


def lucas_pair(order: int) -> RiordanPair:
    """((1+x^2)/(1-x^2), x/(1-x^2)): rows are Lucas polynomials."""
    inv = Series([1, 0, -1], order).inverse()
    return RiordanPair(Series([1, 0, 1], order) * inv, inv)


def fibonacci_pair(order: int) -> RiordanPair:
    """(1/(1-x^2), x/(1-x^2)): row n is the Fibonacci polynomial F_{n+1}."""
    inv = Series([1, 0, -1], order).inverse()
    return RiordanPair(inv, inv)

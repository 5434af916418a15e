"""Two-sided infinite-product factorizations of substitution series.

A normalized series g = x + g_2 x^2 + ... acts on power series by
substitution, and the matrices (1, g) of that action form a group.  For
each k >= 1 the series x * (1 - k*a*x^k)**(-1/k) form a one-parameter
subgroup in the weight a, and every g factors through one member of each
subgroup in exactly two orders:

    g(x) = w1(w2(w3(...)))      "alpha" weights, type-1 factor outermost,
    g(x) = ...w3(w2(w1(x)))     "beta" weights, type-1 factor innermost,

with the two k = 1 weights equal.  The weights interpolate the matrix
entries of (1, g): [x^n] (g/x)**z is a polynomial in z obtained by summing
over the partitions of n read as sorted compositions, ascending for alpha
and descending for beta.  A third weight system, the coefficients of the
generator omega with log(1, g) = (omega, x) D, produces the same
polynomials through sums over all ordered compositions and drives the
one-parameter flow (1, g)**t.

Beyond extraction and resummation the module packages the identities tying
the systems together as boolean check functions: reversion swaps the two
systems and flips signs, scaling the weights by t and 1-t splits g into two
deformed halves, t = -1 on both halves composes to the double inverse
iterate, and the t-derivatives of the deformations recover the weight
series themselves.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Sequence

from .combinat import compositions, partitions
from .errors import InsufficientOrder, NotNormalized, NotPseudoInvolution
from .riordan import TriMatrix
from .series import Coeff, Poly, Series


def _require_normalized(g: Series) -> None:
    if g.coeff(0) != 0 or g.coeff(1) != 1:
        raise NotNormalized("need a series x + c2*x^2 + ..., got constant %r, "
                            "linear %r" % (g.coeff(0), g.coeff(1)))


# ─────────────────────────────────────────────────────────────────────────────
# The elementary factors
# ─────────────────────────────────────────────────────────────────────────────

def factor_column_gf(k: int, weight: Coeff, m: int, order: int) -> Series:
    """Column m of the type-k factor matrix: x^m * (1 - k*w*x^k)**(-m/k).

    The binomial expansion telescopes to rising factorials with step k,

        [x^{m + j*k}] = m (m + k) (m + 2k) ... (m + (j-1)k) / j! * w**j,

    so the weight may be a rational or a Poly and everything stays exact.
    """
    assert k >= 1 and m >= 0 and order >= 0
    coeffs: list[Coeff] = [0] * (order + 1)
    if m <= order:
        coeffs[m] = 1
    c: Coeff = Fraction(1)
    wp: Coeff = 1
    j = 0
    while m + (j + 1) * k <= order:
        c = c * Fraction(m + j * k, j + 1)
        wp = wp * weight
        j += 1
        coeffs[m + j * k] = c * wp
    return Series(coeffs, order)


def factor_series(k: int, weight: Coeff, order: int) -> Series:
    """The substitution series x * (1 - k*w*x^k)**(-1/k) of the type-k factor.

    Two factors of the same type compose by adding their weights, so the
    weight-negated factor is the compositional inverse.
    """
    return factor_column_gf(k, weight, 1, order)


# ─────────────────────────────────────────────────────────────────────────────
# Weight extraction and resummation
# ─────────────────────────────────────────────────────────────────────────────

def alpha_weights(g: Series, count: int | None = None) -> list[Coeff]:
    """Weights of the factorization with the type-1 factor outermost.

    Peels one factor per step: after removing w_1, ..., w_k the remainder
    starts x + a_{k+1} x^{k+2}, which hands over the next weight.
    """
    _require_normalized(g)
    n = g.order - 1 if count is None else count
    if n > g.order - 1:
        raise InsufficientOrder("%d weights need series order %d, have %d"
                                % (n, n + 1, g.order))
    cur = g
    out: list[Coeff] = []
    for k in range(1, n + 1):
        a = cur.coeff(k + 1)
        out.append(a)
        if k < n:
            # remainder = wbar_k(cur(x)) with wbar_k the weight-negated factor
            cur = factor_series(k, -a, cur.order).compose(cur)
            assert all(cur.coeff(j) == 0 for j in range(2, k + 2))
    return out


def beta_weights(g: Series, count: int | None = None) -> list[Coeff]:
    """Weights of the factorization with the type-1 factor innermost."""
    _require_normalized(g)
    n = g.order - 1 if count is None else count
    if n > g.order - 1:
        raise InsufficientOrder("%d weights need series order %d, have %d"
                                % (n, n + 1, g.order))
    cur = g
    out: list[Coeff] = []
    for k in range(1, n + 1):
        b = cur.coeff(k + 1)
        out.append(b)
        if k < n:
            # remainder = cur(wbar_k(x)): the innermost factor comes off first
            cur = cur.compose(factor_series(k, -b, cur.order))
            assert all(cur.coeff(j) == 0 for j in range(2, k + 2))
    return out


def from_alpha(weights: Sequence[Coeff], order: int) -> Series:
    """Recompose g(x) = w1(w2(w3(...))) from type-k weights w_k."""
    cur = Series.x(order)
    for k, w in enumerate(weights, start=1):
        if k + 1 > order:
            break  # deeper factors cannot touch coefficients up to x^order
        cur = cur.compose(factor_series(k, w, order))
    return cur


def from_beta(weights: Sequence[Coeff], order: int) -> Series:
    """Recompose g(x) = ...w3(w2(w1(x))) from type-k weights w_k."""
    cur = Series.x(order)
    for k, w in enumerate(weights, start=1):
        if k + 1 > order:
            break
        cur = factor_series(k, w, order).compose(cur)
    return cur


def weights_to_series(weights: Sequence[Coeff], order: int | None = None) -> Series:
    """Pack a weight list [w1, w2, ...] into the series sum_k w_k x^{k+1}."""
    n = len(weights) + 1 if order is None else order
    return Series([0, 0] + list(weights), n)


def series_to_weights(s: Series) -> list[Coeff]:
    """Unpack sum_k w_k x^{k+1} back into [w1, w2, ...]."""
    assert s.coeff(0) == 0 and s.coeff(1) == 0
    return [s.coeff(k + 1) for k in range(1, s.order)]


def alpha_series(g: Series) -> Series:
    """The alpha weights as the series sum_k a_k x^{k+1} (order of g kept)."""
    return weights_to_series(alpha_weights(g), g.order)


def beta_series(g: Series) -> Series:
    """The beta weights as the series sum_k b_k x^{k+1} (order of g kept)."""
    return weights_to_series(beta_weights(g), g.order)


# ─────────────────────────────────────────────────────────────────────────────
# The substitution matrix, its logarithm, and the flow
# ─────────────────────────────────────────────────────────────────────────────

def substitution_matrix(g: Series, size: int) -> TriMatrix:
    """Triangular matrix of (1, g): entry (n, m) = [x^n] g**m."""
    _require_normalized(g)
    if size - 1 > g.order:
        raise InsufficientOrder("%d rows need series order %d, have %d"
                                % (size, size - 1, g.order))
    rows: list[list[Coeff]] = [[0] * (r + 1) for r in range(size)]
    col = Series.one(g.order)
    for m in range(size):
        for r in range(m, size):
            rows[r][m] = col.coeff(r)
        if m < size - 1:
            col = col * g
    return TriMatrix(rows)


def log_generator(g: Series) -> Series:
    """The generator omega of the substitution flow of (1, g).

    log(1, g) acts on series as a(x) -> omega(x) * a'(x) for a single series
    omega(x) = sum_{j>=1} omega_j x^{j+1}, read off the first column of the
    matrix logarithm.  It satisfies omega(g(x)) = omega(x) * g'(x).
    """
    _require_normalized(g)
    lg = substitution_matrix(g, g.order + 1).log()
    coeffs: list[Coeff] = [0, 0]
    for j in range(1, g.order):
        coeffs.append(lg.entry(j + 1, 1))
    return Series(coeffs, g.order)


def log_structure_check(g: Series) -> bool:
    """Is every entry of log(1, g) the rescaled generator, (n, m) -> m * omega_{n-m}?"""
    om = log_generator(g)
    lg = substitution_matrix(g, g.order + 1).log()
    for n in range(lg.size):
        for m in range(n + 1):
            want = m * om.coeff(n - m + 1) if n > m else 0
            if lg.entry(n, m) != want:
                return False
    return True


def log_generator_equation_check(g: Series) -> bool:
    """Does omega(g(x)) = omega(x) * g'(x) hold through the stored order?"""
    om = log_generator(g)
    return om.compose(g).agrees(om * g.deriv(), g.order - 1)


def substitution_power(g: Series, t: Coeff, order: int | None = None) -> Series:
    """The inner series of (1, g)**t by the binomial matrix power.

    Integer t reproduces iterated composition and reversion; rational or
    Poly t interpolates them.
    """
    _require_normalized(g)
    n = g.order if order is None else order
    mt = substitution_matrix(g, n + 1).pow_binomial(t)
    coeffs: list[Coeff] = [0]
    for r in range(1, n + 1):
        coeffs.append(mt.entry(r, 1))
    return Series(coeffs, n)


def substitution_power_lie(g: Series, t: Coeff, order: int | None = None) -> Series:
    """The same flow image out of the generator alone.

    Iterating a(x) -> omega(x) * a'(x) on x and summing t^j / j! of the
    iterates gives (1, g)**t applied to x.  Every derivative spends one
    order of precision, so the result order is at most half the input's.
    """
    n = g.order // 2 if order is None else order
    if g.order < 2 * n:
        raise InsufficientOrder("output order %d needs input order %d, have %d"
                                % (n, 2 * n, g.order))
    om = log_generator(g)
    term = Series.x(g.order)
    out = term.truncate(n)
    scale: Coeff = 1
    for j in range(1, n + 1):
        term = om * term.deriv()
        scale = scale * t / Fraction(j)
        out = out + term.truncate(n) * scale
    return out


def composition_poly(g: Series, n: int, param: str = "t") -> Poly:
    """[x^n] of the flow image of x as a polynomial in the flow parameter."""
    if n > g.order:
        raise InsufficientOrder("coefficient %d outside order %d" % (n, g.order))
    c = substitution_power(g, Poly.var(param), n).coeff(n)
    return c if isinstance(c, Poly) else Poly.const(param, c)


# ─────────────────────────────────────────────────────────────────────────────
# Interpolating polynomials for [x^n] (g/x)**z
# ─────────────────────────────────────────────────────────────────────────────

def s_poly(g: Series, n: int, param: str = "z") -> Poly:
    """[x^n] (g/x)**z as a polynomial in z (the definitional route)."""
    _require_normalized(g)
    if n > g.order - 1:
        raise InsufficientOrder("coefficient %d needs series order %d, have %d"
                                % (n, n + 1, g.order))
    c = g.div_x(1).pow_param(param).coeff(n)
    return c if isinstance(c, Poly) else Poly.const(param, c)


def _s_ordered(weights: Sequence[Coeff], n: int, z: Coeff, descending: bool) -> Coeff:
    if n == 0:
        return z * 0 + 1
    if n > len(weights):
        raise InsufficientOrder("need %d weights, have %d" % (n, len(weights)))
    total: Coeff = 0
    for partition in partitions(n):
        comp = partition[::-1] if descending else partition
        term: Coeff = 1
        run = 0
        for part in comp:
            term = term * (z + run)
            run += part
        for part, mult in Counter(comp).items():
            term = term * weights[part - 1] ** mult / Fraction(factorial(mult))
        total = total + term
    return total


def s_alpha_poly(weights: Sequence[Coeff], n: int, z: Coeff | None = None) -> Coeff:
    """[x^n] (g/x)**z out of the alpha weights.

    Each partition of n, read as its ascending composition i1 <= ... <= im,
    contributes z (z+i1) (z+i1+i2) ... (z+i1+...+i_{m-1}) times the weight
    monomial prod w_i^{m_i} / m_i!.
    """
    return _s_ordered(weights, n, Poly.var("z") if z is None else z, False)


def s_beta_poly(weights: Sequence[Coeff], n: int, z: Coeff | None = None) -> Coeff:
    """[x^n] (g/x)**z out of the beta weights (descending compositions)."""
    return _s_ordered(weights, n, Poly.var("z") if z is None else z, True)


def s_omega_poly(weights: Sequence[Coeff], n: int, z: Coeff = 1,
                 t: Coeff | None = None) -> Coeff:
    """Coefficients of (flow image / x)**z out of the generator weights.

    Every ordered composition n = i1 + ... + im contributes

        t^m / m! * z (z+i1) ... (z+i1+...+i_{m-1}) * w_{i1} w_{i2} ... w_{im}.

    At t = 1 this reduces to the plain interpolating polynomial in z; at
    z = 1 it is the coefficient of x^{n+1} in the flow image of x.  Pass at
    most one of z, t symbolically.
    """
    if t is None:
        t = Poly.var("t")
    if n == 0:
        return t * 0 + z * 0 + 1
    if n > len(weights):
        raise InsufficientOrder("need %d weights, have %d" % (n, len(weights)))
    total: Coeff = 0
    for m in range(1, n + 1):
        for comp in compositions(n, m):
            term: Coeff = 1
            run = 0
            for part in comp:
                term = term * (z + run)
                run += part
                term = term * weights[part - 1]
            total = total + term * t ** m / Fraction(factorial(m))
    return total


# ─────────────────────────────────────────────────────────────────────────────
# Deformed families and the identities connecting everything
# ─────────────────────────────────────────────────────────────────────────────

def family_alpha(g: Series, t: Coeff, order: int | None = None) -> Series:
    """Deform g by scaling every alpha weight by t (t = 1 gives back g)."""
    n = g.order if order is None else order
    if n > g.order:
        raise InsufficientOrder("order %d exceeds input order %d" % (n, g.order))
    return from_alpha([w * t for w in alpha_weights(g)], n)


def family_beta(g: Series, t: Coeff, order: int | None = None) -> Series:
    """Deform g by scaling every beta weight by t."""
    n = g.order if order is None else order
    if n > g.order:
        raise InsufficientOrder("order %d exceeds input order %d" % (n, g.order))
    return from_beta([w * t for w in beta_weights(g)], n)


def inverse_weights_check(g: Series) -> bool:
    """Reversion exchanges the two weight systems and flips every sign."""
    gbar = g.revert()
    return (alpha_weights(gbar) == [-w for w in beta_weights(g)] and
            beta_weights(gbar) == [-w for w in alpha_weights(g)])


def family_inverse_check(g: Series, t: Coeff) -> bool:
    """Reversion carries each deformed family onto the mirrored family of
    the reverted series, at the same deformation parameter."""
    gbar = g.revert()
    return (family_alpha(g, t).revert() == family_beta(gbar, t) and
            family_beta(g, t).revert() == family_alpha(gbar, t))


def split_identity_check(g: Series, t: Coeff) -> bool:
    """Composing the beta deformation at 1-t after the alpha deformation at
    t restores g: the type-1 weights add back up while the deeper factors
    pass each other untouched."""
    return family_beta(g, 1 - t).compose(family_alpha(g, t)) == g


def involution_split_check(g: Series) -> bool:
    """Both deformations at t = -1, composed, give the double inverse
    iterate of g; starting from the reverted series gives g(g(x))."""
    gbar = g.revert()
    lhs = family_alpha(g, -1).compose(family_beta(g, -1))
    if lhs != gbar.compose(gbar) or lhs != substitution_power(g, -2):
        return False
    lhs = family_alpha(gbar, -1).compose(family_beta(gbar, -1))
    return lhs == g.compose(g) and lhs == substitution_power(g, 2)


def lagrange_pair_check(weights: Sequence[Coeff], n: int) -> bool:
    """The two ordered interpolations with negated weights are exchanged by
    the substitution z -> -z-n up to the factor z/(z+n), in both directions."""
    z = Poly.var("z")
    shifted = Poly("z", (-n, -1))
    neg = [-w for w in weights]
    if z * s_alpha_poly(weights, n, shifted) != (z + n) * s_beta_poly(neg, n, z):
        return False
    return z * s_beta_poly(weights, n, shifted) == (z + n) * s_alpha_poly(neg, n, z)


def derivative_relations_report(g: Series) -> dict[str, bool]:
    """Flow-parameter derivatives of the deformed families, relation by
    relation.

    At t = 0 the families move along the weight series (negated weight
    series for the reverted input); those four relations are exact.  The
    claimed t = 1 tangents -- beta(g(x)) for the alpha family and
    alpha(x) * g'(x) for the beta family -- depend on the generic split
    identity and share its finite-order obstruction, so they hold only
    through the order where the split identity itself holds.
    """
    t = Poly.var("t")
    a_ser, b_ser = alpha_series(g), beta_series(g)
    gbar = g.revert()

    def d_at(series: Series, point: int) -> Series:
        return series.map_coeffs(
            lambda c: c.deriv()(point) if isinstance(c, Poly) else 0)

    ga_t, gb_t = family_alpha(g, t), family_beta(g, t)
    return {
        "alpha_at_0": d_at(ga_t, 0) == a_ser,
        "beta_at_0": d_at(gb_t, 0) == b_ser,
        "inverse_alpha_at_0": d_at(family_alpha(gbar, t), 0) == -b_ser,
        "inverse_beta_at_0": d_at(family_beta(gbar, t), 0) == -a_ser,
        "alpha_at_1": d_at(ga_t, 1) == b_ser.compose(g),
        "beta_at_1": d_at(gb_t, 1).agrees(a_ser * g.deriv(), g.order - 1),
    }


def derivative_relations_check(g: Series) -> bool:
    """True when every relation in derivative_relations_report holds."""
    return all(derivative_relations_report(g).values())


def pseudo_involution_symmetry_check(g: Series) -> bool:
    """For a series whose reversion is -g(-x), the generator must be an even
    function and the beta weights the alternately-signed alpha weights."""
    _require_normalized(g)
    if g.revert() != -g.alternate():
        raise NotPseudoInvolution("compositional inverse is not -g(-x)")
    om = log_generator(g)
    if om.alternate() != om:
        return False
    return beta_weights(g) == [w if k % 2 == 0 else -w
                               for k, w in enumerate(alpha_weights(g))]

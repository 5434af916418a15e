"""One-parameter flow of a Bell-subgroup pair (g, xg).

The binomial power sum_n binom(phi, n) (M - I)^n interpolates the integer
powers of the pair matrix M; its column 0 is a series g^(phi) with
g^(0) = 1 and g^(1) = g.  The matrix logarithm of M concentrates all the
information in a single generator series b: log M has entry
(m+1) * b_{n-m-1} in row n, column m, with b_0 = g_1 and

    g(x)^2 * b(x*g(x)) = b(x) * (x*g(x))'.

From b one rebuilds the whole flow triangle L, whose column n is
(1/n!) (log M)^n applied to (1, 0, 0, ...) and whose row n, read as a
polynomial c_n, gives [x^n] g^(phi) = c_n(phi).  The pair is a
pseudo-involution exactly when b is even, equivalently when c_2n is even
and c_{2n+1} is odd.
"""

from fractions import Fraction
from math import factorial
from typing import List

from .combinat import compositions
from .errors import InsufficientOrder
from .riordan import RiordanPair, TriMatrix
from .series import Coeff, Poly, Series


def _bell_matrix(g: Series, size: int) -> TriMatrix:
    assert g.constant == 1, "flow is defined for g with constant term 1"
    return RiordanPair(g, g).matrix(size)


def bell_log_generator(g: Series) -> Series:
    """The series b generating the matrix logarithm of (g, xg).

    Extracted from column 0 of the logarithm, where b_k sits in row k + 1.
    """
    size = g.order + 1
    lg = _bell_matrix(g, size).log()
    return Series([lg.entry(k + 1, 0) for k in range(size - 1)],
                  max(0, size - 2))


def bell_log_structure_check(g: Series) -> bool:
    """Every entry of log(g, xg) must equal (m+1) * b_{n-m-1}."""
    size = g.order + 1
    lg = _bell_matrix(g, size).log()
    b = [lg.entry(k + 1, 0) for k in range(size - 1)]
    for n in range(size):
        for m in range(n + 1):
            want = 0 if n == m else (m + 1) * b[n - m - 1]
            if lg.entry(n, m) != want:
                return False
    return True


def generator_equation_check(g: Series) -> bool:
    """The defining identity g^2 b(xg) = b * (xg)' for the log generator."""
    b = bell_log_generator(g)
    order = b.order
    xg = g.x_mul(1).truncate(order)
    lhs = g.truncate(order) * g.truncate(order) * b.zero_extended(order).compose(xg)
    rhs = b * g.x_mul(1).deriv().truncate(order)
    return lhs == rhs


def l_matrix_from_generator(b_fun: Series, size: int) -> TriMatrix:
    """Flow triangle built by the recursion col_n = (1/n) b * (D^T col_{n-1}).

    D^T sends the coefficient a_k to (k+1) a_{k+1}-shifted position, i.e.
    (D^T a)_{k+1} = (k+1) a_k.
    """
    assert size >= 1
    if b_fun.order < size - 2:
        raise InsufficientOrder(
            "need %d generator coefficients, have %d"
            % (size - 1, b_fun.order + 1))
    b = [b_fun.coeff(k) for k in range(size)]
    cols: List[List[Coeff]] = [[1] + [0] * (size - 1)]
    for n in range(1, size):
        prev = cols[-1]
        shifted: List[Coeff] = [0] * size
        for k in range(size - 1):
            if prev[k] != 0:
                shifted[k + 1] = (k + 1) * prev[k]
        col: List[Coeff] = [0] * size
        for i in range(size):
            if b[i] == 0:
                continue
            for j in range(size - i):
                if shifted[j] != 0:
                    col[i + j] = col[i + j] + b[i] * shifted[j]
        cols.append([Fraction(1, n) * c if c != 0 else 0 for c in col])
    return TriMatrix([[cols[m][n] for m in range(n + 1)] for n in range(size)])


def l_matrix(g: Series, size: int) -> TriMatrix:
    """Flow triangle of g, via the generator extracted from log(g, xg)."""
    if g.order < size - 1:
        raise InsufficientOrder("need g through order %d" % (size - 1))
    return l_matrix_from_generator(bell_log_generator(g), size)


def l_matrix_via_log_powers(g: Series, size: int) -> TriMatrix:
    """Same triangle, built directly as columns (1/n!) (log M)^n e_0."""
    lg = _bell_matrix(g, size).log()
    cols: List[List[Coeff]] = []
    vec: List[Coeff] = [1] + [0] * (size - 1)
    cols.append(list(vec))
    for n in range(1, size):
        vec = [sum(lg.entry(i, j) * vec[j] for j in range(i + 1))
               for i in range(size)]
        cols.append([Fraction(1, factorial(n)) * v if v != 0 else 0
                     for v in vec])
    return TriMatrix([[cols[m][n] for m in range(n + 1)] for n in range(size)])


def bell_power_matrix(g: Series, phi: Coeff, size: int) -> TriMatrix:
    """The binomial power sum_n binom(phi, n) (M - I)^n of the pair matrix."""
    return _bell_matrix(g, size).pow_binomial(phi)


def bell_power_series(g: Series, phi: Coeff, order: int | None = None) -> Series:
    """g^(phi): column 0 of the binomial power of the pair matrix."""
    if order is None:
        order = g.order
    mat = bell_power_matrix(g, phi, order + 1)
    return Series([mat.entry(n, 0) for n in range(order + 1)], order)


def c_poly(g: Series, n: int, param: str = "phi") -> Poly:
    """Composition polynomial c_n: row n of the flow triangle."""
    mat = l_matrix(g, n + 1)
    return Poly(param, list(mat.rows[n]))


def c_poly_formula(b_fun: Series, n: int, param: str = "phi") -> Poly:
    """c_n from the generator, as a sum over compositions of n:

    the phi^m / m! coefficient is
    sum b_{i_1 - 1} ... b_{i_m - 1} (1 + i_1)(1 + i_1 + i_2) ...
    (1 + i_1 + ... + i_{m-1}).
    """
    return c_beta_poly_formula(b_fun, n, 1, param)


def c_beta_poly_formula(b_fun: Series, n: int, beta: Coeff,
                        param: str = "phi") -> Poly:
    """c_n(beta, phi) = [x^n] (g^(phi))^beta, the prefix products starting
    from beta instead of 1."""
    assert n >= 0
    if n == 0:
        return Poly(param, [1])
    if b_fun.order < n - 1:
        raise InsufficientOrder("need %d generator coefficients" % n)
    coeffs: List[Coeff] = [0] * (n + 1)
    for m in range(1, n + 1):
        acc: Coeff = 0
        for comp in compositions(n, parts=m):
            w: Coeff = 1
            for i in comp:
                w = w * b_fun.coeff(i - 1)
            if w == 0:
                continue
            prefix = 0
            for i in comp[:-1]:
                prefix += i
                w = w * (beta + prefix)
            acc = acc + w
        coeffs[m] = beta * acc * Fraction(1, factorial(m)) \
            if acc != 0 else 0
    return Poly(param, coeffs)


def flow_parity_check(g: Series, size: int) -> bool:
    """Pseudo-involution criterion on the flow triangle: row n of L keeps
    only powers of the same parity as n (c_2n even, c_{2n+1} odd)."""
    mat = l_matrix(g, size)
    for n in range(size):
        for m in range(n + 1):
            if (n - m) % 2 != 0 and mat.entry(n, m) != 0:
                return False
    return True


def power_matches_scaled_bfun(g: Series, phi: Fraction, upto: int) -> bool:
    """Empirical probe: does the flow member g^(phi) coincide with the member
    whose B-function is phi times the B-function of g?

    True for g solving g = 1 + x*g*B(x^2*g) with B geometric (the
    lattice-path case) and for the Pascal case B = 1; false for general B,
    so this is a check function rather than a theorem.
    """
    from .pseudo import b_from_g, g_from_b
    b = b_from_g(g.truncate(upto))
    lhs = bell_power_series(g, phi, upto)
    rhs = g_from_b(b, phi, upto)
    return lhs == rhs

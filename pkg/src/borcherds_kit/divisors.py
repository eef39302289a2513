"""Formal special-divisor bookkeeping in the rational Picard group.

DivisorExpr is a finite rational combination of symbols Z(m, mu) with m > 0
together with the tautological line-bundle symbol omega.  The constant-term
conventions are rewrite rules applied on entry:

    Z(0, 0)      -> -omega        (omega^{-1} as a line bundle)
    Z(0, mu!=0)  -> 0
    Z(m<0, mu)   -> 0

Everything downstream (relations, the pullback convolution, the embedding
trick, the modularity pairing) is exact linear algebra over these symbols.
"""

import math
from fractions import Fraction

from .forms import divide_by_24delta
from .lattice import coset_theta, theta_series
from .product import PrecisionError
from .qseries import delta_series

OMEGA = "omega"


class DivisorExpr:
    """A finite rational linear combination of Z(m, mu) symbols and omega."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                self._accumulate(key, Fraction(coeff))

    def _accumulate(self, key, coeff):
        if coeff == 0:
            return
        if key != OMEGA:
            m, mu = key
            m = Fraction(m)
            mu = tuple(int(x) for x in mu)
            if m < 0:
                return
            if m == 0:
                if any(mu):
                    return
                self._accumulate(OMEGA, -coeff)
                return
            key = (m, mu)
        self.terms[key] = self.terms.get(key, Fraction(0)) + coeff
        if self.terms[key] == 0:
            del self.terms[key]

    @classmethod
    def z(cls, m, mu=(), coeff=1):
        out = cls()
        out._accumulate((m, tuple(mu)), Fraction(coeff))
        return out

    @classmethod
    def omega(cls, coeff=1):
        out = cls()
        out._accumulate(OMEGA, Fraction(coeff))
        return out

    def __add__(self, other):
        out = DivisorExpr()
        out.terms = dict(self.terms)
        for key, coeff in other.terms.items():
            out.terms[key] = out.terms.get(key, Fraction(0)) + coeff
            if out.terms[key] == 0:
                del out.terms[key]
        return out

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        out = DivisorExpr()
        if scalar:
            out.terms = {k: v * scalar for k, v in self.terms.items()}
        return out

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __eq__(self, other):
        if not isinstance(other, DivisorExpr):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def coefficient(self, key):
        if key != OMEGA:
            key = (Fraction(key[0]), tuple(key[1]))
        return self.terms.get(key, Fraction(0))

    def sorted_items(self):
        def sort_key(item):
            key, _ = item
            if key == OMEGA:
                return (1,)
            return (0, key[0], key[1])
        return sorted(self.terms.items(), key=sort_key)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_items():
            if key == OMEGA:
                parts.append(f"{coeff} * omega")
            else:
                m, mu = key
                parts.append(f"{coeff} * Z({m}, {list(mu)})")
        return " + ".join(parts)


def borcherds_relation(form):
    """The Picard-group relation attached to an integral form:

        sum over m > 0, mu of c(-m, mu) Z(m, mu)  minus  c(0, 0) omega,

    the combination asserted to vanish rationally.
    """
    from .weil import is_integral
    if not is_integral(form):
        raise ValueError("relations require an integral form")
    out = DivisorExpr()
    for (m, mu), c in form.principal_part().items():
        out._accumulate((-m, mu), c)
    out._accumulate(OMEGA, -form.coefficient(0, form.disc.zero))
    return out


class DirectSumSplit:
    """Coset identification for V-hat = V + Lambda with both factors explicit.

    Cosets of D(V-hat) are pairs (mu1, mu2); the pullback convolution needs,
    for a given target coset, the list of compatible (mu1, mu2) pairs.
    """

    def __init__(self, disc_v, disc_lambda):
        self.disc_v = disc_v
        self.disc_lambda = disc_lambda

    def pairs(self, mu):
        """All (mu1, mu2) with mu1 + mu2 equal to the given coset pair."""
        mu1, mu2 = mu
        return [(self.disc_v.normalize(mu1), self.disc_lambda.normalize(mu2))]


def pullback(m, mu, lam, split):
    """Pull a big-lattice divisor symbol back along V -> V + Lambda:

        Z(m, mu) restricts to  sum over m1 + m2 = m, mu1 + mu2 in mu of
        r_Lambda(m2, mu2) * Z(m1, mu1),

    with the m1 = 0 terms rewritten by the constant-term conventions.  The
    inner sum is finite: m2 runs over values of Q on dual cosets of Lambda
    inside [0, m].
    """
    m = Fraction(m)
    if m < 0:
        return DivisorExpr()
    out = DivisorExpr()
    disc_l = lam.discriminant_form() if lam.rank else None
    for mu1, mu2 in split.pairs(mu):
        if lam.rank == 0:
            if m >= 0 and not any(mu2):
                out._accumulate((m, mu1), 1)
            continue
        if any(mu2):
            theta = coset_theta(lam, disc_l.rep(mu2), math.ceil(m))
        else:
            theta = theta_series(lam, math.ceil(m))
        for m2, count in sorted(theta.coeffs.items()):
            if m2 <= m:
                out._accumulate((m - m2, mu1), count)
    return out


def pullback_expr(expr, lam, split, lift_coset):
    """Pull back a whole DivisorExpr; omega restricts to omega.

    lift_coset maps a big-lattice coset (as stored in expr) to the split
    form used by `pullback`.
    """
    out = DivisorExpr()
    for key, coeff in expr.terms.items():
        if key == OMEGA:
            out._accumulate(OMEGA, coeff)
        else:
            m, mu = key
            out = out + pullback(m, lift_coset(mu), lam, split) * coeff
    return out


class EmbeddingData:
    """The two rank-24 positive-definite unimodular partners of the trick.

    Their theta series differ by 24 Delta; the construction refuses to
    proceed when that identity fails at the working precision.
    """

    def __init__(self, lambda1, lambda2, precision=8):
        self.lambda1 = lambda1
        self.lambda2 = lambda2
        self.precision = precision
        self.theta1 = theta_series(lambda1, precision)
        self.theta2 = theta_series(lambda2, precision)
        delta = delta_series(precision)
        for n in range(precision + 1):
            lhs = self.theta2.coefficient(n) - self.theta1.coefficient(n)
            if lhs != 24 * delta.coefficient(n):
                raise ValueError("theta series of the pair do not differ by "
                                 "24 Delta; wrong lattices supplied")

    def r1(self, k):
        return int(self.theta1.coefficient(k)) if k <= self.precision else None

    def r2(self, k):
        return int(self.theta2.coefficient(k)) if k <= self.precision else None


def embedding_trick(form, embedding):
    """Derive the relation for `form` from the big-lattice relations.

    Computes g = form / (24 Delta), takes the relation of g on V + Lambda^i
    for both partners, pulls each back along the convolution, and returns the
    difference (partner 2 minus partner 1).  The result must equal
    borcherds_relation(form); the caller asserts that identity.

    `form` must be integral and pre-scaled so that g is integral too
    (multiplying by 24 always suffices).
    """
    from .weil import is_integral
    if not is_integral(form):
        raise ValueError("embedding trick requires an integral form")
    g = divide_by_24delta(form)
    if not is_integral(g):
        raise ValueError("form / (24 Delta) is not integral; rescale the "
                         "input by 24 first")
    if g.max_pole_order() >= embedding.precision:
        raise PrecisionError(
            "theta precision does not cover the principal part of form/(24 Delta)")
    relation = borcherds_relation(g)
    disc = form.disc
    split1 = DirectSumSplit(disc, embedding.lambda1.discriminant_form())
    split2 = DirectSumSplit(disc, embedding.lambda2.discriminant_form())
    zero2 = ()

    def lift(mu):
        return (mu, zero2)

    pulled1 = pullback_expr(relation, embedding.lambda1, split1, lift)
    pulled2 = pullback_expr(relation, embedding.lambda2, split2, lift)
    return pulled2 - pulled1


def fourier_splitting_holds(form, embedding, through):
    """Check c(m, mu) = sum_k r2(k) g(m-k, mu) - sum_k r1(k) g(m-k, mu)
    coefficientwise for all exponents m <= through, three ways:
    convolution sums, series products, and the original coefficients.
    """
    import math
    g = divide_by_24delta(form)
    pole = g.max_pole_order()
    if through >= g.prec or through + pole > embedding.precision:
        raise ValueError("not enough precision for the requested range")
    disc = form.disc
    for mu in disc.cosets():
        g_series = g.coset_series(mu)
        prod2 = embedding.theta2 * g_series
        prod1 = embedding.theta1 * g_series
        # exponents congruent to Q(mu) mod 1, from the deepest pole upward
        base = disc.q(mu)
        tmin = math.ceil(-pole - base)
        tmax = math.floor(Fraction(through) - base)
        for t in range(tmin, tmax + 1):
            m = base + t
            direct = form.coefficient(m, mu)
            conv = Fraction(0)
            k = 0
            while k <= m + pole:
                gm = g.coefficient(m - k, mu)
                if gm:
                    conv += (embedding.r2(k) - embedding.r1(k)) * gm
                k += 1
            series_val = prod2.coefficient(m) - prod1.coefficient(m)
            if not (direct == conv == series_val):
                return False
    return True


def modularity_pairing(form, values):
    """The obstruction pairing sum over m >= 0, mu of c(-m, mu) * a(m, mu).

    `values` maps (m, mu) to rationals or DivisorExpr; it must cover every
    (m, mu) with c(-m, mu) != 0.  The result has the same kind as the values.
    """
    needed = []
    for (m, mu), c in form.coefficients.items():
        if m <= 0 and c != 0:
            needed.append((-m, mu, c))
    result = None
    for m, mu, c in sorted(needed):
        key = (m, mu)
        if key not in values:
            raise KeyError(f"pairing needs a value at (m={m}, mu={mu})")
        term = values[key] * c
        result = term if result is None else result + term
    if result is None:
        return Fraction(0)
    return result


def relation_ideal(forms):
    """Row-reduced basis of the span of the forms' relations.

    Returns (basis, contains) where basis is a list of DivisorExpr and
    contains(expr) decides membership in the span.
    """
    relations = [borcherds_relation(f) for f in forms]
    keys = sorted({k for r in relations for k in r.terms},
                  key=lambda k: (1,) if k == OMEGA else (0, k[0], k[1]))
    rows = [[r.terms.get(k, Fraction(0)) for k in keys] for r in relations]
    basis_rows = _row_reduce(rows)
    basis = []
    for row in basis_rows:
        expr = DivisorExpr()
        expr.terms = {k: v for k, v in zip(keys, row) if v != 0}
        basis.append(expr)

    def contains(expr):
        extra = [k for k in expr.terms if k not in keys]
        if extra:
            return False
        vec = [expr.terms.get(k, Fraction(0)) for k in keys]
        for row in basis_rows:
            piv = next(i for i, x in enumerate(row) if x != 0)
            if vec[piv]:
                f = vec[piv] / row[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        return all(x == 0 for x in vec)

    return basis, contains


def _row_reduce(rows):
    rows = [list(r) for r in rows if any(r)]
    out = []
    cols = len(rows[0]) if rows else 0
    r = 0
    work = [list(r_) for r_ in rows]
    for c in range(cols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        work[r] = [x / work[r][c] for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return [row for row in work[:r]]

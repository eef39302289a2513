"""Borcherds product expansions at a zero-dimensional cusp.

The pipeline: reduce the input form to the quotient lattice, enumerate the
hyperplane arrangement cut out by its principal part, fix a Weyl chamber by
an interior point, and expand the product

    BP = prod over lattice-dual exponents x with [x, w] > 0
         prod over cosets mu reducing to the class of x
         (1 - zeta_mu q_x)^(c(-Q(x), mu))

truncated by the grading [., w].  The Weyl-vector prefactor and the cusp
constants are carried alongside, never multiplied in.
"""

from fractions import Fraction

from .cyclotomic import CycScalar, e
from .forms import WHForm
from .lattice import _qf_enumerate, coset_reduce, lift_of_coset
from .linalg import mat_vec, rational_gcd
from .qseries import LatticeQSeries, lattice_binomial


class PrecisionError(ValueError):
    """An operation needed coefficients beyond the stored precision."""


def reduce_f0(form, data):
    """The quotient-lattice form: c0(m, lam) = sum over mu ~ lam of c(m, mu)."""
    disc0 = data.disc_v0
    reduction = {}
    for mu in data.disc_v.cosets():
        reduction[mu] = coset_reduce(mu, data)
    out = {}
    for (m, mu), c in form.coefficients.items():
        lam = reduction[mu]
        if lam is None:
            continue
        key = (m, lam)
        out[key] = out.get(key, Fraction(0)) + c
    return WHForm(disc0, form.weight, out, form.prec)


def _majorant_matrix(v0, w):
    """Positive-definite matrix A with x^T A x = 2 Q(x) + [x, w]^2 / |Q(w)|."""
    qw = v0.q(w)
    if qw >= 0:
        raise ValueError("interior point must have Q(w) < 0")
    gw = mat_vec([list(r) for r in v0.gram], list(w))
    n = v0.rank
    return [[Fraction(v0.gram[i][j]) + Fraction(gw[i] * gw[j], -qw)
             for j in range(n)] for i in range(n)]


def enumerate_walls(f0, data, w, radius):
    """Wall vectors of the arrangement attached to f0's principal part.

    Returns all x in lam + V0 with Q(x) = m > 0, c0(-m, lam) != 0 and
    [x, w]^2 <= radius^2 * m * |Q(w)|, sorted lexicographically.  The
    enumeration is finite because Q plus the rank-one correction along w is
    positive definite.
    """
    v0 = data.v0
    w = tuple(Fraction(x) for x in w)
    qw = v0.q(w)
    if qw >= 0:
        raise ValueError("interior point must have Q(w) < 0")
    radius = Fraction(radius)
    a = _majorant_matrix(v0, w)
    disc0 = data.disc_v0
    walls = []
    by_coset = {}
    for (m, lam), c in f0.principal_part().items():
        if c != 0:
            by_coset.setdefault(lam, []).append(-m)
    for lam, ms in sorted(by_coset.items()):
        rep = disc0.rep(lam)
        mmax = max(ms)
        # on the wall set, 2Q(x) + [x,w]^2/|Q(w)| <= 2m + r^2 m <= (2 + r^2) mmax
        bound = (2 + radius * radius) * mmax
        for x, val in _qf_enumerate(a, rep, bound):
            qx = v0.q(x)
            if qx not in ms:
                continue
            pair = v0.bilinear(x, w)
            if pair * pair <= radius * radius * qx * (-qw):
                walls.append(x)
    walls.sort()
    return walls


class WeylChamber:
    """An interior point off every enumerated wall, plus the wall signs."""

    def __init__(self, w, wall_signs, radius):
        self.w = tuple(Fraction(x) for x in w)
        self.wall_signs = dict(wall_signs)
        self.radius = Fraction(radius)

    def __repr__(self):
        return f"WeylChamber(w={self.w}, {len(self.wall_signs)} walls)"


def chamber_of(w, f0, data, radius=2):
    """The chamber data of an interior point: the sign of [x, w] per wall.

    Raises when w lies on one of the enumerated walls; the caller must
    perturb and retry.
    """
    v0 = data.v0
    w = tuple(Fraction(x) for x in w)
    signs = {}
    for x in enumerate_walls(f0, data, w, radius):
        s = v0.bilinear(x, w)
        if s == 0:
            raise ValueError(f"chamber point lies on the wall through {x}")
        signs[x] = 1 if s > 0 else -1
    return WeylChamber(w, signs, radius)


def constant_a(form, data):
    """The cusp constant prod over nonzero x mod N of (1 - e(x/N))^c(0, x ell/N).

    Equals 1 whenever N = 1 (the empty product), in particular for maximal
    lattices.
    """
    n_val = data.n_value
    if n_val == 1:
        return CycScalar.from_rational(1)
    disc = data.disc_v
    result = CycScalar.from_rational(1)
    for x in range(1, n_val):
        vec = tuple(Fraction(x * li, n_val) for li in data.ell)
        coset = disc.coset_of_dual(vec)
        expo = form.coefficient(0, coset)
        if expo.denominator != 1:
            raise ValueError("constant-A exponents must be integers")
        base = CycScalar.from_rational(1) - e(Fraction(x, n_val))
        result = result * base ** int(expo)
    return result


def zeta_mu(mu, data):
    """The root of unity e([lift(mu), k]); 1 whenever k is integral."""
    lifted = lift_of_coset(mu, data)
    if lifted is None:
        raise ValueError("coset admits no lift into ell-perp")
    val = sum(Fraction(a) * b for a, b in
              zip(mat_vec([list(r) for r in data.lattice.gram], list(lifted)),
                  data.k))
    return e(val)


def check_weyl_integrality(rho, data):
    """True when rho lies in the dual of the quotient lattice V0."""
    v0 = data.v0
    if len(rho) != v0.rank:
        return False
    image = mat_vec([list(r) for r in v0.gram], [Fraction(x) for x in rho])
    return all(Fraction(x).denominator == 1 for x in image)


class ProductExpansion:
    """A truncated Borcherds product: series body, Weyl exponent, constants.

    body is graded by [., w] with constant term 1; the prefactor q_rho and
    the constant A are stored, not multiplied in, since rho may have
    nonpositive grading.  weight_out records c(0, 0).
    """

    def __init__(self, body, weyl_exponent, constant, weight_out, skipped=0):
        self.body = body
        self.weyl_exponent = tuple(Fraction(x) for x in weyl_exponent)
        self.constant = constant
        self.weight_out = weight_out
        self.skipped = skipped

    @property
    def cutoff(self):
        return self.body.cutoff

    def shifted_coefficients(self):
        """Map (rho + alpha) -> coefficient, the expansion of q_rho * BP."""
        out = {}
        for alpha, c in self.body.coeffs.items():
            key = tuple(a + b for a, b in zip(self.weyl_exponent, alpha))
            out[key] = c
        return out

    def truncate(self, cutoff):
        return ProductExpansion(self.body.truncate(cutoff), self.weyl_exponent,
                                self.constant, self.weight_out, self.skipped)

    def __repr__(self):
        return (f"ProductExpansion({len(self.body.coeffs)} terms, "
                f"cutoff={self.cutoff}, weight={self.weight_out})")


def product_expand(form, data, chamber, weyl_vector, cutoff):
    """The truncated product expansion of an integral form at the cusp.

    `cutoff` is measured in units of the smallest positive grading value of
    the exponent lattice: terms with [alpha, w] <= cutoff * g_min are kept.
    """
    from .weil import is_integral
    if not is_integral(form):
        raise ValueError("product expansion requires an integral form")
    weyl_vector = tuple(Fraction(x) for x in weyl_vector)
    if not check_weyl_integrality(weyl_vector, data):
        raise ValueError("Weyl vector must lie in the dual exponent lattice")
    v0 = data.v0
    w = chamber.w
    qw = v0.q(w)
    if qw >= 0:
        raise ValueError("chamber point must have Q(w) < 0")
    for x, sign in chamber.wall_signs.items():
        s = v0.bilinear(x, w)
        if s == 0 or (1 if s > 0 else -1) != sign:
            raise ValueError("chamber data is inconsistent with its interior point")

    g_min = rational_gcd(w)
    cutoff_abs = Fraction(cutoff) * g_min
    body = LatticeQSeries.one(v0, w, cutoff_abs)
    if not form.coefficients:
        return ProductExpansion(body, weyl_vector, constant_a(form, data),
                                _weight_out(form))
    tail_needed = cutoff_abs * cutoff_abs / (4 * (-qw))
    if form.prec <= tail_needed:
        raise PrecisionError(
            f"form precision {form.prec} cannot cover tail exponents up to "
            f"{tail_needed} demanded by the grading cutoff")

    # cosets of D(V) grouped by their V0 reduction, with their root of unity
    disc = data.disc_v
    by_lam = {}
    for mu in disc.cosets():
        lam = coset_reduce(mu, data)
        if lam is None:
            continue
        z = zeta_mu(mu, data)
        zr = z.try_rational()
        by_lam.setdefault(lam, []).append((mu, zr if zr is not None else z))

    max_pole = form.max_pole_order()

    a = _majorant_matrix(v0, w)
    bound = 2 * max_pole + cutoff_abs * cutoff_abs / (-qw)
    disc0 = data.disc_v0
    factors = []
    skipped = 0
    for lam in sorted(by_lam):
        rep = disc0.rep(lam)
        for x, _ in _qf_enumerate(a, rep, bound):
            g = v0.bilinear(x, w)
            if g <= 0 or g > cutoff_abs:
                continue
            qx = v0.q(x)
            if -qx >= form.prec:
                raise PrecisionError("enumerated exponent needs a coefficient "
                                     "beyond the form's precision")
            for mu, zeta in by_lam[lam]:
                c = form.coefficient(-qx, mu)
                if c == 0:
                    skipped += 1
                    continue
                if c.denominator != 1:
                    raise ValueError("product exponents must be integers")
                factors.append((x, mu, zeta, int(c)))
    factors.sort(key=lambda f: (f[0], f[1]))
    for x, _, zeta, expo in factors:
        body = body * lattice_binomial(v0, w, cutoff_abs, x, zeta, expo)
    return ProductExpansion(body, weyl_vector, constant_a(form, data),
                            _weight_out(form), skipped)


def _weight_out(form):
    c00 = form.coefficient(0, form.disc.zero)
    if c00.denominator != 1:
        raise ValueError("c(0, 0) must be an integer")
    return int(c00)

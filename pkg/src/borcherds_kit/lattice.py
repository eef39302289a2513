"""Integral quadratic lattices: discriminant forms, enumeration, cusp data.

A lattice is given by an even symmetric Gram matrix G; the quadratic form is
Q(x) = x^T G x / 2 and the bilinear form [x, y] = x^T G y, so that
[x, y] = Q(x+y) - Q(x) - Q(y).  All arithmetic is exact.
"""

import itertools
import warnings
from fractions import Fraction
from math import gcd, lcm

from .linalg import (
    det_int,
    hermite_normal_form,
    invert_rational,
    kernel_basis,
    ldl_decomposition,
    lll_reduce_gram,
    mat_mul,
    mat_vec,
    signature,
    smith_normal_form,
    solve_int,
    solve_rational,
    transpose,
)

ISOTROPIC_SEARCH_BUDGET = 2_000_000


class GramLattice:
    """An integral lattice with even Gram matrix, as an immutable value."""

    __slots__ = ("rank", "gram", "name", "glue", "_det", "_sig", "_disc")

    def __init__(self, gram, name=None, glue=None):
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        rank = len(gram)
        for i, row in enumerate(gram):
            if len(row) != rank:
                raise ValueError("gram matrix must be square")
            if row[i] % 2 != 0:
                raise ValueError("gram diagonal must be even (Q must be Z-valued)")
            for j in range(rank):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "glue", glue)
        object.__setattr__(self, "_det", None)
        object.__setattr__(self, "_sig", None)
        object.__setattr__(self, "_disc", None)
        if self.det == 0:
            raise ValueError("gram matrix must be nonsingular")

    def __setattr__(self, *_):
        raise AttributeError("GramLattice is immutable")

    def __eq__(self, other):
        if not isinstance(other, GramLattice):
            return NotImplemented
        return self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"GramLattice({label}, det={self.det})"

    @property
    def det(self):
        if self._det is None:
            object.__setattr__(self, "_det", det_int(self.gram))
        return self._det

    @property
    def signature_pair(self):
        if self._sig is None:
            if self.rank == 0:
                object.__setattr__(self, "_sig", (0, 0))
            else:
                object.__setattr__(self, "_sig", signature(self.gram))
        return self._sig

    @property
    def is_positive_definite(self):
        return self.signature_pair == (self.rank, 0) if self.rank else True

    def q(self, x):
        """Q(x) = x^T G x / 2 for a rational coordinate vector."""
        if len(x) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(x)}")
        total = 0
        for i, row in enumerate(self.gram):
            for j, g in enumerate(row):
                if g:
                    total += x[i] * g * x[j]
        return Fraction(total, 2)

    def bilinear(self, x, y):
        """[x, y] = x^T G y = Q(x+y) - Q(x) - Q(y)."""
        if len(x) != self.rank or len(y) != self.rank:
            raise ValueError("dimension mismatch")
        total = 0
        for i, row in enumerate(self.gram):
            if x[i]:
                for j, g in enumerate(row):
                    if g:
                        total += x[i] * g * y[j]
        return Fraction(total)

    def discriminant_form(self):
        if self._disc is None:
            object.__setattr__(self, "_disc", DiscriminantForm(self))
        return self._disc


def quadratic_value(lattice, x):
    """Q(x) for a rational coordinate vector x on the given lattice."""
    return lattice.q(x)


class DiscriminantForm:
    """The finite quadratic group L^dual / L with Q taking values in Q/Z.

    Cosets are normalized coordinate tuples with respect to generators of
    orders given by the invariant factors (each > 1).
    """

    def __init__(self, lattice):
        if lattice.det == 0:
            raise ValueError("singular gram matrix has no discriminant form")
        self.lattice = lattice
        n = lattice.rank
        if n == 0:
            self.invariant_factors = ()
            self.generators = ()
            self._vinv = ()
            self._indices = ()
            self._full_diag = ()
            self.order = 1
        else:
            d, _, v = smith_normal_form(lattice.gram)
            diag = [d[i][i] for i in range(n)]
            self._vinv = tuple(tuple(int(x) for x in row)
                               for row in _int_matrix(invert_rational(v)))
            self._indices = tuple(i for i in range(n) if diag[i] > 1)
            self._full_diag = tuple(diag)
            self.invariant_factors = tuple(diag[i] for i in self._indices)
            vt = transpose(v)
            self.generators = tuple(
                tuple(Fraction(vt[i][j], diag[i]) for j in range(n))
                for i in self._indices)
            self.order = 1
            for f in diag:
                self.order *= f
        if self.order != abs(lattice.det):
            raise AssertionError("discriminant group order must equal |det|")
        self.signature_mod8 = (lattice.signature_pair[0] - lattice.signature_pair[1]) % 8
        self._diag = None

    @property
    def zero(self):
        return (0,) * len(self.invariant_factors)

    def cosets(self):
        """All cosets in a fixed lexicographic order."""
        return itertools.product(*(range(f) for f in self.invariant_factors))

    def rep(self, coset):
        """A dual-vector representative of the coset, rational coordinates."""
        coset = self.normalize(coset)
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for a, g in zip(coset, self.generators):
            if a:
                for j in range(n):
                    out[j] += a * g[j]
        return tuple(out)

    def normalize(self, coset):
        if len(coset) != len(self.invariant_factors):
            raise ValueError("coset tuple has wrong length")
        return tuple(int(a) % f for a, f in zip(coset, self.invariant_factors))

    def add(self, c1, c2):
        return tuple((a + b) % f for a, b, f in
                     zip(self.normalize(c1), self.normalize(c2), self.invariant_factors))

    def neg(self, coset):
        return tuple((-a) % f for a, f in
                     zip(self.normalize(coset), self.invariant_factors))

    def q(self, coset):
        """Q(mu) mod 1, as a Fraction in [0, 1)."""
        return _mod1(self.lattice.q(self.rep(coset)))

    def pairing(self, c1, c2):
        """[mu, nu] mod 1, as a Fraction in [0, 1)."""
        return _mod1(self.lattice.bilinear(self.rep(c1), self.rep(c2)))

    @property
    def q_values(self):
        if self._diag is None:
            self._diag = {c: self.q(c) for c in self.cosets()}
        return self._diag

    def coset_of_dual(self, y):
        """The coset of a dual vector y (raises when y is not in the dual lattice)."""
        n = self.lattice.rank
        if len(y) != n:
            raise ValueError("dimension mismatch")
        gy = mat_vec([list(r) for r in self.lattice.gram], list(y))
        for val in gy:
            if Fraction(val).denominator != 1:
                raise ValueError("vector is not in the dual lattice")
        if n == 0:
            return ()
        # y = sum_i m_i * (column i of V) / d_i  with  m = D V^{-1} y
        vy = mat_vec([list(r) for r in self._vinv], list(y))
        coords = []
        for i in self._indices:
            mi = Fraction(vy[i]) * self._full_diag[i]
            if mi.denominator != 1:
                raise ValueError("vector is not in the dual lattice")
            coords.append(int(mi) % self._full_diag[i])
        return tuple(coords)

    def __repr__(self):
        if not self.invariant_factors:
            return "DiscriminantForm(trivial)"
        parts = " x ".join(f"Z/{f}" for f in self.invariant_factors)
        return f"DiscriminantForm({parts})"


def _mod1(x):
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def _int_matrix(m):
    out = []
    for row in m:
        new = []
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                raise ValueError("expected an integer matrix")
            new.append(int(f))
        out.append(new)
    return out


def discriminant_form(lattice):
    """The finite quadratic module L^dual / L."""
    return lattice.discriminant_form()


def is_maximal(lattice):
    """True when the discriminant form is anisotropic (no nonzero isotropic coset).

    For a Z-valued lattice this is equivalent to maximality: an isotropic
    coset is exactly a glue vector generating a Z-valued overlattice.
    """
    return _isotropic_coset(lattice) is None


def _isotropic_coset(lattice):
    d = lattice.discriminant_form()
    zero = d.zero
    for c in d.cosets():
        if c != zero and d.q(c) == 0:
            return c
    return None


def overlattice_witness(lattice):
    """For a non-maximal lattice, a proper Z-valued overlattice.

    Returns (coset, overlattice) where coset is an isotropic glue vector and
    the overlattice is L + Z*rep(coset) with its (even, integral) Gram matrix.
    Returns None when the lattice is maximal.
    """
    c = _isotropic_coset(lattice)
    if c is None:
        return None
    rep = lattice.discriminant_form().rep(c)
    over = _overlattice(lattice, [rep])
    if abs(over.det) >= abs(lattice.det):
        raise AssertionError("witness did not enlarge the lattice")
    return c, over


def _overlattice(lattice, glue_vectors, name=None, glue=None):
    """The lattice generated by L and the given rational glue vectors."""
    n = lattice.rank
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows += [[Fraction(x) for x in v] for v in glue_vectors]
    den = lcm(*(x.denominator for row in rows for x in row))
    int_rows = [[int(x * den) for x in row] for row in rows]
    h = hermite_normal_form(int_rows)
    if len(h) != n:
        raise ValueError("glue vectors do not span a full-rank lattice")
    basis = [[Fraction(x, den) for x in row] for row in h]
    gram = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            val = sum(basis[i][a] * lattice.gram[a][b] * basis[j][b]
                      for a in range(n) for b in range(n))
            if val.denominator != 1:
                raise ValueError("glue vectors do not give an integral lattice")
            gram[i][j] = int(val)
    return GramLattice(gram, name=name, glue=glue)


def direct_sum(lattices, name=None):
    """Orthogonal direct sum, Gram matrices along the block diagonal."""
    n = sum(l.rank for l in lattices)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for l in lattices:
        for i in range(l.rank):
            for j in range(l.rank):
                gram[off + i][off + j] = l.gram[i][j]
        off += l.rank
    return GramLattice(gram, name=name)


# ---------------------------------------------------------------------------
# short vector enumeration
# ---------------------------------------------------------------------------

def _qf_prepare(a, shift):
    """Scaled-integer Fincke-Pohst data for y = shift + x, value y^T a y."""
    from math import isqrt  # noqa: F401  (re-exported via closure users)
    n = len(a)
    if shift is None:
        shift = [Fraction(0)] * n
    shift = [Fraction(x) for x in shift]

    if n >= 3:
        a_red, t = lll_reduce_gram(a)
        t_t = transpose(t)
        shift_red = solve_rational(t_t, shift)
    else:
        a_red = [[Fraction(x) for x in row] for row in a]
        t_t = None
        shift_red = shift

    d, lmat = ldl_decomposition(a_red)
    consts = []
    for i in range(n):
        c = shift_red[i]
        for j in range(i + 1, n):
            c += lmat[i][j] * shift_red[j]
        consts.append(c)
    scales = []
    lint = []
    cint = []
    for i in range(n):
        s = lcm(consts[i].denominator,
                *(lmat[i][j].denominator for j in range(i + 1, n)))
        scales.append(s)
        lint.append([int(lmat[i][j] * s) for j in range(n)])
        cint.append(int(consts[i] * s))
    zden = 1
    for i in range(n):
        zden = lcm(zden, d[i].denominator * scales[i] * scales[i])
    weights = [d[i].numerator * (zden // (d[i].denominator * scales[i] * scales[i]))
               for i in range(n)]
    return t_t, shift_red, scales, lint, cint, zden, weights


def _qf_walk(a, shift, bound, on_leaf):
    """Drive the all-integer Fincke-Pohst recursion.

    Calls on_leaf(nonzero, x0, value_scaled, zden) for every solution, where
    `nonzero` is the list of (index, value) pairs at levels > 0 and x0 the
    level-0 assignment; value_scaled / zden is the exact form value.
    """
    from math import isqrt
    n = len(a)
    bound = Fraction(bound)
    if bound < 0:
        return None
    if n == 0:
        on_leaf([], 0, 0, 1)
        return None
    t_t, shift_red, scales, lint, cint, zden, weights = _qf_prepare(a, shift)
    total_budget = (bound.numerator * zden) // bound.denominator
    if total_budget < 0:
        return t_t, shift_red, zden

    nonzero = []

    def descend(level, remaining):
        w = weights[level]
        s = scales[level]
        row = lint[level]
        sk = cint[level]
        for j, xj in nonzero:
            sk += row[j] * xj
        froot = isqrt(remaining // w)
        lo = -((sk + froot) // s)
        hi = (froot - sk) // s
        if level == 0:
            for xv in range(lo, hi + 1):
                p = s * xv + sk
                on_leaf(nonzero, xv, total_budget - remaining + w * p * p, zden)
        else:
            for xv in range(lo, hi + 1):
                p = s * xv + sk
                rem2 = remaining - w * p * p
                if xv:
                    nonzero.append((level, xv))
                    descend(level - 1, rem2)
                    nonzero.pop()
                else:
                    descend(level - 1, rem2)

    descend(n - 1, total_budget)
    return t_t, shift_red, zden


def _qf_value_counts(a, shift, bound):
    """Map exact form value -> number of solutions, without reconstructing vectors."""
    counts = {}

    def on_leaf(nonzero, x0, used, zden):
        val = Fraction(used, zden)
        counts[val] = counts.get(val, 0) + 1

    _qf_walk(a, shift, bound, on_leaf)
    return counts


def _qf_enumerate(a, shift, bound):
    """All (y, value) with y = shift + x, x integer, y^T a y <= bound.

    Vector reconstruction through the LLL transform is done sparsely over the
    nonzero assignments, in integer arithmetic.
    """
    n = len(a)
    leaves = []

    def on_leaf(nonzero, x0, used, zden):
        leaves.append((tuple(nonzero), x0, used))

    walked = _qf_walk(a, shift, bound, on_leaf)
    if n == 0:
        return [((), Fraction(0))] if leaves else []
    if walked is None:
        return []
    t_t, shift_red, zden = walked
    if t_t is not None:
        cols = transpose(t_t)  # cols[j] = column j of t_t
        base = [sum(t_t[i][j] * shift_red[j] for j in range(n)) for i in range(n)]
    else:
        base = list(shift_red)
    out = []
    for nonzero, x0, used in leaves:
        y = list(base)
        entries = list(nonzero)
        if x0:
            entries.append((0, x0))
        for j, xj in entries:
            if t_t is not None:
                col = cols[j]
                for i in range(n):
                    y[i] += xj * col[i]
            else:
                y[j] += xj
        out.append((tuple(Fraction(v) for v in y), Fraction(used, zden)))
    return out


def vectors_below(lattice, bound, coset_rep=None):
    """All v in coset_rep + L with Q(v) <= bound, sorted lexicographically."""
    if not lattice.is_positive_definite:
        raise ValueError("enumeration requires a positive-definite lattice")
    out = [(y, val / 2) for y, val in
           _qf_enumerate([list(r) for r in lattice.gram], coset_rep,
                         2 * Fraction(bound))]
    out.sort(key=lambda pair: pair[0])
    return out


def short_vectors(lattice, m, coset_rep=None):
    """R_Lambda(m, mu) = {v in mu + L : Q(v) = m}, sorted lexicographically."""
    m = Fraction(m)
    if m < 0:
        return []
    return [v for v, val in vectors_below(lattice, m, coset_rep) if val == m]


_REP_COUNT_CACHE = {}


def representation_count(lattice, m, coset_rep=None):
    """r_Lambda(m, mu), the number of vectors of the coset with Q = m.

    Always computed by direct enumeration (so it can serve as the independent
    cross-check of the glue-code theta decomposition); counts come straight
    out of the enumeration's budget bookkeeping and are memoized.
    """
    if not lattice.is_positive_definite:
        raise ValueError("enumeration requires a positive-definite lattice")
    m = Fraction(m)
    if m < 0:
        return 0
    rep_key = tuple(Fraction(x) for x in coset_rep) if coset_rep is not None else None
    entry = _REP_COUNT_CACHE.get((lattice.gram, rep_key))
    if entry is None or entry[0] < m:
        counts = _qf_value_counts([list(r) for r in lattice.gram], coset_rep, 2 * m)
        entry = (m, {val / 2: cnt for val, cnt in counts.items()})
        _REP_COUNT_CACHE[(lattice.gram, rep_key)] = entry
    return entry[1].get(m, 0)


# ---------------------------------------------------------------------------
# theta series
# ---------------------------------------------------------------------------

_THETA_CACHE = {}


def coset_theta(lattice, coset_rep, bound):
    """Theta series of one coset: sum over v in rep + L of q^Q(v), through q^bound."""
    from .qseries import FracQSeries
    if not lattice.is_positive_definite:
        raise ValueError("theta series requires a positive-definite lattice")
    counts = _qf_value_counts([list(r) for r in lattice.gram], coset_rep,
                              2 * Fraction(bound))
    coeffs = {val / 2: c for val, c in counts.items()}
    return FracQSeries(coeffs, Fraction(bound) + 1)


def theta_series(lattice, bound):
    """Theta series of the lattice with coefficients through q^bound.

    Lattices built by `glue_lattice` are evaluated by summing coordinate-wise
    coset theta products over the glue code, which is exponentially faster
    than direct enumeration in rank 24.  Results are cached per lattice.
    """
    bound = Fraction(bound)
    cached = _THETA_CACHE.get(lattice.gram)
    if cached is not None and cached.prec >= bound + 1:
        return cached.truncate(bound + 1)
    if lattice.glue is not None:
        theta = _theta_by_glue(lattice.glue, bound)
    else:
        theta = coset_theta(lattice, None, bound)
    _THETA_CACHE[lattice.gram] = theta
    return theta


def _theta_by_glue(glue, bound):
    from .qseries import FracQSeries
    blocks = glue.blocks
    theta_cache = {}

    def block_theta(bi, coset):
        key = (blocks[bi].gram, coset)
        if key not in theta_cache:
            rep = blocks[bi].discriminant_form().rep(coset)
            theta_cache[key] = coset_theta(blocks[bi], rep, bound)
        return theta_cache[key]

    # group code words by the multiset of coset theta series they involve
    freeze_to_series = {}
    class_counts = {}
    for word in glue.words:
        keys = []
        for bi, coset in enumerate(word):
            s = block_theta(bi, coset)
            fz = (s.denominator, s.prec, tuple(sorted(s.coeffs.items())))
            freeze_to_series[fz] = s
            keys.append(fz)
        cls = tuple(sorted(keys))
        class_counts[cls] = class_counts.get(cls, 0) + 1

    total = FracQSeries.zero(Fraction(bound) + 1)
    for cls, count in class_counts.items():
        prod = None
        mult = {}
        for fz in cls:
            mult[fz] = mult.get(fz, 0) + 1
        for fz, e in mult.items():
            p = freeze_to_series[fz] ** e
            prod = p if prod is None else prod * p
        total = total + prod * count
    return total.truncate(Fraction(bound) + 1)


# ---------------------------------------------------------------------------
# glue construction
# ---------------------------------------------------------------------------

class GlueData:
    """Block decomposition and glue code of an overlattice of a direct sum."""

    __slots__ = ("blocks", "words", "generators")

    def __init__(self, blocks, words, generators):
        self.blocks = tuple(blocks)
        self.words = tuple(words)
        self.generators = tuple(generators)


def glue_lattice(blocks, generators=None, name=None, code=None):
    """Overlattice of an orthogonal block sum defined by a glue code.

    `generators` are words (one coset per block, each a coset tuple) whose
    span is the code; alternatively `code` supplies the full word set, which
    must then be a subgroup of the product of discriminant groups.  The code
    must be isotropic for the total Q mod 1; the result is an even lattice
    with |det| = prod |D_i| / |code|^2.
    """
    blocks = tuple(blocks)
    discs = [b.discriminant_form() for b in blocks]
    if (generators is None) == (code is None):
        raise ValueError("supply exactly one of generators or code")

    def normalize_word(word):
        if len(word) != len(blocks):
            raise ValueError("glue word length must match the number of blocks")
        return tuple(d.normalize(c) for d, c in zip(discs, word))

    gens = [normalize_word(w) for w in (generators if code is None else code)]
    zero_word = tuple(d.zero for d in discs)
    words = {zero_word}
    frontier = [zero_word]
    while frontier:
        w = frontier.pop()
        for g in gens:
            nw = tuple(d.add(a, b) for d, a, b in zip(discs, w, g))
            if nw not in words:
                words.add(nw)
                frontier.append(nw)
    if code is not None and words != set(gens) | {zero_word}:
        raise ValueError("glue code is not a subgroup of the product of "
                         "discriminant groups")
    for w in words:
        qtot = sum((d.q(c) for d, c in zip(discs, w)), start=Fraction(0))
        if _mod1(qtot) != 0:
            raise ValueError("glue code is not isotropic for the total Q mod 1")

    base = direct_sum(blocks)
    lifts = []
    for g in gens:
        vec = []
        for d, c in zip(discs, g):
            vec.extend(d.rep(c))
        lifts.append(vec)
    order = 1
    for d in discs:
        order *= d.order
    code_size = len(words)
    glue = GlueData(blocks, sorted(words), gens)
    lat = _overlattice(base, lifts, name=name, glue=glue)
    if abs(lat.det) * code_size * code_size != order:
        raise AssertionError("glue determinant bookkeeping failed")
    return lat


# ---------------------------------------------------------------------------
# isotropic lines and cusp data
# ---------------------------------------------------------------------------

def isotropic_line(lattice, budget=ISOTROPIC_SEARCH_BUDGET):
    """A primitive isotropic vector, or None when none exists (or is found).

    Definite lattices return None immediately.  Otherwise basis vectors with
    zero norm are tried first, then shells of bounded coordinates.  If the
    search budget runs out before the shell bound is exhausted, a warning is
    issued and None is returned.
    """
    n = lattice.rank
    if n == 0:
        return None
    pos, neg = lattice.signature_pair
    if pos == n or neg == n:
        return None
    for i in range(n):
        if lattice.gram[i][i] == 0:
            vec = tuple(int(i == j) for j in range(n))
            return vec
    bound = 4 * max(abs(x) for row in lattice.gram for x in row) * n
    visited = 0
    for shell in range(1, bound + 1):
        for x in _shell_vectors(n, shell):
            visited += 1
            if visited > budget:
                warnings.warn("isotropic search budget exhausted before the "
                              "coordinate bound; returning None", RuntimeWarning)
                return None
            if lattice.q(x) == 0:
                g = gcd(*(abs(c) for c in x))
                return tuple(c // g for c in x)
    return None


def _shell_vectors(n, s):
    """Vectors with max coordinate |.| = s, first nonzero coordinate positive."""
    for x in itertools.product(range(-s, s + 1), repeat=n):
        if max(abs(c) for c in x) != s:
            continue
        lead = next((c for c in x if c != 0), 0)
        if lead > 0:
            yield x


class CuspData:
    """Data attached to a primitive isotropic vector ell of an indefinite lattice.

    Carries N with N*Z = [L, ell], a vector k with [ell, k] = N, the isotropic
    ell_* spanning the complementary line, the quotient lattice V0 of
    (ell-perp in L) / Z*ell with its induced Gram matrix, and integer lifts of
    the V0 basis back into ell-perp.
    """

    def __init__(self, lattice, ell, n_value, k, ell_star, v0, lift_rows):
        self.lattice = lattice
        self.ell = tuple(int(x) for x in ell)
        self.n_value = n_value
        self.k = tuple(Fraction(x) for x in k)
        self.ell_star = tuple(Fraction(x) for x in ell_star)
        self.v0 = v0
        self.lift_rows = tuple(tuple(int(x) for x in row) for row in lift_rows)
        self._gl = mat_vec([list(r) for r in lattice.gram], list(self.ell))

    @property
    def disc_v(self):
        return self.lattice.discriminant_form()

    @property
    def disc_v0(self):
        return self.v0.discriminant_form()

    def lift(self, v0_coords):
        """A vector of ell-perp (rational coordinates in L) over given V0 coordinates."""
        n = self.lattice.rank
        out = [Fraction(0)] * n
        for c, row in zip(v0_coords, self.lift_rows):
            if c:
                for j in range(n):
                    out[j] += Fraction(c) * row[j]
        return tuple(out)

    def __repr__(self):
        return (f"CuspData(ell={self.ell}, N={self.n_value}, "
                f"V0=rank {self.v0.rank})")


def cusp_data(lattice, ell, k=None):
    """Cusp data for a primitive isotropic ell; optionally with an explicit k.

    N is the positive generator of [L, ell].  By default k is chosen inside L
    with [ell, k] = N (always possible); an explicit dual vector k with
    [ell, k] = N may be supplied instead.  ell_* = k - (Q(k)/N) ell, which is
    isotropic and pairs to N with ell.
    """
    n = lattice.rank
    ell = tuple(int(x) for x in ell)
    if lattice.q(ell) != 0:
        raise ValueError("ell must be isotropic")
    g = gcd(*(abs(c) for c in ell))
    if g != 1:
        raise ValueError("ell must be primitive")
    gl = mat_vec([list(r) for r in lattice.gram], list(ell))
    n_value = gcd(*(abs(v) for v in gl))
    if n_value == 0:
        raise ValueError("ell pairs to zero with the whole lattice")

    if k is None:
        k = solve_int([gl], [n_value])
        if k is None:
            raise AssertionError("no integral k with [ell, k] = N")
    else:
        k = [Fraction(x) for x in k]
        pair = sum(a * b for a, b in zip(gl, k))
        if pair != n_value:
            raise ValueError("supplied k must satisfy [ell, k] = N")
        gk = mat_vec([list(r) for r in lattice.gram], list(k))
        if any(Fraction(x).denominator != 1 for x in gk):
            raise ValueError("supplied k must lie in the dual lattice")
    qk = lattice.q(k)
    ell_star = tuple(Fraction(ki) - Fraction(qk, n_value) * li
                     for ki, li in zip(k, ell))

    kernel = kernel_basis([gl])
    coords = solve_int(transpose(kernel), list(ell))
    if coords is None:
        raise AssertionError("ell must lie in its own perp")
    # complete the coordinate vector of ell to a unimodular matrix: take
    # u with u * coords^T = e1, then rows of (u^T)^{-1} start with coords
    _, u, _ = smith_normal_form([[c] for c in coords])
    m = _int_matrix(invert_rational(transpose(u)))
    if m[0] == [-c for c in coords]:
        m[0] = [-x for x in m[0]]
    if m[0] != list(coords):
        raise AssertionError("failed to complete ell to a kernel basis")
    new_basis = mat_mul(m, kernel)
    lift_rows = new_basis[1:]
    k0 = len(lift_rows)
    gram0 = [[0] * k0 for _ in range(k0)]
    for i in range(k0):
        for j in range(k0):
            gram0[i][j] = int(sum(lift_rows[i][a] * lattice.gram[a][b] * lift_rows[j][b]
                                  for a in range(n) for b in range(n)))
    v0 = GramLattice(gram0, name=(f"{lattice.name}/cusp" if lattice.name else None))
    return CuspData(lattice, ell, n_value, k, ell_star, v0, lift_rows)


def coset_reduce(mu, data):
    """The V0 coset of a lift of mu into ell-perp, or None when no lift exists.

    mu is a coset of D(V); the lift condition is the congruence
    [rep + v, ell] = 0 with v integral, solvable exactly when N divides
    [rep, ell].
    """
    disc = data.disc_v
    rep = disc.rep(disc.normalize(mu))
    r = sum(a * b for a, b in zip(rep, data._gl))
    if Fraction(r).denominator != 1:
        raise AssertionError("[mu, ell] must be integral for a dual vector")
    r = int(r)
    if r % data.n_value != 0:
        return None
    v = solve_int([data._gl], [-r])
    lifted = tuple(a + b for a, b in zip(rep, v))
    return _project_to_v0_coset(lifted, data)


def lift_of_coset(mu, data):
    """A lift of mu into ell-perp intersect (mu + L), or None when none exists."""
    disc = data.disc_v
    rep = disc.rep(disc.normalize(mu))
    r = int(sum(a * b for a, b in zip(rep, data._gl)))
    if r % data.n_value != 0:
        return None
    v = solve_int([data._gl], [-r])
    return tuple(a + b for a, b in zip(rep, v))


def _project_to_v0_coset(vec, data):
    """Express a vector of ell-perp as c*ell + sum lambda_i b_i; return the
    V0 coset of (lambda_i)."""
    n = data.lattice.rank
    cols = [list(data.ell)] + [list(r) for r in data.lift_rows]
    sol = solve_rational(transpose(cols), list(vec))
    if sol is None:
        raise ValueError("vector does not lie in ell-perp")
    lam = sol[1:]
    return data.disc_v0.coset_of_dual(tuple(lam))

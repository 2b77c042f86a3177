"""Exact arithmetic: graded polynomials, cyclotomic scalars, rational functions in q, and
dense matrices over the rational function field.

Dense polynomials are tuples of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``()``).  Coefficients are ``int``/``Fraction`` for Q and
:class:`CyclotomicScalar` for Q(zeta_l).
"""

from fractions import Fraction
from functools import lru_cache

from .errors import InvalidInput, NonPolynomialError, RationalityError, SingularBlockError


def _q(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _div(a, b):
    if isinstance(a, CyclotomicScalar) or isinstance(b, CyclotomicScalar):
        return a / b
    if b == 0:
        raise ZeroDivisionError("division by zero")
    return _q(Fraction(a) / b)


def rational_string(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# --------------------------------------------------------------------------------------
# dense polynomial helpers (generic coefficients)
# --------------------------------------------------------------------------------------

def pstrip(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return pstrip(out)


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pscale(a, c):
    if not c:
        return ()
    return pstrip(x * c for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return pstrip(out)


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    if len(a) <= db:
        return (), pstrip(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        f = _div(c, lead)
        quot[k - db] = f
        for j in range(db + 1):
            a[k - db + j] = a[k - db + j] - f * b[j]
    return pstrip(quot), pstrip(a[:db])


def pmonic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(_div(c, lead) for c in a)


def pgcd(a, b):
    a, b = pstrip(a), pstrip(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pseries_div(num, den, degree):
    """Power-series coefficients of ``num/den`` up to ``q**degree``; ``den[0]`` nonzero."""
    if not den or not den[0]:
        raise InvalidInput("denominator vanishes at q = 0; no power series expansion")
    c0 = den[0]
    out = []
    for k in range(degree + 1):
        acc = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            if den[j]:
                acc = acc - den[j] * out[k - j]
        out.append(_div(acc, c0))
    return out


# --------------------------------------------------------------------------------------
# cyclotomic field
# --------------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_polynomial(ell):
    """Integer coefficients of the l-th cyclotomic polynomial, lowest degree first."""
    if ell < 1:
        raise InvalidInput("cyclotomic order must be positive", ell=ell)
    num = tuple([-1] + [0] * (ell - 1) + [1])
    for d in range(1, ell):
        if ell % d == 0:
            num, rem = pdivmod(num, cyclotomic_polynomial(d))
            assert not rem
    return tuple(int(c) for c in num)


@lru_cache(maxsize=None)
def _reduction_table(ell):
    """Rows: ``zeta**k`` reduced to the basis ``1, zeta, ..., zeta**(d-1)`` for k < 2d + l."""
    phi = cyclotomic_polynomial(ell)
    d = len(phi) - 1
    rows = []
    for k in range(2 * d + ell):
        mono = tuple([0] * k + [1])
        rem = pdivmod(mono, phi)[1]
        rows.append(tuple(rem) + (0,) * (d - len(rem)))
    return d, tuple(rows)


def totient(ell):
    return len(cyclotomic_polynomial(ell)) - 1


class CyclotomicScalar:
    """Element of Q(zeta_l) as a residue modulo the l-th cyclotomic polynomial."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        d, table = _reduction_table(order)
        coeffs = [_q(Fraction(c)) if isinstance(c, Fraction) else c for c in coeffs]
        if len(coeffs) > d:
            red = [0] * d
            for k, c in enumerate(coeffs):
                if c:
                    row = table[k] if k < len(table) else table[k % order]
                    for j, r in enumerate(row):
                        if r:
                            red[j] += c * r
            coeffs = red
        else:
            coeffs = coeffs + [0] * (d - len(coeffs))
        self.coeffs = tuple(_q(c) for c in coeffs)
        self.order = order

    @classmethod
    def zeta_power(cls, k, order):
        d, table = _reduction_table(order)
        return cls(table[k % order], order)

    @classmethod
    def from_rational(cls, x, order):
        return cls([x], order)

    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                raise InvalidInput("mixing cyclotomic fields", a=self.order, b=other.order)
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar([other], self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicScalar([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar([a * other for a in self.coeffs], self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CyclotomicScalar(prod, self.order)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        # extended Euclid: s * a + t * phi = g (constant)
        phi = tuple(cyclotomic_polynomial(self.order))
        r0, r1 = phi, pstrip(self.coeffs)
        s0, s1 = (), (1,)
        while len(r1) > 1:
            quo, rem = pdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, psub(s0, pmul(quo, s1))
        inv_c = _div(1, r1[0])
        return CyclotomicScalar([c * inv_c for c in s1], self.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar([other], self.order)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.order, self.coeffs))

    def conj(self):
        """Complex conjugation, i.e. the automorphism zeta -> zeta**(l-1)."""
        acc = CyclotomicScalar([0], self.order)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + CyclotomicScalar.zeta_power(-k, self.order) * c
        return acc

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise RationalityError("cyclotomic scalar is not rational", value=self.to_json())
        return self.coeffs[0] if self.coeffs else 0

    def to_json(self):
        return [rational_string(c) for c in self.coeffs]

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*z^{k}")
        return "Cyc[" + str(self.order) + "](" + (" + ".join(terms) or "0") + ")"


# --------------------------------------------------------------------------------------
# graded polynomials
# --------------------------------------------------------------------------------------

class GradedPolynomial:
    """Sparse polynomial in q with exact rational coefficients, non-negative exponents."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = int(e)
                if e < 0:
                    raise InvalidInput("graded polynomial exponents must be >= 0", exponent=e)
                c = _q(c) if isinstance(c, Fraction) else c
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def from_dense(cls, coeffs):
        return cls({i: c for i, c in enumerate(coeffs) if c})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, e):
        return self._terms.get(e, 0)

    def __getitem__(self, e):
        return self._terms.get(e, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degree(self):
        return max(self._terms) if self._terms else None

    @property
    def valuation(self):
        return min(self._terms) if self._terms else None

    def dense(self, length=None):
        deg = self.degree
        size = (deg + 1 if deg is not None else 0) if length is None else length
        out = [0] * size
        for e, c in self._terms.items():
            if e < size:
                out[e] = c
        return out

    def __add__(self, other):
        other = _as_gp(other)
        t = dict(self._terms)
        for e, c in other._terms.items():
            t[e] = t.get(e, 0) + c
        return GradedPolynomial(t)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_gp(other))

    def __rsub__(self, other):
        return _as_gp(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedPolynomial({e: c * other for e, c in self._terms.items()})
        other = _as_gp(other)
        t = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return GradedPolynomial(t)

    __rmul__ = __mul__

    def shift(self, k):
        return GradedPolynomial({e + k: c for e, c in self._terms.items()})

    def truncate(self, degree):
        return GradedPolynomial({e: c for e, c in self._terms.items() if e <= degree})

    def __call__(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GradedPolynomial({0: other})
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def is_nonnegative_integral(self):
        return all(Fraction(c).denominator == 1 and c >= 0 for c in self._terms.values())

    def is_monic(self):
        return bool(self._terms) and self._terms[self.degree] == 1

    def __repr__(self):
        return f"GradedPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def latex(self):
        if not self._terms:
            return "0"
        out = ""
        for e, c in self._terms.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{{{e}}}" if e >= 10 else f"q^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else ("+" if out else "")
            out += sign + body
        return out

    def to_json(self):
        return {str(e): rational_string(c) for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, data):
        return cls({int(e): _q(Fraction(c)) for e, c in data.items()})


def _as_gp(x):
    if isinstance(x, GradedPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return GradedPolynomial({0: x})
    raise TypeError(f"cannot coerce {type(x).__name__} to GradedPolynomial")


# --------------------------------------------------------------------------------------
# rational functions
# --------------------------------------------------------------------------------------

class RationalFunction:
    """Reduced ``num/den`` in q with monic denominator.

    ``order`` is the cyclotomic order of the coefficient field (1 means Q).  A Molien-form
    hint ``(numerator, factors)`` with ``factors`` a list of ``(c, r)`` standing for
    ``1 - c q**r`` may be attached for cheap series expansion; it represents the same
    element before reduction.
    """

    __slots__ = ("num", "den", "order", "molien_form")

    def __init__(self, num, den=(1,), order=1, reduce=True, molien_form=None):
        num, den = pstrip(num), pstrip(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        self.order = order
        if not num:
            self.num, self.den = (), (1,)
        elif reduce:
            g = pgcd(num, den)
            if len(g) > 1:
                num = pdivmod(num, g)[0]
                den = pdivmod(den, g)[0]
            lead = den[-1]
            self.num = tuple(_div(c, lead) for c in num)
            self.den = tuple(_div(c, lead) for c in den)
        else:
            self.num, self.den = num, den
        self.molien_form = molien_form

    @classmethod
    def constant(cls, c, order=1):
        return cls((c,), (1,), order)

    @classmethod
    def polynomial(cls, coeffs, order=1):
        return cls(tuple(coeffs), (1,), order)

    @classmethod
    def from_graded(cls, gp, order=1):
        return cls(tuple(gp.dense()), (1,), order)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, CyclotomicScalar)):
            return RationalFunction((other,), (1,), self.order)
        if isinstance(other, GradedPolynomial):
            return RationalFunction.from_graded(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return RationalFunction(padd(self.num, other.num), self.den, self.order)
        return RationalFunction(padd(pmul(self.num, other.den), pmul(other.num, self.den)),
                                pmul(self.den, other.den), self.order)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(pneg(self.num), self.den, self.order, reduce=False)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return RationalFunction((), (1,), self.order)
        return RationalFunction(pmul(self.num, other.num), pmul(self.den, other.den),
                                self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(pmul(self.num, other.den), pmul(self.den, other.num),
                                self.order)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self):
        return RationalFunction.constant(1, self.order) / self

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (len(self.num) == len(other.num) and len(self.den) == len(other.den)
                and all(a == b for a, b in zip(self.num, other.num))
                and all(a == b for a, b in zip(self.den, other.den)))

    def __hash__(self):
        return hash((self.num, self.den))

    def is_polynomial(self):
        return len(self.den) == 1

    def is_rational(self):
        return all(not isinstance(c, CyclotomicScalar) or c.is_rational()
                   for c in self.num + self.den)

    def rational(self):
        """Same element with coefficients converted to ``int``/``Fraction``."""
        def conv(c):
            return c.to_rational() if isinstance(c, CyclotomicScalar) else c
        if not self.is_rational():
            raise RationalityError("rational function has irrational coefficients",
                                   value=self.to_json())
        mf = None
        if self.molien_form is not None:
            mnum, factors = self.molien_form
            mf = (tuple(conv(c) for c in mnum), [(conv(c), r) for c, r in factors])
        return RationalFunction(tuple(conv(c) for c in self.num),
                                tuple(conv(c) for c in self.den), 1, reduce=False,
                                molien_form=mf)

    def conj(self):
        def cj(c):
            return c.conj() if isinstance(c, CyclotomicScalar) else c
        return RationalFunction(tuple(cj(c) for c in self.num),
                                tuple(cj(c) for c in self.den), self.order)

    def to_graded(self):
        if not self.is_polynomial():
            raise NonPolynomialError("rational function is not a polynomial", value=str(self))
        num = self.rational().num
        return GradedPolynomial.from_dense(num)

    def series(self, degree):
        return series_expand(self, degree)

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        def fmt(p):
            return " + ".join(f"({c})*q^{i}" for i, c in enumerate(p) if c) or "0"
        if self.is_polynomial():
            return fmt(self.num)
        return f"[{fmt(self.num)}] / [{fmt(self.den)}]"

    def to_json(self):
        def coeff(c):
            if isinstance(c, CyclotomicScalar):
                return c.to_json()
            return [rational_string(c)]
        return {"field_order": self.order,
                "num": [coeff(c) for c in self.num],
                "den": [coeff(c) for c in self.den]}


def series_expand(f, degree):
    """Taylor coefficients of ``f`` through ``q**degree`` as a :class:`GradedPolynomial`."""
    if not isinstance(f, RationalFunction):
        raise TypeError("series_expand needs a RationalFunction")
    if f.molien_form is not None:
        num, factors = f.molien_form
        coeffs = list(num[:degree + 1]) + [0] * max(0, degree + 1 - len(num))
        for c, r in factors:
            # multiply by 1/(1 - c q^r) = sum_k c^k q^{rk}, in place from low degree up
            for k in range(r, degree + 1):
                if coeffs[k - r]:
                    coeffs[k] = coeffs[k] + c * coeffs[k - r]
        out = coeffs
    else:
        if not f.den or not f.den[0]:
            raise InvalidInput("denominator vanishes at q = 0", value=str(f))
        out = pseries_div(f.num, f.den, degree)
    clean = []
    for c in out:
        if isinstance(c, CyclotomicScalar):
            c = c.to_rational()
        clean.append(c)
    return GradedPolynomial.from_dense(clean)


# --------------------------------------------------------------------------------------
# matrices over the function field
# --------------------------------------------------------------------------------------

class FieldMatrix:
    """Dense matrix of :class:`RationalFunction` with explicit row / column labels."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = [list(r) for r in entries]
        if len(self.entries) != len(self.rows) or any(len(r) != len(self.cols)
                                                      for r in self.entries):
            raise InvalidInput("matrix shape does not match its labels")

    @classmethod
    def identity(cls, labels, order=1):
        one = RationalFunction.constant(1, order)
        zero = RationalFunction((), (1,), order)
        return cls(labels, labels, [[one if i == j else zero for j in range(len(labels))]
                                    for i in range(len(labels))])

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def entry(self, row_label, col_label):
        return self.entries[self.rows.index(row_label)][self.cols.index(col_label)]

    def submatrix(self, row_idx, col_idx):
        return FieldMatrix([self.rows[i] for i in row_idx], [self.cols[j] for j in col_idx],
                           [[self.entries[i][j] for j in col_idx] for i in row_idx])

    def __matmul__(self, other):
        return matrix_mul(self, other)

    def __sub__(self, other):
        return FieldMatrix(self.rows, self.cols,
                           [[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def __add__(self, other):
        return FieldMatrix(self.rows, self.cols,
                           [[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.entries, other.entries)])

    def transpose(self):
        return FieldMatrix(self.cols, self.rows,
                           [[self.entries[i][j] for i in range(len(self.rows))]
                            for j in range(len(self.cols))])

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (self.shape == other.shape
                and all(a == b for r1, r2 in zip(self.entries, other.entries)
                        for a, b in zip(r1, r2)))


def matrix_mul(a, b):
    if len(a.cols) != len(b.rows):
        raise InvalidInput("matrix_mul shape mismatch", left=a.shape, right=b.shape)
    order = _matrix_order(a)
    out = []
    for i in range(len(a.rows)):
        row = []
        for j in range(len(b.cols)):
            acc = RationalFunction((), (1,), order)
            for k in range(len(a.cols)):
                x, y = a.entries[i][k], b.entries[k][j]
                if x.num and y.num:
                    acc = acc + x * y
            row.append(acc)
        out.append(row)
    return FieldMatrix(a.rows, b.cols, out)


def _matrix_order(mat):
    for row in mat.entries:
        for x in row:
            return x.order
    return 1


def matrix_inverse(mat, label=None):
    """Gauss-Jordan inverse; ``label`` names the block in the singular-matrix error."""
    n = len(mat.rows)
    if n != len(mat.cols):
        raise InvalidInput("matrix_inverse needs a square matrix", shape=mat.shape)
    order = _matrix_order(mat)
    work = [list(r) for r in mat.entries]
    inv = FieldMatrix.identity(mat.cols, order).entries
    inv = [list(r) for r in inv]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col].num), None)
        if pivot is None:
            raise SingularBlockError("singular matrix block", block=label, column=col)
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = work[col][col].inverse()
        work[col] = [x * p for x in work[col]]
        inv[col] = [x * p for x in inv[col]]
        for r in range(n):
            if r != col and work[r][col].num:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return FieldMatrix(mat.cols, mat.rows, inv)

"""Nonsymmetric Macdonald polynomials at t = 0.

``E_mu(x; q, 0)`` is built by the recursion

* ``E_0 = 1``;
* if ``mu_i < mu_{i+1}`` then ``E_mu = pi_i E_{s_i mu}`` with the isobaric Demazure
  operator ``pi_i f = x_i (1 - s_i) f / (x_i - x_{i+1})``;
* otherwise ``mu`` is weakly decreasing and nonzero, and ``E_mu`` is the image of
  ``E_nu`` under the raising operator, ``mu = Phi(nu)``.

The raising operator admits eight mirror conventions.  :func:`select_convention`
evaluates all of them against anchor values and structural checks; the unique survivor is
frozen as :data:`FROZEN_CONVENTION`, and the production path uses it through the dense
kernels in :mod:`kostka_shoji.kernels`.
"""

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from . import kernels
from .config import Budgets
from .errors import BudgetExceeded, ConventionError, InvalidInput, PositivityError
from .exact import GradedPolynomial


class BlockCharacter:
    """Sparse polynomial in ``x_1..x_N`` with :class:`GradedPolynomial` coefficients."""

    __slots__ = ("n_vars", "_terms")

    def __init__(self, n_vars, terms=None):
        self.n_vars = n_vars
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n_vars or min(exps, default=0) < 0:
                raise InvalidInput("bad exponent vector", exponents=list(exps), n_vars=n_vars)
            if not isinstance(coeff, GradedPolynomial):
                coeff = GradedPolynomial({0: coeff})
            if coeff:
                clean[exps] = clean[exps] + coeff if exps in clean else coeff
                if not clean[exps]:
                    del clean[exps]
        self._terms = dict(sorted(clean.items(), reverse=True))

    @classmethod
    def one(cls, n_vars):
        return cls(n_vars, {(0,) * n_vars: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def from_dense(cls, coeffs, n_vars, degree):
        exps = kernels.monomial_basis(n_vars, degree)
        terms = {}
        for r in np.flatnonzero(coeffs.any(axis=1)):
            row = coeffs[r]
            terms[tuple(int(e) for e in exps[r])] = GradedPolynomial(
                {int(s): int(row[s]) for s in np.flatnonzero(row)})
        return cls(n_vars, terms)

    def to_dense(self, degree, q_width=None):
        exps = [e for e in self._terms if sum(e) == degree]
        if q_width is None:
            q_width = 1 + max((self._terms[e].degree for e in exps), default=0)
        size = kernels.space_size(self.n_vars, degree)
        out = np.zeros((size, q_width), dtype=np.int64)
        if exps:
            ranks = kernels.ranks_numpy(np.array(exps, dtype=np.int64),
                                        kernels._table_for(self.n_vars, degree))
            for r, e in zip(ranks, exps):
                for s, c in self._terms[e].items():
                    out[r, s] = c
        return out

    def items(self):
        return self._terms.items()

    def monomials(self):
        return list(self._terms)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), GradedPolynomial())

    def degrees(self):
        return sorted({sum(e) for e in self._terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other):
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return BlockCharacter(self.n_vars, terms)

    def __neg__(self):
        return BlockCharacter(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, poly):
        return BlockCharacter(self.n_vars, {e: c * poly for e, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BlockCharacter):
            return self.scale(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms[e] + c1 * c2 if e in terms else c1 * c2
        return BlockCharacter(self.n_vars, terms)

    def __eq__(self, other):
        if not isinstance(other, BlockCharacter):
            return NotImplemented
        return self.n_vars == other.n_vars and self._terms == other._terms

    def evaluate(self, xs, q):
        total = 0
        for e, c in self._terms.items():
            mono = Fraction(1)
            for x, k in zip(xs, e):
                mono *= Fraction(x) ** k
            total += c(Fraction(q)) * mono
        return total

    def at_q_one(self):
        return sum(c(1) for c in self._terms.values())

    def to_json(self):
        return [{"exponents": list(e), "coefficient": c.to_json()}
                for e, c in self._terms.items()]

    def __repr__(self):
        return f"BlockCharacter({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "")
                            for i, k in enumerate(e) if k) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


# --------------------------------------------------------------------------------------
# public single steps
# --------------------------------------------------------------------------------------

def demazure_step(f, i):
    """``pi_i f`` for ``1 <= i < N`` (1-based position)."""
    if not 1 <= i < f.n_vars:
        raise InvalidInput("Demazure index out of range", i=i, n_vars=f.n_vars)
    out = BlockCharacter(f.n_vars)
    for d in f.degrees():
        dense = f.to_dense(d)
        res = kernels.demazure(dense, kernels.monomial_basis(f.n_vars, d), i - 1,
                               kernels._table_for(f.n_vars, d))
        out = out + BlockCharacter.from_dense(res, f.n_vars, d)
    return out


def demazure_rational(f, i, xs, q):
    """The rational formula ``(x_i f - x_{i+1} s_i f) / (x_i - x_{i+1})`` at a point."""
    xs = [Fraction(x) for x in xs]
    a, b = xs[i - 1], xs[i]
    if a == b:
        raise InvalidInput("evaluation point must separate x_i and x_{i+1}")
    swapped = list(xs)
    swapped[i - 1], swapped[i] = b, a
    return (a * f.evaluate(xs, q) - b * f.evaluate(swapped, q)) / (a - b)


def phi(mu):
    """Rotate-and-increment ``(mu_N + 1, mu_1, ..., mu_{N-1})``."""
    return (mu[-1] + 1,) + tuple(mu[:-1])


def phi_inverse(mu):
    if mu[0] < 1:
        raise InvalidInput("composition is not in the image of Phi", mu=list(mu))
    return tuple(mu[1:]) + (mu[0] - 1,)


def raise_step(f, mu):
    """``(E_{Phi mu}, Phi mu)`` from ``f = E_mu`` under the frozen convention."""
    mu = tuple(mu)
    if len(mu) != f.n_vars:
        raise InvalidInput("composition length must match the number of variables")
    d = sum(mu)
    width = 1 + max((c.degree for _, c in f.items()), default=0)
    out, ok = kernels.raise_op(f.to_dense(d, width), kernels.monomial_basis(f.n_vars, d),
                               mu[-1], kernels._table_for(f.n_vars, d + 1), width + mu[-1])
    if not ok:
        raise ConventionError("raising produced a negative q-power", mu=list(mu))
    return BlockCharacter.from_dense(out, f.n_vars, d + 1), phi(mu)


# --------------------------------------------------------------------------------------
# convention selection (sparse reference implementation)
# --------------------------------------------------------------------------------------

@dataclass(frozen=True)
class Convention:
    """``rotation``: which variable is cycled in; ``variable``: the multiplier; ``power``:
    the q-exponent sign on the substituted variable."""

    rotation: str   # "front": f(x_2..x_N, q^p x_1); "back": f(q^p x_N, x_1..x_{N-1})
    variable: str   # "first" or "last"
    power: int      # +1 or -1

    def rotate(self, beta):
        if self.rotation == "front":
            return (beta[-1],) + tuple(beta[:-1]), beta[-1]
        return tuple(beta[1:]) + (beta[0],), beta[0]

    def unrotate(self, gamma):
        if self.rotation == "front":
            return tuple(gamma[1:]) + (gamma[0],)
        return (gamma[-1],) + tuple(gamma[:-1])

    def slot(self, n_vars):
        return 0 if self.variable == "first" else n_vars - 1

    def phi(self, mu):
        rot = list(self.rotate(mu)[0])
        rot[self.slot(len(mu))] += 1
        return tuple(rot)

    def phi_inverse(self, mu):
        k = self.slot(len(mu))
        if mu[k] < 1:
            return None
        gamma = list(mu)
        gamma[k] -= 1
        return self.unrotate(tuple(gamma))


CANDIDATE_CONVENTIONS = tuple(Convention(r, v, p) for r, v, p in
                              product(("front", "back"), ("first", "last"), (1, -1)))

FROZEN_CONVENTION = Convention("front", "first", -1)

# anchors: E_(1,0,0), E_(0,1,0,1), E_(0,2,0,0) as {exponents: {q-power: coefficient}}
ANCHORS = {
    (1, 0, 0): {(1, 0, 0): {0: 1}},
    (0, 1, 0, 1): {(1, 1, 0, 0): {0: 1}, (1, 0, 1, 0): {0: 1}, (1, 0, 0, 1): {0: 1},
                   (0, 1, 1, 0): {0: 1}, (0, 1, 0, 1): {0: 1}},
    (0, 2, 0, 0): {(2, 0, 0, 0): {0: 1}, (0, 2, 0, 0): {0: 1},
                   (1, 1, 0, 0): {0: 1, 1: 1}, (1, 0, 1, 0): {1: 1}, (1, 0, 0, 1): {1: 1},
                   (0, 1, 1, 0): {1: 1}, (0, 1, 0, 1): {1: 1}},
}


def _ref_add(acc, exps, qpow, c):
    slot = acc.setdefault(exps, {})
    slot[qpow] = slot.get(qpow, 0) + c
    if not slot[qpow]:
        del slot[qpow]
        if not slot:
            del acc[exps]


def _ref_demazure(f, i):
    out = {}
    for exps, poly in f.items():
        a, b = exps[i], exps[i + 1]
        if a >= b:
            ks, sign = range(b, a + 1), 1
        else:
            ks, sign = range(a + 1, b), -1
        for k in ks:
            e = list(exps)
            e[i], e[i + 1] = k, a + b - k
            for s, c in poly.items():
                _ref_add(out, tuple(e), s, sign * c)
    return out


def _ref_raise(f, mu, conv):
    n = len(mu)
    out = {}
    for exps, poly in f.items():
        rot, moved = conv.rotate(exps)
        rot = list(rot)
        rot[conv.slot(n)] += 1
        for s, c in poly.items():
            _ref_add(out, tuple(rot), s + conv.power * moved, c)
    target = conv.phi(mu)
    lead = out.get(target, {})
    if len(lead) != 1 or list(lead.values())[0] != 1:
        raise ConventionError("leading coefficient is not a monic q-power",
                              convention=str(conv), mu=list(mu))
    shift = -next(iter(lead))
    return {e: {s + shift: c for s, c in p.items()} for e, p in out.items()}


def _ref_macdonald(mu, conv, memo):
    mu = tuple(mu)
    if mu in memo:
        return memo[mu]
    n = len(mu)
    if not any(mu):
        res = {mu: {0: 1}}
    else:
        asc = next((i for i in range(n - 1) if mu[i] < mu[i + 1]), None)
        if asc is not None:
            swapped = list(mu)
            swapped[asc], swapped[asc + 1] = mu[asc + 1], mu[asc]
            res = _ref_demazure(_ref_macdonald(swapped, conv, memo), asc)
        else:
            nu = conv.phi_inverse(mu)
            if nu is None or conv.phi(nu) != mu:
                raise ConventionError("composition has no preimage under the raising map",
                                      convention=str(conv), mu=list(mu))
            res = _ref_raise(_ref_macdonald(nu, conv, memo), nu, conv)
    memo[mu] = res
    return res


def _ref_structure_ok(mu, poly):
    if poly.get(tuple(mu)) != {0: 1}:
        return False
    return all(s >= 0 and c > 0 for p in poly.values() for s, c in p.items())


def evaluate_convention(conv, max_degree=3, max_vars=4):
    """True iff ``conv`` reproduces every anchor and is monic, polynomial and positive on
    all compositions up to the given size."""
    try:
        for mu, expected in ANCHORS.items():
            if _ref_macdonald(mu, conv, {}) != expected:
                return False
        for n in range(1, max_vars + 1):
            memo = {}
            for d in range(max_degree + 1):
                for mu in _compositions(d, n):
                    if not _ref_structure_ok(mu, _ref_macdonald(mu, conv, memo)):
                        return False
    except ConventionError:
        return False
    return True


def select_convention():
    """All candidate conventions passing :func:`evaluate_convention`."""
    return [c for c in CANDIDATE_CONVENTIONS if evaluate_convention(c)]


_checked = []
_check_lock = threading.Lock()


def assert_frozen_convention():
    """Re-run the anchored selection once per process; the survivor must be frozen."""
    with _check_lock:
        if _checked:
            return
        survivors = select_convention()
        if survivors != [FROZEN_CONVENTION]:
            raise ConventionError("anchored convention selection does not single out the "
                                  "frozen raising convention",
                                  survivors=[str(c) for c in survivors])
        _checked.append(True)


def reference_macdonald(mu, conv=FROZEN_CONVENTION):
    """Sparse pure-Python ``E_mu`` under ``conv`` (independent of the dense kernels)."""
    poly = _ref_macdonald(tuple(mu), conv, {})
    return BlockCharacter(len(mu), {e: GradedPolynomial(p) for e, p in poly.items()})


def _compositions(d, n):
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, n - 1):
            yield (first,) + rest


# --------------------------------------------------------------------------------------
# production path (dense kernels, frozen convention)
# --------------------------------------------------------------------------------------

class MacdonaldEngine:
    """Memoized dense evaluation of ``E_mu`` for a fixed number of variables."""

    def __init__(self, n_vars, ascent="left", budgets=None):
        if ascent not in ("left", "right"):
            raise InvalidInput("ascent must be 'left' or 'right'", ascent=ascent)
        self.n_vars = n_vars
        self.ascent = ascent
        self.budgets = budgets or Budgets()
        self._memo = {}
        self._lock = threading.Lock()

    def _dense(self, mu):
        cached = self._memo.get(mu)
        if cached is not None:
            return cached
        n, d = self.n_vars, sum(mu)
        if kernels.space_size(n, d) > self.budgets.max_monomials:
            raise BudgetExceeded("monomial space too large", n_vars=n, degree=d,
                                 budget=self.budgets.max_monomials)
        if d == 0:
            res = np.ones((1, 1), dtype=np.int64)
        else:
            ascents = [i for i in range(n - 1) if mu[i] < mu[i + 1]]
            if ascents:
                i = ascents[0] if self.ascent == "left" else ascents[-1]
                swapped = list(mu)
                swapped[i], swapped[i + 1] = mu[i + 1], mu[i]
                res = kernels.demazure(self._dense(tuple(swapped)),
                                       kernels.monomial_basis(n, d), i,
                                       kernels._table_for(n, d))
            else:
                nu = phi_inverse(mu)
                src = self._dense(nu)
                res, ok = kernels.raise_op(src, kernels.monomial_basis(n, d - 1), nu[-1],
                                           kernels._table_for(n, d),
                                           src.shape[1] + nu[-1])
                if not ok:
                    raise ConventionError("raising produced a negative q-power", mu=list(mu))
            live = np.flatnonzero(res.any(axis=0))
            res = res[:, :live[-1] + 1] if live.size else res[:, :1]
        if (res < 0).any():
            raise PositivityError("negative coefficient in a Demazure character",
                                  mu=list(mu))
        res.setflags(write=False)
        with self._lock:
            self._memo.setdefault(mu, res)
        return self._memo[mu]

    def __call__(self, mu):
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.n_vars or min(mu, default=0) < 0:
            raise InvalidInput("composition must have N non-negative entries",
                               mu=list(mu), n_vars=self.n_vars)
        return BlockCharacter.from_dense(self._dense(mu), self.n_vars, sum(mu))


_engines = {}
_engines_lock = threading.Lock()


def nonsym_macdonald_t0(mu, ascent="left", budgets=None):
    """``E_mu(x; q, 0)`` as a :class:`BlockCharacter` in ``len(mu)`` variables."""
    assert_frozen_convention()
    mu = tuple(mu)
    if not mu:
        raise InvalidInput("empty composition")
    key = (len(mu), ascent, budgets)
    with _engines_lock:
        engine = _engines.get(key)
        if engine is None:
            engine = _engines[key] = MacdonaldEngine(len(mu), ascent, budgets)
    return engine(mu)


def parse_composition(text):
    try:
        mu = tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise InvalidInput("composition must be comma-separated integers", text=text)
    if not mu or min(mu) < 0:
        raise InvalidInput("composition entries must be non-negative", text=text)
    return mu

"""The graded multiplicity matrix Omega by Molien class sums.

``Omega[lam, mu] = sum_i q^i dim Hom_W(L_mu, C[X]_i (x) L_lam)`` where W acts on the
coordinate ring ``C[X]`` through the contragredient of the reflection representation, so

    Omega[lam, mu] = (1/|W|) sum_C |C| chi_lam(C) chi_mu(C^-1) / det(1 - q C^-1).

Every class denominator divides ``D(q) = prod_{j=1..m} (1 - q^{l j})``; the sum is formed
over D as an exact polynomial in Z[zeta][q], checked to be rational, then reduced.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .combinatorics import MultiPartition, Partition, a_function, involution_vee, serialize
from .config import Budgets, default_truncation
from .errors import InvariantViolation, RationalityError
from .exact import (CyclotomicScalar, FieldMatrix, RationalFunction, _reduction_table, pdivmod,
                    pmul, pstrip, series_expand)
from .wreath import brute_force_group, character_table, class_label, invert_class, inverse


def reflection_det(cls):
    """``det(1 - q w)`` on C^m for ``w`` in class ``cls``, as a polynomial over Q(zeta_l)."""
    ell = len(cls)
    out = (CyclotomicScalar([1], ell),)
    for color, comp in enumerate(cls):
        for r in comp:
            factor = [CyclotomicScalar([1], ell)] + [CyclotomicScalar([0], ell)] * r
            factor[r] = -CyclotomicScalar.zeta_power(color, ell)
            out = pmul(out, tuple(factor))
    return out


def common_denominator(m, ell):
    out = (1,)
    for j in range(1, m + 1):
        out = pmul(out, (1,) + (0,) * (ell * j - 1) + (-1,))
    return out


def trivial_label(m, ell):
    return MultiPartition((Partition((1,) * m),) + (Partition(),) * (ell - 1))


@dataclass(frozen=True)
class OmegaMatrix:
    m: int
    ell: int
    index: tuple
    entries: FieldMatrix
    a_values: tuple

    def entry(self, lam, mu):
        return self.entries.entry(lam, mu)

    def series(self, degree):
        """Truncated series of every entry: ``{(lam, mu): GradedPolynomial}``."""
        return {(lam, mu): series_expand(self.entries[i, j], degree)
                for i, lam in enumerate(self.index) for j, mu in enumerate(self.index)}

    def to_json(self, truncate=None):
        data = {
            "m": self.m,
            "ell": self.ell,
            "index": [serialize(lam) for lam in self.index],
            "a_values": list(self.a_values),
            "entries": [[self.entries[i, j].to_json() for j in range(len(self.index))]
                        for i in range(len(self.index))],
        }
        if truncate is not None:
            data["series_degree"] = truncate
            data["series"] = [[series_expand(self.entries[i, j], truncate).to_json()
                               for j in range(len(self.index))]
                              for i in range(len(self.index))]
        return data


def _group_ring_class_poly(cls, den, ell):
    """``D(q) / det(1 - q C^-1)`` in ``Z[C_l][q]`` as an integer array ``[zeta power, degree]``.

    Each colored cycle (length r, color c) of ``C^-1`` contributes
    ``(1 - q^{lr}) / (1 - zeta^c q^r) = sum_{k<l} zeta^{ck} q^{rk}``; the leftover
    ``D / prod (1 - q^{lr})`` is an integer polynomial.
    """
    rest = tuple(den)
    out = np.zeros((ell, 1), dtype=object)
    out[0, 0] = 1
    for color, comp in enumerate(invert_class(cls)):
        for r in comp:
            rest, rem = pdivmod(rest, (1,) + (0,) * (ell * r - 1) + (-1,))
            if rem:
                raise InvariantViolation("cycle factor does not divide the common denominator",
                                         cls=serialize(cls))
            factor = np.zeros((ell, r * (ell - 1) + 1), dtype=object)
            for k in range(ell):
                factor[(color * k) % ell, r * k] = 1
            out = _ring_mul(out, factor, ell)
    rest_arr = np.zeros((ell, len(rest)), dtype=object)
    rest_arr[0, :] = [int(x) for x in rest]
    return _ring_mul(out, rest_arr, ell)


def _ring_mul(a, b, ell):
    out = np.zeros((ell, a.shape[1] + b.shape[1] - 1), dtype=object)
    for i in range(ell):
        for j in range(ell):
            bj = b[j]
            if not bj.any():
                continue
            for d in np.flatnonzero(a[i]):
                out[(i + j) % ell, d:d + len(bj)] += a[i, d] * bj
    return out


def _as_ring(value, ell):
    vec = [0] * ell
    for k, c in enumerate(value.coeffs):
        vec[k] = int(c)
    return vec


def omega_matrix(m, ell, budgets=None):
    table = character_table(m, ell, budgets or Budgets())
    order = table.group_order
    den = common_denominator(m, ell)
    n_cls = len(table.classes)
    n = len(table.irreps)
    width = len(den)
    # P[c, k, d]: |C| times the zeta^k q^d coefficient of D / det(1 - q C^-1)
    P = np.zeros((n_cls, ell, width), dtype=object)
    for c, cls in enumerate(table.classes):
        poly = _group_ring_class_poly(cls, den, ell)
        P[c, :, :poly.shape[1]] = poly[:, :width] * (order // table.centralizers[c])
    inv_of = [table.classes.index(invert_class(c)) for c in table.classes]
    A = np.array([[_as_ring(v, ell) for v in row] for row in table.values], dtype=object)
    B = A[:, inv_of, :]
    bound = (int(np.abs(A).max()) ** 2 * int(np.abs(P).max()) * n_cls * ell * ell)
    dtype = np.int64 if bound < 2**62 else object
    A, B, P = A.astype(dtype), B.astype(dtype), P.astype(dtype)
    # AP[lam, c, s, d] = sum_{k1 + k3 = s} A[lam, c, k1] P[c, k3, d]
    AP = np.zeros((n, n_cls, ell, width), dtype=dtype)
    for k1 in range(ell):
        for k3 in range(ell):
            AP[:, :, (k1 + k3) % ell, :] += A[:, :, k1, None] * P[None, :, k3, :]
    N = np.zeros((n, n, ell, width), dtype=dtype)
    for s in range(ell):
        for k2 in range(ell):
            N[:, :, (s + k2) % ell, :] += np.einsum("lcd,mc->lmd", AP[:, :, s, :], B[:, :, k2])
    d_red, table_red = _reduction_table(ell)
    factors = [(1, ell * j) for j in range(1, m + 1)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            rational = []
            for k in range(width):
                red = [0] * d_red
                for s in range(ell):
                    x = int(N[i, j, s, k])
                    if x:
                        for t, r in enumerate(table_red[s]):
                            if r:
                                red[t] += x * r
                if any(red[1:]):
                    raise RationalityError(
                        "Molien numerator is not rational",
                        row=serialize(table.irreps[i]), col=serialize(table.irreps[j]),
                        degree=k)
                rational.append(Fraction(red[0], order) if red[0] % order else red[0] // order)
            rational = pstrip(rational)
            row.append(RationalFunction(rational, den, 1, molien_form=(rational, factors)))
        rows.append(row)
    index = table.irreps
    return OmegaMatrix(m, ell, index, FieldMatrix(index, index, rows),
                       tuple(a_function(lam) for lam in index))


def minimal_degree_check(omega):
    """Trivial-row entries in column ``lam^vee`` start at ``q^a(lam)`` with coefficient 1.

    Returns a list of counterexamples (empty on success).
    """
    triv = trivial_label(omega.m, omega.ell)
    row = omega.index.index(triv)
    failures = []
    for lam in omega.index:
        a = a_function(lam)
        col = omega.index.index(involution_vee(lam))
        series = series_expand(omega.entries[row, col], a)
        if series.valuation != a or series.coefficient(a) != 1:
            failures.append({"label": serialize(lam), "a": a,
                             "valuation": series.valuation,
                             "leading": str(series.coefficient(a))})
    return failures


def structural_report(omega, degree=None):
    """Integrality, non-negativity and ``Omega(0) = I`` on truncated series."""
    if degree is None:
        degree = default_truncation(max(omega.a_values))
    failures = []
    for (lam, mu), s in omega.series(degree).items():
        for e, c in s.items():
            if Fraction(c).denominator != 1 or c < 0:
                failures.append({"row": serialize(lam), "col": serialize(mu), "degree": e,
                                 "coefficient": str(c)})
        if s.coefficient(0) != (1 if lam == mu else 0):
            failures.append({"row": serialize(lam), "col": serialize(mu), "degree": 0,
                             "coefficient": str(s.coefficient(0))})
    return failures


def vee_symmetry_diagnostic(omega):
    """Pairs where ``Omega[lam, mu] != Omega[mu^vee, lam^vee]`` (a diagnostic only)."""
    out = []
    for lam in omega.index:
        for mu in omega.index:
            if omega.entry(lam, mu) != omega.entry(involution_vee(mu), involution_vee(lam)):
                out.append((serialize(lam), serialize(mu)))
    return out


def omega_oracle(m, ell, degree, budgets=None):
    """Truncated Omega from explicit traces of group elements on ``C[X]_i``.

    Each element acts on ``C[X]`` as the inverse monomial matrix on ``Sym(C^m)``; the trace
    on degree ``i`` is read off the fixed monomials.  Returns
    ``{(lam, mu): [coefficient of q^0..q^degree]}`` with exact rationals.
    """
    group = brute_force_group(m, ell, budgets)
    table = character_table(m, ell, budgets)
    elements = group.elements
    inverses = [inverse(g, ell) for g in elements]
    perms = np.array([g.perm for g in inverses], dtype=np.int64).reshape(len(elements), m)
    colors = np.array([g.colors for g in inverses], dtype=np.int64).reshape(len(elements), m)
    cls_idx = [table.classes.index(group.labels[group.element_class[k]])
               for k in range(len(elements))]
    inv_idx = [table.classes.index(class_label(g, ell)) for g in inverses]
    n = len(table.irreps)
    zeta = [CyclotomicScalar.zeta_power(k, ell) for k in range(ell)]
    out = {(lam, mu): [0] * (degree + 1) for lam in table.irreps for mu in table.irreps}
    for i in range(degree + 1):
        counts = kernels.trace_counts(perms, colors,
                                      np.ascontiguousarray(kernels.monomial_basis(m, i)), ell)
        traces = [sum((zeta[k] * int(counts[g, k]) for k in range(ell)),
                      CyclotomicScalar([0], ell)) for g in range(len(elements))]
        # group elements by (class, inverse class) to keep the sum small
        buckets = {}
        for g in range(len(elements)):
            key = (cls_idx[g], inv_idx[g])
            buckets[key] = buckets.get(key, CyclotomicScalar([0], ell)) + traces[g]
        for a in range(n):
            for b in range(n):
                acc = CyclotomicScalar([0], ell)
                for (c, ci), tr in buckets.items():
                    acc = acc + table.values[a][c] * table.values[b][ci] * tr
                val = acc / len(elements)
                out[(table.irreps[a], table.irreps[b])][i] = val.to_rational()
    return out


def oracle_mismatches(omega, oracle, degree):
    failures = []
    for (lam, mu), coeffs in oracle.items():
        s = series_expand(omega.entry(lam, mu), degree)
        for i in range(degree + 1):
            if s.coefficient(i) != coeffs[i]:
                failures.append({"row": serialize(lam), "col": serialize(mu), "degree": i,
                                 "closed_form": str(s.coefficient(i)),
                                 "oracle": str(coeffs[i])})
    return failures


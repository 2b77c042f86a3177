"""Conjugacy classes and exact character table of the wreath product G(l,1,m).

Colors are zero-indexed: component ``k`` (0-based) of a class label lists the cycle
lengths of color ``k``; component ``k`` of an irreducible label is tensored with the
linear character ``zeta**(k * total color)``.

Characters follow the native convention in which ``L_(1^r)`` is the trivial module of
S_r and ``L_(r)`` the sign module, i.e. ``chi_native[lam] = chi_standard[lam']``.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, gcd

from .combinatorics import MultiPartition, Partition, conjugate, enumerate_multipartitions
from .config import Budgets
from .errors import InvalidInput, InvariantViolation
from .exact import CyclotomicScalar


def _z_partition(mu):
    out = 1
    for part in set(mu):
        mult = mu.count(part)
        out *= part**mult * factorial(mult)
    return out


def centralizer_order(cls, ell=None):
    ell = len(cls) if ell is None else ell
    out = 1
    for comp in cls:
        out *= _z_partition(tuple(comp)) * ell ** len(comp)
    return out


def invert_class(cls):
    ell = len(cls)
    return MultiPartition(cls[(-c) % ell] for c in range(ell))


@lru_cache(maxsize=None)
def _standard_character(lam, rho):
    """Murnaghan-Nakayama on beta-sets, standard convention (``(r)`` trivial)."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        sign = (-1) ** sum(1 for x in beads if t < x < b)
        new = sorted((beads - {b}) | {t}, reverse=True)
        shape = tuple(x - (k - 1 - i) for i, x in enumerate(new))
        total += sign * _standard_character(Partition(shape), rest)
    return total


def symmetric_character(lam, rho):
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise InvalidInput("symmetric_character needs |lam| = |rho|", lam=list(lam), rho=list(rho))
    return _standard_character(conjugate(lam), rho)


def standard_to_native(lam):
    """Relabel a standard-convention S_r irreducible into the native convention."""
    return conjugate(lam)


@dataclass(frozen=True)
class CharacterTable:
    m: int
    ell: int
    irreps: tuple
    classes: tuple
    values: tuple
    centralizers: tuple

    def value(self, irrep, cls):
        return self.values[self.irreps.index(irrep)][self.classes.index(cls)]

    @property
    def group_order(self):
        return self.ell**self.m * factorial(self.m)

    def degrees(self):
        ident = self.classes.index(identity_class(self.m, self.ell))
        return [row[ident].to_rational() for row in self.values]

    def to_json(self):
        return {
            "m": self.m,
            "ell": self.ell,
            "irreps": [lam.to_string() for lam in self.irreps],
            "classes": [c.to_string() for c in self.classes],
            "centralizers": list(self.centralizers),
            "values": [[v.to_json() for v in row] for row in self.values],
        }


def identity_class(m, ell):
    return MultiPartition((Partition((1,) * m),) + (Partition(),) * (ell - 1))


def _merge_classes(parts, ell):
    return MultiPartition(
        Partition(sorted((p for d in parts for p in d[c]), reverse=True)) for c in range(ell))


def _total_color(cls):
    return sum(c * len(comp) for c, comp in enumerate(cls))


@lru_cache(maxsize=None)
def _block_fusion(sizes, ell):
    """Subgroup classes of ``prod_k G(l,1,sizes[k])`` bucketed by the W-class they fuse to."""
    buckets = {}
    for combo in product(*(enumerate_multipartitions(s, ell) for s in sizes)):
        merged = _merge_classes(combo, ell)
        z_h = 1
        for d in combo:
            z_h *= centralizer_order(d, ell)
        buckets.setdefault(merged, []).append((combo, z_h))
    return buckets


def _induced_row(lam, ell, classes):
    sizes = tuple(comp.size for comp in lam)
    fusion = _block_fusion(sizes, ell)
    row = []
    for cls in classes:
        z_c = centralizer_order(cls, ell)
        # integer coefficient per power of zeta
        acc = [0] * ell
        for combo, z_h in fusion.get(cls, ()):
            val = 1
            color = 0
            for k, (comp, d) in enumerate(zip(lam, combo)):
                cyc = Partition(sorted((p for c in d for p in c), reverse=True))
                val *= symmetric_character(comp, cyc)
                if not val:
                    break
                color += k * _total_color(d)
            if val:
                acc[color % ell] += val * (z_c // z_h)
        row.append(CyclotomicScalar(acc, ell))
    return row


@lru_cache(maxsize=None)
def character_table(m, ell, budgets=None):
    (budgets or Budgets()).check_group(m, ell)
    labels = enumerate_multipartitions(m, ell)
    values = tuple(tuple(_induced_row(lam, ell, labels)) for lam in labels)
    return CharacterTable(m, ell, labels, labels, values,
                          tuple(centralizer_order(c, ell) for c in labels))


def orthogonality_report(table):
    """Exact row and column orthogonality; returns a list of failures (empty when fine).

    Sums are accumulated as unreduced integer polynomials in zeta, scaled by the lcm of
    the centralizer orders, and reduced once at the end.
    """
    ell = table.ell
    irr, cls, z = table.irreps, table.classes, table.centralizers
    vals = [[v.coeffs for v in row] for row in table.values]
    conj = [[v.conj().coeffs for v in row] for row in table.values]
    big = 1
    for zc in z:
        big = big * zc // gcd(big, zc)
    weight = [big // zc for zc in z]

    def reduced(acc):
        return CyclotomicScalar(acc, ell)

    def pairing(a_rows, b_rows, idx_a, idx_b, over, scale):
        acc = [0] * (2 * len(a_rows[0][0]) - 1)
        for t in over:
            w = scale[t] if scale else 1
            x = a_rows[idx_a][t] if scale else a_rows[t][idx_a]
            y = b_rows[idx_b][t] if scale else b_rows[t][idx_b]
            for i, xi in enumerate(x):
                if xi:
                    for j, yj in enumerate(y):
                        if yj:
                            acc[i + j] += w * xi * yj
        return reduced(acc)

    failures = []
    for i in range(len(irr)):
        for j in range(i, len(irr)):
            s = pairing(vals, conj, i, j, range(len(cls)), weight)
            if s != (big if i == j else 0):
                failures.append(("row", irr[i].to_string(), irr[j].to_string()))
    for c in range(len(cls)):
        for d in range(c, len(cls)):
            s = pairing(vals, conj, c, d, range(len(irr)), None)
            if s != (z[c] if c == d else 0):
                failures.append(("column", cls[c].to_string(), cls[d].to_string()))
    return failures


# --------------------------------------------------------------------------------------
# brute-force group
# --------------------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupElement:
    """Monomial matrix sending basis vector ``j`` to ``zeta**colors[j]`` times ``perm[j]``."""

    perm: tuple
    colors: tuple


def compose(g, h, ell):
    return GroupElement(tuple(g.perm[h.perm[j]] for j in range(len(g.perm))),
                        tuple((h.colors[j] + g.colors[h.perm[j]]) % ell
                              for j in range(len(g.perm))))


def inverse(g, ell):
    m = len(g.perm)
    perm = [0] * m
    colors = [0] * m
    for j in range(m):
        perm[g.perm[j]] = j
        colors[g.perm[j]] = (-g.colors[j]) % ell
    return GroupElement(tuple(perm), tuple(colors))


def class_label(g, ell):
    m = len(g.perm)
    seen = [False] * m
    cycles = [[] for _ in range(ell)]
    for start in range(m):
        if seen[start]:
            continue
        j, length, color = start, 0, 0
        while not seen[j]:
            seen[j] = True
            color += g.colors[j]
            length += 1
            j = g.perm[j]
        cycles[color % ell].append(length)
    return MultiPartition(Partition(sorted(c, reverse=True)) for c in cycles)


@dataclass(frozen=True)
class BruteForceGroup:
    m: int
    ell: int
    elements: tuple
    classes: tuple          # tuple of tuples of element indices (orbits)
    labels: tuple           # ColoredClass label per orbit
    element_class: tuple    # orbit index per element

    def class_sizes(self):
        return {lab: len(orb) for lab, orb in zip(self.labels, self.classes)}


def brute_force_group(m, ell, budgets=None):
    (budgets or Budgets()).check_group(m, ell, brute_force=True)
    elements = tuple(GroupElement(p, c) for p in permutations(range(m))
                     for c in product(range(ell), repeat=m))
    index = {g: i for i, g in enumerate(elements)}
    gens = [GroupElement(_swap(m, i), (0,) * m)
            for i in range(m - 1)]
    gens.append(GroupElement(tuple(range(m)), (1,) + (0,) * (m - 1)))
    gens_inv = [inverse(g, ell) for g in gens]
    owner = [-1] * len(elements)
    orbits = []
    for i, g in enumerate(elements):
        if owner[i] >= 0:
            continue
        orbit = [i]
        owner[i] = len(orbits)
        queue = deque([g])
        while queue:
            x = queue.popleft()
            for s, s_inv in zip(gens, gens_inv):
                y = compose(compose(s, x, ell), s_inv, ell)
                j = index[y]
                if owner[j] < 0:
                    owner[j] = len(orbits)
                    orbit.append(j)
                    queue.append(y)
        orbits.append(tuple(orbit))
    labels = []
    for orb in orbits:
        labs = {class_label(elements[j], ell) for j in orb}
        if len(labs) != 1:
            raise InvariantViolation("conjugacy orbit carries several colored cycle types",
                                     labels=sorted(lab.to_string() for lab in labs))
        labels.append(labs.pop())
    if len(set(labels)) != len(labels):
        raise InvariantViolation("two conjugacy orbits share a colored cycle type")
    return BruteForceGroup(m, ell, elements, tuple(orbits), tuple(labels), tuple(owner))


def _swap(m, i):
    p = list(range(m))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)

"""Partitions, l-partitions and the order / involution calculus on them.

Conventions
-----------
* A :class:`Partition` is a weakly decreasing tuple of positive integers.
* A :class:`MultiPartition` is a tuple of ``level`` partitions.  Component ``k``
  (1-based) is also called color ``k - 1`` when the same tuple labels a conjugacy class.
* ``tot(lam, n)`` lists the parts of each component in *reverse* order, padded to ``n``
  entries per block, so every block is weakly increasing.
* The block width ``n`` defaults to ``m`` (the total size) everywhere.
"""

from enum import Enum
from functools import lru_cache
from itertools import product

from .errors import InvalidInput


class Partition(tuple):
    """Integer partition stored without trailing zeros."""

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p != 0)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidInput("partition parts must be weakly decreasing", parts=list(parts))
        if parts and parts[-1] < 0:
            raise InvalidInput("partition parts must be positive", parts=list(parts))
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        return conjugate(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def to_string(self):
        return ",".join(str(p) for p in self) if self else "-"


class MultiPartition(tuple):
    """An l-tuple of partitions."""

    __slots__ = ()

    def __new__(cls, components):
        return super().__new__(cls, tuple(
            c if isinstance(c, Partition) else Partition(c) for c in components))

    @property
    def level(self):
        return len(self)

    @property
    def size(self):
        return sum(c.size for c in self)

    def __repr__(self):
        return f"MultiPartition({self.to_string()!r})"

    def to_string(self):
        return serialize(self)


class Order(str, Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def serialize(lam):
    """``((1,1),()) -> '1,1|-'``; the JSON key format used throughout."""
    return "|".join(Partition(c).to_string() for c in lam)


def parse(text):
    comps = []
    for chunk in text.strip().split("|"):
        chunk = chunk.strip()
        if chunk in ("-", ""):
            comps.append(Partition())
        else:
            try:
                comps.append(Partition(int(x) for x in chunk.split(",")))
            except ValueError:
                raise InvalidInput("cannot parse multipartition", text=text)
    return MultiPartition(comps)


def conjugate(lam):
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def u_statistic(lam):
    return sum(p * (p - 1) // 2 for p in lam)


def a_function(lam):
    ell = len(lam)
    return ell * sum(u_statistic(c) for c in lam) + sum(k * Partition(c).size
                                                      for k, c in enumerate(lam))


def color_weight(lam):
    """``sum_k (k-1)|lam^(k)|``: the grading shift separating lam from its merged norm."""
    return sum(k * Partition(c).size for k, c in enumerate(lam))


def tot(lam, n=None):
    if n is None:
        n = sum(Partition(c).size for c in lam)
    out = []
    for comp in lam:
        if len(comp) > n:
            raise InvalidInput("component has more than n parts", component=list(comp), n=n)
        padded = list(comp) + [0] * (n - len(comp))
        out.extend(reversed(padded))
    return tuple(out)


def norm(lam):
    return Partition(sorted((p for c in lam for p in c), reverse=True))


def dominates(lam, mu):
    """Dominance ``lam >= mu`` for partitions of equal size."""
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def in_positive_cone(v):
    """Membership of ``v`` in the nonzero cone spanned by ``e_i - e_j`` (i < j)."""
    s = 0
    nonzero = False
    for x in v:
        s += x
        if s < 0:
            return False
        nonzero = nonzero or x != 0
    return s == 0 and nonzero


def precedes(lam, mu, n=None):
    """Strict order ``lam < mu`` (the triangle order)."""
    nl, nm = norm(lam), norm(mu)
    if nl != nm:
        return dominates(nm, nl)
    if n is None:
        n = sum(Partition(c).size for c in lam)
    tl, tm = tot(lam, n), tot(mu, n)
    return in_positive_cone([a - b for a, b in zip(tl, tm)])


def compare(lam, mu, n=None):
    lam, mu = MultiPartition(lam), MultiPartition(mu)
    if lam.level != mu.level or lam.size != mu.size:
        raise InvalidInput("compare needs the same (m, l)",
                           lam=serialize(lam), mu=serialize(mu))
    if lam == mu:
        return Order.EQUAL
    if precedes(lam, mu, n):
        return Order.LESS
    if precedes(mu, lam, n):
        return Order.GREATER
    return Order.INCOMPARABLE


def involution_vee(lam):
    return MultiPartition((lam[0],) + tuple(reversed(lam[1:])))


def involution_star(lam):
    return MultiPartition(tuple(reversed(lam)))


def involution_theta(lam):
    return MultiPartition((lam[-1],) + tuple(lam[:-1]))


def componentwise_conjugate(lam):
    return MultiPartition(conjugate(c) for c in lam)


@lru_cache(maxsize=None)
def partitions(k, max_part=None):
    """All partitions of ``k`` in reverse lexicographic order."""
    if max_part is None:
        max_part = k
    if k == 0:
        return (Partition(),)
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def compositions(k, parts):
    if parts == 0:
        if k == 0:
            yield ()
        return
    if parts == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, parts - 1):
            yield (first,) + rest


def sort_key(lam):
    """Canonical order: a-value ascending, then tot (with n = m) lexicographic."""
    return (a_function(lam), tot(lam))


@lru_cache(maxsize=None)
def enumerate_multipartitions(m, ell):
    if m < 0 or ell < 1:
        raise InvalidInput("need m >= 0 and l >= 1", m=m, ell=ell)
    found = []
    for sizes in compositions(m, ell):
        for comps in product(*(partitions(s) for s in sizes)):
            found.append(MultiPartition(comps))
    return tuple(sorted(found, key=sort_key))


def descending_order_key(lam):
    """Total order refining the reverse of the triangle order (largest first).

    ``lam < mu`` forces either a lexicographically smaller norm, or an equal norm and a
    lexicographically larger tot vector, so this key is a linear extension.
    """
    return (tuple(-p for p in norm(lam)), tot(lam))


def latex_partition(lam):
    if not lam:
        return r"\emptyset"
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        out.append(str(lam[i]) if run == 1 else f"{lam[i]}^{run}")
        i = j
    sep = "" if all(p < 10 for p in lam) else ","
    return sep.join(out)


def latex_multipartition(lam):
    return "(" + "".join(f"({latex_partition(c)})" for c in lam) + ")"

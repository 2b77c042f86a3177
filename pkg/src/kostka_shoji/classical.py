"""Classical Kostka-Foulkes polynomials by the charge statistic.

``K_{lam, mu}(q) = sum over semistandard tableaux T of shape lam and content mu of
q^charge(T)``.  Used only as an independent oracle for the degenerate level-one case.
"""

from functools import lru_cache

from .combinatorics import Partition, partitions
from .errors import InvalidInput
from .exact import GradedPolynomial


def semistandard_tableaux(shape, content):
    """All SSYT of ``shape`` with ``content[i]`` entries equal to ``i + 1`` (rows as lists)."""
    shape, content = tuple(shape), tuple(content)
    if sum(shape) != sum(content):
        return []
    out = []

    def fill(letter, current):
        if letter > len(content):
            out.append([list(r) for r in current])
            return
        # place content[letter-1] copies of `letter` as a horizontal strip
        need = content[letter - 1]
        lengths = [len(r) for r in current]

        def strip(row, left, new_lengths):
            if row == len(shape):
                if left == 0:
                    rows = [r + [letter] * (new_lengths[i] - len(r))
                            for i, r in enumerate(current)]
                    fill(letter + 1, rows)
                return
            upper = shape[row] if row == 0 else min(shape[row], lengths[row - 1])
            for new in range(min(upper, lengths[row] + left), lengths[row] - 1, -1):
                strip(row + 1, left - (new - lengths[row]), new_lengths + [new])

        strip(0, need, [])

    fill(1, [[] for _ in shape])
    return out


def reading_word(tableau):
    """Rows read left to right, from the bottom row up (English notation)."""
    return [x for row in reversed(tableau) for x in row]


def charge(word):
    """Lascoux-Schutzenberger charge of a word with partition content."""
    letters = list(word)
    total = 0
    while letters:
        top = max(letters)
        chosen = []
        # rightmost 1, then cyclically leftward for 2, 3, ...
        idx = max(i for i, x in enumerate(letters) if x == 1)
        chosen.append(idx)
        index = 0
        for k in range(2, top + 1):
            cands = [i for i, x in enumerate(letters) if x == k]
            if not cands:
                break
            left = [i for i in cands if i < idx]
            if left:
                idx = max(left)
            else:
                idx = max(cands)
                index += 1
            total += index
            chosen.append(idx)
        chosen = set(chosen)
        letters = [x for i, x in enumerate(letters) if i not in chosen]
    return total


@lru_cache(maxsize=None)
def kostka_foulkes(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise InvalidInput("Kostka-Foulkes needs |lam| = |mu|")
    terms = {}
    for t in semistandard_tableaux(lam, mu):
        c = charge(reading_word(t))
        terms[c] = terms.get(c, 0) + 1
    return GradedPolynomial(terms)


def kostka_foulkes_matrix(m):
    parts = partitions(m)
    return {(lam, mu): kostka_foulkes(lam, mu) for lam in parts for mu in parts}

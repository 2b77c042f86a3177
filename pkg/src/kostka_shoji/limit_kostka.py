"""The Demazure route to K-.

For each label ``lam`` the character ``E_{tot(lam)}(x; q, 0)`` in ``n*l`` variables is
peeled into products of Schur polynomials over the ``l`` variable blocks, and a summand
``V_mu`` found at z-degree ``d`` is regraded to ``q^(l*d + c(lam) - c(mu))`` with
``c = color_weight``.  The resulting matrix has entry ``[W_lam : V_mu]_q`` at
``(row mu, column lam)`` and is compared with the solver's K- after relabeling.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .combinatorics import (MultiPartition, Partition, a_function, color_weight,
                            componentwise_conjugate, enumerate_multipartitions, precedes,
                            serialize, tot)
from .config import Budgets
from .errors import (ConventionError, InvalidInput, InvariantViolation, PeelingError,
                     PositivityError, SymmetryError)
from .exact import GradedPolynomial
from .macdonald import BlockCharacter, nonsym_macdonald_t0


@lru_cache(maxsize=None)
def _ssyt_monomials(lam, n):
    """Content vectors (with multiplicity) of SSYT of shape ``lam`` with entries <= n."""
    cells = [(r, c) for r, length in enumerate(lam) for c in range(length)]
    counts = {}
    filling = {}

    def rec(k, content):
        if k == len(cells):
            key = tuple(content)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            filling[(r, c)] = v
            content[v - 1] += 1
            rec(k + 1, content)
            content[v - 1] -= 1
        filling.pop((r, c), None)

    rec(0, [0] * n)
    return tuple(sorted(counts.items(), reverse=True))


def schur_polynomial(lam, n, offset=0, n_vars=None):
    """``s_lam`` in variables ``x_{offset+1}..x_{offset+n}`` of an ``n_vars``-variable ring."""
    lam = Partition(lam)
    if len(lam) > n:
        raise InvalidInput("partition has more parts than variables", lam=list(lam), n=n)
    n_vars = n if n_vars is None else n_vars
    terms = {}
    for content, mult in _ssyt_monomials(tuple(lam), n):
        exps = [0] * n_vars
        exps[offset:offset + n] = content
        terms[tuple(exps)] = mult
    return BlockCharacter(n_vars, terms)


@lru_cache(maxsize=None)
def _block_schur_terms(mu, n):
    """Monomials of ``prod_k s_{mu^(k)}`` in block ``k`` as ``((exps, mult), ...)``."""
    per_block = [_ssyt_monomials(tuple(comp), n) for comp in mu]
    out = [((), 1)]
    for block in per_block:
        out = [(e + content, c * mult) for e, c in out for content, mult in block]
    return tuple(out)


def block_schur(mu, n):
    return BlockCharacter(n * len(mu), dict(_block_schur_terms(MultiPartition(mu), n)))


def _label(exps, n, ell):
    return MultiPartition(Partition(sorted(exps[k * n:(k + 1) * n], reverse=True))
                          for k in range(ell))


def _dominant(exps, n, ell):
    return all(all(exps[k * n + i] >= exps[k * n + i + 1] for i in range(n - 1))
               for k in range(ell))


@dataclass
class IsotypicDecomposition:
    multiplicities: dict = field(default_factory=dict)   # MultiPartition -> GradedPolynomial

    def to_json(self):
        return {serialize(mu): p.to_json() for mu, p in sorted(
            self.multiplicities.items(), key=lambda kv: serialize(kv[0]))}


def check_block_symmetric(f, n, ell):
    # adjacent transpositions inside a block generate the block symmetric group
    coeffs = dict(f.items())
    for exps, c in coeffs.items():
        for k in range(ell):
            for i in range(k * n, (k + 1) * n - 1):
                if exps[i] == exps[i + 1]:
                    continue
                swapped = list(exps)
                swapped[i], swapped[i + 1] = exps[i + 1], exps[i]
                if coeffs.get(tuple(swapped)) != c:
                    raise SymmetryError("character is not symmetric within the variable blocks",
                                        monomial=list(exps))


def block_schur_decompose(f, n, ell, reverse_ties=False):
    """Peel ``f`` into ``sum_mu m_mu(q) prod_k s_{mu^(k)}``."""
    if f.n_vars != n * ell:
        raise InvalidInput("character has the wrong number of variables",
                           n_vars=f.n_vars, n=n, ell=ell)
    check_block_symmetric(f, n, ell)
    residue = {e: c for e, c in f.items()}
    out = {}
    while residue:
        heads = [e for e in residue if _dominant(e, n, ell)]
        if not heads:
            raise PeelingError("nonzero residue without a dominant monomial",
                               monomials=[list(e) for e in list(residue)[:5]])
        labels = {e: _label(e, n, ell) for e in heads}
        maximal = [e for e in heads
                   if not any(precedes(labels[e], labels[o], n) for o in heads if o != e)]
        maximal.sort(reverse=reverse_ties)
        head = maximal[0]
        mu = labels[head]
        coeff = residue[head]
        if not coeff.is_nonnegative_integral():
            raise PositivityError("negative multiplicity while peeling", label=serialize(mu),
                                  value=str(coeff))
        out[mu] = out.get(mu, GradedPolynomial()) + coeff
        for exps, mult in _block_schur_terms(mu, n):
            new = residue.get(exps, GradedPolynomial()) - coeff * mult
            if new:
                residue[exps] = new
            else:
                residue.pop(exps, None)
    return IsotypicDecomposition(out)


def phi_regrade(dec, lam, ell):
    """Column ``lam`` of the K- candidate: ``{mu: GradedPolynomial}``."""
    c_lam = color_weight(lam)
    column = {}
    for mu, poly in dec.multiplicities.items():
        shift = c_lam - color_weight(mu)
        terms = {}
        for d, c in poly.items():
            e = ell * d + shift
            if e < 0:
                raise ConventionError("regraded degree is negative", lam=serialize(lam),
                                      mu=serialize(mu), degree=d)
            terms[e] = c
        column[mu] = GradedPolynomial(terms)
    return column


def demazure_column(lam, n, ell, budgets=None):
    char = nonsym_macdonald_t0(tot(lam, n), budgets=budgets)
    dec = block_schur_decompose(char, n, ell)
    return phi_regrade(dec, lam, ell), char, dec


@dataclass(frozen=True)
class KminusCandidate:
    m: int
    ell: int
    n: int
    index: tuple
    entries: tuple          # entries[i][j] = [W_{index[j]} : V_{index[i]}]_q

    def entry(self, row, col):
        return self.entries[self.index.index(row)][self.index.index(col)]


def kminus_demazure(m, ell, n=None, jobs=1, budgets=None):
    n = m if n is None else n
    if n < m:
        raise InvalidInput("block width n must satisfy n >= m", n=n, m=m)
    budgets = budgets or Budgets()
    index = enumerate_multipartitions(m, ell)

    def column(lam):
        return demazure_column(lam, n, ell, budgets)[0]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            cols = list(pool.map(column, index))
    else:
        cols = [column(lam) for lam in index]
    zero = GradedPolynomial()
    entries = tuple(tuple(cols[j].get(mu, zero) for j in range(len(index))) for mu in index)
    cand = KminusCandidate(m, ell, n, index, entries)
    failures = candidate_invariants(cand)
    if failures:
        raise InvariantViolation("Demazure-route K- violates head/socle/positivity invariants",
                                 failures=failures[:10])
    return cand


def socle_label(m, ell):
    return MultiPartition((Partition((1,) * m),) + (Partition(),) * (ell - 1))


def candidate_invariants(cand):
    """Head, socle, positivity, triangularity and degree-zero checks (list of failures)."""
    failures = []
    socle = socle_label(cand.m, cand.ell)
    for j, lam in enumerate(cand.index):
        if cand.entry(lam, lam) != GradedPolynomial.one():
            failures.append({"check": "head", "col": serialize(lam)})
        s = cand.entry(socle, lam)
        if not s.is_monic() or s.degree != a_function(lam):
            failures.append({"check": "socle", "col": serialize(lam), "value": str(s)})
        for i, mu in enumerate(cand.index):
            p = cand.entries[i][j]
            if not p.is_nonnegative_integral():
                failures.append({"check": "positivity", "row": serialize(mu),
                                 "col": serialize(lam)})
            if p and mu != lam and not precedes(mu, lam, cand.n):
                failures.append({"check": "triangularity", "row": serialize(mu),
                                 "col": serialize(lam)})
            if mu != lam and p.coefficient(0):
                failures.append({"check": "degree_zero", "row": serialize(mu),
                                 "col": serialize(lam)})
    return failures


RELABELINGS = ("identity", "componentwise_conjugation")

# the identification that matches the solver on every fixture
FROZEN_RELABELING = "identity"


def relabel(lam, how):
    if how == "identity":
        return lam
    if how == "componentwise_conjugation":
        return componentwise_conjugate(lam)
    raise InvalidInput("unknown relabeling", relabeling=how)


@dataclass
class CrossCheckVerdict:
    m: int
    ell: int
    equal: bool
    relabeling: str
    tried: dict
    diff: list

    def to_json(self):
        return {"m": self.m, "ell": self.ell, "equal": self.equal,
                "relabeling": self.relabeling, "tried": self.tried, "diff": self.diff}


def compare_with_solver(cand, solution, how):
    diff = []
    for mu in cand.index:
        for lam in cand.index:
            got = cand.entry(mu, lam)
            want = solution.kminus(relabel(mu, how), relabel(lam, how))
            if got != want:
                diff.append({"row": serialize(mu), "col": serialize(lam),
                             "demazure": str(got), "lusztig_shoji": str(want)})
    return diff


def cross_check(m, ell, solution=None, candidate=None, jobs=1, budgets=None):
    """Try the frozen relabeling first, then the alternative; report which one matched."""
    if solution is None:
        from .lusztig_shoji import solve
        from .molien import omega_matrix
        solution = solve(omega_matrix(m, ell, budgets))
    if candidate is None:
        candidate = kminus_demazure(m, ell, jobs=jobs, budgets=budgets)
    order = (FROZEN_RELABELING,) + tuple(r for r in RELABELINGS if r != FROZEN_RELABELING)
    tried = {}
    first_diff = None
    for how in order:
        diff = compare_with_solver(candidate, solution, how)
        tried[how] = not diff
        if first_diff is None:
            first_diff = diff
    equal = tried[FROZEN_RELABELING]
    return CrossCheckVerdict(m, ell, equal, FROZEN_RELABELING, tried,
                             [] if equal else first_diff)

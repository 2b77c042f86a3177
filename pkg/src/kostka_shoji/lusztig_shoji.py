"""Block LDU solver for ``(K+)^sigma Lambda tK- = Omega``.

With the index grouped into equal-a blocks ``B_1 < ... < B_r`` (a ascending),
``U = (K+)^sigma`` is block upper unitriangular, ``L = tK-`` block lower unitriangular and
``Lambda`` block diagonal.  Elimination runs from the top block down:

    Lambda_rr = Omega_rr,  U_ir = Omega_ir Lambda_rr^-1,  L_rj = Lambda_rr^-1 Omega_rj,

followed by the Schur-complement update ``Omega -= U_.r Lambda_rr L_r.``.
"""

from dataclasses import dataclass, field

from .combinatorics import a_function, involution_vee, serialize
from .errors import InvalidInput, NonPolynomialError, PositivityError
from .exact import FieldMatrix, GradedPolynomial, RationalFunction, matrix_inverse


@dataclass(frozen=True)
class KostkaSolution:
    index: tuple
    a_values: tuple
    k_plus: tuple           # k_plus[i][j] = K+_{index[i], index[j]}
    k_minus: tuple
    lam: FieldMatrix
    residual_ok: bool = None
    meta: dict = field(default_factory=dict, compare=False)

    def kplus(self, alpha, beta):
        return self.k_plus[self.index.index(alpha)][self.index.index(beta)]

    def kminus(self, alpha, beta):
        return self.k_minus[self.index.index(alpha)][self.index.index(beta)]

    def matrix(self, sign):
        rows = self.k_plus if sign == "plus" else self.k_minus
        return {(self.index[i], self.index[j]): rows[i][j]
                for i in range(len(self.index)) for j in range(len(self.index))}


def sigma_permute(mat, index):
    """``(M^sigma)[lam, mu] = M[lam^vee, mu^vee]`` for a list-of-rows matrix over ``index``."""
    pos = {lab: k for k, lab in enumerate(index)}
    perm = [pos[involution_vee(lab)] for lab in index]
    return tuple(tuple(mat[perm[i]][perm[j]] for j in range(len(index)))
                 for i in range(len(index)))


def _blocks(index, a_values):
    blocks = {}
    for k, a in enumerate(a_values):
        blocks.setdefault(a, []).append(k)
    return [blocks[a] for a in sorted(blocks)]


def solve(omega, order=None, check_residual=False):
    """Unique solution of the matrix equation for an :class:`OmegaMatrix`.

    ``order`` optionally gives another a-compatible ordering of the labels (a tie-break
    change); the result is always reported in ``omega.index`` order.
    """
    index = tuple(omega.index)
    if order is not None:
        order = tuple(order)
        if sorted(map(serialize, order)) != sorted(map(serialize, index)):
            raise InvalidInput("order must be a permutation of the index")
        if any(a_function(x) > a_function(y) for x, y in zip(order, order[1:])):
            raise InvalidInput("order must be a-compatible (a ascending)")
    work_index = order or index
    src = [index.index(lab) for lab in work_index]
    a_values = tuple(a_function(lab) for lab in work_index)
    n = len(work_index)
    work = [[omega.entries[src[i], src[j]] for j in range(n)] for i in range(n)]
    zero = RationalFunction((), (1,))
    one = RationalFunction.constant(1)
    upper = [[one if i == j else zero for j in range(n)] for i in range(n)]
    lower = [[one if i == j else zero for j in range(n)] for i in range(n)]
    lam = [[zero] * n for _ in range(n)]
    blocks = _blocks(work_index, a_values)
    for b in range(len(blocks) - 1, -1, -1):
        blk = blocks[b]
        rest = [k for prev in blocks[:b] for k in prev]
        block_mat = FieldMatrix([work_index[k] for k in blk], [work_index[k] for k in blk],
                                [[work[i][j] for j in blk] for i in blk])
        inv = matrix_inverse(block_mat, label={"a": a_values[blk[0]]}).entries
        for x, i in enumerate(blk):
            for y, j in enumerate(blk):
                lam[i][j] = work[i][j]
        for i in rest:
            for y, j in enumerate(blk):
                upper[i][j] = _dot([work[i][k] for k in blk], [inv[x][y] for x in range(len(blk))])
                lower[j][i] = _dot([inv[y][x] for x in range(len(blk))], [work[k][i] for k in blk])
        for i in rest:
            for j in rest:
                acc = zero
                for x, k in enumerate(blk):
                    if upper[i][k].num:
                        for y, l in enumerate(blk):
                            if lam[k][l].num and lower[l][j].num:
                                acc = acc + upper[i][k] * lam[k][l] * lower[l][j]
                if acc.num:
                    work[i][j] = work[i][j] - acc
    # back to canonical order
    inv_src = [work_index.index(lab) for lab in index]
    U = [[upper[inv_src[i]][inv_src[j]] for j in range(n)] for i in range(n)]
    L = [[lower[inv_src[i]][inv_src[j]] for j in range(n)] for i in range(n)]
    Lam = [[lam[inv_src[i]][inv_src[j]] for j in range(n)] for i in range(n)]
    k_plus_rf = sigma_permute(U, index)
    k_minus_rf = tuple(tuple(L[j][i] for j in range(n)) for i in range(n))
    k_plus = _to_polys(k_plus_rf, index, "plus")
    k_minus = _to_polys(k_minus_rf, index, "minus")
    sol = KostkaSolution(index, tuple(a_function(lab) for lab in index), k_plus, k_minus,
                         FieldMatrix(index, index, Lam))
    if check_residual:
        report = residual_check(sol, omega)
        sol = KostkaSolution(sol.index, sol.a_values, sol.k_plus, sol.k_minus, sol.lam,
                             report["ok"], {"residual": report})
    return sol


def _dot(xs, ys):
    acc = RationalFunction((), (1,))
    for x, y in zip(xs, ys):
        if x.num and y.num:
            acc = acc + x * y
    return acc


def _to_polys(mat, index, sign):
    out = []
    for i, row in enumerate(mat):
        out_row = []
        for j, entry in enumerate(row):
            if not entry.is_polynomial():
                raise NonPolynomialError("Kostka entry is not a polynomial", sign=sign,
                                         row=serialize(index[i]), col=serialize(index[j]),
                                         value=str(entry))
            poly = entry.to_graded()
            if not poly.is_nonnegative_integral():
                raise PositivityError("Kostka entry has a negative or fractional coefficient",
                                      sign=sign, row=serialize(index[i]),
                                      col=serialize(index[j]), value=str(poly))
            out_row.append(poly)
        out.append(tuple(out_row))
    return tuple(out)


def residual_check(sol, omega):
    """Exact check of ``(K+)^sigma Lambda tK- = Omega`` and of the delta constraints."""
    index = sol.index
    n = len(index)

    def rf(p):
        return RationalFunction.from_graded(p)

    U = sigma_permute([[rf(p) for p in row] for row in sol.k_plus], index)
    L = [[rf(sol.k_minus[j][i]) for j in range(n)] for i in range(n)]
    lam = sol.lam.entries
    mismatches = []
    for i in range(n):
        left = [_dot([U[i][k] for k in range(n)], [lam[k][j] for k in range(n)])
                for j in range(n)]
        for j in range(n):
            value = _dot(left, [L[k][j] for k in range(n)])
            if value != omega.entries[i, j]:
                mismatches.append({"row": serialize(index[i]), "col": serialize(index[j])})
    delta = []
    a = sol.a_values
    vee_a = [a_function(involution_vee(lab)) for lab in index]
    for i in range(n):
        for j in range(n):
            want = GradedPolynomial.one() if i == j else GradedPolynomial()
            if a[i] >= a[j] and sol.k_minus[i][j] != want:
                delta.append({"sign": "minus", "row": serialize(index[i]),
                              "col": serialize(index[j])})
            if vee_a[i] >= vee_a[j] and sol.k_plus[i][j] != want:
                delta.append({"sign": "plus", "row": serialize(index[i]),
                              "col": serialize(index[j])})
            if a[i] != a[j] and lam[i][j].num:
                delta.append({"sign": "lambda", "row": serialize(index[i]),
                              "col": serialize(index[j])})
    return {"ok": not mismatches and not delta, "mismatches": mismatches,
            "constraint_violations": delta}


def rank_one_label(i, ell):
    """``{i}``: the single box sits in component ``l - i + 1`` (1-based)."""
    from .combinatorics import MultiPartition
    comps = [()] * ell
    comps[ell - i] = (1,)
    return MultiPartition(comps)


def rank_one_expected(ell):
    """Closed forms at m = 1 as ``{(sign, i, j): GradedPolynomial}``."""
    out = {}
    for i in range(1, ell + 1):
        for j in range(1, ell + 1):
            out[("minus", i, j)] = (GradedPolynomial.monomial(i - j) if i >= j
                                    else GradedPolynomial())
            if i == j:
                plus = GradedPolynomial.one()
            elif i == ell and j == ell - 1:
                plus = GradedPolynomial.monomial(1)
            elif i < ell - 1 and j == ell - 1:
                plus = GradedPolynomial.monomial(i + 1)
            else:
                plus = GradedPolynomial()
            out[("plus", i, j)] = plus
    return out


def closed_form_check_rank1(ell, solution=None):
    """Compare the m = 1 solver output with the closed forms; returns counterexamples."""
    if ell < 2:
        raise InvalidInput("closed forms need l >= 2", ell=ell)
    if solution is None:
        from .molien import omega_matrix
        solution = solve(omega_matrix(1, ell))
    failures = []
    for (sign, i, j), want in rank_one_expected(ell).items():
        got = (solution.kplus if sign == "plus" else solution.kminus)(
            rank_one_label(i, ell), rank_one_label(j, ell))
        if got != want:
            failures.append({"sign": sign, "i": i, "j": j, "expected": str(want),
                             "got": str(got)})
    return failures

"""
Exact linear algebra over the rationals.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Vectors are
lists.  Everything here is deliberately small and dense: the modules we handle
have dimension at most a few hundred.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]
Vector = list[Fraction]


def _f(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def to_fraction_matrix(a) -> Matrix:
    return [[_f(x) for x in row] for row in a]


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[Fraction(0)] * n for _ in range(m)]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)] if a else []


def _plain(x):
    # ints are much faster than Fractions in inner loops
    return x.numerator if isinstance(x, Fraction) and x.denominator == 1 else x


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ncols = len(b[0]) if b else 0
    brows = [[(j, _plain(y)) for j, y in enumerate(row) if y] for row in b]
    out = []
    for row in a:
        acc = [0] * ncols
        for k, x in enumerate(row):
            if x:
                x = _plain(x)
                for j, y in brows[k]:
                    acc[j] += x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: Sequence) -> Vector:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def scalar_shift(a: Matrix, c) -> Matrix:
    """``a - c * I``."""
    c = _f(c)
    return [[x - c if i == j else x for j, x in enumerate(row)] for i, row in enumerate(a)]


def matpow(a: Matrix, k: int) -> Matrix:
    out = identity_matrix(len(a))
    base = a
    while k:
        if k & 1:
            out = matmul(out, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return out


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def rref(rows: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    m = [[_f(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        if inv != 1:
            pr = m[r] = [x * inv for x in pr]
        nz = [j for j in range(c, ncols) if pr[j] != 0]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f != 0:
                    row = m[i]
                    for j in nz:
                        row[j] -= f * pr[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(a: Sequence[Sequence]) -> int:
    return len(rref(a)[1])


def nullspace(a: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Basis of {v : a v = 0}."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red, pivots = rref(a, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def span(vectors: Sequence[Sequence], dim: int) -> list[Vector]:
    """Canonical (row reduced) basis of the span."""
    return rref(list(vectors), dim)[0] if vectors else []


def in_span(basis_rref: tuple[Matrix, list[int]], v: Sequence) -> bool:
    """Membership test against an ``rref`` result."""
    rows, pivots = basis_rref
    w = [_f(x) for x in v]
    for row, pc in zip(rows, pivots):
        if w[pc] != 0:
            f = w[pc]
            w = [x - f * y for x, y in zip(w, row)]
    return not any(w)


def intersect(u: Sequence[Sequence], w: Sequence[Sequence], dim: int) -> list[Vector]:
    """Intersection of two subspaces given by spanning sets."""
    if not u or not w:
        return []
    # solve sum a_i u_i = sum b_j w_j
    cols = [list(x) for x in u] + [[-y for y in x] for x in w]
    a = transpose(cols)
    sols = nullspace(a, len(cols))
    vecs = []
    for s in sols:
        v = [Fraction(0)] * dim
        for coef, x in zip(s[: len(u)], u):
            if coef:
                for k in range(dim):
                    v[k] += coef * x[k]
        vecs.append(v)
    return span(vecs, dim)


def image(a: Matrix) -> list[Vector]:
    """Column space of ``a`` as a row-reduced basis."""
    return span(transpose(a), len(a))


def kernel_of_stack(mats: Sequence[Matrix], dim: int) -> list[Vector]:
    """Common kernel of several square matrices."""
    rows = [r for m in mats for r in m]
    return nullspace(rows, dim) if rows else [v for v in identity_matrix(dim)]


def restrict(mat: Matrix, basis: Sequence[Vector]) -> Matrix:
    """Matrix of ``mat`` on an invariant subspace with the given basis.

    Raises ``ValueError`` if the subspace is not invariant.
    """
    dim = len(mat)
    k = len(basis)
    if k == 0:
        return []
    # coordinates: solve basis^T x = mat b
    bt = transpose([list(b) for b in basis])
    out_cols = []
    for b in basis:
        y = matvec(mat, b)
        aug = [bt[i] + [y[i]] for i in range(dim)]
        red, piv = rref(aug, k + 1)
        if k in piv:
            raise ValueError("subspace is not invariant")
        x = [Fraction(0)] * k
        for row, pc in zip(red, piv):
            x[pc] = row[k]
        out_cols.append(x)
    return transpose(out_cols)


def quotient(mat: Matrix, sub: Sequence[Vector]) -> tuple[Matrix, list[int]]:
    """Matrix of ``mat`` on ``V / sub`` for an invariant ``sub``.

    The quotient basis is the images of standard basis vectors at the
    non-pivot columns of the row reduced ``sub``; these indices are returned.
    """
    dim = len(mat)
    red = rref(list(sub), dim) if sub else ([], [])
    rows, pivots = red
    comp = [c for c in range(dim) if c not in set(pivots)]
    q = [[Fraction(0)] * len(comp) for _ in comp]
    for j, c in enumerate(comp):
        y = [row[c] for row in mat]
        # reduce y modulo sub
        for row, pc in zip(rows, pivots):
            f = y[pc]
            if f:
                y = [a - f * b for a, b in zip(y, row)]
        for i, cc in enumerate(comp):
            q[i][j] = y[cc]
        assert all(y[pc] == 0 for pc in pivots)
    return q, comp


class Echelon:
    """Incrementally grown echelon basis, for fast membership tests."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: list[tuple[int, Vector]] = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence) -> Vector:
        w = [_f(x) for x in v]
        for pc, row in self.rows:
            f = w[pc]
            if f:
                for k in range(pc, self.dim):
                    if row[k]:
                        w[k] -= f * row[k]
        return w

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        w = self.reduce(v)
        lead = next((k for k, x in enumerate(w) if x), None)
        if lead is None:
            return False
        inv = 1 / w[lead]
        w = [x * inv for x in w]
        self.rows.append((lead, w))
        self.rows.sort(key=lambda t: t[0])
        return True

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def basis(self) -> list[Vector]:
        return [row for _, row in self.rows]


def cyclic_span(gens: Sequence[Matrix], vectors: Sequence[Sequence], dim: int) -> list[Vector]:
    """Smallest subspace containing ``vectors`` and stable under ``gens``."""
    ech = Echelon(dim)
    queue = []
    for v in vectors:
        if ech.add(v):
            queue.append([_f(x) for x in v])
    while queue:
        v = queue.pop()
        for g in gens:
            y = matvec(g, v)
            if ech.add(y):
                queue.append(y)
        if len(ech) == dim:
            break
    return ech.basis()


def largest_invariant_subspace(gens: Sequence[Matrix], basis: Sequence[Vector], dim: int) -> list[Vector]:
    """Largest subspace of span(basis) stable under every matrix in ``gens``."""
    cur = span(basis, dim)
    while cur:
        # annihilator of the current space
        ann = nullspace(cur, dim)
        if not ann:
            return cur
        bt = transpose(cur)
        rows = []
        for g in gens:
            gb = matmul(g, bt)
            rows.extend(matmul(ann, gb))
        coeffs = nullspace(rows, len(cur))
        if len(coeffs) == len(cur):
            return cur
        new = [[sum((c * x[k] for c, x in zip(cv, cur) if c), Fraction(0)) for k in range(dim)]
               for cv in coeffs]
        cur = span(new, dim)
    return []


def algebra_dimension_mod_p(gens: Sequence[Matrix], prime: int = 1_000_003) -> int:
    """Dimension over F_p of the unital algebra generated by integer matrices.

    A value of d^2 certifies irreducibility over Q as well, since the words
    spanning it are then independent over Q too.
    """
    import numpy as np

    d = len(gens[0]) if gens else 0
    if d == 0:
        return 0
    mats = []
    for g in gens:
        for row in g:
            for x in row:
                if _f(x).denominator != 1:
                    raise ValueError("algebra_dimension_mod_p needs integer matrices")
        mats.append(np.array([[int(x) % prime for x in row] for row in g], dtype=np.int64))
    target = d * d
    pivots: list[int] = []
    rows: list = []

    def insert(m) -> bool:
        v = m.reshape(-1).copy()
        for pc, r in zip(pivots, rows):
            if v[pc]:
                v = (v - v[pc] * r) % prime
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        lead = int(nz[0])
        v = (v * pow(int(v[lead]), prime - 2, prime)) % prime
        # keep rows fully reduced so that reduction order does not matter
        for k, r in enumerate(rows):
            if r[lead]:
                rows[k] = (r - r[lead] * v) % prime
        pivots.append(lead)
        rows.append(v)
        return True

    eye = np.eye(d, dtype=np.int64)
    insert(eye)
    queue = [eye]
    while queue and len(rows) < target:
        x = queue.pop()
        for g in mats:
            y = (x @ g) % prime
            if insert(y):
                queue.append(y)
                if len(rows) == target:
                    break
    return len(rows)

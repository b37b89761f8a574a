"""Exact linear algebra over the integers and over prime fields.

The central object is a sparse integer eliminator that diagonalizes a
matrix by unimodular row and column operations, favouring pivots of
smallest absolute value (unit pivots first) with a Markowitz-style fill
tie-break.  That keeps coefficient growth tame on the degreewise
relation matrices this package produces, where almost every row has a
unit entry.

The eliminator can carry a "passenger" row that receives exactly the
column operations applied to the matrix but never takes part in row
operations or pivoting.  Expressing a vector in the final column basis
this way is what turns Smith normal form into element orders in a
quotient lattice.

A deliberately naive dense Smith normal form and a triangular-basis
membership test are provided as independent second opinions; they share
no code with the sparse engine.
"""

from __future__ import annotations

import heapq
from math import gcd

import numpy as np

SparseRow = dict  # {column: coefficient}

#: Primes at or above this bound are rejected by the modular rank
#: routines; nothing at desk scale needs them.
MAX_FIELD_PRIME = 1 << 61


def _nearest_quotient(a: int, b: int) -> int:
    """Integer quotient rounding to nearest, so remainders stay small."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


class _Eliminator:
    """Unimodular diagonalization of a sparse integer matrix."""

    def __init__(self, rows, passenger=None):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        self.units: dict[int, int] = {}
        self.unit_rows: set[int] = set()
        self.passenger = dict(passenger) if passenger is not None else None
        for rid, row in enumerate(rows):
            r = {c: v for c, v in row.items() if v}
            if not r:
                continue
            self.rows[rid] = r
            u = 0
            for c, v in r.items():
                self.cols.setdefault(c, set()).add(rid)
                if v == 1 or v == -1:
                    u += 1
            self.units[rid] = u
            if u:
                self.unit_rows.add(rid)
        self.diag: list[tuple[int, int]] = []

    def _axpy(self, dst: int, src: int, k: int) -> None:
        """rows[dst] += k * rows[src], maintaining all indexes."""
        row_d = self.rows[dst]
        units = 0
        cols = self.cols
        for c, v in self.rows[src].items():
            old = row_d.get(c, 0)
            new = old + k * v
            if old == 1 or old == -1:
                units -= 1
            if new:
                row_d[c] = new
                if not old:
                    cols[c].add(dst)
                if new == 1 or new == -1:
                    units += 1
            elif old:
                del row_d[c]
                cols[c].discard(dst)
        if not row_d:
            del self.rows[dst]
            self.units.pop(dst, None)
            self.unit_rows.discard(dst)
            return
        u = self.units[dst] + units
        self.units[dst] = u
        if u:
            self.unit_rows.add(dst)
        else:
            self.unit_rows.discard(dst)

    def _col_axpy(self, dst_col: int, src_col: int, k: int) -> None:
        """column[dst_col] += k * column[src_col], including the passenger."""
        for rid in list(self.cols.get(src_col, ())):
            row = self.rows[rid]
            v = row[src_col]
            old = row.get(dst_col, 0)
            new = old + k * v
            delta = 0
            if old == 1 or old == -1:
                delta -= 1
            if new:
                row[dst_col] = new
                if not old:
                    self.cols.setdefault(dst_col, set()).add(rid)
                if new == 1 or new == -1:
                    delta += 1
            elif old:
                del row[dst_col]
                self.cols[dst_col].discard(rid)
            if delta:
                u = self.units[rid] + delta
                self.units[rid] = u
                if u:
                    self.unit_rows.add(rid)
                else:
                    self.unit_rows.discard(rid)
        if self.passenger is not None:
            pv = self.passenger.get(src_col, 0)
            if pv:
                new = self.passenger.get(dst_col, 0) + k * pv
                if new:
                    self.passenger[dst_col] = new
                else:
                    self.passenger.pop(dst_col, None)

    def _pick_pivot(self) -> tuple[int, int]:
        if self.unit_rows:
            best = None
            for rid in heapq.nsmallest(24, self.unit_rows):
                row = self.rows[rid]
                rlen = len(row) - 1
                for c, v in row.items():
                    if v == 1 or v == -1:
                        score = rlen * (len(self.cols[c]) - 1)
                        key = (score, rid, c)
                        if best is None or key < best:
                            best = key
            return best[1], best[2]
        best = None
        for rid, row in self.rows.items():
            rlen = len(row) - 1
            for c, v in row.items():
                key = (abs(v), rlen * (len(self.cols[c]) - 1), rid, c)
                if best is None or key < best:
                    best = key
        return best[2], best[3]

    def _process_pivot(self, rid: int, col: int) -> None:
        rows, cols = self.rows, self.cols
        while True:
            # Column phase: clear every other entry in the pivot column.
            # A nonzero remainder means the pivot did not divide an entry;
            # the remainder is strictly smaller, so adopt it as the pivot
            # and start over.  Terminates because |pivot| shrinks.
            restart = False
            val = rows[rid][col]
            for r in sorted(cols[col] - {rid}):
                q = _nearest_quotient(rows[r][col], val)
                if q:
                    self._axpy(r, rid, -q)
                rem = self.rows.get(r, {}).get(col, 0)
                if rem:
                    rid = r
                    restart = True
                    break
            if restart:
                continue
            # Row phase: the pivot column now holds only the pivot, so
            # column operations touch nothing but the pivot row (and the
            # passenger).  A remainder moves the pivot to a new column,
            # which may be dirty again.
            val = rows[rid][col]
            moved = False
            for c in sorted(rows[rid]):
                if c == col:
                    continue
                q = _nearest_quotient(rows[rid][c], val)
                if q:
                    self._col_axpy(c, col, -q)
                if rows[rid].get(c, 0):
                    col = c
                    moved = True
                    break
            if moved:
                continue
            break
        val = rows[rid][col]
        self.diag.append((col, abs(val)))
        del rows[rid]
        self.units.pop(rid, None)
        self.unit_rows.discard(rid)
        cols[col].discard(rid)
        if not cols[col]:
            del cols[col]

    def run(self):
        while self.rows:
            rid, col = self._pick_pivot()
            self._process_pivot(rid, col)
        return self.diag, self.passenger


def _divisibility_chain(values) -> list[int]:
    """Redistribute a diagonal multiset into chained invariant factors."""
    values = [abs(v) for v in values]
    nontrivial = sorted(v for v in values if v > 1)
    ones = sum(1 for v in values if v == 1)
    changed = True
    while changed:
        changed = False
        for i in range(len(nontrivial)):
            for j in range(i + 1, len(nontrivial)):
                a, b = nontrivial[i], nontrivial[j]
                if b % a:
                    g = gcd(a, b)
                    nontrivial[i], nontrivial[j] = g, a // g * b
                    changed = True
        nontrivial.sort()
    return [1] * ones + nontrivial


def smith_normal_form(rows, ncols: int | None = None) -> tuple[list[int], int]:
    """Invariant factors d1 | d2 | ... | d_rank (all positive) and rank.

    `rows` is an iterable of sparse rows; `ncols` is accepted for
    interface symmetry but not needed by the elimination.
    """
    diag, _ = _Eliminator(rows).run()
    invs = _divisibility_chain(v for _, v in diag)
    return invs, len(diag)


def rank_exact(rows) -> int:
    """Rank over the rationals, by exact integer elimination."""
    diag, _ = _Eliminator(rows).run()
    return len(diag)


def order_in_quotient(rows, vector: SparseRow):
    """Order of a vector in Z^ncols modulo the row lattice of `rows`.

    Carries the vector through the column operations of the elimination;
    in the final basis the lattice is spanned by d_j * e_j over the pivot
    columns, so the order is lcm(d_j / gcd(d_j, c_j)), or None (infinite)
    when the vector has support outside the pivot columns.
    """
    diag, passenger = _Eliminator(rows, passenger=vector).run()
    pivot = dict(diag)
    order = 1
    for c, coeff in passenger.items():
        d = pivot.get(c)
        if d is None:
            return None
        step = d // gcd(d, coeff)
        order = order * step // gcd(order, step)
    return order


# ---------------------------------------------------------------------------
# Modular rank
# ---------------------------------------------------------------------------


def rank_mod_p(rows, ncols: int, p: int) -> int:
    """Rank over F_p by Gaussian elimination.

    Dense int64 arithmetic when p fits comfortably (p < 2^31, so products
    stay inside int64); a sparse big-int path otherwise.  Primes at or
    above 2^61 are rejected: they are beyond desk scale.
    """
    if p >= MAX_FIELD_PRIME:
        raise ValueError(f"field primes must be < 2^61, got {p}")
    if p < 2:
        raise ValueError("field characteristic must be a prime")
    nrows = sum(1 for r in rows if r)
    if p < (1 << 31) and nrows * ncols <= 120_000_000:
        return _rank_dense_mod_p(rows, ncols, p)
    return _rank_sparse_mod_p(rows, p)


def _rank_dense_mod_p(rows, ncols: int, p: int) -> int:
    rows = [r for r in rows if r]
    nrows = len(rows)
    if not nrows:
        return 0
    A = np.zeros((nrows, ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            A[i, c] = v % p
    if ncols > nrows:
        A = np.ascontiguousarray(A.T)
    m, n = A.shape
    r = 0
    for c in range(n):
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = A[r] * inv % p
        rest = r + 1 + np.flatnonzero(A[r + 1 :, c])
        if rest.size:
            A[rest] = (A[rest] - A[rest, c, None] * A[r]) % p
        r += 1
        if r == m:
            break
    return r


def _rank_sparse_mod_p(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        work = {c: v % p for c, v in row.items() if v % p}
        while work:
            lead = min(work)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(work[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in work.items()}
                break
            f = work[lead]
            for c, v in piv.items():
                nv = (work.get(c, 0) - f * v) % p
                if nv:
                    work[c] = nv
                else:
                    work.pop(c, None)
    return len(pivots)


# ---------------------------------------------------------------------------
# Independent oracles (no code shared with the sparse engine)
# ---------------------------------------------------------------------------


def invariant_factors_dense(mat) -> list[int]:
    """Textbook Smith normal form on a dense matrix.

    Minimum-absolute-value pivoting with alternating row/column
    reduction and the classical divisibility fix-up, working on plain
    lists.  Slow but simple; used to cross-validate the sparse engine.
    """
    A = [list(map(int, row)) for row in mat]
    m = len(A)
    n = len(A[0]) if m else 0
    t = 0
    invs = []
    while True:
        # locate minimum-abs nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                v = Ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if abs(v) == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
        while True:
            # clear column t
            for i in range(m):
                if i != t and A[i][t]:
                    q = A[i][t] // A[t][t]
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, n):
                            Ai[j] -= q * At[j]
            if any(A[i][t] for i in range(m) if i != t):
                # a remainder became the new smallest entry in the column
                i = min((abs(A[i][t]), i) for i in range(m) if i != t and A[i][t])[1]
                A[t], A[i] = A[i], A[t]
                continue
            # clear row t
            At = A[t]
            for j in range(t + 1, n):
                if At[j]:
                    q = At[j] // At[t]
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
            if any(At[j] for j in range(t + 1, n)):
                j = min((abs(At[j]), j) for j in range(t + 1, n) if At[j])[1]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            # ensure the pivot divides every remaining entry
            d = At[t]
            offender = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, n):
                    if Ai[j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, n):
                A[t][j] += A[offender][j]
        invs.append(abs(A[t][t]))
        t += 1
        if t == m or t == n:
            break
    return invs


def triangular_lattice_basis(rows, ncols: int) -> dict[int, list[int]]:
    """Triangular basis (lead column -> dense row) of the row lattice.

    Built by pairwise extended-gcd insertion, entirely independent of the
    sparse eliminator; supports the naive membership test below.
    """
    basis: dict[int, list[int]] = {}
    pending = []
    for row in rows:
        dense = [0] * ncols
        for c, v in row.items():
            dense[c] = v
        pending.append(dense)
    while pending:
        row = pending.pop()
        while True:
            lead = next((j for j, v in enumerate(row) if v), None)
            if lead is None:
                break
            held = basis.get(lead)
            if held is None:
                if row[lead] < 0:
                    row = [-v for v in row]
                basis[lead] = row
                break
            a, b = held[lead], row[lead]
            g, x, y = _xgcd(a, b)
            combo = [x * hv + y * rv for hv, rv in zip(held, row)]
            residue = [(a // g) * rv - (b // g) * hv for hv, rv in zip(held, row)]
            basis[lead] = combo
            row = residue
    return basis


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def in_lattice(basis: dict[int, list[int]], vector) -> bool:
    """Whether a dense vector lies in the lattice spanned by `basis`."""
    vec = list(vector)
    for j, v in enumerate(vec):
        if not v:
            continue
        row = basis.get(j)
        if row is None or v % row[j]:
            return False
        q = v // row[j]
        for k in range(j, len(vec)):
            vec[k] -= q * row[k]
    return True


def naive_order_in_quotient(rows, ncols: int, vector: SparseRow, max_multiple: int):
    """Smallest b in 1..max_multiple with b*vector in the row lattice.

    Brute-force oracle for the SNF-based order computation; returns None
    when no multiple in range lands in the lattice.
    """
    basis = triangular_lattice_basis(rows, ncols)
    dense = [0] * ncols
    for c, v in vector.items():
        dense[c] = v
    for b in range(1, max_multiple + 1):
        if in_lattice(basis, [b * v for v in dense]):
            return b
    return None

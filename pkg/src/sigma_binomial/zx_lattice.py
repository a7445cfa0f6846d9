"""Z[x]^n vectors, Groebner reduction, and generalized Hermite normal forms.

The monomial order on Z[x]^n compares row first, then degree, then the
absolute value of the coefficient.  Completion is plain Buchberger over
the pair queue followed by full interreduction; the output basis is the
canonical reduced Groebner basis of the lattice (block-structured, the
"generalized Hermite normal form").

Two reduction conventions coexist on purpose:

* the canonical reduction used by ``grem`` and the completion replaces a
  coefficient by its remainder in [0, c) whenever a column with leading
  term c*x^beta in the same row and beta <= alpha exists.  This makes the
  reduced basis unique per lattice and ``ghnf`` deterministic;
* the membership-style reducibility test used by ``verify_ghnf`` only
  flags a monomial when |a| >= |c|, which is the weakest reading of
  "multiple of the leading term" and accepts bases whose small negative
  coefficients were left alone.

Both agree on the central fact: a vector reduces to zero exactly when it
lies in the lattice.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Sequence

from . import pid_linalg
from .polyzx import IntPoly, ext_gcd

__all__ = [
    "DimensionError",
    "ZeroVector",
    "LatVec",
    "MonoTerm",
    "GhnfBasis",
    "Block",
    "leading_term",
    "grem",
    "grem_track",
    "s_vector",
    "ghnf",
    "ghnf_track",
    "verify_ghnf",
    "syzygy_basis",
    "gker",
    "enumerate_c",
    "rank",
    "contains",
    "lattice_equal",
    "member_oracle",
]


class ZeroVector(ValueError):
    """Raised when an operation needs a nonzero vector."""


class DimensionError(ValueError):
    """Raised when vectors of different ambient dimension are mixed."""


@dataclass(frozen=True)
class MonoTerm:
    """A monomial a*x^deg*e_row of Z[x]^n; row indices are 1-based."""

    coeff: int
    deg: int
    row: int

    def key(self) -> tuple[int, int, int]:
        return (self.row, self.deg, abs(self.coeff))


class LatVec:
    """An element of Z[x]^n, stored as a tuple of IntPoly entries."""

    __slots__ = ("entries", "_lt")

    def __init__(self, entries: Iterable[IntPoly]):
        self.entries: tuple[IntPoly, ...] = tuple(entries)
        self._lt: MonoTerm | None = None

    @classmethod
    def zero(cls, n: int) -> "LatVec":
        return cls(IntPoly() for _ in range(n))

    @classmethod
    def unit(cls, n: int, row: int) -> "LatVec":
        """Standard basis vector; row is 0-based here."""
        return cls(IntPoly.const(1) if i == row else IntPoly() for i in range(n))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return any(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, LatVec) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def _check(self, other: "LatVec") -> None:
        if self.n != other.n:
            raise DimensionError("mixed dimensions %d and %d" % (self.n, other.n))

    def __add__(self, other: "LatVec") -> "LatVec":
        self._check(other)
        return LatVec(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "LatVec") -> "LatVec":
        self._check(other)
        return LatVec(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "LatVec":
        return LatVec(-a for a in self.entries)

    def __mul__(self, other) -> "LatVec":
        if isinstance(other, (int, IntPoly)):
            return LatVec(a * other for a in self.entries)
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, k: int) -> "LatVec":
        return LatVec(a.shift(k) for a in self.entries)

    def exact_div(self, d: int) -> "LatVec":
        return LatVec(a.exact_div(d) for a in self.entries)

    def coeff(self, row: int, deg: int) -> int:
        return self.entries[row].coeff(deg)

    def constant_column(self) -> tuple[int, ...]:
        return tuple(a.coeff(0) for a in self.entries)

    def leading_term(self) -> MonoTerm:
        if self._lt is not None:
            return self._lt
        for i in range(self.n - 1, -1, -1):
            e = self.entries[i]
            if e:
                self._lt = MonoTerm(e.lead, int(e.degree), i + 1)
                return self._lt
        raise ZeroVector("zero vector has no leading term")

    def is_normal(self) -> bool:
        """Positive leading coefficient in the last nonzero coordinate."""
        return bool(self) and self.leading_term().coeff > 0

    def max_degree(self) -> int:
        degs = [int(e.degree) for e in self.entries if e]
        return max(degs) if degs else -1

    def __repr__(self) -> str:
        return "LatVec((%s))" % ", ".join(str(e) for e in self.entries)


def leading_term(v: LatVec) -> MonoTerm:
    return v.leading_term()


def _lt_key(v: LatVec) -> tuple[int, int, int]:
    return v.leading_term().key()


@dataclass(frozen=True)
class Block:
    """One pivot-row block of a generalized Hermite normal form."""

    pivot_row: int  # 1-based
    start: int  # index of the first column of the block
    size: int
    degrees: tuple[int, ...]
    leading_coeffs: tuple[int, ...]


class GhnfBasis:
    """An ordered column set presented as a generalized Hermite normal form.

    The constructor only derives the block structure; use ``verify_ghnf``
    to check the defining conditions, or obtain instances from ``ghnf``
    which always returns the canonical reduced basis.
    """

    __slots__ = ("n", "columns", "blocks")

    def __init__(self, n: int, columns: Sequence[LatVec]):
        self.n = n
        self.columns: tuple[LatVec, ...] = tuple(columns)
        for c in self.columns:
            if c.n != n:
                raise DimensionError("column dimension %d != %d" % (c.n, n))
            if not c:
                raise ZeroVector("zero column in basis")
        blocks = []
        idx = 0
        while idx < len(self.columns):
            row = self.columns[idx].leading_term().row
            j = idx
            degs, lcs = [], []
            while j < len(self.columns) and self.columns[j].leading_term().row == row:
                lt = self.columns[j].leading_term()
                degs.append(lt.deg)
                lcs.append(lt.coeff)
                j += 1
            blocks.append(Block(row, idx, j - idx, tuple(degs), tuple(lcs)))
            idx = j
        self.blocks: tuple[Block, ...] = tuple(blocks)

    @property
    def rank(self) -> int:
        return len(self.blocks)

    def __len__(self) -> int:
        return len(self.columns)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GhnfBasis)
            and self.n == other.n
            and self.columns == other.columns
        )

    def __hash__(self) -> int:
        return hash((self.n, self.columns))

    def __repr__(self) -> str:
        return "GhnfBasis(n=%d, columns=[%s])" % (
            self.n,
            "; ".join(repr(c) for c in self.columns),
        )


# ---------------------------------------------------------------------------
# Reduction


def _pivot_table(cols: Sequence[LatVec]):
    """row (0-based) -> list of (deg, lc, index) for the columns' leading terms."""
    table: dict[int, list[tuple[int, int, int]]] = {}
    for idx, g in enumerate(cols):
        lt = g.leading_term()
        table.setdefault(lt.row - 1, []).append((lt.deg, abs(lt.coeff), idx))
    return table


def _is_canonical(v: LatVec, table) -> bool:
    """Whether no coefficient of v sits outside [0, c) under a pivot."""
    for row, e in enumerate(v.entries):
        plist = table.get(row)
        if not plist:
            continue
        for d, a in e.monomials():
            best = None
            for dp, lc, _ in plist:
                if dp <= d and (best is None or lc < best):
                    best = lc
            if best is not None and not 0 <= a < best:
                return False
    return True

def _reduce(v: LatVec, cols: Sequence[LatVec], track: bool):
    """Canonical reduction of v by the columns.

    Returns (r, qs) with v = r + sum(qs[i] * cols[i]).  Every coefficient
    of r sitting under some column's leading term ends up in [0, c) for
    the smallest applicable leading coefficient c.  qs is None unless
    track is set.
    """
    n = v.n
    table = _pivot_table(cols)
    if _is_canonical(v, table):
        return v, (tuple(IntPoly() for _ in cols) if track else None)
    rows = [list(e.coeffs) for e in v.entries]
    qs = [IntPoly() for _ in cols] if track else None

    for row in range(n - 1, -1, -1):
        plist = table.get(row)
        if not plist:
            continue
        d = len(rows[row]) - 1
        while d >= 0:
            a = rows[row][d] if d < len(rows[row]) else 0
            if a:
                applicable = [(lc, -dp, idx) for (dp, lc, idx) in plist if dp <= d]
                if applicable:
                    lc, ndp, idx = min(applicable)
                    if not 0 <= a < lc:
                        if cols[idx].leading_term().coeff < 0:
                            raise AssertionError("reduction requires sign-normalized columns")
                        q = a // lc
                        shift = d + ndp  # d - dp
                        g = cols[idx]
                        for grow in range(row + 1):
                            e = g.entries[grow]
                            if not e:
                                continue
                            target = rows[grow]
                            need = len(e.coeffs) + shift
                            if len(target) < need:
                                target.extend([0] * (need - len(target)))
                            for k, c in enumerate(e.coeffs):
                                if c:
                                    target[k + shift] -= q * c
                        if track:
                            qs[idx] = qs[idx] + IntPoly.term(q, shift)
            d -= 1
    r = LatVec(IntPoly(cs) for cs in rows)
    return r, (tuple(qs) if track else None)


def grem(v: LatVec, basis: "GhnfBasis | Sequence[LatVec]") -> LatVec:
    """Canonical normal form of v modulo the basis columns."""
    cols = basis.columns if isinstance(basis, GhnfBasis) else tuple(basis)
    if cols and v.n != cols[0].n:
        raise DimensionError("vector dimension %d != %d" % (v.n, cols[0].n))
    r, _ = _reduce(v, cols, track=False)
    return r


def grem_track(
    v: LatVec, basis: "GhnfBasis | Sequence[LatVec]"
) -> tuple[LatVec, tuple[IntPoly, ...]]:
    """Normal form plus the coefficient of each basis column used."""
    cols = basis.columns if isinstance(basis, GhnfBasis) else tuple(basis)
    if cols and v.n != cols[0].n:
        raise DimensionError("vector dimension %d != %d" % (v.n, cols[0].n))
    return _reduce(v, cols, track=True)


def _is_greduced_lenient(v: LatVec, others: Sequence[LatVec]) -> bool:
    """Paper-style G-reducedness: no monomial is |a| >= |c| under a pivot."""
    table = _pivot_table(others)
    for row, e in enumerate(v.entries):
        plist = table.get(row)
        if not plist:
            continue
        for d, a in e.monomials():
            for dp, lc, _ in plist:
                if dp <= d and abs(a) >= lc:
                    return False
    return True


def s_vector(f: LatVec, g: LatVec) -> LatVec:
    """The S-polynomial of two vectors; zero when pivot rows differ."""
    if not f or not g:
        raise ZeroVector("S-vector of a zero vector")
    ltf, ltg = f.leading_term(), g.leading_term()
    if ltf.row != ltg.row:
        return LatVec.zero(f.n)
    if ltf.deg < ltg.deg:
        f, g = g, f
        ltf, ltg = ltg, ltf
    a, k = ltf.coeff, ltf.deg
    b, s = ltg.coeff, ltg.deg
    if a % b == 0:
        return f - (a // b) * g.shift(k - s)
    if b % a == 0:
        return (b // a) * f - g.shift(k - s)
    _, u, w = ext_gcd(a, b)
    return u * f + w * g.shift(k - s)


def _s_multipliers(f: LatVec, g: LatVec) -> tuple[IntPoly, IntPoly]:
    """(mf, mg) with S(f, g) = mf*f - mg*g, mirroring s_vector's case split."""
    ltf, ltg = f.leading_term(), g.leading_term()
    swapped = ltf.deg < ltg.deg
    if swapped:
        f, g = g, f
        ltf, ltg = ltg, ltf
    a, k = ltf.coeff, ltf.deg
    b, s = ltg.coeff, ltg.deg
    if a % b == 0:
        mf, mg = IntPoly.const(1), IntPoly.term(a // b, k - s)
    elif b % a == 0:
        mf, mg = IntPoly.const(b // a), IntPoly.term(1, k - s)
    else:
        _, u, w = ext_gcd(a, b)
        mf, mg = IntPoly.const(u), IntPoly.term(-w, k - s)
    if swapped:
        return -mg, -mf
    return mf, mg


# ---------------------------------------------------------------------------
# Completion


class _Tracked:
    __slots__ = ("vec", "expr", "key")

    def __init__(self, vec: LatVec, expr: tuple[IntPoly, ...] | None):
        self.vec = vec
        self.expr = expr
        self.key = _lt_key(vec) if vec else None


def _normalize_sign(item: _Tracked) -> None:
    if item.vec.leading_term().coeff < 0:
        item.vec = -item.vec
        if item.expr is not None:
            item.expr = tuple(-e for e in item.expr)


def _reduce_tracked(item: _Tracked, basis: list[_Tracked], track: bool) -> _Tracked:
    r, qs = _reduce(item.vec, [b.vec for b in basis], track)
    expr = item.expr
    if track and expr is not None:
        expr = list(expr)
        for q, b in zip(qs, basis):
            if q:
                for l in range(len(expr)):
                    if b.expr[l]:
                        expr[l] = expr[l] - q * b.expr[l]
        expr = tuple(expr)
    return _Tracked(r, expr)


def _complete(inputs: list[_Tracked], track: bool, max_steps: int = 500000) -> list[_Tracked]:
    """Buchberger completion with eviction-based continuous interreduction.

    Elements are placed one at a time, fully reduced against the current
    basis (which keeps every coefficient under a pivot inside its
    canonical range and stops the tails from swelling).  Placing an
    element evicts the basis members whose leading terms it reduces;
    evicted members re-enter the queue.  S-pairs are only formed between
    elements sharing a pivot row, since the order makes every other
    S-vector zero.  A final all-pairs check guards the pruning and
    re-feeds the loop in the unexpected case.
    """
    budget = [max_steps]
    basis: list[_Tracked] = []
    pairs: list[tuple[tuple, int, int]] = []  # (precomputed key, i, j)
    queue: list[tuple[tuple, int, _Tracked]] = []
    seq = [0]

    def push(item: _Tracked) -> None:
        seq[0] += 1
        heapq.heappush(queue, (item.key, seq[0], item))

    for it in inputs:
        if it.vec:
            push(it)

    def spend():
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("completion did not stabilize")

    def place(item: _Tracked) -> None:
        nonlocal pairs
        item = _reduce_tracked(item, basis, track)
        if not item.vec:
            return
        _normalize_sign(item)
        row, deg, coeff = item.key
        evicted = [
            idx
            for idx, b in enumerate(basis)
            if b.key[0] == row and b.key[1] >= deg and b.key[2] >= coeff
        ]
        if evicted:
            for idx in reversed(evicted):
                push(basis[idx])
                del basis[idx]
            keep = [i for i in range(len(basis) + len(evicted)) if i not in evicted]
            remap = {old: new for new, old in enumerate(keep)}
            pairs = [
                (key, remap[i], remap[j])
                for key, i, j in pairs
                if i in remap and j in remap
            ]
        basis.append(item)
        new = len(basis) - 1
        pairs.extend(
            (tuple(sorted((basis[i].key, item.key))), i, new)
            for i in range(new)
            if basis[i].key[0] == row
        )

    while queue or pairs:
        spend()
        if queue:
            place(heapq.heappop(queue)[2])
            continue
        pick = min(range(len(pairs)), key=lambda k: pairs[k][0])
        _, i, j = pairs.pop(pick)
        s = s_vector(basis[i].vec, basis[j].vec)
        if not s:
            continue
        expr = None
        if track:
            mf, mg = _s_multipliers(basis[i].vec, basis[j].vec)
            expr = tuple(mf * a - mg * b for a, b in zip(basis[i].expr, basis[j].expr))
        push(_Tracked(s, expr))

    while True:
        # tail canonicalization; leading terms cannot move on a completed basis
        changed = True
        while changed:
            spend()
            changed = False
            for idx in range(len(basis)):
                others = basis[:idx] + basis[idx + 1 :]
                red = _reduce_tracked(basis[idx], others, track)
                if red.vec != basis[idx].vec:
                    if not red.vec or red.key != basis[idx].key:
                        raise AssertionError("tail reduction moved a leading term")
                    basis[idx] = red
                    changed = True

        # safety net: confirm the Buchberger criterion before returning
        vecs = [it.vec for it in basis]
        leftovers = []
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                if basis[a].key[0] != basis[b].key[0]:
                    continue
                s = s_vector(vecs[a], vecs[b])
                if s and _reduce(s, vecs, track=False)[0]:
                    leftovers.append((a, b))
        if not leftovers:
            basis.sort(key=lambda it: it.key)
            return basis
        for a, b in leftovers:
            expr = None
            if track:
                mf, mg = _s_multipliers(basis[a].vec, basis[b].vec)
                expr = tuple(mf * x - mg * y for x, y in zip(basis[a].expr, basis[b].expr))
            push(_Tracked(s_vector(basis[a].vec, basis[b].vec), expr))
        while queue or pairs:
            spend()
            if queue:
                place(heapq.heappop(queue)[2])
                continue
            pick = min(range(len(pairs)), key=lambda k: pairs[k][0])
            _, i, j = pairs.pop(pick)
            s = s_vector(basis[i].vec, basis[j].vec)
            if not s:
                continue
            expr = None
            if track:
                mf, mg = _s_multipliers(basis[i].vec, basis[j].vec)
                expr = tuple(
                    mf * a - mg * b for a, b in zip(basis[i].expr, basis[j].expr)
                )
            push(_Tracked(s, expr))


def _precondition(items: list[_Tracked], n: int, track: bool) -> list[_Tracked]:
    """Replace generators by the integer HNF of their bounded x-shifts.

    Z-unimodular column operations on {x^j g} preserve the generated
    Z[x]-lattice, and the echelon output is far better behaved as
    completion input than dense redundant generators.  Expressions over
    the original inputs survive through the transformation.
    """
    if not items:
        return items
    top = max(it.vec.max_degree() for it in items)
    bound = top + 1
    width = top + bound + 1

    flat = []
    origin = []
    for idx, it in enumerate(items):
        for j in range(bound + 1):
            shifted = it.vec.shift(j)
            col = []
            for e in shifted.entries:
                col.extend(e.coeff(k) for k in range(width))
            flat.append(col)
            origin.append((idx, j))
    h, u = pid_linalg._hnf_int(flat)
    out = []
    for k in range(len(h)):
        if not any(h[k]):
            continue
        entries = [
            IntPoly(h[k][r * width : (r + 1) * width]) for r in range(n)
        ]
        expr = None
        if track:
            s = len(items[0].expr)
            expr = [IntPoly() for _ in range(s)]
            for pos, coeff in enumerate(u[k]):
                if coeff:
                    idx, j = origin[pos]
                    mult = IntPoly.term(coeff, j)
                    for l in range(s):
                        if items[idx].expr[l]:
                            expr[l] = expr[l] + mult * items[idx].expr[l]
            expr = tuple(expr)
        out.append(_Tracked(LatVec(entries), expr))
    return out


def ghnf(gens: Iterable[LatVec], n: int | None = None) -> GhnfBasis:
    """Canonical generalized Hermite normal form of the generated lattice."""
    gens = list(gens)
    if n is None:
        n = gens[0].n if gens else 0
    for g in gens:
        if g.n != n:
            raise DimensionError("mixed dimensions in generators")
    items = [_Tracked(g, None) for g in gens if g]
    basis = _complete(_precondition(items, n, track=False), track=False)
    return GhnfBasis(n, [it.vec for it in basis])


def ghnf_track(
    gens: Sequence[LatVec], n: int | None = None
) -> tuple[GhnfBasis, tuple[tuple[IntPoly, ...], ...]]:
    """ghnf plus, per output column, its Z[x]-expression over the inputs."""
    gens = list(gens)
    if n is None:
        n = gens[0].n if gens else 0
    s = len(gens)
    items = []
    for l, g in enumerate(gens):
        if g.n != n:
            raise DimensionError("mixed dimensions in generators")
        if g:
            expr = tuple(IntPoly.const(1) if i == l else IntPoly() for i in range(s))
            items.append(_Tracked(g, expr))
    basis = _complete(_precondition(items, n, track=True), track=True)
    return (
        GhnfBasis(n, [it.vec for it in basis]),
        tuple(it.expr for it in basis),
    )


def verify_ghnf(basis: "GhnfBasis | Sequence[LatVec]") -> tuple[bool, list[str]]:
    """Check the four generalized-Hermite-normal-form conditions.

    Returns (ok, violations).  The G-reducedness condition uses the
    lenient |a| >= |c| reading, so the matrices printed in the source
    material (which keep small negative entries) verify unchanged.
    """
    if not isinstance(basis, GhnfBasis):
        cols = [c for c in basis]
        if not cols:
            return True, []
        try:
            basis = GhnfBasis(cols[0].n, sorted(cols, key=_lt_key))
        except (ZeroVector, DimensionError) as exc:
            return False, [str(exc)]
    problems: list[str] = []
    cols = basis.columns
    keys = [_lt_key(c) for c in cols]
    if keys != sorted(keys):
        problems.append("columns not in ascending order")
    rows = [b.pivot_row for b in basis.blocks]
    if rows != sorted(set(rows)):
        problems.append("pivot rows not strictly increasing")
    for b in basis.blocks:
        if list(b.degrees) != sorted(set(b.degrees)):
            problems.append("block row %d: degrees not strictly increasing" % b.pivot_row)
        if any(c <= 0 for c in b.leading_coeffs):
            problems.append("block row %d: non-positive leading coefficient" % b.pivot_row)
        for j in range(b.size - 1):
            hi, lo = b.leading_coeffs[j], b.leading_coeffs[j + 1]
            if lo == 0 or hi % lo:
                problems.append(
                    "block row %d: %d does not divide %d" % (b.pivot_row, lo, hi)
                )
        for j1 in range(b.size):
            for j2 in range(j1 + 1, b.size):
                s = s_vector(cols[b.start + j1], cols[b.start + j2])
                if grem(s, basis):
                    problems.append(
                        "block row %d: S-vector of columns %d,%d does not reduce"
                        % (b.pivot_row, b.start + j1, b.start + j2)
                    )
    for idx, c in enumerate(cols):
        others = cols[:idx] + cols[idx + 1 :]
        if not _is_greduced_lenient(c, others):
            problems.append("column %d is not G-reduced against the others" % idx)
    return not problems, problems


# ---------------------------------------------------------------------------
# Syzygies and kernels


def syzygy_basis(basis: GhnfBasis) -> list[LatVec]:
    """Schreyer generators of ker(F) for the GHNF columns F, in Z[x]^s."""
    cols = basis.columns
    s = len(cols)
    out = []
    for i in range(s):
        for j in range(i + 1, s):
            if cols[i].leading_term().row != cols[j].leading_term().row:
                continue
            mf, mg = _s_multipliers(cols[i], cols[j])
            svec = s_vector(cols[i], cols[j])
            r, qs = grem_track(svec, basis)
            if r:
                raise AssertionError("S-vector of a GHNF must reduce to zero")
            coords = list(qs)
            coords[i] = coords[i] - mf
            coords[j] = coords[j] + mg
            syz = LatVec([-c for c in coords])
            if syz:
                out.append(syz)
    return out


def _apply_matrix(cols: Sequence[LatVec], x: LatVec) -> LatVec:
    n = cols[0].n
    out = LatVec.zero(n)
    for c, q in zip(cols, x.entries):
        if q:
            out = out + c * q
    return out


def gker(columns: Sequence[LatVec]) -> list[LatVec]:
    """Generators of {X in Z[x]^s | M X = 0} for the matrix with these columns.

    Computed from a tracked completion: syzygies of the GHNF are lifted
    through the transformation and joined with the relations expressing
    each original column over the GHNF.
    """
    columns = list(columns)
    s = len(columns)
    if s == 0:
        return []
    nonzero = [l for l, c in enumerate(columns) if c]
    out: list[LatVec] = [LatVec.unit(s, l) for l, c in enumerate(columns) if not c]
    if not nonzero:
        return out
    sub = [columns[l] for l in nonzero]
    basis, exprs = ghnf_track(sub)

    def widen(vec_entries):
        full = [IntPoly()] * s
        for pos, l in enumerate(nonzero):
            full[l] = vec_entries[pos]
        return LatVec(full)

    for syz in syzygy_basis(basis):
        lifted = [IntPoly()] * len(sub)
        for k, q in enumerate(syz.entries):
            if q:
                for l in range(len(sub)):
                    lifted[l] = lifted[l] + q * exprs[k][l]
        v = widen(lifted)
        if v:
            out.append(v)
    for pos in range(len(sub)):
        r, qs = grem_track(sub[pos], basis)
        if r:
            raise AssertionError("generator does not reduce to zero in its own lattice")
        rel = [IntPoly()] * len(sub)
        rel[pos] = IntPoly.const(1)
        for k, q in enumerate(qs):
            if q:
                for l in range(len(sub)):
                    rel[l] = rel[l] - q * exprs[k][l]
        v = widen(rel)
        if v:
            out.append(v)
    # drop exact duplicates, keep deterministic order
    seen = set()
    uniq = []
    for v in out:
        key = v.entries
        if key not in seen:
            seen.add(key)
            uniq.append(v)
    return uniq


# ---------------------------------------------------------------------------
# The sets C_-, C+, and friends


def enumerate_c(basis: GhnfBasis, degree_bound: int) -> tuple[list[LatVec], list[LatVec]]:
    """(C_-, prefix of C_oo with shift exponent <= degree_bound).

    C_- collects, for every block and every non-final column, its shifts
    x^j below the next pivot degree; C_oo adds every shift of the final
    block columns.  Both lists come back ordered by leading term.
    """
    c_minus: list[LatVec] = []
    c_inf: list[LatVec] = []
    for b in basis.blocks:
        for j in range(b.size - 1):
            col = basis.columns[b.start + j]
            gap = b.degrees[j + 1] - b.degrees[j]
            for k in range(gap):
                shifted = col.shift(k)
                c_minus.append(shifted)
                if k <= degree_bound:
                    c_inf.append(shifted)
        last = basis.columns[b.start + b.size - 1]
        for k in range(degree_bound + 1):
            c_inf.append(last.shift(k))
    c_minus.sort(key=_lt_key)
    c_inf.sort(key=_lt_key)
    return c_minus, c_inf


def _c_minus_items(basis: GhnfBasis) -> list[tuple[int, int]]:
    """(column index, shift) pairs generating C_- in leading-term order."""
    items = []
    for b in basis.blocks:
        for j in range(b.size - 1):
            gap = b.degrees[j + 1] - b.degrees[j]
            for k in range(gap):
                items.append((b.start + j, k))
    items.sort(key=lambda t: _lt_key(basis.columns[t[0]].shift(t[1])))
    return items


# ---------------------------------------------------------------------------
# Queries


def rank(basis: GhnfBasis) -> int:
    return basis.rank


def contains(basis: GhnfBasis, v: LatVec) -> bool:
    return not grem(v, basis)


def lattice_equal(a: "GhnfBasis | Iterable[LatVec]", b: "GhnfBasis | Iterable[LatVec]") -> bool:
    """Whether two column sets generate the same lattice (canonical GHNFs equal)."""
    ca = ghnf(a.columns if isinstance(a, GhnfBasis) else a)
    cb = ghnf(b.columns if isinstance(b, GhnfBasis) else b)
    return ca.columns == cb.columns


def member_oracle(gens: Sequence[LatVec], v: LatVec, degree_bound: int) -> bool:
    """Brute-force membership: integer linear algebra over truncated shifts.

    Decides whether v lies in the Z-span of {x^j g | g in gens, j <= bound},
    flattening Z[x]_D^n into Z^(n(D+1)).  Independent of grem; used as an
    oracle in tests.
    """
    gens = [g for g in gens if g]
    if not gens:
        return not v
    n = v.n
    top = max([v.max_degree()] + [g.max_degree() + degree_bound for g in gens])
    width = top + 1

    def flatten(w: LatVec) -> list[int]:
        out = []
        for e in w.entries:
            out.extend(e.coeff(k) for k in range(width))
        return out

    columns = [flatten(g.shift(j)) for g in gens for j in range(degree_bound + 1)]
    return pid_linalg.int_lattice_contains(columns, flatten(v))


def multiplier_lcm(values: Iterable[int]) -> int:
    vals = [v for v in values if v]
    return lcm(*vals) if vals else 1


def column_gcd(v: LatVec) -> int:
    g = 0
    for e in v.entries:
        for _, c in e.monomials():
            g = gcd(g, c)
    return g

"""Absolute-order interval below a Coxeter element, with lattice machinery.

The simple elements of the dual monoid form the interval between the
identity and a Coxeter element c, ordered by reflection length: u comes
before v when l(u) + l(u^-1 v) = l(v).  This module enumerates that
interval grade by grade, builds its Hasse diagram, and checks the lattice
property.  The same poset container also carries the weak-order interval
below the longest element, which is the simple-element poset of the
classical braid monoid; both feed the Garside engine.

Membership during enumeration is decided through complements: with
x = u^-1 c, the extension u * t stays in the interval exactly when the
reflection t shortens x.  For the matrix models the shortening test is
linear algebra over exact scalars: t shortens x iff the root of t lies in
the moved space im(x - 1), which we test against a stored basis of the
left null space of x - 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from .coxtypes import CoxType
from .coxeter import MatrixGroup, coxeter_group


class LatticeError(Exception):
    """A pair of poset elements has no unique bound; structural failure."""


class IntervalPoset:
    """Graded poset with a top element and complement maps.

    Elements are group elements indexed in grade-monotone order.  The
    ``komp`` array sends index i to the index of the left complement
    (the element x with u * x = top), which reverses the grading.
    """

    def __init__(self, ctype, group, elements, grades, cover_edges, komp, order_kind):
        self.ctype = ctype
        self.group = group
        self.elements = tuple(elements)
        self.grades = tuple(grades)
        self.cover_edges = tuple(cover_edges)
        self.komp = tuple(komp)
        self.order_kind = order_kind
        self.index = {el: i for i, el in enumerate(self.elements)}
        size = len(self.elements)
        if len(self.index) != size:
            raise ValueError("duplicate elements in poset")
        if any(self.grades[i] > self.grades[i + 1] for i in range(size - 1)):
            raise ValueError("element order must be grade-monotone")
        self.rank = self.grades[-1]
        self.bottom = 0
        self.top = size - 1
        if self.grades.count(self.rank) != 1:
            raise ValueError("top grade is not unique")
        if sorted(self.komp) != list(range(size)):
            raise ValueError("complement map is not a bijection")
        for i, k in enumerate(self.komp):
            if self.grades[i] + self.grades[k] != self.rank:
                raise ValueError("complement map does not reverse the grading")

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def komp_inv(self) -> tuple[int, ...]:
        inv = [0] * len(self.elements)
        for i, k in enumerate(self.komp):
            inv[k] = i
        return tuple(inv)

    @cached_property
    def covers_up(self) -> tuple[tuple[int, ...], ...]:
        ups: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.cover_edges:
            ups[lo].append(hi)
        return tuple(tuple(u) for u in ups)

    @cached_property
    def covers_down(self) -> tuple[tuple[int, ...], ...]:
        downs: list[list[int]] = [[] for _ in self.elements]
        for lo, hi in self.cover_edges:
            downs[hi].append(lo)
        return tuple(tuple(d) for d in downs)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Bit i of down_masks[j] is set iff element i divides element j."""
        masks = [0] * len(self.elements)
        downs = self.covers_down
        for i in range(len(self.elements)):
            m = 1 << i
            for p in downs[i]:
                m |= masks[p]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        masks = [0] * len(self.elements)
        ups = self.covers_up
        for i in reversed(range(len(self.elements))):
            m = 1 << i
            for q in ups[i]:
                m |= masks[q]
            masks[i] = m
        return tuple(masks)

    @cached_property
    def grade_counts(self) -> tuple[int, ...]:
        counts = [0] * (self.rank + 1)
        for g in self.grades:
            counts[g] += 1
        return tuple(counts)

    @cached_property
    def atom_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grades) if g == 1)

    def le(self, i: int, j: int) -> bool:
        return (self.down_masks[j] >> i) & 1 == 1

    def meet_index(self, i: int, j: int) -> int:
        cand = self.down_masks[i] & self.down_masks[j]
        m = cand.bit_length() - 1
        if cand & ~self.down_masks[m]:
            raise LatticeError(f"no unique lower bound for indices {i}, {j}")
        return m

    def join_index(self, i: int, j: int) -> int:
        cand = self.up_masks[i] & self.up_masks[j]
        m = (cand & -cand).bit_length() - 1
        if cand & ~self.up_masks[m]:
            raise LatticeError(f"no unique upper bound for indices {i}, {j}")
        return m

    def atom_index(self, atom) -> int:
        """Index of a named generator's reflection image (explicit series)."""
        return self.index[self.group.atom_image(atom)]


def _reduce_int_vector(vec: list) -> list:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        return [v // g for v in vec]
    return vec


def _left_null_basis(mat, zero, one):
    """Rows y with y @ mat = 0, by fraction-free elimination.

    Works over any integral domain whose elements support +, -, *, ==,
    and truthiness (used here for plain ints and golden integers).
    """
    n = len(mat)
    rows = [list(col) for col in zip(*mat)]
    piv_cols: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, n):
            if rows[i][c]:
                mult = rows[i][c]
                ri = rows[i]
                rr = rows[r]
                rows[i] = [pv * ri[j] - mult * rr[j] for j in range(n)]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    basis = []
    pivot_set = set(piv_cols)
    for fcol in (c for c in range(n) if c not in pivot_set):
        y = [zero] * n
        y[fcol] = one
        for i in reversed(range(len(piv_cols))):
            p = piv_cols[i]
            row = rows[i]
            s = zero
            for j in range(n):
                if j != p and y[j] and row[j]:
                    s = s + row[j] * y[j]
            pv = row[p]
            y = [pv * v for v in y]
            y[p] = zero - s
        if isinstance(y[fcol], int):
            y = _reduce_int_vector(y)
        basis.append(tuple(y))
    return tuple(basis)


def _enumerate_generic(ctype: CoxType, group) -> IntervalPoset:
    n = group.refl_length(group.coxeter_element)
    c = group.coxeter_element
    refls = group.reflections
    elements = [group.identity]
    grades = [0]
    complements = [c]
    index_by_comp = {c: 0}
    edges: list[tuple[int, int]] = []
    frontier = [0]
    for k in range(n):
        nxt: list[int] = []
        for ui in frontier:
            xu = complements[ui]
            u = elements[ui]
            for t in refls:
                xv = group.mul(t, xu)
                if group.refl_length(xv) != n - k - 1:
                    continue
                vi = index_by_comp.get(xv)
                if vi is None:
                    vi = len(elements)
                    elements.append(group.mul(u, t))
                    grades.append(k + 1)
                    complements.append(xv)
                    index_by_comp[xv] = vi
                    nxt.append(vi)
                edges.append((ui, vi))
        frontier = nxt
    elem_index = {el: i for i, el in enumerate(elements)}
    komp = tuple(elem_index[x] for x in complements)
    return IntervalPoset(ctype, group, elements, grades, edges, komp, "absolute")


def _enumerate_matrix(ctype: CoxType, group: MatrixGroup) -> IntervalPoset:
    n = ctype.rank
    c = group.coxeter_element
    one = group.one
    zero = one - one
    ident = group.identity
    rdata = group.reflection_data
    elements = [ident]
    grades = [0]
    complements = [c]
    nulls = [_left_null_basis([[c[r][k] - ident[r][k] for k in range(n)] for r in range(n)], zero, one)]
    index_by_comp = {c: 0}
    edges: list[tuple[int, int]] = []
    frontier = [0]
    rng_n = range(n)
    for k in range(n):
        nxt: list[int] = []
        for ui in frontier:
            xu = complements[ui]
            nu = nulls[ui]
            u = elements[ui]
            for tmat, beta, f in rdata:
                ok = True
                for row in nu:
                    s = zero
                    for a, b in zip(row, beta):
                        if a and b:
                            s = s + a * b
                    if s:
                        ok = False
                        break
                if not ok:
                    continue
                # x_v = x_u (1 - beta f^T), a rank-one update
                w = [None] * n
                for r in rng_n:
                    xr = xu[r]
                    s = zero
                    for cdx in rng_n:
                        if beta[cdx] and xr[cdx]:
                            s = s + xr[cdx] * beta[cdx]
                    w[r] = s
                xv = tuple(
                    tuple(xu[r][cdx] - w[r] * f[cdx] for cdx in rng_n) for r in rng_n
                )
                vi = index_by_comp.get(xv)
                if vi is None:
                    # u_v = (1 - beta f^T) u_u, again rank one
                    z = [None] * n
                    for cdx in rng_n:
                        s = zero
                        for r in rng_n:
                            if f[r] and u[r][cdx]:
                                s = s + f[r] * u[r][cdx]
                        z[cdx] = s
                    v = tuple(
                        tuple(u[r][cdx] - beta[r] * z[cdx] for cdx in rng_n) for r in rng_n
                    )
                    vi = len(elements)
                    elements.append(v)
                    grades.append(k + 1)
                    complements.append(xv)
                    diff = [[xv[r][cdx] - ident[r][cdx] for cdx in rng_n] for r in rng_n]
                    nulls.append(_left_null_basis(diff, zero, one))
                    index_by_comp[xv] = vi
                    nxt.append(vi)
                edges.append((ui, vi))
        frontier = nxt
    elem_index = {el: i for i, el in enumerate(elements)}
    komp = tuple(elem_index[x] for x in complements)
    return IntervalPoset(ctype, group, elements, grades, edges, komp, "absolute")


def enumerate_interval(ctype: CoxType, group=None, force_generic: bool = False) -> IntervalPoset:
    """All elements u with l(u) + l(u^-1 c) = l(c), as a graded poset."""
    if group is None:
        group = coxeter_group(ctype)
    if isinstance(group, MatrixGroup) and not force_generic:
        return _enumerate_matrix(ctype, group)
    return _enumerate_generic(ctype, group)


def weak_order_poset(ctype: CoxType, group=None, max_order: int = 50_000) -> IntervalPoset:
    """The full Coxeter group under the prefix order, graded by word length.

    This is the simple-element poset of the classical braid monoid; the top
    is the longest element and complements are taken with respect to it.
    """
    if group is None:
        group = coxeter_group(ctype)
    if ctype.group_order > max_order:
        raise ValueError(
            f"group order {ctype.group_order} exceeds the classical guard {max_order}"
        )
    depth = group.enumerate_group()
    ordered = sorted(depth.items(), key=lambda kv: (kv[1], kv[0]))
    elements = [el for el, _ in ordered]
    grades = [g for _, g in ordered]
    index = {el: i for i, el in enumerate(elements)}
    edges = []
    for vi, (v, g) in enumerate(ordered):
        for s in group.simples:
            u = group.mul(v, s)
            gu = depth[u]
            if gu == g - 1:
                edges.append((index[u], vi))
    w0 = elements[-1]
    komp = tuple(index[group.mul(group.inv(el), w0)] for el in elements)
    return IntervalPoset(ctype, group, elements, grades, edges, komp, "weak")


def interval_meet(u, v, poset: IntervalPoset):
    """Greatest lower bound of two poset elements."""
    return poset.elements[poset.meet_index(poset.index[u], poset.index[v])]


def interval_join(u, v, poset: IntervalPoset):
    """Least upper bound of two poset elements."""
    return poset.elements[poset.join_index(poset.index[u], poset.index[v])]


def ncp_count(ctype: CoxType) -> int:
    """Closed-form simple-element count (degree product formula)."""
    return ctype.simples_count


@dataclass
class LatticeReport:
    """Outcome of meet/join verification over a poset."""

    ctype: CoxType
    size: int
    mode: str
    pairs_checked: int
    violations: list = field(default_factory=list)
    complement_reversal_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.complement_reversal_ok and not self.violations

    def as_dict(self) -> dict:
        return {
            "check": "lattice",
            "type": str(self.ctype),
            "size": self.size,
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
            "violations": [str(v) for v in self.violations],
            "complement_reversal_ok": self.complement_reversal_ok,
            "ok": self.ok,
        }


def _check_pair(poset: IntervalPoset, i: int, j: int, violations: list) -> None:
    try:
        m = poset.meet_index(i, j)
    except LatticeError as exc:
        violations.append((i, j, "meet", str(exc)))
        m = None
    try:
        jn = poset.join_index(i, j)
    except LatticeError as exc:
        violations.append((i, j, "join", str(exc)))
        jn = None
    if m is not None and not (poset.le(m, i) and poset.le(m, j)):
        violations.append((i, j, "meet", "result is not a lower bound"))
    if jn is not None and not (poset.le(i, jn) and poset.le(j, jn)):
        violations.append((i, j, "join", "result is not an upper bound"))
    # in absolute order divisibility is two-sided, so the complement map is
    # an anti-automorphism and must swap the two bounds; in the one-sided
    # prefix order it maps to the opposite-side order instead, so skip
    if poset.order_kind == "absolute" and m is not None and jn is not None:
        ki, kj = poset.komp[i], poset.komp[j]
        try:
            if poset.komp_inv[poset.meet_index(ki, kj)] != jn:
                violations.append((i, j, "join", "complement route disagrees"))
            if poset.komp_inv[poset.join_index(ki, kj)] != m:
                violations.append((i, j, "meet", "complement route disagrees"))
        except LatticeError as exc:
            violations.append((i, j, "complement", str(exc)))


def verify_lattice(
    poset: IntervalPoset,
    exhaustive_limit: int = 300,
    samples: int = 10_000,
    seed: int = 94111,
) -> LatticeReport:
    """Check meets and joins pairwise, exhaustively on small posets.

    Larger posets get a seeded random sample of pairs.  In both modes the
    complement map is first certified to reverse the order (cover sweep in
    both directions), which makes the meet/join cross-route meaningful.
    """
    size = len(poset)
    reversal_ok = True
    if poset.order_kind == "absolute":
        for lo, hi in poset.cover_edges:
            if not poset.le(poset.komp[hi], poset.komp[lo]):
                reversal_ok = False
                break
            if not poset.le(poset.komp_inv[hi], poset.komp_inv[lo]):
                reversal_ok = False
                break
    violations: list = []
    if size <= exhaustive_limit:
        mode = "exhaustive"
        pairs = 0
        for i in range(size):
            for j in range(i, size):
                _check_pair(poset, i, j, violations)
                pairs += 1
                if len(violations) > 20:
                    break
            if len(violations) > 20:
                break
    else:
        mode = "sampled"
        rng = random.Random(seed)
        pairs = samples
        for _ in range(samples):
            i = rng.randrange(size)
            j = rng.randrange(size)
            _check_pair(poset, i, j, violations)
            if len(violations) > 20:
                break
    return LatticeReport(
        ctype=poset.ctype,
        size=size,
        mode=mode,
        pairs_checked=pairs,
        violations=violations,
        complement_reversal_ok=reversal_ok,
    )

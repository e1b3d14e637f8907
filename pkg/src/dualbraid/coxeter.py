"""Concrete models of the finite Coxeter groups.

Each model exposes the same small interface: ``mul(u, v)`` composes two
elements with u applied first, ``refl_length`` is the absolute reflection
length (codimension of the fixed space), ``simples`` lists the simple
reflections in a fixed order, and ``coxeter_element`` is the product of
the simples in reversed listed order, u-first convention.  That fixed
choice matches the image of the dual Garside word under the projection
that sends each atom to its reflection.

Models: permutations for A, signed permutations for B and D, a rotation
or reflection pair for I2, and exact reflection matrices (integer Cartan
data, or the golden ring for H3 and H4) for the remaining types.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from .coxtypes import CoxType
from .exact import GoldenInt, mat_identity, mat_mul, matrix_rank
from .presentation import Atom, Word

__all__ = [
    "coxeter_group",
    "PermGroup",
    "SignedPermGroup",
    "DihedralGroup",
    "MatrixGroup",
    "word_image",
    "signed_perm_matrix",
]


class _GroupBase:
    """Shared plumbing; concrete models fill in the element operations."""

    ctype: CoxType

    @cached_property
    def coxeter_element(self):
        el = self.identity
        for s in reversed(self.simples):
            el = self.mul(el, s)
        return el

    @cached_property
    def reflection_set(self) -> frozenset:
        return frozenset(self.reflections)

    def enumerate_group(self, max_size: int | None = None) -> dict:
        """BFS over the Cayley graph; maps element -> word length ell_S."""
        cap = max_size or self.ctype.group_order
        if self.ctype.group_order > cap:
            raise ValueError(f"group {self.ctype} has order {self.ctype.group_order} > {cap}")
        depth = {self.identity: 0}
        frontier = [self.identity]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for s in self.simples:
                    v = self.mul(u, s)
                    if v not in depth:
                        depth[v] = d
                        nxt.append(v)
            frontier = nxt
        assert len(depth) == self.ctype.group_order
        return depth


def _perm_cycles(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if seen[i]:
            continue
        count += 1
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j] - 1
    return count


class PermGroup(_GroupBase):
    """Symmetric group on rank+1 points; elements are image tuples."""

    def __init__(self, ctype: CoxType):
        assert ctype.series == "A"
        self.ctype = ctype
        self.points = ctype.rank + 1
        self.identity = tuple(range(1, self.points + 1))

    def mul(self, u, v):
        return tuple(v[x - 1] for x in u)

    def inv(self, u):
        out = [0] * self.points
        for i, x in enumerate(u, start=1):
            out[x - 1] = i
        return tuple(out)

    def transposition(self, t: int, s: int):
        el = list(self.identity)
        el[t - 1], el[s - 1] = s, t
        return tuple(el)

    @cached_property
    def simples(self):
        return tuple(self.transposition(i, i + 1) for i in range(1, self.points))

    @cached_property
    def reflections(self):
        return tuple(
            self.transposition(t, s) for t in range(2, self.points + 1) for s in range(1, t)
        )

    def refl_length(self, u) -> int:
        return self.points - _perm_cycles(u)

    def atom_image(self, atom: Atom):
        if atom.family == "a":
            return self.transposition(atom.i, atom.j)
        if atom.family == "sigma" and 1 <= atom.i < self.points:
            return self.transposition(atom.i + 1, atom.i)
        raise ValueError(f"{atom} is not a generator of type {self.ctype}")


class SignedPermGroup(_GroupBase):
    """Hyperoctahedral model for B and D; w[i-1] is the signed image of i."""

    def __init__(self, ctype: CoxType):
        assert ctype.series in ("B", "D")
        self.ctype = ctype
        self.n = ctype.rank
        self.identity = tuple(range(1, self.n + 1))

    def mul(self, u, v):
        return tuple(v[x - 1] if x > 0 else -v[-x - 1] for x in u)

    def inv(self, u):
        out = [0] * self.n
        for i, x in enumerate(u, start=1):
            if x > 0:
                out[x - 1] = i
            else:
                out[-x - 1] = -i
        return tuple(out)

    def swap(self, t: int, s: int):
        el = list(self.identity)
        el[t - 1], el[s - 1] = s, t
        return tuple(el)

    def neg_swap(self, t: int, s: int):
        el = list(self.identity)
        el[t - 1], el[s - 1] = -s, -t
        return tuple(el)

    def flip(self, t: int):
        el = list(self.identity)
        el[t - 1] = -t
        return tuple(el)

    @cached_property
    def simples(self):
        first = self.flip(1) if self.ctype.series == "B" else self.neg_swap(2, 1)
        return (first,) + tuple(self.swap(i + 1, i) for i in range(1, self.n))

    @cached_property
    def reflections(self):
        out = [self.swap(t, s) for t in range(2, self.n + 1) for s in range(1, t)]
        out += [self.neg_swap(t, s) for t in range(2, self.n + 1) for s in range(1, t)]
        if self.ctype.series == "B":
            out += [self.flip(t) for t in range(1, self.n + 1)]
        return tuple(out)

    def refl_length(self, u) -> int:
        # codim of the fixed space: each sign-positive cycle fixes a line
        seen = [False] * self.n
        positive = 0
        for i in range(self.n):
            if seen[i]:
                continue
            sign = 1
            j = i
            while not seen[j]:
                seen[j] = True
                x = u[j]
                if x < 0:
                    sign = -sign
                j = abs(x) - 1
            if sign > 0:
                positive += 1
        return self.n - positive

    def atom_image(self, atom: Atom):
        fam = atom.family
        if fam == "alpha":
            return self.swap(atom.i, atom.j)
        if fam == "beta":
            return self.neg_swap(atom.i, atom.j)
        if fam == "tau":
            if self.ctype.series == "B":
                return self.flip(atom.i)
            if atom.i == 1:
                return self.neg_swap(2, 1)
            raise ValueError(f"{atom} is not a generator of type {self.ctype}")
        if fam == "sigma" and 1 <= atom.i < self.n:
            return self.swap(atom.i + 1, atom.i)
        raise ValueError(f"{atom} is not a generator of type {self.ctype}")


class DihedralGroup(_GroupBase):
    """I2(m): rotations ('r', k) and reflections ('s', k) with k mod m."""

    def __init__(self, ctype: CoxType):
        assert ctype.series == "I2"
        self.ctype = ctype
        self.m = ctype.param
        self.identity = ("r", 0)

    def mul(self, u, v):
        (ku, a), (kv, b) = u, v
        m = self.m
        if ku == "r" and kv == "r":
            return ("r", (a + b) % m)
        if ku == "s" and kv == "s":
            return ("r", (b - a) % m)
        if ku == "s" and kv == "r":
            return ("s", (a + b) % m)
        return ("s", (b - a) % m)

    def inv(self, u):
        kind, a = u
        if kind == "r":
            return ("r", (-a) % self.m)
        return u

    @cached_property
    def simples(self):
        return (("s", 0), ("s", 1))

    @cached_property
    def reflections(self):
        return tuple(("s", k) for k in range(self.m))

    def refl_length(self, u) -> int:
        kind, a = u
        if kind == "s":
            return 1
        return 0 if a == 0 else 2

    def atom_image(self, atom: Atom):
        if atom.family == "sigma" and 1 <= atom.i <= self.m:
            return ("s", atom.i - 1)
        raise ValueError(f"{atom} is not a generator of type {self.ctype}")


_F4_CARTAN = ((2, -1, 0, 0), (-1, 2, -2, 0), (0, -1, 2, -1), (0, 0, -1, 2))
_E_EDGES = {
    6: ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    7: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
    8: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)),
}


def _cartan_matrix(ctype: CoxType):
    n = ctype.rank
    if ctype.series == "F":
        return _F4_CARTAN
    if ctype.series == "E":
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in _E_EDGES[n]:
            rows[i - 1][j - 1] = rows[j - 1][i - 1] = -1
        return tuple(tuple(r) for r in rows)
    # H3, H4: off-diagonal -2cos(pi/m): 0, -1 or -phi, over Z[phi]
    zero, one, phi = GoldenInt(0, 0), GoldenInt(1, 0), GoldenInt(0, 1)
    bonds = {3: {(1, 2): phi, (2, 3): one}, 4: {(1, 2): phi, (2, 3): one, (3, 4): one}}[n]
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = one + one
    for (i, j), val in bonds.items():
        rows[i - 1][j - 1] = rows[j - 1][i - 1] = -val
    return tuple(tuple(r) for r in rows)


def _reflection_matrix(n: int, beta, f, ident):
    return tuple(
        tuple(ident[r][c] - beta[r] * f[c] for c in range(n)) for r in range(n)
    )


class MatrixGroup(_GroupBase):
    """Exact reflection matrices in the simple-root basis.

    Elements are n x n tuples over Z or Z[phi] acting on column vectors;
    ``mul(u, v)`` composes u first, so it multiplies as v @ u.  Each
    reflection carries its rank-one data (beta, f) with matrix
    I - beta f^T, which the interval search uses for cheap updates.
    """

    def __init__(self, ctype: CoxType):
        assert ctype.series in ("H", "F", "E")
        self.ctype = ctype
        self.n = ctype.rank
        self.cartan = _cartan_matrix(ctype)
        one = self.cartan[0][0].__class__(1, 0) if ctype.series == "H" else 1
        self.one = one
        self.identity = mat_identity(self.n, one)

    def mul(self, u, v):
        return mat_mul(v, u)

    def inv(self, u):
        # reflection matrices have small order; iterate to the inverse
        acc = u
        prev = self.identity
        while acc != self.identity:
            prev = acc
            acc = mat_mul(acc, u)
        return prev

    @cached_property
    def _simple_data(self):
        zero = self.one - self.one
        data = []
        for j in range(self.n):
            beta = tuple(self.one if i == j else zero for i in range(self.n))
            f = tuple(self.cartan[i][j] for i in range(self.n))
            data.append((_reflection_matrix(self.n, beta, f, self.identity), beta, f))
        return data

    @cached_property
    def simples(self):
        return tuple(m for m, _, _ in self._simple_data)

    @cached_property
    def reflection_data(self):
        """All reflections as (matrix, beta, f), closed under conjugation."""
        n = self.n
        found: dict = {}
        queue = []
        for mat, beta, f in self._simple_data:
            key = tuple(tuple(beta[r] * f[c] for c in range(n)) for r in range(n))
            if key not in found:
                found[key] = (mat, beta, f)
                queue.append((beta, f))
        while queue:
            beta, f = queue.pop()
            for smat, sbeta, sf in self._simple_data:
                nb = tuple(
                    sum((smat[r][c] * beta[c] for c in range(n)), start=beta[0] - beta[0])
                    for r in range(n)
                )
                nf = tuple(
                    sum((smat[r][c] * f[r] for r in range(n)), start=f[0] - f[0])
                    for c in range(n)
                )
                key = tuple(tuple(nb[r] * nf[c] for c in range(n)) for r in range(n))
                if key not in found:
                    mat = _reflection_matrix(n, nb, nf, self.identity)
                    found[key] = (mat, nb, nf)
                    queue.append((nb, nf))
        return tuple(found.values())

    @cached_property
    def reflections(self):
        return tuple(m for m, _, _ in self.reflection_data)

    def refl_length(self, u) -> int:
        diff = [
            [u[r][c] - self.identity[r][c] for c in range(self.n)] for r in range(self.n)
        ]
        return matrix_rank(diff)

    def atom_image(self, atom: Atom):
        raise ValueError(f"type {self.ctype} has no named generators")


def coxeter_group(ctype: CoxType) -> _GroupBase:
    """The reflection model used for the given type."""
    if ctype.series == "A":
        return PermGroup(ctype)
    if ctype.series in ("B", "D"):
        return SignedPermGroup(ctype)
    if ctype.series == "I2":
        return DihedralGroup(ctype)
    return MatrixGroup(ctype)


def word_image(group: _GroupBase, word: Word | Iterable[Atom]):
    """Project a word to the group, multiplying left factors first."""
    el = group.identity
    for atom in word:
        el = group.mul(el, group.atom_image(atom))
    return el


def signed_perm_matrix(group: SignedPermGroup, el) -> tuple[tuple[int, ...], ...]:
    """Signed permutation matrix, for cross-checking lengths by rank."""
    n = group.n
    rows = [[0] * n for _ in range(n)]
    for i, x in enumerate(el):
        rows[abs(x) - 1][i] = 1 if x > 0 else -1
    return tuple(tuple(r) for r in rows)

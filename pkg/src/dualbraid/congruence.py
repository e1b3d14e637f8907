"""Ground-truth word calculus for a homogeneous presentation.

All relations in the presentations used here preserve word length, so
the congruence class of a word is finite and can be closed off by
breadth-first search.  :class:`ClassStore` memoizes those closures and
answers equality, divisibility and Garside-word questions exactly,
without consulting any group model.

On top of the raw congruence sit the syntactic tools of subword
reversing: a right-complement table extracted from the relation sides
(:class:`ComplementTable`), the reversing procedure itself
(:func:`reverse_words`), and the associativity test for iterated
complements (:func:`cube_condition`).  The table may be partial; all
consumers tolerate reversing getting stuck and report it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from random import Random

from .presentation import Atom, Presentation, Relation, Word, render_word, word_key

__all__ = [
    "ClassStore",
    "ComplementTable",
    "ReversalResult",
    "reverse_words",
    "CubeReport",
    "cube_condition",
    "count_simples_rewriting",
]

DEFAULT_CLASS_CAP = 500_000


class ClassStore:
    """Memoized congruence classes of a homogeneous presentation."""

    def __init__(self, presentation: Presentation, cap: int = DEFAULT_CLASS_CAP):
        for rel in presentation.relations:
            if not rel.homogeneous:
                raise ValueError(f"relation is not length preserving: {rel}")
        self.presentation = presentation
        self.cap = cap
        self._rules: dict[Atom, list[tuple[Word, Word]]] = {}
        for rel in presentation.relations:
            self._rules.setdefault(rel.lhs[0], []).append((rel.lhs, rel.rhs))
            self._rules.setdefault(rel.rhs[0], []).append((rel.rhs, rel.lhs))
        self._classes: list[frozenset[Word]] = []
        self._id_of: dict[Word, int] = {}

    def _neighbors(self, word: Word):
        for i, atom in enumerate(word):
            for side, repl in self._rules.get(atom, ()):
                if word[i : i + len(side)] == side:
                    yield word[:i] + repl + word[i + len(side) :]

    def class_id(self, word) -> int:
        word = tuple(word)
        cid = self._id_of.get(word)
        if cid is not None:
            return cid
        seen = {word}
        queue = deque([word])
        while queue:
            w = queue.popleft()
            for nb in self._neighbors(w):
                if nb not in seen:
                    if len(seen) >= self.cap:
                        raise RuntimeError(
                            f"congruence class of {render_word(word)} exceeds cap {self.cap}"
                        )
                    seen.add(nb)
                    queue.append(nb)
        cid = len(self._classes)
        self._classes.append(frozenset(seen))
        for w in seen:
            self._id_of[w] = cid
        return cid

    def class_words(self, word) -> frozenset[Word]:
        return self._classes[self.class_id(word)]

    def words_equivalent(self, u, v) -> bool:
        """Exact equality test for two positive words.

        >>> from .coxtypes import parse_type
        >>> from .presentation import dual_presentation, parse_word
        >>> store = ClassStore(dual_presentation(parse_type("B2")))
        >>> store.words_equivalent(parse_word("alpha(2,1)*tau(1)"), parse_word("tau(2)*alpha(2,1)"))
        True
        >>> store.words_equivalent(parse_word("tau(1)*alpha(2,1)"), parse_word("alpha(2,1)*tau(1)"))
        False
        """
        u, v = tuple(u), tuple(v)
        if len(u) != len(v):
            return False
        return v in self.class_words(u)

    def derivable(self, relation: Relation) -> bool:
        return self.words_equivalent(relation.lhs, relation.rhs)

    def representative(self, word) -> Word:
        return min(self.class_words(word), key=word_key)

    def _divisor_ids(self, word, left: bool) -> dict[int, Word]:
        reps: dict[int, Word] = {}
        for w in self.class_words(word):
            for k in range(len(w) + 1):
                part = w[:k] if left else w[len(w) - k :]
                cid = self.class_id(part)
                if cid not in reps:
                    reps[cid] = self.representative(part)
        return reps

    def left_divisor_classes(self, word) -> list[Word]:
        """One representative per distinct left divisor, shortest first."""
        return sorted(self._divisor_ids(word, left=True).values(), key=word_key)

    def right_divisor_classes(self, word) -> list[Word]:
        return sorted(self._divisor_ids(word, left=False).values(), key=word_key)

    def is_garside_word(self, word) -> bool:
        """Left and right divisors agree and every atom occurs among them."""
        left = self._divisor_ids(word, left=True)
        right = self._divisor_ids(word, left=False)
        if set(left) != set(right):
            return False
        atom_ids = {self.class_id((a,)) for a in self.presentation.atoms}
        return atom_ids <= set(left)


def is_garside_element(
    presentation: Presentation, word: Word | None = None, cap: int = DEFAULT_CLASS_CAP
) -> bool:
    """Check the Garside-element law for a word by pure rewriting.

    Defaults to the presentation's own candidate word.  The test is the
    definition: the left and right divisor sets of the class coincide and
    contain every atom.
    """
    target = word if word is not None else presentation.garside_word
    if target is None:
        raise ValueError("presentation has no Garside word")
    store = ClassStore(presentation, cap=cap)
    return store.is_garside_word(tuple(target))


def count_simples_rewriting(presentation: Presentation) -> int:
    """Number of left divisors of the Garside word, by pure rewriting."""
    if presentation.garside_word is None:
        raise ValueError("presentation has no Garside word")
    store = ClassStore(presentation)
    return len(store.left_divisor_classes(presentation.garside_word))


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        self.parent[self.find(x)] = self.find(y)


class ComplementTable:
    """Right complements read off from the relation sides.

    Relation sides are grouped into components: two sides of one relation
    name the same element, and chained relations merge components.  A pair
    of atoms (x, y) gets the entry f(x, y) when some component contains a
    word starting with x and one starting with y; then x*f(x,y) and
    y*f(y,x) are equal words of that component.  Among eligible
    components the shortest words win, then lexicographic order.
    """

    def __init__(self, presentation: Presentation):
        self.presentation = presentation
        uf = _UnionFind()
        for rel in presentation.relations:
            uf.union(rel.lhs, rel.rhs)
        components: dict = {}
        for side in uf.parent:
            components.setdefault(uf.find(side), []).append(side)
        self._entries: dict[tuple[Atom, Atom], Word] = {}
        for atom in presentation.atoms:
            self._entries[(atom, atom)] = ()
        for comp in components.values():
            comp.sort(key=word_key)
            length = len(comp[0])
            by_head: dict[Atom, Word] = {}
            for word in comp:
                by_head.setdefault(word[0], word)
            heads = sorted(by_head, key=lambda a: a.key)
            for x in heads:
                for y in heads:
                    if x is y:
                        continue
                    cur = self._entries.get((x, y))
                    if cur is not None and len(cur) + 1 <= length:
                        continue
                    self._entries[(x, y)] = by_head[x][1:]

    def entry(self, x: Atom, y: Atom) -> Word | None:
        """f(x, y), a word with x*f(x,y) = y*f(y,x), or None if missing."""
        return self._entries.get((x, y))

    def lcm_word(self, x: Atom, y: Atom) -> Word | None:
        tail = self.entry(x, y)
        if tail is None:
            return None
        return (x,) + tail

    def missing_pairs(self) -> list[tuple[Atom, Atom]]:
        atoms = self.presentation.atoms
        return [
            (x, y)
            for x in atoms
            for y in atoms
            if x != y and (x, y) not in self._entries
        ]

    def is_total(self) -> bool:
        return not self.missing_pairs()

    def stats(self) -> dict:
        atoms = self.presentation.atoms
        pairs = len(atoms) * (len(atoms) - 1)
        missing = len(self.missing_pairs())
        return {
            "atoms": len(atoms),
            "ordered_pairs": pairs,
            "covered": pairs - missing,
            "missing": missing,
            "total": missing == 0,
        }


@dataclass(frozen=True)
class ReversalResult:
    """Outcome of reversing u^-1 v; on success u*comp_uv = v*comp_vu."""

    status: str  # "reversed", "stuck" or "diverged"
    comp_uv: Word | None
    comp_vu: Word | None
    steps: int


def reverse_words(table: ComplementTable, u, v, max_steps: int = 1000) -> ReversalResult:
    """Right-reverse the signed word u^-1 v using the complement table.

    Negative letters migrate to the right end; the procedure stops when
    the word has the positive-negative shape, when a needed table entry
    is missing ("stuck"), or after ``max_steps`` replacements
    ("diverged").
    """
    word: list[tuple[Atom, int]] = [(a, -1) for a in reversed(tuple(u))]
    word += [(a, +1) for a in tuple(v)]
    steps = 0
    while True:
        spot = None
        for i in range(len(word) - 1):
            if word[i][1] < 0 and word[i + 1][1] > 0:
                spot = i
                break
        if spot is None:
            pos = [a for a, s in word if s > 0]
            neg = [a for a, s in word if s < 0]
            neg.reverse()
            return ReversalResult("reversed", tuple(pos), tuple(neg), steps)
        if steps >= max_steps:
            return ReversalResult("diverged", None, None, steps)
        steps += 1
        x, y = word[spot][0], word[spot + 1][0]
        fxy = table.entry(x, y)
        fyx = table.entry(y, x)
        if fxy is None or fyx is None:
            return ReversalResult("stuck", None, None, steps)
        middle = [(a, +1) for a in fxy] + [(a, -1) for a in reversed(fyx)]
        word[spot : spot + 2] = middle


@dataclass
class CubeReport:
    """Tally of the complement associativity test over atom triples."""

    checked: int = 0
    passed: int = 0
    stuck: int = 0
    diverged: int = 0
    failures: list[tuple[Atom, Atom, Atom]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.diverged == 0

    def as_dict(self) -> dict:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "stuck": self.stuck,
            "diverged": self.diverged,
            "failed": len(self.failures),
            "ok": self.ok,
        }


def cube_condition(
    presentation: Presentation,
    table: ComplementTable | None = None,
    store: ClassStore | None = None,
    max_steps: int = 1000,
    sample: int | None = None,
    seed: int = 0,
) -> CubeReport:
    """Compare the two bracketings of the triple common multiple.

    For atoms (x, y, z) the word x*f(x,y) is completed through z, and
    y*f(y,z) is completed through x; the two resulting words must name
    the same element, which the congruence oracle decides.  Triples where
    the partial table leaves the reversing stuck are counted separately
    and prove nothing either way.
    """
    table = table or ComplementTable(presentation)
    store = store or ClassStore(presentation)
    triples = list(permutations(presentation.atoms, 3))
    if sample is not None and sample < len(triples):
        triples = Random(seed).sample(triples, sample)
    report = CubeReport()
    for x, y, z in triples:
        report.checked += 1
        fxy = table.entry(x, y)
        fyz = table.entry(y, z)
        if fxy is None or fyz is None:
            report.stuck += 1
            continue
        first = reverse_words(table, (z,), (x,) + fxy, max_steps)
        second = reverse_words(table, (x,), (y,) + fyz, max_steps)
        if "diverged" in (first.status, second.status):
            report.diverged += 1
            continue
        if "stuck" in (first.status, second.status):
            report.stuck += 1
            continue
        t1 = (z,) + first.comp_uv
        t2 = (x,) + second.comp_uv
        if store.words_equivalent(t1, t2):
            report.passed += 1
        else:
            report.failures.append((x, y, z))
    return report

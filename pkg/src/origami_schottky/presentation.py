"""Finitely presented groups: words, presentations, coset enumeration,
and exhaustive homomorphism search into small finite groups.

Words are tuples of nonzero signed integers: letter k stands for the k-th
generator, -k for its inverse.  Products read left to right.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Word",
    "reduce_word",
    "invert_word",
    "concat_words",
    "Presentation",
    "presentation_case_a",
    "presentation_case_b",
    "subgroup_words_odd",
    "subgroup_words_even",
    "subgroup_words_a4",
    "CosetTable",
    "EnumerationOverflow",
    "todd_coxeter",
    "permutation_rep",
    "is_normal",
    "NormalCore",
    "normal_core",
    "QuotientStructure",
    "quotient_structure",
    "FiniteGroup",
    "cyclic_group",
    "dihedral_group",
    "alternating_group_4",
    "Homomorphism",
    "enumerate_homs",
    "torsion_free_kernel",
]

Word = tuple[int, ...]


def reduce_word(letters: Iterable[int]) -> Word:
    """Freely reduce: cancel adjacent inverse pairs."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w: Iterable[int]) -> Word:
    return tuple(-x for x in reversed(tuple(w)))


def concat_words(*words: Iterable[int]) -> Word:
    return reduce_word(itertools.chain(*words))


def _is_cyclically_reduced(w: Word) -> bool:
    return len(w) == 0 or w[0] != -w[-1]


@dataclass(frozen=True)
class Presentation:
    """Named generators and a list of relator words."""

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.generator_names:
            raise ValueError("need at least one generator")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise ValueError("generator names must be distinct")
        for rel in self.relators:
            if not rel:
                raise ValueError("relators must be nonempty")
            if reduce_word(rel) != tuple(rel):
                raise ValueError("relators must be freely reduced")
            if not _is_cyclically_reduced(tuple(rel)):
                raise ValueError("relators must be cyclically reduced")
            for x in rel:
                if not (1 <= abs(x) <= len(self.generator_names)):
                    raise ValueError(f"letter {x} outside the generator range")

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def word_to_text(self, w: Iterable[int]) -> str:
        parts = []
        for x in w:
            name = self.generator_names[abs(x) - 1]
            parts.append(name if x > 0 else name + "^-1")
        return " ".join(parts)

    def parse_word(self, text: str) -> Word:
        index = {name: i + 1 for i, name in enumerate(self.generator_names)}
        letters = []
        for tok in text.split():
            if tok.endswith("^-1"):
                name, sign = tok[:-3], -1
            else:
                name, sign = tok, 1
            if name not in index:
                raise ValueError(f"unknown generator {name!r}")
            letters.append(sign * index[name])
        return tuple(letters)

    def to_text(self) -> str:
        lines = ["gens: " + " ".join(self.generator_names)]
        lines.extend("rel: " + self.word_to_text(rel) for rel in self.relators)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Presentation":
        names: tuple[str, ...] | None = None
        rel_lines: list[str] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("gens:"):
                if names is not None:
                    raise ValueError("duplicate gens line")
                names = tuple(line[len("gens:"):].split())
            elif line.startswith("rel:"):
                rel_lines.append(line[len("rel:"):])
            else:
                raise ValueError(f"unrecognized line {line!r}")
        if names is None:
            raise ValueError("missing gens line")
        stub = cls(names, ())
        return cls(names, tuple(stub.parse_word(s) for s in rel_lines))


# The two presentation families.  In both, the stable letter is T.
# Case a (one generator pair B, T): relators
#   B^2, (T B T^-1 B)^n, ((T B T^-1 B) B)^2
# so the element a = T B T^-1 B plays the role of an order-n rotation.
# Case b (generators A, B, T): the tetrahedral relations plus [T, A].

_CASE_A_ROTATION: Word = (2, 1, -2, 1)  # T B T^-1 B


def presentation_case_a(n: int) -> Presentation:
    if n < 2:
        raise ValueError("need n >= 2")
    rel1: Word = (1, 1)
    rel2 = reduce_word(_CASE_A_ROTATION * n)
    rel3 = reduce_word((_CASE_A_ROTATION + (1,)) * 2)
    return Presentation(("B", "T"), (rel1, rel2, rel3))


def presentation_case_b() -> Presentation:
    rels: tuple[Word, ...] = (
        (1, 1, 1),
        (2, 2),
        (1, 2, 1, 2, 1, 2),
        (3, 1, -3, -1),
    )
    return Presentation(("A", "B", "T"), rels)


def _rotation_power(k: int) -> Word:
    if k >= 0:
        return _CASE_A_ROTATION * k
    return invert_word(_CASE_A_ROTATION) * (-k)


def subgroup_words_odd(n: int) -> tuple[Word, ...]:
    """Generators of the rank-n Schottky subgroup for odd n >= 3.

    With a = T B T^-1 B and c = a^((n-1)/2) T, these are the conjugates
    a^k c a^-k for k = -(n-1)/2 .. (n-1)/2, freely reduced over (B, T).
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("need odd n >= 3")
    half = (n - 1) // 2
    c = concat_words(_rotation_power(half), (2,))
    return tuple(
        concat_words(_rotation_power(k), c, _rotation_power(-k))
        for k in range(-half, half + 1)
    )


def subgroup_words_even(n: int) -> tuple[Word, ...]:
    """Generators of the rank-n Schottky subgroup for even n >= 2.

    These are the conjugates a^k T a^-k of the stable letter for k in the
    symmetric range -(n/2 - 1) .. n/2, freely reduced over (B, T).
    """
    if n < 2 or n % 2 == 1:
        raise ValueError("need even n >= 2")
    return tuple(
        concat_words(_rotation_power(k), (2,), _rotation_power(-k))
        for k in range(-(n // 2 - 1), n // 2 + 1)
    )


def subgroup_words_a4() -> tuple[Word, ...]:
    """Generators of the rank-4 Schottky subgroup in the tetrahedral case:
    T, B T B, A B T B A^-1, A^-1 B T B A over (A, B, T)."""
    return (
        (3,),
        (2, 3, 2),
        (1, 2, 3, 2, -1),
        (-1, 2, 3, 2, 1),
    )


# --- coset enumeration -------------------------------------------------

def _col(x: int) -> int:
    # column layout: generator g occupies columns 2(g-1) and 2(g-1)+1
    return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1


class EnumerationOverflow(RuntimeError):
    """The coset table exceeded its size bound before closing."""

    def __init__(self, max_cosets: int):
        super().__init__(f"enumeration exceeded {max_cosets} live cosets")
        self.max_cosets = max_cosets


class CosetTable:
    """A closed coset table: the transitive right action of the generators
    on the cosets of the subgroup, coset 0 being the subgroup itself."""

    def __init__(self, presentation: Presentation,
                 subgroup_words: Sequence[Word], rows: Sequence[Sequence[int]]):
        self.presentation = presentation
        self.subgroup_words = tuple(tuple(w) for w in subgroup_words)
        self.rows = [list(r) for r in rows]

    @property
    def num_cosets(self) -> int:
        return len(self.rows)

    def act(self, coset: int, word: Iterable[int]) -> int:
        for x in word:
            coset = self.rows[coset][_col(x)]
        return coset

    def to_csv(self) -> str:
        names = self.presentation.generator_names
        header = ["coset"]
        for g in names:
            header.extend((g, g + "^-1"))
        lines = [",".join(header)]
        for i, row in enumerate(self.rows):
            lines.append(",".join([str(i)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"


class _Enumerator:
    """HLT coset enumeration with coincidence handling and a lookahead
    sweep; definitions are made in first-gap order, so runs are
    deterministic."""

    def __init__(self, pres: Presentation, subgroup_words: Sequence[Word],
                 max_cosets: int, lookahead_threshold: int):
        self.pres = pres
        self.subgroup_words = tuple(reduce_word(w) for w in subgroup_words)
        self.ncols = 2 * pres.ngens
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ncols]
        self.p = [0]
        self.live = 1
        self.queue: deque[int] = deque()
        self.rel_cols = [[_col(x) for x in rel] for rel in pres.relators]
        self.sub_cols = [[_col(x) for x in w] for w in self.subgroup_words]
        self.lookahead_threshold = lookahead_threshold
        self.next_lookahead = lookahead_threshold
        self.changes = 0

    def _rep(self, k: int) -> int:
        r = k
        while self.p[r] != r:
            r = self.p[r]
        while self.p[k] != r:
            self.p[k], k = r, self.p[k]
        return r

    def _alive(self, k: int) -> bool:
        return self.p[k] == k

    def _define(self, alpha: int, col: int) -> None:
        if self.live >= self.max_cosets:
            raise EnumerationOverflow(self.max_cosets)
        beta = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(beta)
        self.live += 1
        self.table[alpha][col] = beta
        self.table[beta][col ^ 1] = alpha
        self.changes += 1

    def _merge(self, a: int, b: int) -> None:
        a, b = self._rep(a), self._rep(b)
        if a != b:
            if a > b:
                a, b = b, a
            self.p[b] = a
            self.live -= 1
            self.queue.append(b)
            self.changes += 1

    def _coincidence(self, a: int, b: int) -> None:
        self._merge(a, b)
        while self.queue:
            dead = self.queue.popleft()
            for col in range(self.ncols):
                tgt = self.table[dead][col]
                if tgt is None:
                    continue
                if self.table[tgt][col ^ 1] == dead:
                    self.table[tgt][col ^ 1] = None
                u, v = self._rep(dead), self._rep(tgt)
                if self.table[u][col] is not None:
                    self._merge(v, self.table[u][col])
                elif self.table[v][col ^ 1] is not None:
                    self._merge(u, self.table[v][col ^ 1])
                else:
                    self.table[u][col] = v
                    self.table[v][col ^ 1] = u

    def _scan_and_fill(self, alpha: int, cols: Sequence[int], fill: bool = True) -> None:
        f, i = alpha, 0
        b, j = alpha, len(cols) - 1
        while True:
            while i <= j and self.table[f][cols[i]] is not None:
                f = self.table[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self._coincidence(f, b)
                return
            while j >= i and self.table[b][cols[j] ^ 1] is not None:
                b = self.table[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if j == i:
                self.table[f][cols[i]] = b
                self.table[b][cols[i] ^ 1] = f
                self.changes += 1
                return
            if not fill:
                return
            self._define(f, cols[i])

    def _lookahead(self) -> None:
        # coincidence-only sweep: scan everything without defining
        for alpha in range(len(self.table)):
            if not self._alive(alpha):
                continue
            for cols in self.rel_cols:
                self._scan_and_fill(alpha, cols, fill=False)
                if not self._alive(alpha):
                    break

    def run(self) -> CosetTable:
        # sweep until a full pass makes no definitions, deductions, or merges
        while True:
            before = self.changes
            for cols in self.sub_cols:
                self._scan_and_fill(0, cols)
            alpha = 0
            while alpha < len(self.table):
                if self._alive(alpha):
                    for cols in self.rel_cols:
                        self._scan_and_fill(alpha, cols)
                        if not self._alive(alpha):
                            break
                    if self._alive(alpha):
                        for col in range(self.ncols):
                            if self.table[alpha][col] is None:
                                self._define(alpha, col)
                    if self.live >= self.next_lookahead:
                        self._lookahead()
                        self.next_lookahead = max(2 * self.live,
                                                  self.lookahead_threshold)
                alpha += 1
            if self.changes == before:
                break
        return self._finish()

    def _finish(self) -> CosetTable:
        # standardize: number live cosets in first-visit order from coset 0
        order = [self._rep(0)]
        pos = {order[0]: 0}
        idx = 0
        while idx < len(order):
            row = self.table[order[idx]]
            for col in range(self.ncols):
                t = row[col]
                if t is None:
                    raise RuntimeError("internal error: incomplete table")
                t = self._rep(t)
                if t not in pos:
                    pos[t] = len(order)
                    order.append(t)
            idx += 1
        if len(order) != self.live:
            raise RuntimeError("internal error: action not transitive")
        rows = [[pos[self._rep(self.table[o][c])] for c in range(self.ncols)]
                for o in order]
        table = CosetTable(self.pres, self.subgroup_words, rows)
        for cols in ([_col(x) for x in w] for w in self.subgroup_words):
            c = 0
            for col in cols:
                c = rows[c][col]
            if c != 0:
                raise RuntimeError("internal error: subgroup word moves coset 0")
        for alpha in range(len(rows)):
            for cols in self.rel_cols:
                c = alpha
                for col in cols:
                    c = rows[c][col]
                if c != alpha:
                    raise RuntimeError("internal error: relator does not close")
        return table


def todd_coxeter(presentation: Presentation, subgroup_words: Sequence[Word] = (),
                 max_cosets: int = 1_000_000,
                 lookahead_threshold: int = 10_000) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_words``.

    Returns the closed, standardized table; raises EnumerationOverflow if
    more than ``max_cosets`` cosets are alive at once (in particular, for
    infinite index the call fails rather than looping forever).
    """
    for w in subgroup_words:
        for x in w:
            if not (1 <= abs(x) <= presentation.ngens):
                raise ValueError(f"letter {x} outside the generator range")
    if max_cosets < 1:
        raise ValueError("max_cosets must be positive")
    return _Enumerator(presentation, subgroup_words, max_cosets,
                       lookahead_threshold).run()


def permutation_rep(table: CosetTable) -> tuple[tuple[int, ...], ...]:
    """One permutation of the cosets per generator (right action)."""
    return tuple(
        tuple(table.rows[i][2 * g] for i in range(table.num_cosets))
        for g in range(table.presentation.ngens)
    )


def is_normal(table: CosetTable) -> bool:
    """The subgroup is normal iff each subgroup word fixes every coset."""
    return all(
        table.act(c, w) == c
        for w in table.subgroup_words
        for c in range(table.num_cosets)
    )


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # left-to-right: first p, then q
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_closure(perms: Sequence[tuple[int, ...]],
                  cap: int = 1_000_000) -> list[tuple[int, ...]]:
    if not perms:
        return []
    deg = len(perms[0])
    identity = tuple(range(deg))
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        fresh = []
        for p in frontier:
            for g in perms:
                q = _perm_compose(p, g)
                if q not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"permutation closure exceeded {cap}")
                    seen.add(q)
                    fresh.append(q)
        elements.extend(fresh)
        frontier = fresh
    return elements


@dataclass(frozen=True)
class NormalCore:
    """The kernel of the coset action: ``index`` is the order of the image
    permutation group (the index of the core), and ``generator_images``
    pins the action down, one permutation per generator."""

    index: int
    generator_images: tuple[tuple[int, ...], ...]


def normal_core(table: CosetTable) -> NormalCore:
    perms = permutation_rep(table)
    return NormalCore(len(_perm_closure(perms)), perms)


# --- small finite groups ------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a Cayley table; element 0 is the identity.

    ``table[i][j]`` is the product i * j; ``generators`` is a designated
    generating list of element indices.
    """

    name: str
    table: tuple[tuple[int, ...], ...]
    generators: tuple[int, ...]

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise ValueError("Cayley table must be square and nonempty")
        for row in self.table:
            if sorted(row) != list(range(n)):
                raise ValueError("rows must be permutations")
        for j in range(n):
            if sorted(self.table[i][j] for i in range(n)) != list(range(n)):
                raise ValueError("columns must be permutations")
        if any(self.table[0][j] != j for j in range(n)):
            raise ValueError("element 0 must be the identity")
        if any(self.table[i][0] != i for i in range(n)):
            raise ValueError("element 0 must be the identity")
        for i in range(n):
            if all(self.table[i][j] != 0 for j in range(n)):
                raise ValueError("every element needs an inverse")
        self._check_associativity()
        for g in self.generators:
            if not (0 <= g < n):
                raise ValueError("generator index out of range")

    def _check_associativity(self):
        n = len(self.table)
        if n <= 48:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(5000))
        for i, j, k in triples:
            if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]]:
                raise ValueError("table is not associative")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.table[i].index(0)

    def element_order(self, i: int) -> int:
        k, acc = 1, i
        while acc != 0:
            acc = self.mul(acc, i)
            k += 1
        return k

    def eval_word(self, word: Iterable[int], images: Sequence[int]) -> int:
        out = 0
        for x in word:
            g = images[abs(x) - 1]
            out = self.mul(out, g if x > 0 else self.inv(g))
        return out

    def generated_order(self, images: Sequence[int]) -> int:
        seen = {0}
        frontier = [0]
        while frontier:
            fresh = []
            for e in frontier:
                for g in images:
                    v = self.mul(e, g)
                    if v not in seen:
                        seen.add(v)
                        fresh.append(v)
            frontier = fresh
        return len(seen)

    def cyclic_subgroup(self, i: int) -> set[int]:
        out, acc = {0}, i
        while acc != 0:
            out.add(acc)
            acc = self.mul(acc, i)
        return out

    @classmethod
    def from_permutations(cls, perms: Sequence[tuple[int, ...]],
                          name: str = "perm-group") -> "FiniteGroup":
        """Group generated by permutations, products composing left to
        right; elements are sorted, so the identity lands at index 0."""
        elements = sorted(_perm_closure(perms))
        index = {p: i for i, p in enumerate(elements)}
        table = tuple(
            tuple(index[_perm_compose(p, q)] for q in elements)
            for p in elements
        )
        gens = tuple(index[tuple(p)] for p in perms)
        return cls(name, table, gens)


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("need m >= 1")
    table = tuple(tuple((i + j) % m for j in range(m)) for i in range(m))
    return FiniteGroup(f"Z{m}", table, (1 % m,))


def dihedral_group(m: int) -> FiniteGroup:
    """Order 2m: elements (i, s) with i mod m, s in {0, 1}, encoded i + m s."""
    if m < 1:
        raise ValueError("need m >= 1")

    def mul(x: int, y: int) -> int:
        i, s = x % m, x // m
        j, t = y % m, y // m
        return (i + (j if s == 0 else -j)) % m + m * ((s + t) % 2)

    table = tuple(tuple(mul(x, y) for y in range(2 * m)) for x in range(2 * m))
    return FiniteGroup(f"D{m}", table, (1 % m, m))


def alternating_group_4() -> FiniteGroup:
    gens = [(1, 2, 0, 3), (1, 0, 3, 2)]  # a 3-cycle and a double transposition
    group = FiniteGroup.from_permutations(gens, "A4")
    if group.order != 12:
        raise RuntimeError("self-check failed: A4 closure size")
    return group


@dataclass(frozen=True)
class QuotientStructure:
    """The quotient by a normal subgroup, with a coarse structure tag:
    "cyclic(m)", "dihedral(m)", "A4", or "other".  ``generator_images``
    are the images of the presentation generators inside ``group``."""

    group: FiniteGroup
    tag: str
    generator_images: tuple[int, ...]


def _structure_tag(group: FiniteGroup) -> str:
    n = group.order
    orders = [group.element_order(i) for i in range(n)]
    if any(o == n for o in orders):
        return f"cyclic({n})"
    if n >= 4 and n % 2 == 0:
        m = n // 2
        for r in (i for i in range(n) if orders[i] == m):
            powers = group.cyclic_subgroup(r)
            rinv = group.inv(r)
            for s in (i for i in range(n) if orders[i] == 2 and i not in powers):
                if group.mul(group.mul(s, r), s) == rinv:
                    return f"dihedral({m})"
    if n == 12 and sorted(orders) == [1, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]:
        return "A4"
    return "other"


def quotient_structure(table: CosetTable) -> QuotientStructure:
    """Identify the quotient group when the subgroup is normal."""
    if not is_normal(table):
        raise ValueError("quotient undefined: subgroup is not normal")
    perms = permutation_rep(table)
    elements = sorted(_perm_closure(perms))
    if len(elements) != table.num_cosets:
        raise RuntimeError("internal error: action order != coset count")
    index = {p: i for i, p in enumerate(elements)}
    cayley = tuple(
        tuple(index[_perm_compose(p, q)] for q in elements) for p in elements
    )
    images = tuple(index[p] for p in perms)
    group = FiniteGroup(f"quotient[{table.num_cosets}]", cayley, images)
    return QuotientStructure(group, _structure_tag(group), images)


# --- homomorphism search ------------------------------------------------

@dataclass(frozen=True)
class Homomorphism:
    """Generator images in a finite group; relators map to the identity.

    ``torsion_free`` records whether the designated finite vertex subgroup
    maps injectively (None when the presentation family is unknown).
    """

    target: FiniteGroup
    images: tuple[int, ...]
    surjective: bool
    torsion_free: bool | None = None

    def as_dict(self) -> dict:
        return {
            "target": self.target.name,
            "images": list(self.images),
            "surjective": self.surjective,
            "torsion_free_kernel": self.torsion_free,
        }


def torsion_free_kernel(h: Homomorphism, kind: tuple) -> bool:
    """Whether the kernel avoids all torsion of the presented group.

    Torsion lives in conjugates of the finite vertex group, so the kernel
    is torsion free iff the vertex group maps injectively.  ``kind`` is
    ("a", n) for the dihedral family (vertex group generated by B and
    a = T B T^-1 B, injective iff B, a, a B keep orders 2, n, 2) or
    ("b",) for the tetrahedral family (injective iff A, B, A B keep
    orders 3, 2, 3).
    """
    g = h.target
    if kind[0] == "a":
        n = kind[1]
        b = h.images[0]
        a = g.eval_word(_CASE_A_ROTATION, h.images)
        return (g.element_order(b) == 2
                and g.element_order(a) == n
                and g.element_order(g.mul(a, b)) == 2)
    if kind[0] == "b":
        a, b = h.images[0], h.images[1]
        return (g.element_order(a) == 3
                and g.element_order(b) == 2
                and g.element_order(g.mul(a, b)) == 3)
    raise ValueError(f"unknown presentation kind {kind!r}")


def enumerate_homs(presentation: Presentation, target: FiniteGroup,
                   kind: tuple | None = None) -> list[Homomorphism]:
    """All homomorphisms into ``target``, by exhaustive scan over generator
    images in lexicographic order.

    When ``kind`` identifies the presentation family, each homomorphism is
    tagged with the torsion-free-kernel flag; otherwise the flag is None.
    """
    n = target.order
    if n > 10_000:
        raise ValueError("target too large for exhaustive scan")
    if n ** presentation.ngens > 5_000_000:
        raise ValueError("image scan too large")
    out: list[Homomorphism] = []
    for images in itertools.product(range(n), repeat=presentation.ngens):
        if all(target.eval_word(rel, images) == 0 for rel in presentation.relators):
            surjective = target.generated_order(images) == n
            h = Homomorphism(target, images, surjective)
            if kind is not None:
                h = Homomorphism(target, images, surjective,
                                 torsion_free_kernel(h, kind))
            out.append(h)
    return out

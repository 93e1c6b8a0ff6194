"""Words, presentations, Todd-Coxeter enumeration, quotient structure,
and exhaustive homomorphism scans.

The scan counts for the order-8 dihedral target are pinned against an
independent oracle that represents that group by signed permutation
matrices and re-runs the whole search from scratch.
"""

import itertools
import math
import random

import pytest

from origami_schottky.presentation import (
    CosetTable,
    EnumerationOverflow,
    FiniteGroup,
    Presentation,
    alternating_group_4,
    concat_words,
    cyclic_group,
    dihedral_group,
    enumerate_homs,
    invert_word,
    is_normal,
    normal_core,
    permutation_rep,
    presentation_case_a,
    presentation_case_b,
    quotient_structure,
    reduce_word,
    subgroup_words_a4,
    subgroup_words_even,
    subgroup_words_odd,
    todd_coxeter,
    torsion_free_kernel,
)


def test_reduce_word_basics():
    assert reduce_word((1, -1)) == ()
    assert reduce_word((1, 2, -2, -1, 3)) == (3,)
    w = (1, 2, -1, 3, 3)
    assert reduce_word(w) == w
    assert reduce_word(reduce_word(w)) == reduce_word(w)


def test_reduce_cancels_word_times_inverse():
    rng = random.Random(4)
    for _ in range(50):
        w = tuple(rng.choice((1, -1, 2, -2, 3, -3)) for _ in range(rng.randint(0, 8)))
        assert reduce_word(concat_words(w, invert_word(w))) == ()


def test_presentation_validation():
    with pytest.raises(ValueError):
        Presentation(("a",), ((),))  # empty relator
    with pytest.raises(ValueError):
        Presentation(("a",), ((1, -1),))  # not freely reduced
    with pytest.raises(ValueError):
        Presentation(("a",), ((2,),))  # letter out of range
    with pytest.raises(ValueError):
        Presentation(("a", "b"), ((1, 2, -1),))  # not cyclically reduced


def test_presentation_text_roundtrip():
    p = presentation_case_a(3)
    q = Presentation.from_text(p.to_text())
    assert q == p
    assert p.parse_word("T B T^-1 B") == (2, 1, -2, 1)
    assert p.word_to_text((2, 1, -2, 1)) == "T B T^-1 B"


def test_case_a_relator_lengths():
    # expand and reduce: B^2 has length 2, [T,B]^2 length 8, ([T,B]B)^2 length 10
    p = presentation_case_a(2)
    assert sorted(len(r) for r in p.relators) == [2, 8, 10]
    assert p.generator_names == ("B", "T")
    with pytest.raises(ValueError):
        presentation_case_a(1)


def test_case_b_relators():
    p = presentation_case_b()
    assert p.generator_names == ("A", "B", "T")
    lengths = sorted(len(r) for r in p.relators)
    assert lengths == [2, 3, 4, 6]
    commutator = [r for r in p.relators if len(r) == 4][0]
    assert sorted(abs(x) for x in commutator) == [1, 1, 3, 3]


def test_case_b_relators_vanish_on_certified_matrices(built_b):
    from origami_schottky.moebius import eval_word
    gens = built_b.letter_generators
    for rel in built_b.presentation.relators:
        assert eval_word(rel, gens).is_identity(tol=1e-9)


def test_case_b_with_trivial_t_collapses_to_order_12():
    # drop T: the vertex presentation <a,b | a^3, b^2, (ab)^3> has order 12
    p = Presentation(("A", "B"), ((1, 1, 1), (2, 2), (1, 2, 1, 2, 1, 2)))
    assert todd_coxeter(p).num_cosets == 12


def test_abelianization_observation():
    # exponent-sum oracle: relator rows over (B, T) are (2,0), (2n,0), (6,0),
    # so the abelian quotient is Z/2 x Z for every n (T survives with
    # infinite order; the finite part is the gcd of the B column)
    for n in range(2, 6):
        p = presentation_case_a(n)
        rows = [[sum(1 if x == g + 1 else -1 if x == -(g + 1) else 0
                     for x in rel) for g in range(2)] for rel in p.relators]
        assert all(row[1] == 0 for row in rows)
        assert math.gcd(*[row[0] for row in rows]) == 2


def test_subgroup_words_odd():
    words = subgroup_words_odd(3)
    assert len(words) == 3
    assert all(w == reduce_word(w) for w in words)
    assert len(subgroup_words_odd(5)) == 5
    rotation = (2, 1, -2, 1)
    for k in range(len(words) - 1):
        shifted = reduce_word(concat_words(rotation, words[k], invert_word(rotation)))
        assert shifted == words[k + 1] or shifted in words
    with pytest.raises(ValueError):
        subgroup_words_odd(4)


def test_subgroup_words_even():
    words = subgroup_words_even(2)
    assert len(words) == 2
    assert (2,) in words  # T itself
    assert len(set(subgroup_words_even(4))) == 4
    with pytest.raises(ValueError):
        subgroup_words_even(3)


def test_subgroup_words_a4():
    words = subgroup_words_a4()
    assert len(words) == 4
    assert (2, 3, 2) in words  # B T B
    for w in words:
        t_sum = sum(1 if x == 3 else -1 if x == -3 else 0 for x in w)
        assert t_sum in (-1, 1)


def test_todd_coxeter_cyclic_and_dihedral():
    for m in range(2, 13):
        p = Presentation(("a",), ((1,) * m,))
        assert todd_coxeter(p).num_cosets == m
    for n in range(2, 9):
        d = Presentation(("a", "b"), ((1,) * n, (2, 2), (1, 2, 1, 2)))
        assert todd_coxeter(d).num_cosets == 2 * n


def test_todd_coxeter_case_a3_odd_subgroup_index_6():
    table = todd_coxeter(presentation_case_a(3), subgroup_words_odd(3))
    assert table.num_cosets == 6


def test_todd_coxeter_overflow():
    free = Presentation(("a", "b"), ((1, 1, 1, 1, 1, 1, 1),))
    with pytest.raises(EnumerationOverflow):
        todd_coxeter(free, max_cosets=50)


def test_coset_table_invariants():
    p = presentation_case_a(3)
    table = todd_coxeter(p, subgroup_words_odd(3))
    n = table.num_cosets
    for rel in p.relators:
        for c in range(n):
            assert table.act(c, rel) == c
    for w in subgroup_words_odd(3):
        assert table.act(0, w) == 0
    # transitivity: breadth-first reach from coset 0 covers everything
    seen = {0}
    frontier = [0]
    letters = [s * (g + 1) for g in range(p.ngens) for s in (1, -1)]
    while frontier:
        c = frontier.pop()
        for letter in letters:
            nxt = table.act(c, (letter,))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    assert seen == set(range(n))


def test_index_invariant_under_conjugated_subgroup():
    p = presentation_case_a(3)
    base = todd_coxeter(p, subgroup_words_odd(3)).num_cosets
    conj = (2, 1)
    words = tuple(reduce_word(concat_words(conj, w, invert_word(conj)))
                  for w in subgroup_words_odd(3))
    assert todd_coxeter(p, words).num_cosets == base


def _perm_mul(p, q):
    return tuple(q[p[i]] for i in range(len(p)))


def _perm_group_order(perms):
    idx = tuple(range(len(perms[0])))
    seen = {idx}
    frontier = [idx]
    while frontier:
        x = frontier.pop()
        for g in perms:
            y = _perm_mul(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen)


def test_permutation_rep_examples():
    p3 = Presentation(("a",), ((1, 1, 1),))
    (perm,) = permutation_rep(todd_coxeter(p3))
    assert sorted(perm) == [0, 1, 2] and perm != (0, 1, 2)
    d3 = Presentation(("a", "b"), ((1, 1, 1), (2, 2), (1, 2, 1, 2)))
    perms = permutation_rep(todd_coxeter(d3))
    assert all(len(p) == 6 for p in perms)
    # the odd case-a subgroup has a degree-6 action generating order 6
    table = todd_coxeter(presentation_case_a(3), subgroup_words_odd(3))
    assert _perm_group_order(permutation_rep(table)) == 6


def test_is_normal_matches_constructions():
    assert is_normal(todd_coxeter(presentation_case_a(3), subgroup_words_odd(3)))
    assert not is_normal(todd_coxeter(presentation_case_a(2), subgroup_words_even(2)))
    assert is_normal(todd_coxeter(presentation_case_b(), subgroup_words_a4()))


def test_normal_core():
    d3 = Presentation(("a", "b"), ((1, 1, 1), (2, 2), (1, 2, 1, 2)))
    trivial = todd_coxeter(d3)
    assert normal_core(trivial).index == 6
    table = todd_coxeter(presentation_case_a(2), subgroup_words_even(2))
    core = normal_core(table)
    # oracle: the core index is the order of the degree-4 image group
    assert core.index == _perm_group_order(permutation_rep(table))
    assert core.index == 8
    normal_table = todd_coxeter(presentation_case_a(3), subgroup_words_odd(3))
    assert normal_core(normal_table).index == normal_table.num_cosets


def test_quotient_structure_tags():
    t = todd_coxeter(presentation_case_a(3), subgroup_words_odd(3))
    q = quotient_structure(t)
    assert q.tag == "dihedral(3)" and q.group.order == 6
    tb = todd_coxeter(presentation_case_b(), subgroup_words_a4())
    qb = quotient_structure(tb)
    assert qb.tag == "A4" and qb.group.order == 12
    c4 = todd_coxeter(Presentation(("a",), ((1, 1, 1, 1),)))
    assert quotient_structure(c4).tag == "cyclic(4)"
    with pytest.raises(ValueError):
        quotient_structure(todd_coxeter(presentation_case_a(2),
                                        subgroup_words_even(2)))


def test_finite_group_constructors():
    assert cyclic_group(5).order == 5
    d4 = dihedral_group(4)
    assert d4.order == 8
    orders = sorted(d4.element_order(i) for i in range(8))
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4]
    a4 = alternating_group_4()
    assert a4.order == 12
    profile = sorted(a4.element_order(i) for i in range(12))
    assert profile == [1, 2, 2, 2] + [3] * 8


def test_finite_group_validation_rejects_non_group():
    bad = ((0, 1), (1, 1))  # second row not a permutation
    with pytest.raises(ValueError):
        FiniteGroup("bad", bad, (1,))


def test_from_permutations():
    g = FiniteGroup.from_permutations([(1, 0, 2), (0, 2, 1)], "S3")
    assert g.order == 6


def test_trivial_hom_always_present():
    for p, kind in ((presentation_case_a(2), ("a", 2)),
                    (presentation_case_b(), ("b",))):
        homs = enumerate_homs(p, cyclic_group(3), kind)
        assert any(all(i == 0 for i in h.images) for h in homs)


def _d4_matrix_oracle():
    """Independent scan of case-a(2) maps into the order-8 dihedral group,
    modeled as signed permutation matrices.  Returns (total, surjective,
    vertex_injective, both) counts."""

    def mmul(p, q):
        (a, b), (c, d) = p
        (e, f), (g, h) = q
        return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))

    ident = ((1, 0), (0, 1))
    rot = ((0, -1), (1, 0))
    ref = ((1, 0), (0, -1))
    elems = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in (rot, ref):
            y = mmul(x, g)
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    assert len(elems) == 8

    def inv(p):
        (a, b), (c, d) = p
        det = a * d - b * c
        return ((d // det, -b // det), (-c // det, a // det))

    def order(p):
        k, y = 1, p
        while y != ident:
            y = mmul(y, p)
            k += 1
        return k

    def ev(b_img, t_img, word):
        m = ident
        for s in word:
            m = mmul(m, {1: b_img, -1: inv(b_img),
                         2: t_img, -2: inv(t_img)}[s])
        return m

    relators = ((1, 1), (2, 1, -2, 1) * 2, (2, 1, -2, 1, 1) * 2)
    total = surj = tf = both = 0
    for b_img, t_img in itertools.product(sorted(elems), repeat=2):
        if any(ev(b_img, t_img, w) != ident for w in relators):
            continue
        total += 1
        gen = {ident}
        stack = [ident]
        while stack:
            x = stack.pop()
            for g in (b_img, t_img):
                y = mmul(x, g)
                if y not in gen:
                    gen.add(y)
                    stack.append(y)
        s = len(gen) == 8
        a_img = ev(b_img, t_img, (2, 1, -2, 1))
        t_ok = (b_img != ident and order(b_img) == 2
                and a_img != ident and order(a_img) == 2
                and mmul(a_img, b_img) != ident
                and order(mmul(a_img, b_img)) == 2)
        surj += s
        tf += t_ok
        both += s and t_ok
    return total, surj, tf, both


def test_case_a2_to_d4_scan_matches_independent_oracle():
    # the scan finds 16 maps that are simultaneously surjective and
    # injective on the vertex Klein group; one explicit witness is
    # B -> a reflection, T -> the quarter rotation, under which [T,B]
    # lands on the central half turn
    homs = enumerate_homs(presentation_case_a(2), dihedral_group(4), ("a", 2))
    counts = (len(homs),
              sum(1 for h in homs if h.surjective),
              sum(1 for h in homs if h.torsion_free),
              sum(1 for h in homs if h.surjective and h.torsion_free))
    assert counts == _d4_matrix_oracle()
    assert counts == (48, 16, 16, 16)


def test_case_b_to_d4_scan_is_empty():
    # the order-12 vertex group cannot inject into an order-8 target, and
    # the target has no order-3 element at all, so nothing survives
    homs = enumerate_homs(presentation_case_b(), dihedral_group(4), ("b",))
    assert sum(1 for h in homs if h.surjective and h.torsion_free) == 0
    assert sum(1 for h in homs if h.torsion_free) == 0


def test_case_b_to_a4_scan_contains_canonical_quotient():
    a4 = alternating_group_4()
    homs = enumerate_homs(presentation_case_b(), a4, ("b",))
    both = [h for h in homs if h.surjective and h.torsion_free]
    assert len(both) == 72
    ga, gb = a4.generators
    assert any(h.images == (ga, gb, 0) for h in both)


def test_case_a3_to_d3_scan_finds_regular_origami():
    homs = enumerate_homs(presentation_case_a(3), dihedral_group(3), ("a", 3))
    both = [h for h in homs if h.surjective and h.torsion_free]
    assert len(both) == 12


def test_abelian_targets_never_give_torsion_free_kernels():
    # in an abelian image [T,B] dies, so the vertex group cannot inject
    for m in (2, 3, 4, 6):
        homs = enumerate_homs(presentation_case_a(2), cyclic_group(m), ("a", 2))
        assert all(not h.torsion_free for h in homs)
        assert len(homs) == m * math.gcd(2, m)  # 2b = 0 frees t entirely


def test_torsion_free_kernel_flags():
    d3 = dihedral_group(3)
    homs = enumerate_homs(presentation_case_a(3), d3, ("a", 3))
    killed = [h for h in homs if h.images[0] == 0]  # B -> identity
    assert killed and all(not torsion_free_kernel(h, ("a", 3)) for h in killed)
    a4 = alternating_group_4()
    ga, gb = a4.generators
    homs_b = enumerate_homs(presentation_case_b(), a4, ("b",))
    canonical = [h for h in homs_b if h.images == (ga, gb, 0)]
    assert len(canonical) == 1 and torsion_free_kernel(canonical[0], ("b",))


def test_enumerate_homs_guards():
    with pytest.raises(ValueError):
        enumerate_homs(presentation_case_b(), cyclic_group(180), ("b",))

"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every assertion is exact (integer or rational equality); there are no
tolerances anywhere in the verification chain.  Randomized suites use fixed
seeds and at least 100 samples per property.
"""

import random
from fractions import Fraction

from a6k3.exact import CycloNum, euler_phi, galois_apply
from a6k3.permgrp import (
    Perm,
    closure,
    conjugacy_classes,
    conjugation_image,
    fusion_type,
    index2_overgroups,
    fingerprint,
)
from a6k3.pgl9 import (
    build_pgammal29,
    build_pgl29,
    build_psl29,
    classify_overgroups,
    m10_order4_class_check,
)
from a6k3.chartab import character_table, match_reference_table, structure_constants
from a6k3.extbuild import (
    KINDS,
    build_all_candidates,
    build_candidate,
    identify,
    pairwise_nonisomorphic,
    verify_extension_structure,
)
from a6k3.k3verify import (
    CONTRADICTION,
    NOT_APPLICABLE,
    MultiplicityVector,
    NikulinTable,
    SignCase,
    argument_free_c4,
    argument_order5_blocks,
    argument_pigeonhole,
    decomposition_system,
    gram_determinant,
    gram_is_even,
    gram_k3,
    gram_signature,
    gram_transcendental,
    lefschetz_invariant_rank,
    nonpositive_sign_cases,
    perturb_identity_equation,
    run_exclusion,
    solve_decomposition,
)


def report(num: int, label: str):
    print(f"ACCEPTANCE {num:02d} PASS: {label}")


def test_criterion_01_group_tower():
    gam = build_pgammal29()
    assert len(gam) == 1440
    psl = build_psl29()
    overgroups = index2_overgroups(gam, psl)
    assert len(overgroups) == 3
    patterns = set()
    for H in overgroups:
        image, _ = conjugation_image(H, psl)
        ft = fusion_type(image)
        patterns.add((ft.swaps_3, ft.swaps_5))
    assert patterns == {(False, True), (True, False), (True, True)}
    split = classify_overgroups()
    assert split.pgl == build_pgl29()
    report(1, "PGammaL(2,9) has order 1440; three index-2 overgroups with distinct fusion")


def test_criterion_02_character_table():
    psl = build_psl29()
    t1 = character_table(psl, prime_index=0)
    assert t1.degrees == (1, 5, 5, 8, 8, 9, 10)
    assert match_reference_table(t1)
    sqrt5 = 2 * CycloNum.zeta(5, 1) + 2 * CycloNum.zeta(5, 4) + 1
    golden = [Fraction(1, 2) * (1 - sqrt5), Fraction(1, 2) * (1 + sqrt5)]
    pos5 = [i for i, c in enumerate(t1.classes) if c.element_order == 5]
    found = [t1.rows[3][i] for i in pos5]
    assert found[0] != found[1]
    assert all(any(v == g for g in golden) for v in found)
    t2 = character_table(psl, prime_index=1)
    assert t2.prime != t1.prime
    assert all(v == w for r1, r2 in zip(t1.rows, t2.rows) for v, w in zip(r1, r2))
    report(2, "Dixon table for PSL(2,9) matches the golden table, stable across primes")


def test_criterion_03_extensions():
    cands = build_all_candidates()
    assert all(len(c.group) == 1440 for c in cands.values())
    assert pairwise_nonisomorphic(cands.values())
    prints = [fingerprint(c.group) for c in cands.values()]
    assert len(set(prints)) == 4
    rng = random.Random(20260810)
    for kind in KINDS:
        cand = cands[kind]
        degree = cand.group.degree
        for _ in range(20):
            imgs = list(range(degree))
            rng.shuffle(imgs)
            t = Perm(imgs)
            relabeled = closure(tuple(t * g * t.inverse() for g in cand.group.generators))
            assert identify(relabeled) == kind
    for kind in KINDS:
        rep = verify_extension_structure(cands[kind])
        assert rep.passed
        f = rep.central_involution
        assert f.order() == 2 and cands[kind].alpha[f] == 2
        assert all(f * a == a * f for a in cands[kind].a6.generators)
    report(3, "four candidates built, separated, re-identified over 20 relabelings each")


def test_criterion_04_m10_coset_facts():
    split = classify_overgroups()
    facts = m10_order4_class_check(split.m10, build_psl29())
    assert facts.involutions_outside == 0
    assert facts.order4_outside_one_class
    report(4, "M10 minus PSL(2,9) has no involutions; order-4 coset elements are one class")


def test_criterion_05_lefschetz_rank():
    rank = lefschetz_invariant_rank(build_psl29(), NikulinTable())
    assert rank == 5
    report(5, "invariant cohomology rank of the A6 action is exactly 5")


def test_criterion_06_decomposition():
    system = decomposition_system(character_table(build_psl29()), NikulinTable())
    sols = solve_decomposition(system)
    assert sols == (MultiplicityVector(1, 1, 0, 0, 1, 0),)
    assert solve_decomposition(perturb_identity_equation(system, 21)) == ()
    report(6, "decomposition has the unique solution (1,1,0,0,1,0); control returns empty")


def test_criterion_07_sign_cases_and_verdict():
    cases = nonpositive_sign_cases()
    assert set(cases) == {
        SignCase(-1, 1, -1),
        SignCase(1, -1, -1),
        SignCase(-1, -1, -1),
        SignCase(-1, -1, 1),
    }
    cands = build_all_candidates()
    table = character_table(build_psl29())
    result = run_exclusion(cands.values(), table, NikulinTable())
    assert result.verdict == "M10_2"
    designated = {
        SignCase(-1, 1, -1): {"3class_trace"},
        SignCase(1, -1, -1): {"3class_trace"},
        SignCase(-1, -1, -1): {"nonintegral_euler"},
        SignCase(-1, -1, 1): {"pigeonhole", "order5_blocks"},
    }
    for kind in ("A6_4", "S6_2", "PGL29_2"):
        for case in cases:
            outcome = next(
                o for o in result.outcomes if o.kind == kind and o.sign_case == case
            )
            assert outcome.status == CONTRADICTION
            assert outcome.argument in designated[case]
    assert all(
        o.status == NOT_APPLICABLE for o in result.outcomes if o.kind == "M10_2"
    )
    assert argument_free_c4(2).status == CONTRADICTION
    report(7, "all sign cases close with contradictions; verdict M10_2; free C4 excluded")


def test_criterion_08_order5_blocks():
    out = argument_order5_blocks(build_candidate("PGL29_2"), character_table(build_psl29()))
    assert out.witnesses["achievable_totals"] == [4, 9]
    assert out.witnesses["required_total"] == -1
    assert out.status == CONTRADICTION
    report(8, "order-5 rational blocks achieve traces {4, 9} only, never -1")


def test_criterion_09_pigeonhole():
    out = argument_pigeonhole("S6_2", build_candidate("S6_2"))
    assert out.witnesses["permutations_scanned"] == 720
    assert out.witnesses["min_fixed_points_of_square"] == 2
    assert out.status == CONTRADICTION
    report(9, "over all 720 permutations of 6 points, squares of order-4 ones fix >= 2")


def test_criterion_10_lattices():
    L = gram_k3()
    assert gram_signature(L) == (3, 19)
    assert abs(gram_determinant(L)) == 1
    assert gram_is_even(L)
    T = gram_transcendental()
    assert gram_is_even(T)
    assert gram_signature(T) == (2, 0)
    assert gram_determinant(T) == 36
    report(10, "U^3+E8^2 is even of determinant +-1 and signature (3,19); T(F) checks out")


def test_criterion_11_property_suites():
    # class equation on 100 random generated groups
    rng = random.Random(11001)
    for _ in range(100):
        degree = rng.randint(3, 6)
        gens = []
        for _ in range(rng.randint(1, 2)):
            imgs = list(range(degree))
            rng.shuffle(imgs)
            gens.append(Perm(imgs))
        G = closure(gens)
        assert sum(c.size for c in conjugacy_classes(G)) == len(G)

    # orthogonality relations on 100 random row pairs across computed tables
    rng = random.Random(11002)
    tables = [
        character_table(closure([Perm.from_cycles([(0, 1)], 2)])),
        character_table(closure([Perm.from_cycles([(0, 1, 2, 3)], 4)])),
        character_table(closure([Perm.from_cycles([(0, 1)], 3), Perm.from_cycles([(0, 1, 2)], 3)])),
        character_table(build_psl29()),
    ]
    for _ in range(100):
        t = rng.choice(tables)
        classes = t.classes
        inv = [c.power_map[c.element_order - 1] for c in classes]
        a = rng.randrange(len(t.rows))
        b = rng.randrange(len(t.rows))
        total = CycloNum.zero(t.exponent)
        for i, c in enumerate(classes):
            total = total + c.size * (t.rows[a][i] * t.rows[b][inv[i]])
        assert total == (t.group_order if a == b else 0)

    # cyclotomic ring axioms: 25 triples in each of the orders 4, 5, 12, 60
    rng = random.Random(11003)

    def rand_cyclo(order):
        return CycloNum(
            order,
            [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(euler_phi(order))],
        )

    for order in (4, 5, 12, 60):
        for _ in range(25):
            a, b, c = (rand_cyclo(order) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    # Galois equivariance: 25 samples in each order, over units of that order
    rng = random.Random(11004)
    units = {4: (1, 3), 5: (1, 2, 3, 4), 12: (1, 5, 7, 11), 60: (7, 11, 13, 49)}
    for order in (4, 5, 12, 60):
        for _ in range(25):
            a = rand_cyclo(order)
            b = rand_cyclo(order)
            k = rng.choice(units[order])
            assert galois_apply(a + b, k) == galois_apply(a, k) + galois_apply(b, k)
            assert galois_apply(a * b, k) == galois_apply(a, k) * galois_apply(b, k)

    # structure-constant consistency for A6 (all 49 class pairs)
    alg = structure_constants(build_psl29())
    sizes = [c.size for c in alg.classes]
    for i in range(7):
        for j in range(7):
            assert (
                sum(alg.constants[i][j][k] * sizes[k] for k in range(7))
                == sizes[i] * sizes[j]
            )
    report(11, "class equation, orthogonality, ring axioms, Galois equivariance hold")

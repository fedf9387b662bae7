"""End-to-end acceptance checks, one test per criterion, each at full scale."""

from collections import Counter
from itertools import product

from matroidhall.bits import submasks
from matroidhall.bmodule import dual_strong_check, verify_minor_correspondence
from matroidhall.canon import catalog_upto, enumerate_matroids
from matroidhall.category import exact_sequences, is_strong, verify_proto_exact
from matroidhall.hall import (
    antipode,
    check_hopf,
    coproduct,
    delta,
    is_connected_class,
    multiply,
    product as hall_product,
    structure_constants,
    tensor_apply,
)
from matroidhall.kth import (
    K0Class,
    decompose,
    flags,
    grid_square_failures,
    k0_class,
    simplicial_identity_failures,
)
from matroidhall.matroid import check_closure_axioms, contract, direct_sum, free_matroid, restrict, uniform
from matroidhall.schmitt import duality_check

import oracles

EXPECTED_COUNTS = [1, 2, 4, 8, 17, 38, 98]


def test_criterion_1_flat_axioms_and_enumeration(criterion):
    counts = [len(enumerate_matroids(n)) for n in range(7)]
    oracle = [oracles.class_count(n) for n in range(7)]
    bad = sum(bool(check_closure_axioms(c.matroid)) for c in catalog_upto(6))
    ok = counts == oracle == EXPECTED_COUNTS and bad == 0
    criterion(1, "flat axioms and class counts", ok, f"counts={counts} oracle={oracle} axiom_failures={bad}")
    assert ok


def test_criterion_2_proto_exact(criterion):
    report = verify_proto_exact([c.matroid for c in catalog_upto(3)])
    pairs = bad = 0
    for c in catalog_upto(6):
        M = c.matroid
        for S in submasks(M.ground.tilde):
            for T in submasks(S):
                pairs += 1
                left = contract(restrict(M, S), M.ground.labels_of(T))
                right = restrict(contract(M, T), M.ground.labels_of(S & ~T))
                bad += left != right
    ok = report.ok and len(report.counts) == 5 and bad == 0
    criterion(2, "proto-exact properties and commuting minors", ok, "; ".join(report.lines()) + f"; commute {pairs} {bad}")
    assert ok, report.counterexamples[:5]


def test_criterion_3_bmodules(criterion):
    minors = minor_bad = 0
    for c in catalog_upto(5):
        for S in submasks(c.matroid.ground.tilde):
            minors += 1
            minor_bad += not verify_minor_correspondence(c.matroid, S)
    maps = map_bad = 0
    classes = catalog_upto(4)
    for A in classes:
        for B in classes:
            N, M = A.matroid, B.matroid
            for rest in product(range(M.degree + 1), repeat=N.degree):
                images = (0, *rest)
                maps += 1
                map_bad += dual_strong_check(images, N, M) != is_strong(images, N, M)
    ok = minor_bad == 0 and map_bad == 0
    criterion(3, "minor correspondence and dual strong-map test", ok,
              f"minors {minors} failures {minor_bad}; maps {maps} disagreements {map_bad}")
    assert ok


def test_criterion_4_hall_algebra(criterion):
    report = check_hopf(4, antipode_checks=False)
    assoc = report.counts["associativity"]
    unit = report.counts["unit"]
    a, b = uniform(1, 1), uniform(0, 1)
    example = hall_product(delta(b), delta(a)) == delta(direct_sum(a, b)) + delta(uniform(1, 2)) * 2
    subset_bad = sum(
        sum(structure_constants(B).values()) != 2**B.degree for B in catalog_upto(6)
    )
    ok = assoc[1] == 0 and unit[1] == 0 and example and subset_bad == 0
    criterion(4, "Hall product", ok,
              f"associativity {assoc[0]} {assoc[1]}; unit {unit[0]} {unit[1]}; "
              f"delta_b*delta_a {'exact' if example else 'wrong'}; subset counts failures {subset_bad}")
    assert ok


def test_criterion_5_hopf(criterion):
    report = check_hopf(4)
    names = ("coassociativity", "counit", "cocommutativity", "bialgebra", "antipode_left", "antipode_right")
    connected = bad = 0
    for B in catalog_upto(4):
        if not is_connected_class(B):
            continue
        connected += 1
        S = antipode(delta(B))
        identity = multiply(tensor_apply(coproduct(delta(B)), left=antipode)).is_zero()
        corrections = all(k.degree == B.degree and k.rank == B.rank for k in S.terms)
        bad += not (S[B] == -1 and identity and corrections)
    ok = all(report.counts[n][1] == 0 for n in names) and bad == 0
    criterion(5, "Hopf structure", ok,
              "; ".join(f"{n} {report.counts[n][0]} {report.counts[n][1]}" for n in names)
              + f"; connected antipodes {connected} failures {bad}")
    assert ok, report.counterexamples[:5]


def test_criterion_6_duality(criterion):
    classes = catalog_upto(5)
    bad = [B.hex for B in classes if not duality_check(B)]
    ok = not bad
    criterion(6, "structure constants are transposed minor coproduct", ok, f"classes {len(classes)} failures {len(bad)}")
    assert ok, bad


def test_criterion_7_k0(criterion):
    seqs = add_bad = dec_bad = 0
    classes = catalog_upto(6)
    for c in classes:
        M = c.matroid
        k = k0_class(M)
        for seq in exact_sequences(M):
            seqs += 1
            add_bad += k0_class(seq.left) + k0_class(seq.right) != k
        word = Counter(decompose(M))
        dec_bad += K0Class(word["a"], word["b"]) != k
    free_bad = sum(k0_class(free_matroid(n)) != K0Class(n, 0) for n in range(7))
    ok = add_bad == dec_bad == free_bad == 0
    criterion(7, "K0 classes", ok,
              f"sequences {seqs} failures {add_bad}; decompose failures {dec_bad}; free failures {free_bad}")
    assert ok


def test_criterion_8_flags(criterion):
    count_bad = ident_bad = square_bad = total = 0
    for c in catalog_upto(4):
        for n in range(4):
            fl = flags(c.matroid, n)
            total += len(fl)
            count_bad += len(fl) != (n + 1) ** c.degree
            for F in fl:
                ident_bad += bool(simplicial_identity_failures(F))
                square_bad += bool(grid_square_failures(F))
    ok = count_bad == ident_bad == square_bad == 0
    criterion(8, "flag grids", ok,
              f"flags {total}; count failures {count_bad}; identity failures {ident_bad}; square failures {square_bad}")
    assert ok

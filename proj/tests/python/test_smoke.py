import json
import pathlib

import equiquot as eq

DATA = str(pathlib.Path(__file__).resolve().parents[2] / "data")


def test_group_basics():
    s4 = eq.symmetric_group(4)
    assert s4.order == 24
    assert s4.num_conjugacy_classes() == 5
    p = eq.Perm([1, 0, 2, 3])
    assert s4.contains(p)
    assert (p * p).order() == 1


def test_extended_quotient_matches_class_formula():
    s3 = eq.symmetric_group(3)
    x = eq.natural_gset(s3)
    r = eq.extended_quotient(x)
    assert r.size == r.class_formula_size
    g = eq.random_gset(s3, 30, 7)
    r = eq.extended_quotient(g)
    assert r.size == r.class_formula_size


def test_theta_verdicts():
    assert not eq.theta_vanishes(eq.heisenberg_sequence(2))
    assert eq.theta_vanishes(eq.wreath_product(eq.cyclic_group(2), 2))
    rep = eq.in_s0(eq.exs0_sequence(2))
    assert rep.cond_ii and not rep.cond_iii.pass_


def test_xi_and_heisenberg():
    proof = eq.verify_xi(eq.heisenberg_sequence(2))
    assert proof.pass_ and proof.skew_dim == proof.expected_dim == 32
    lem = eq.verify_heisenberg_lemma(2)
    assert lem.pass_ and lem.induced_degree == 2


def test_zeta_identity():
    p = eq.verify_gs_identity(1, 6)
    assert p.pass_
    assert p.product_side == [1, 1, 2, 3, 5, 7, 11]
    assert eq.ext_quot_sym_count(2, 2) == eq.brute_force_ext_quot(2, 2) == 5
    assert eq.sigma_n_adequacy_passes(3)


def test_snf_and_tau():
    snf = eq.smith_normal_form(eq.IntMatrix([[2, 4], [6, 8]]))
    assert [snf.D.entries[0][0], snf.D.entries[1][1]] == [2, 4]
    g = eq.cokernel(eq.IntMatrix([[2, 0], [0, 3]]))
    assert g.free_rank == 0 and g.invariant_factors == [6]
    assert eq.tau(g) == 6


def test_corpus_deterministic():
    a = eq.corpus_run(DATA, "group.", 99)
    b = eq.corpus_run(DATA, "group.", 99)
    assert a == b
    report = json.loads(a)
    assert report["all_pass"]

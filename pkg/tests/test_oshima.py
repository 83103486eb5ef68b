from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from coxorbit import oshima as O
from coxorbit import rootsystem as R
from coxorbit.certificate import FAIL, PASS, SKIPPED
from coxorbit.weyl import GroupElt, enumerate_group, orbit


def test_slice_with_empty_J_is_singleton():
    s = R.get("D4")
    for a in s.roots:
        assert O.orbit_slice(s, [], a) == (a,)


def test_slice_with_full_J_is_orbit():
    s = R.get("B3")
    for a in s.roots:
        assert set(O.orbit_slice(s, range(3), a)) == set(orbit(s, range(3), a))


def test_counterexample_slice():
    s = R.get("A3")
    slc = set(O.orbit_slice(s, [0, 2], (1, 0, 0)))
    assert slc == {(1, 0, 0), (-1, 0, 0), (0, 0, 1), (0, 0, -1)}
    assert O.check_counterexample_a3().status == PASS


def test_precondition_is_needed():
    s = R.get("A3")
    assert O.check_prop_a(s, [0, 2], (1, 0, 0)).status == SKIPPED
    forced = O.check_prop_a(s, [0, 2], (1, 0, 0), enforce_precondition=False)
    assert forced.status == FAIL
    assert forced.witness["beta"] == (0, 0, 1)


@pytest.mark.parametrize("label", ["A4", "B3", "G2", "H3", "I2(5)", "A1xA1"])
def test_sweep_matches_single_checks(label):
    s = R.get(label)
    for J in O.all_subsets(s.rank):
        fast = O.sweep_prop_a(s, J)
        for c in fast:
            assert c.status == O.check_prop_a(s, J, c.alpha).status


@pytest.mark.parametrize("label", ["A3", "C3", "D4", "H3"])
def test_prop_b_agrees_with_prop_a(label):
    s = R.get(label)
    for J in O.all_subsets(s.rank):
        b = O.check_prop_b(s, J)
        assert b.status == PASS
        assert b.detail["prop_a"] == b.detail["prop_b"]


@pytest.mark.parametrize("label", ["A3", "B3", "H3"])
def test_prop_c_identity_reduces_to_prop_a(label):
    s = R.get(label)
    e = GroupElt.identity(s)
    for J in O.all_subsets(s.rank):
        ctx = O.ConjugateParabolic(s, J, e)
        for a in s.roots:
            assert O.check_prop_c(s, J, e, a, ctx).status == O.check_prop_a(s, J, a).status


def test_prop_c_span_test_matches_rank():
    s = R.get("D4")
    rng = random.Random(7)
    for _ in range(20):
        w = GroupElt.from_word(s, [rng.randrange(4) for _ in range(8)])
        J = rng.choice(O.all_subsets(4))
        ctx = O.ConjugateParabolic(s, J, w)
        for k, b in enumerate(s.roots):
            for j, c in enumerate(s.roots):
                assert (ctx.keys[k] == ctx.keys[j]) == ctx.in_span(R.sub(b, c))


def test_prop_c_coxeter_element_h3():
    s = R.get("H3")
    w = GroupElt.from_word(s, (0, 1, 2))
    for J in [(0, 1), (0, 2), (1, 2)]:
        ctx = O.ConjugateParabolic(s, J, w)
        for b in s.roots:
            assert O.check_prop_c(s, J, w, b, ctx).status in (PASS, SKIPPED)


def test_xspec_validation():
    with pytest.raises(ValueError):
        O.XSpec(frozenset(), (), 2)
    with pytest.raises(ValueError):
        O.XSpec(frozenset({0}), ((0, 0),), 2)
    with pytest.raises(ValueError):
        O.XSpec(frozenset({0, 1}), ((0, 1),), 2)


def test_oshima_rejects_non_crystallographic():
    s = R.get("H3")
    spec = O.XSpec.from_root(s, [0], s.roots[-1])
    with pytest.raises(ValueError):
        O.check_oshima_X(s, spec)


def test_oshima_full_delta_is_a_point():
    s = R.get("F4")
    for r in s.roots:
        spec = O.XSpec.from_root(s, range(4), r)
        assert O.x_set(s, spec) == [s.index[r]]
        assert O.check_oshima_X(s, spec).status == PASS


def test_oshima_f4_all_specs():
    s = R.get("F4")
    specs = O.xspecs_from_roots(s)
    assert all(O.check_oshima_X(s, sp, validate=False).status == PASS for sp in specs)


def test_dihedral_rank_guard():
    s = R.get("A3")
    with pytest.raises(ValueError):
        O.check_dihedral(s, s.roots[0], s.roots[0])


def test_dihedral_identity():
    s = R.get("G2")
    c = O.check_dihedral(s, (1, 0), (0, 1), elements=[GroupElt.identity(s)])
    assert c.status == PASS


def test_rootstring_b_degenerate_triple_is_skipped():
    s = R.get("B3")
    a = s.roots[0]
    b = R.neg(a)
    c = s.roots[1]
    assert O.check_rootstring_b(s, a, b, c).status == SKIPPED


def test_rootstring_b_g2_exhaustive():
    s = R.get("G2")
    triples = O.qualifying_triples(s)
    assert triples
    assert all(O.check_rootstring_b(s, *t).status == PASS for t in triples)


def test_string_permutation_single_root():
    s = R.get("A3")
    assert O.find_string_permutation(s, [s.roots[0]]) == (0,)


def test_string_permutation_a3_triples():
    s = R.get("A3")
    for t in O.qualifying_triples(s):
        sigma = O.find_string_permutation(s, t)
        assert sigma is not None
        total = s.zero()
        for i in sigma:
            total = R.add(total, t[i])
            assert s.is_root(total)


def test_string_permutation_rejects_golden():
    s = R.get("H3")
    with pytest.raises(ValueError):
        O.find_string_permutation(s, [s.roots[0]])


def test_rootstring_c_single_root():
    s = R.get("B3")
    assert O.check_rootstring_c(s, [s.roots[3]]).status == PASS


def test_minimal_decomposition_trivial_cases():
    s = R.get("B3")
    a = (1, 0, 0)
    assert O.minimal_decomposition(s, [1, 2], a, a) == ()
    assert O.minimal_decomposition(s, [1, 2], a, (1, 1, 0)) == ((0, 1, 0),)
    with pytest.raises(ValueError):
        O.minimal_decomposition(s, [1, 2], (1, 1, 0), a)


def _brute_min(s, J, d):
    """Smallest number of positive J-roots summing to d, by breadth-first search."""
    pos = [s.roots[k] for k in s.parabolic_roots(J) if k in s.positive]
    frontier = {d}
    n = 0
    while frontier:
        if s.zero() in frontier:
            return n
        frontier = {R.sub(x, g) for x in frontier for g in pos if all(y >= 0 for y in R.sub(x, g))}
        n += 1
    return None


@pytest.mark.parametrize("label", ["B3", "D4"])
def test_minimal_decomposition_is_minimal(label):
    s = R.get(label)
    for J in O.all_subsets(s.rank):
        jm = set(J)
        out = [r for r in s.roots if any(r[i] for i in range(s.rank) if i not in jm)]
        for a in out:
            for b in out:
                if O.dominates(s, J, a, b):
                    parts = O.minimal_decomposition(s, J, a, b)
                    assert len(parts) == _brute_min(s, J, R.sub(b, a))
                    certs = O.check_decomposition(s, J, a, b)
                    assert all(c.status != FAIL for c in certs)


def test_dominance_adjust_d5():
    s = R.get("D5")
    rng = random.Random(11)
    done = 0
    while done < 200:
        J = rng.choice(O.all_subsets(5))
        a = rng.choice(s.roots)
        b = rng.choice(s.roots)
        if not O.in_parabolic_span(R.sub(b, a), J):
            with pytest.raises(ValueError):
                O.dominance_adjust(s, J, a, b)
            continue
        w = O.dominance_adjust(s, J, a, b)
        assert set(w.word) <= set(J)
        assert O.dominates(s, J, w.apply(a), w.apply(b))
        done += 1


def test_dominance_identity_cases():
    s = R.get("A3")
    a = s.roots[0]
    assert O.dominance_adjust(s, [0, 1], a, a).word == ()
    assert O.dominance_adjust(s, [1], (1, 0, 0), (1, 1, 0)).word == ()


def test_parabolic_restriction_b3_in_b4():
    big = R.get("B4")
    K = [1, 2, 3]
    inside = R.parabolic_subsystem(big, K)
    alone = R.get("B3")
    assert inside.label == "B3"
    for J in O.all_subsets(3):
        a = {c.alpha: c.status for c in O.sweep_prop_a(inside, J)}
        b = {c.alpha: c.status for c in O.sweep_prop_a(alone, J)}
        assert a == b
        for alpha in inside.roots:
            assert set(O.orbit_slice(inside, J, alpha)) == set(O.orbit_slice(alone, J, alpha))
    # and the slices inside B4 restrict to the standalone ones
    Jbig = [K[j] for j in (0, 1)]
    for k in big.parabolic_roots(K):
        alpha = big.roots[k]
        if all(alpha[i] == 0 for i in K if i not in Jbig):
            continue
        got = {tuple(r[i] for i in K) for r in O.orbit_slice(big, Jbig, alpha)}
        assert got == set(O.orbit_slice(alone, [0, 1], tuple(alpha[i] for i in K)))


@pytest.mark.parametrize("label", ["B3", "C4", "F4", "G2"])
def test_rescale_invariance(label):
    s = R.get(label)
    d = R.dual_system(s)
    corr = R.dual_map(s, d)
    for J in O.all_subsets(s.rank):
        assert all(c.status == PASS for c in O.check_rescale_invariance(s, J, d, corr))


def test_chamber_vector_samples_include_boundary():
    s = R.get("B3")
    rng = random.Random(1)
    samples = O.sample_chamber_vectors(s, 100, rng)
    assert any(I for _, I in samples)
    for v, I in samples[:20]:
        certs = O.check_chamber_vector(s, v)
        assert all(c.status == PASS for c in certs)


def test_chamber_vector_requires_chamber():
    s = R.get("A2")
    with pytest.raises(ValueError):
        O.check_chamber_vector(s, (-1, 0))


def test_coweight_multiples():
    for label in ["A3", "H3", "G2"]:
        s = R.get(label)
        from coxorbit.linalg import det

        d = det([list(r) for r in s.gram])
        for i, u in enumerate(O.fundamental_coweight_multiples(s)):
            for j in range(s.rank):
                assert s.pair_simple(u, j) == (d if i == j else 0)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "D4", "H3"]), st.data())
def test_prop_a_property(label, data):
    s = R.get(label)
    J = data.draw(st.sets(st.integers(0, s.rank - 1)))
    alpha = data.draw(st.sampled_from(s.roots))
    c = O.check_prop_a(s, J, alpha)
    assert c.status == (SKIPPED if O.in_parabolic_span(alpha, J) else PASS)

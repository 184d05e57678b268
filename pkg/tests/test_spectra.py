"""Spectrum arithmetic, the Jacobi oracle, moments, and the closed forms."""

import math

import numpy as np
import pytest

from spectra_forge import algebra as alg
from spectra_forge import finring as fr
from spectra_forge import graphs as gr
from spectra_forge import spectra as sp
from spectra_forge import theorems as th


def spec(*pairs):
    return sp.Spectrum.from_pairs(pairs)


def test_spectrum_merging_and_order():
    s = sp.Spectrum.from_values([2, 0, 0 + 1e-12j, -2, 2 + 1e-10])
    assert abs(s.entries[0][0] - 2) < 1e-9 and s.entries[0][1] == 2
    assert s.size == 5
    assert [m for _, m in s.entries] == [2, 2, 1]
    with pytest.raises(sp.SpectrumError):
        sp.Spectrum.from_values([])


def test_spectrum_ops():
    s = spec((2, 1), (0, 2), (-2, 1))
    assert s.shifted(1).entries == ((3 + 0j, 1), (1 + 0j, 2), (-1 + 0j, 1))
    assert s.scaled(2).entries == ((4 + 0j, 1), (0j, 2), (-4 + 0j, 1))
    assert s.union(spec((0, 3))).multiplicity_of(0) == 5
    assert s.negated() == s  # symmetric multiset
    assert s.to_string() == "[2]^1, [0]^2, [-2]^1"


def test_value_formatting():
    s = sp.Spectrum.from_values([4j, -2 + 2j, 2 * math.sqrt(2), 5])
    text = s.to_string()
    assert "[4i]^1" in text and "[-2+2i]^1" in text and "[2.82843]^1" in text


def test_isospectral_tolerance():
    a = spec((2, 1), (0, 2), (-2, 1))
    b = sp.Spectrum.from_values([2 + 5e-9, 1e-9, -1e-9, -2])
    assert sp.isospectral(a, b)
    c = sp.Spectrum.from_values([2 + 1e-5, 0, 0, -2])
    assert not sp.isospectral(a, c)
    assert not sp.isospectral(a, spec((2, 1), (0, 3), (-2, 1)))


def test_isospectral_conjugate_sorting_stability():
    # values sharing a real part within rounding noise must still pair up
    a = sp.Spectrum.from_values([1 + 2j, 1 - 2j, 0])
    b = sp.Spectrum.from_values([1 + 1e-14 - 2j, 1 - 1e-14 + 2j, 0])
    assert sp.isospectral(a, b)


def test_classify_examples():
    even = spec((4, 1), (0, 6), (-4, 1))
    c = sp.classify(even)
    assert c.integral and c.parity == "even" and c.symmetric and c.bipartite_criterion

    odd = spec((5, 1), (1, 2), (-1, 4), (-3, 1))
    c = sp.classify(odd)
    assert c.integral and c.parity == "odd" and not c.symmetric
    assert not c.bipartite_criterion

    irr = spec((8, 1), (4, 1), (2 * math.sqrt(2), 2), (0, 9),
               (-2 * math.sqrt(2), 2), (-4, 1))
    c = sp.classify(irr)
    assert not c.integral and c.parity == "non-integral"
    assert c.almost_symmetric and not c.symmetric
    assert c.principal_eigenvalue == 8


def test_exact_abelian_difference():
    z4 = alg.cyclic(4)
    s = sp.spectrum_exact_abelian(z4, alg.subset(z4, [1, 3]), "difference")
    assert sp.isospectral(s, spec((2, 1), (0, 2), (-2, 1)))

    z16 = alg.cyclic(16)
    S1 = alg.subset(z16, [1, 2, 4, 5, 9, 10, 12, 13])
    got = sp.spectrum_exact_abelian(z16, S1, "difference")
    want = spec((8, 1), (4j, 1), (-2 + 2j, 2), (0, 9), (-2 - 2j, 2), (-4j, 1))
    assert sp.isospectral(got, want)


def test_exact_abelian_sum():
    z16 = alg.cyclic(16)
    S1 = alg.subset(z16, [1, 2, 4, 5, 9, 10, 12, 13])
    got = sp.spectrum_exact_abelian(z16, S1, "sum")
    r = 2 * math.sqrt(2)
    want = spec((8, 1), (4, 1), (r, 2), (0, 9), (-r, 2), (-4, 1))
    assert sp.isospectral(got, want)

    with pytest.raises(sp.SpectrumError):
        sp.spectrum_exact_abelian(alg.dihedral(3),
                                  alg.subset(alg.dihedral(3), [1]), "difference")


def test_sum_spectrum_matches_dense_random():
    rng = np.random.default_rng(21)
    for _ in range(20):
        G, S = th.random_instance(rng, require_abelian=True, exclude_identity=False)
        exact = sp.spectrum_exact_abelian(G, S, "sum")
        dense = sp.spectrum_dense_symmetric(gr.cayley(G, S, "sum"))
        assert sp.isospectral(exact, dense)


def test_difference_spectrum_matches_dense_for_symmetric_random():
    rng = np.random.default_rng(22)
    for _ in range(15):
        G, S = th.random_instance(rng, require_abelian=True, require_symmetric=True)
        exact = sp.spectrum_exact_abelian(G, S, "difference")
        dense = sp.spectrum_dense_symmetric(gr.cayley(G, S, "difference"))
        assert sp.isospectral(exact, dense)


def test_dense_examples():
    z4 = alg.cyclic(4)
    c4 = gr.cayley(z4, alg.subset(z4, [1, 3]), "difference")
    assert sp.isospectral(sp.spectrum_dense_symmetric(c4), spec((2, 1), (0, 2), (-2, 1)))

    k4 = gr.cayley(z4, alg.subset(z4, [1, 2, 3]), "difference")
    assert sp.isospectral(sp.spectrum_dense_symmetric(k4), spec((3, 1), (-1, 3)))

    z3 = alg.cyclic(3)
    directed = gr.cayley(z3, alg.subset(z3, [1]), "difference")
    with pytest.raises(sp.SpectrumError):
        sp.spectrum_dense_symmetric(directed)


def test_dense_dicyclic_example():
    dic3 = alg.dicyclic(3)
    S = alg.subset(dic3, [2 * k for k in (1, 2, 4, 5)] + [2 * 1 + 1, 2 * 4 + 1])
    g = gr.cayley(dic3, S, "difference")
    assert g.undirected
    got = sp.spectrum_dense_symmetric(g)
    assert sp.isospectral(got, spec((6, 1), (2, 1), (0, 8), (-4, 2)))


def test_jacobi_against_numpy_oracle():
    rng = np.random.default_rng(23)
    for n in (5, 20, 45):
        x = rng.standard_normal((n, n))
        x = (x + x.T) / 2
        got = sp.jacobi_eigenvalues(x)
        want = np.sort(np.linalg.eigvalsh(x))[::-1]
        assert np.max(np.abs(got - want)) < 1e-9
    with pytest.raises(sp.SpectrumError):
        sp.jacobi_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_moments():
    z4 = alg.cyclic(4)
    c4 = gr.cayley(z4, alg.subset(z4, [1, 3]), "difference")
    mom = sp.moments(c4, 3)
    assert mom[0] == 0 and mom[1] == 8
    assert sp.moment_check(spec((2, 1), (0, 2), (-2, 1)), mom, 2, 4)
    assert not sp.moment_check(spec((2, 2), (-2, 2)), mom, 2, 4)
    with pytest.raises(sp.SpectrumError):
        sp.moments(c4, 5)


def test_moment_check_z16_directed():
    z16 = alg.cyclic(16)
    S1 = alg.subset(z16, [1, 2, 4, 5, 9, 10, 12, 13])
    g = gr.cayley(z16, S1, "difference")
    s = sp.spectrum_exact_abelian(z16, S1, "difference")
    assert sp.moment_check(s, sp.moments(g, 16), 8, 16)


def test_mdcg_formula_cayz4():
    base = spec((2, 1), (0, 2), (-2, 1))
    assert sp.isospectral(
        sp.mdcg_spectrum_formula(base, "identity", 4),
        spec((3, 1), (1, 3), (-1, 3), (-3, 1)),
    )
    assert sp.isospectral(
        sp.mdcg_spectrum_formula(base, "S", 4), spec((4, 1), (0, 6), (-4, 1))
    )
    assert sp.isospectral(
        sp.mdcg_spectrum_formula(base, "S_and_identity", 4),
        spec((5, 1), (1, 2), (-1, 4), (-3, 1)),
    )
    with pytest.raises(sp.SpectrumError):
        sp.mdcg_spectrum_formula(base, "S", 5)


def test_product_formula_examples():
    base = spec((2, 1), (0, 2), (-2, 1))
    p2 = spec((1, 1), (-1, 1))
    p2l = spec((2, 1), (0, 1))
    assert sp.isospectral(
        sp.product_spectrum_formula(base, p2, "cartesian"),
        spec((3, 1), (1, 3), (-1, 3), (-3, 1)),
    )
    direct = sp.product_spectrum_formula(base, p2l, "direct")
    assert sp.isospectral(direct, spec((4, 1), (0, 6), (-4, 1)))
    strong_sum = sp.product_spectrum_formula(base, p2, "strong_sum")
    assert sp.isospectral(strong_sum, direct)


def test_looped_spectrum():
    assert sp.looped_spectrum(spec((1, 1), (-1, 1))) == spec((2, 1), (0, 1))
    assert sp.looped_spectrum(spec((0, 4))) == spec((1, 4))
    s = spec((3, 2), (-1, 1))
    assert sp.looped_spectrum(s).shifted(-1) == s


def test_local_ring_formula_examples():
    assert sp.isospectral(
        sp.local_ring_unitary_spectrum(4, 2, "difference"), spec((2, 1), (0, 2), (-2, 1))
    )
    assert sp.isospectral(
        sp.local_ring_unitary_spectrum(3, 1, "difference"), spec((2, 1), (-1, 2))
    )
    assert sp.isospectral(
        sp.local_ring_unitary_spectrum(3, 1, "sum"), spec((2, 1), (1, 1), (-1, 1))
    )
    # even local ring: the sum graph equals the difference graph
    assert sp.local_ring_unitary_spectrum(4, 2, "sum") == sp.local_ring_unitary_spectrum(
        4, 2, "difference"
    )
    with pytest.raises(sp.SpectrumError):
        sp.local_ring_unitary_spectrum(12, 2, "difference")   # r/m = 6 not prime power


def test_mdcg_local_ring_examples():
    assert sp.isospectral(
        sp.mdcg_local_ring_spectrum(3, 1, "S", "difference"),
        spec((4, 1), (-2, 2), (0, 3)),
    )
    assert sp.isospectral(
        sp.mdcg_local_ring_spectrum(9, 3, "S_and_identity", "difference"),
        spec((13, 1), (1, 15), (-5, 2)),
    )
    assert sp.isospectral(
        sp.mdcg_local_ring_spectrum(3, 1, "S_and_identity", "sum"),
        spec((5, 1), (1, 3), (3, 1), (-1, 1)),
    )
    with pytest.raises(sp.SpectrumError):
        sp.mdcg_local_ring_spectrum(4, 2, "S", "difference")   # even size


def test_semiprimitive_spectra():
    got = sp.semiprimitive_gp_spectrum(3, 16)
    assert sp.isospectral(got, spec((5, 1), (-3, 5), (1, 10)))
    got9 = sp.semiprimitive_gp_spectrum(2, 9)
    assert sp.isospectral(got9, spec((4, 1), (1, 4), (-2, 4)))
    # q even: sum equals difference
    assert sp.semiprimitive_gp_spectrum(3, 16, "sum") == sp.semiprimitive_gp_spectrum(3, 16)
    # q odd: plus/minus split
    got9s = sp.semiprimitive_gp_spectrum(2, 9, "sum")
    assert sp.isospectral(got9s, spec((4, 1), (1, 2), (-1, 2), (2, 2), (-2, 2)))
    with pytest.raises(sp.SpectrumError):
        sp.semiprimitive_gp_spectrum(3, 7)


def test_semiprimitive_vs_dense():
    # gamma(3, 16): dense spectrum of the cube-residue graph on F16
    F16 = fr.artin_product([fr.gf(2, 4)])
    G = fr.additive_group(F16)
    P3 = fr.power_residues(F16, 3)
    g = gr.cayley(G, P3, "difference")
    assert g.undirected
    dense = sp.spectrum_dense_symmetric(g)
    assert sp.isospectral(dense, sp.semiprimitive_gp_spectrum(3, 16))

    F9 = fr.artin_product([fr.gf(3, 2)])
    P2 = fr.power_residues(F9, 2)
    dense9 = sp.spectrum_dense_symmetric(gr.cayley(fr.additive_group(F9), P2, "difference"))
    assert sp.isospectral(dense9, sp.semiprimitive_gp_spectrum(2, 9))
    sum9 = sp.spectrum_exact_abelian(fr.additive_group(F9), P2, "sum")
    assert sp.isospectral(sum9, sp.semiprimitive_gp_spectrum(2, 9, "sum"))


def test_hamming_spectra():
    assert sp.isospectral(sp.hamming_spectrum(2, 3), spec((4, 1), (1, 4), (-2, 4)))
    q = 7
    assert sp.isospectral(sp.hamming_spectrum(1, q), spec((q - 1, 1), (-1, q - 1)))
    assert sp.isospectral(
        sp.hamming_spectrum(3, 2), spec((3, 1), (1, 3), (-1, 3), (-3, 1))
    )
    assert sp.hamming_spectrum(2, 3).size == 9


def test_gcd_graph_spectrum():
    got = sp.gcd_graph_spectrum(4, [1])
    assert sp.isospectral(got, spec((2, 1), (0, 2), (-2, 1)))
    lam0 = max(v.real for v in sp.gcd_graph_spectrum(6, [1, 2, 3]).values())
    assert lam0 == 5   # phi(6) + phi(3) + phi(2)

    # cross-oracle against the character route on Z8 with D = {1, 2, 4}
    z8 = alg.cyclic(8)
    members = []
    for d in (1, 2, 4):
        members.extend(alg.gcd_class(z8, d).members)
    S = alg.subset(z8, members)
    lhs = sp.gcd_graph_spectrum(8, [1, 2, 4])
    rhs = sp.spectrum_exact_abelian(z8, S, "difference")
    assert sp.isospectral(lhs, rhs)
    with pytest.raises(sp.SpectrumError):
        sp.gcd_graph_spectrum(8, [3])


def test_eigenvalue_range_bound():
    rng = np.random.default_rng(24)
    for _ in range(15):
        G, S = th.random_instance(rng, require_abelian=True, exclude_identity=False)
        for kind in ("difference", "sum"):
            s = sp.spectrum_exact_abelian(G, S, kind)
            d = len(S)
            assert all(abs(v) <= d + 1e-9 for v in s.values())


def test_spectrum_serialization():
    s = spec((2, 1), (0, 2), (-2, 1))
    csv = s.to_csv()
    assert csv.splitlines()[0] == "re,im,multiplicity"
    assert len(csv.splitlines()) == 4
    js = sp.spectrum_to_json(s)
    assert '"parity":"even"' in js and '"mult":2' in js

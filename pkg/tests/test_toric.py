from math import comb

import pytest

from lpm_toric.poly import Poly
from lpm_toric.polytope import as_point, build_face_lattice, simplex_points
from lpm_toric.toric import (
    GradedPoset,
    PosetError,
    SymmetryError,
    boolean_lattice,
    chain,
    classical_h_vector,
    is_eulerian,
    mobius_from,
    toric_f,
    toric_g,
    toric_h_vector,
)

from conftest import HOOKS, hook


def quadrilateral():
    pts = [as_point(p) for p in [(0, 0), (1, 0), (0, 1), (1, 1)]]
    return build_face_lattice(pts).to_poset()


def test_eulerian_examples(p22):
    assert len(p22.poset) == 20
    assert is_eulerian(p22.poset)
    assert not is_eulerian(chain(2))
    assert mobius_from(chain(2), 0)[2] == 0
    assert is_eulerian(boolean_lattice(3))
    assert is_eulerian(build_face_lattice(simplex_points(2)).to_poset())


def test_toric_f_examples(p22):
    assert toric_f(p22.poset) == Poly((1, 2, 2, 1))
    assert toric_f(chain(1)) == Poly((1,))
    assert toric_f(quadrilateral()) == Poly((1, 2, 1))


def test_toric_g_examples(p22):
    assert toric_g(p22.poset) == Poly((1, 1))
    assert toric_g(quadrilateral()) == Poly((1, 1))


@pytest.mark.parametrize("rank", range(1, 8))
def test_simplices(rank):
    lattice = boolean_lattice(rank)
    assert toric_f(lattice) == Poly((1,) * rank)
    assert toric_g(lattice) == Poly((1,))
    assert toric_h_vector(lattice) == [1] * rank


@pytest.mark.parametrize("d", range(1, 5))
def test_geometric_simplices(d):
    poset = build_face_lattice(simplex_points(d)).to_poset()
    assert toric_f(poset) == Poly((1,) * (d + 1))
    assert toric_g(poset) == Poly((1,))


def test_h_vector_examples(p22):
    assert toric_h_vector(p22.poset) == [1, 2, 2, 1]
    assert toric_h_vector(boolean_lattice(4)) == [1, 1, 1, 1]
    assert toric_h_vector(boolean_lattice(2)) == [1, 1]


def test_h_vector_flags_non_eulerian():
    # rank-3 chain: f = x^2 - x by direct evaluation of the recursion
    assert toric_f(chain(3)) == Poly((0, -1, 1))
    with pytest.raises(SymmetryError):
        toric_h_vector(chain(3))
    assert toric_h_vector(chain(3), check=False) == [0, -1, 1]


def test_classical_h_vector():
    assert classical_h_vector((4, 6, 4), 3) == [1, 1, 1, 1]
    assert classical_h_vector((), 0) == [1]
    # P_{2,2} is not simplicial; hand evaluation of the transform gives (1, 2, 1, 1)
    assert classical_h_vector((5, 8, 5), 3) == [1, 2, 1, 1]
    with pytest.raises(ValueError):
        classical_h_vector((4,), 3)


def test_dehn_sommerville_on_simplicial_boundaries():
    # boundary of the cross-polytope and of simplices are simplicial
    for d in range(1, 6):
        simplex_f = [comb(d + 1, j + 1) for j in range(d)]
        h = classical_h_vector(simplex_f, d)
        assert h == h[::-1]
        cross_f = [2 ** (j + 1) * comb(d, j + 1) for j in range(d)]
        h = classical_h_vector(cross_f, d)
        assert h == h[::-1]


def test_memoized_matches_unmemoized(p22):
    for poset in (p22.poset, quadrilateral(), boolean_lattice(4), hook(3, 2).poset):
        assert len(poset) <= 200
        assert toric_f(poset, memo=False) == toric_f(poset)
        assert toric_g(poset, memo=False) == toric_g(poset)


@pytest.mark.parametrize("alpha,beta", HOOKS)
def test_hook_lattices_eulerian_and_symmetric(alpha, beta):
    pipe = hook(alpha, beta)
    assert is_eulerian(pipe.poset)
    h = toric_h_vector(pipe.poset)
    assert h[0] == 1
    assert all(c >= 0 for c in pipe.toric.g.coeffs)
    assert pipe.toric.f.degree == pipe.poset.rank - 1


def test_lower_interval_and_json(p22):
    poset = p22.poset
    sub = poset.lower_interval(poset.top)
    assert len(sub) == len(poset)
    again = GradedPoset.from_json(poset.to_json())
    assert again.ranks == poset.ranks and again.hasse == poset.hasse
    assert toric_f(again) == toric_f(poset)


def test_poset_validation():
    with pytest.raises(PosetError):
        GradedPoset([0, 1, 1], [(0, 1), (0, 2)])  # two maximal elements
    with pytest.raises(PosetError):
        GradedPoset([0, 2], [(0, 1)])
    with pytest.raises(PosetError):
        GradedPoset([0, 0, 1], [(0, 2), (1, 2)])

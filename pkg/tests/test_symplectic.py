"""Twist transvections, primitivity, and the invariant-submodule oracle."""

import random

import pytest

from tubelab.errors import StabilizationError
from tubelab.exactalg import IntMatrix, lattice_equal, scaled_standard_lattice
from tubelab.symplectic import (
    HClass,
    SymplecticLattice,
    invariant_index,
    is_primitive,
    orbit_closure,
    pairing,
    standardize_symplectic,
    transvection,
    twist_generating_set,
)


@pytest.fixture
def g2():
    return SymplecticLattice(2)


def rand_class(rng, g, lo=-6, hi=6):
    return HClass(tuple(rng.randint(lo, hi) for _ in range(2 * g)))


def rand_primitive(rng, g):
    while True:
        h = rand_class(rng, g)
        if is_primitive(h):
            return h


# -- pairing -------------------------------------------------------------------

def test_pairing_basis(g2):
    assert pairing(g2.delta(1), g2.gamma(1)) == 1
    assert pairing(g2.delta(1), g2.delta(2)) == 0
    assert pairing(g2.gamma(1), g2.gamma(2)) == 0
    assert pairing(g2.gamma(1), g2.delta(1)) == -1


def test_pairing_self_zero(g2):
    rng = random.Random(3)
    for _ in range(20):
        a = rand_class(rng, 2)
        assert pairing(a, a) == 0


def test_pairing_dimension_mismatch(g2):
    with pytest.raises(ValueError):
        pairing(g2.delta(1), SymplecticLattice(3).delta(1))


# -- primitivity ----------------------------------------------------------------

def test_primitive_examples(g2):
    assert is_primitive(g2.delta(1) + g2.gamma(2))
    assert not is_primitive(g2.delta(1).scaled(2))
    assert not is_primitive(g2.zero())


# -- transvections ---------------------------------------------------------------

def test_base_twist_table():
    """All eight cases of the basis twist table, genus 2."""
    lat = SymplecticLattice(2)
    d1, d2 = lat.delta(1), lat.delta(2)
    c1, c2 = lat.gamma(1), lat.gamma(2)
    # T_{delta_j}(delta_i) = delta_i
    assert transvection(d1, 1, d1) == d1
    assert transvection(d2, 1, d1) == d1
    # T_{gamma_j}(gamma_i) = gamma_i
    assert transvection(c1, 1, c1) == c1
    assert transvection(c2, 1, c1) == c1
    # T_{delta_j}(gamma_i): unchanged for i != j, gamma_i - delta_i for i == j
    assert transvection(d2, 1, c1) == c1
    assert transvection(d1, 1, c1) == c1 - d1
    # T_{gamma_j}(delta_i): unchanged for i != j, delta_i + gamma_i for i == j
    assert transvection(c2, 1, d1) == d1
    assert transvection(c1, 1, d1) == d1 + c1


def test_transvection_fixes_twisting_class(g2):
    rng = random.Random(5)
    for _ in range(10):
        b = rand_primitive(rng, 2)
        for k in (-3, -1, 0, 1, 4):
            assert transvection(b, k, b) == b


def test_transvection_requires_primitive(g2):
    with pytest.raises(ValueError):
        transvection(g2.delta(1).scaled(2), 1, g2.gamma(1))


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_transvection_preserves_pairing(g):
    rng = random.Random(100 + g)
    for _ in range(50):
        a, a2 = rand_class(rng, g), rand_class(rng, g)
        b = rand_primitive(rng, g)
        k = rng.randint(-5, 5)
        ta = transvection(b, k, a)
        ta2 = transvection(b, k, a2)
        assert pairing(ta, ta2) == pairing(a, a2)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_transvection_power_is_iterate(g):
    rng = random.Random(200 + g)
    for _ in range(30):
        a = rand_class(rng, g)
        b = rand_primitive(rng, g)
        k = rng.randint(0, 5)
        it = a
        for _ in range(k):
            it = transvection(b, 1, it)
        assert transvection(b, k, a) == it
        # inverse twist inverts
        assert transvection(b, -1, transvection(b, 1, a)) == a


# -- twist generating set ---------------------------------------------------------

def test_twist_set_genus_one():
    lat = SymplecticLattice(1)
    got = twist_generating_set(1)
    assert got == [lat.delta(1), lat.gamma(1), lat.delta(1) + lat.gamma(1)]


def test_twist_set_genus_two_count():
    assert len(twist_generating_set(2)) == 10


@pytest.mark.parametrize("g", [1, 2, 3])
def test_twist_set_all_primitive(g):
    assert all(is_primitive(h) for h in twist_generating_set(g))


# -- invariant index ---------------------------------------------------------------

def test_invariant_index_gcd(g2):
    h = g2.delta(1).scaled(2) + g2.gamma(2).scaled(4)
    assert invariant_index([h]) == 2
    assert invariant_index([g2.delta(1)]) == 1
    assert invariant_index([]) == 0
    assert invariant_index([g2.zero()]) == 0


def test_invariant_index_stable_under_twisting(g2):
    rng = random.Random(7)
    for _ in range(20):
        gens = [rand_class(rng, 2) for _ in range(rng.randint(1, 3))]
        m = invariant_index(gens)
        b = rand_primitive(rng, 2)
        k = rng.randint(-2, 2)
        twisted = [transvection(b, k, h) for h in gens]
        assert invariant_index(twisted) == m


# -- orbit closure oracle ------------------------------------------------------------

def test_orbit_closure_scaled_generator_genus_one():
    lat = SymplecticLattice(1)
    L = orbit_closure([lat.delta(1).scaled(2)])
    assert lattice_equal(L, scaled_standard_lattice(2, 2))


def test_orbit_closure_primitive_genus_two():
    lat = SymplecticLattice(2)
    L = orbit_closure([lat.delta(1)])
    assert lattice_equal(L, scaled_standard_lattice(1, 4))


def test_orbit_closure_zero():
    lat = SymplecticLattice(2)
    L = orbit_closure([lat.zero()])
    assert L.rank == 0


@pytest.mark.parametrize("g", [1, 2, 3])
def test_orbit_closure_matches_gcd_single(g):
    rng = random.Random(300 + g)
    for _ in range(10):
        while True:
            a = rand_class(rng, g)
            if not a.is_zero():
                break
        L = orbit_closure([a])
        m = invariant_index([a])
        assert lattice_equal(L, scaled_standard_lattice(m, 2 * g))


def test_orbit_closure_matches_gcd_multi():
    rng = random.Random(400)
    for _ in range(8):
        g = rng.randint(1, 3)
        gens = [rand_class(rng, g) for _ in range(rng.randint(2, 4))]
        if all(h.is_zero() for h in gens):
            continue
        L = orbit_closure(gens)
        m = invariant_index(gens)
        assert lattice_equal(L, scaled_standard_lattice(m, 2 * g))


def test_orbit_closure_round_budget():
    lat = SymplecticLattice(2)
    with pytest.raises(StabilizationError):
        orbit_closure([lat.delta(1).scaled(6)], max_rounds=0)


# -- symplectic standardization -------------------------------------------------------

def std_pairing(g):
    return SymplecticLattice(g).pairing_matrix()


def test_standardize_fixed_point():
    J = std_pairing(2)
    U = standardize_symplectic(J)
    assert U.transpose() @ J @ U == J


def test_standardize_sign_flip():
    J = IntMatrix([[0, -1], [1, 0]])
    U = standardize_symplectic(J)
    assert U.transpose() @ J @ U == IntMatrix([[0, 1], [-1, 0]])


def test_standardize_swapped_blocks():
    # pairing written in order (gamma_1, gamma_2, delta_1, delta_2)
    J = IntMatrix(
        [
            [0, 0, -1, 0],
            [0, 0, 0, -1],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
        ]
    )
    U = standardize_symplectic(J)
    assert U.transpose() @ J @ U == std_pairing(2)
    assert abs(U.det()) == 1


@pytest.mark.parametrize("seed", range(6))
def test_standardize_random_congruent(seed):
    rng = random.Random(500 + seed)
    g = rng.randint(1, 3)
    n = 2 * g
    J0 = std_pairing(g)
    # random unimodular congruence of the standard form
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            q = rng.randint(-2, 2)
            m[i] = [x + q * y for x, y in zip(m[i], m[j])]
    A = IntMatrix(m)
    J = A.transpose() @ J0 @ A
    U = standardize_symplectic(J)
    assert U.transpose() @ J @ U == J0


def test_standardize_rejects_bad_input():
    with pytest.raises(ValueError):
        standardize_symplectic(IntMatrix([[0, 0], [0, 0]]))  # singular
    with pytest.raises(ValueError):
        standardize_symplectic(IntMatrix([[0, 1], [1, 0]]))  # symmetric
    with pytest.raises(ValueError):
        standardize_symplectic(IntMatrix([[0, 2], [-2, 0]]))  # not unimodular

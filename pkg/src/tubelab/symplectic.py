"""Symplectic lattice toolkit: intersection pairing, twist transvections,
primitivity, and invariant-submodule classification.

The lattice is Z^{2g} with ordered basis delta_1..delta_g, gamma_1..gamma_g
and pairing <delta_i, gamma_j> = delta_ij, all other basis pairings zero.
Dehn twists act on first homology by transvections

    T_beta^k(alpha) = alpha + k <alpha, beta> beta,

defined here only for primitive beta (the classes realizable by simple
closed curves).  ``orbit_closure`` saturates a generating set under the
finite twist family used to classify invariant submodules, serving as a
brute-force oracle for ``invariant_index``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .errors import StabilizationError
from .exactalg import IntMatrix, Lattice, lattice_from_rows, lattice_equal


@dataclass(frozen=True)
class HClass:
    """Integer homology class in coordinates (a_1..a_g, b_1..b_g)."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) % 2 != 0:
            raise ValueError("coordinate length must be even")
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "HClass") -> "HClass":
        return HClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HClass") -> "HClass":
        return HClass(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scaled(self, k: int) -> "HClass":
        return HClass(tuple(k * a for a in self.coords))


class SymplecticLattice:
    """Z^{2g} with the standard block pairing matrix."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError("genus must be >= 1")
        self.genus = genus

    @property
    def rank(self) -> int:
        return 2 * self.genus

    def zero(self) -> HClass:
        return HClass((0,) * self.rank)

    def delta(self, i: int) -> HClass:
        """Basis class delta_i, 1-indexed."""
        if not 1 <= i <= self.genus:
            raise ValueError("index out of range")
        c = [0] * self.rank
        c[i - 1] = 1
        return HClass(tuple(c))

    def gamma(self, i: int) -> HClass:
        """Basis class gamma_i, 1-indexed."""
        if not 1 <= i <= self.genus:
            raise ValueError("index out of range")
        c = [0] * self.rank
        c[self.genus + i - 1] = 1
        return HClass(tuple(c))

    def from_coords(self, coords: Sequence[int]) -> HClass:
        if len(coords) != self.rank:
            raise ValueError("coordinate length mismatch")
        return HClass(tuple(coords))

    def pairing_matrix(self) -> IntMatrix:
        g = self.genus
        m = [[0] * (2 * g) for _ in range(2 * g)]
        for i in range(g):
            m[i][g + i] = 1
            m[g + i][i] = -1
        return IntMatrix(m)


def pairing(alpha: HClass, beta: HClass) -> int:
    """<alpha, beta> in the standard symplectic coordinates."""
    if len(alpha.coords) != len(beta.coords):
        raise ValueError("genus mismatch")
    g = alpha.genus
    a, b = alpha.coords, beta.coords
    return sum(a[i] * b[g + i] - a[g + i] * b[i] for i in range(g))


def is_primitive(alpha: HClass) -> bool:
    """Nonzero with coprime coordinates; exactly the simple-closed-curve
    classes."""
    d = 0
    for c in alpha.coords:
        d = gcd(d, c)
    return d == 1


def transvection(beta: HClass, k: int, alpha: HClass) -> HClass:
    """k-th power twist about beta applied to alpha.

    beta must be primitive; negative k is the inverse twist.
    """
    if not is_primitive(beta):
        raise ValueError("transvection requires a primitive twisting class")
    return alpha + beta.scaled(k * pairing(alpha, beta))


def twist_generating_set(genus: int) -> list[HClass]:
    """The finite primitive family used in the invariant-submodule argument:
    all delta_i, gamma_i, delta_k+delta_l, gamma_k+gamma_l (k<l), and
    delta_i+gamma_j."""
    lat = SymplecticLattice(genus)
    out: list[HClass] = []
    out.extend(lat.delta(i) for i in range(1, genus + 1))
    out.extend(lat.gamma(i) for i in range(1, genus + 1))
    for k in range(1, genus + 1):
        for l in range(k + 1, genus + 1):
            out.append(lat.delta(k) + lat.delta(l))
    for k in range(1, genus + 1):
        for l in range(k + 1, genus + 1):
            out.append(lat.gamma(k) + lat.gamma(l))
    for i in range(1, genus + 1):
        for j in range(1, genus + 1):
            out.append(lat.delta(i) + lat.gamma(j))
    return out


def invariant_index(generators: Iterable[HClass]) -> int:
    """gcd of all coordinates over all generators (0 for empty/zero input).

    Contract: the smallest twist-invariant submodule containing the
    generators is exactly (this value) * Z^{2g}.
    """
    d = 0
    for h in generators:
        for c in h.coords:
            d = gcd(d, c)
    return d


def orbit_closure(
    generators: Sequence[HClass], max_rounds: int = 32
) -> Lattice:
    """Saturate the span of the generators under +/-1 twists about the
    standard generating family, re-canonicalizing via HNF each round.

    Raises StabilizationError when the lattice is still growing after
    max_rounds (never silently truncates).
    """
    gens = [h for h in generators]
    if not gens:
        raise ValueError("orbit_closure needs at least one generator (possibly zero)")
    rank = len(gens[0].coords)
    lat = lattice_from_rows([h.coords for h in gens], rank)
    twists = twist_generating_set(rank // 2)
    for _ in range(max_rounds):
        rows = [list(lat.basis.row(i)) for i in range(lat.basis.rows)]
        new_rows = [r[:] for r in rows]
        for r in rows:
            h = HClass(tuple(r))
            for beta in twists:
                new_rows.append(list(transvection(beta, 1, h).coords))
                new_rows.append(list(transvection(beta, -1, h).coords))
        new_lat = lattice_from_rows(new_rows, rank)
        if lattice_equal(new_lat, lat):
            return lat
        lat = new_lat
    raise StabilizationError(
        f"orbit closure not stable after {max_rounds} rounds (rank {lat.rank})"
    )


def standardize_symplectic(J: IntMatrix) -> IntMatrix:
    """Unimodular U with U^T J U equal to the standard block pairing.

    J must be antisymmetric, even-rank, and unimodular (integer symplectic
    Gram-Schmidt by congruence operations).  Raises ValueError otherwise.
    """
    n = J.rows
    if J.cols != n:
        raise ValueError("pairing matrix must be square")
    if n % 2 != 0:
        raise ValueError("odd rank cannot be symplectic")
    if (-J) != J.transpose():
        raise ValueError("pairing matrix must be antisymmetric")
    a = J.to_lists()
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in u:
            row[i], row[j] = row[j], row[i]

    def add(i, j, q):  # basis change e_i += q e_j; congruence on both sides
        for row in a:
            row[i] += q * row[j]
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        for row in u:
            row[i] += q * row[j]

    for blk in range(0, n, 2):
        # find smallest nonzero pairing in the trailing block
        best = None
        for i in range(blk, n):
            for j in range(i + 1, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            raise ValueError("pairing matrix is singular")
        while True:
            bi, bj = best
            if bi != blk:
                swap(blk, bi)
            if bj != blk + 1:
                swap(blk + 1, bj)
            p = a[blk][blk + 1]
            for j in range(blk + 2, n):
                # <e_blk, e_j + c e_{blk+1}> = a[blk][j] + c p: reduce mod p
                q = a[blk][j] // p
                if q:
                    add(j, blk + 1, -q)
                # <e_blk+1, e_j + c e_blk> = a[blk+1][j] - c p: reduce mod p
                q = a[blk + 1][j] // p
                if q:
                    add(j, blk, q)
            rem = [
                (blk, j) for j in range(blk + 2, n) if a[blk][j] != 0
            ] + [
                (blk + 1, j) for j in range(blk + 2, n) if a[blk + 1][j] != 0
            ]
            if not rem:
                break
            # leftover remainders are smaller than |p|: pivot on one of them
            best = min(rem, key=lambda ij: abs(a[ij[0]][ij[1]]))
        if a[blk][blk + 1] < 0:
            swap(blk, blk + 1)
        if a[blk][blk + 1] != 1:
            raise ValueError("pairing matrix is not unimodular")
    # interleaved (d1 g1 d2 g2 ...) -> grouped (d1..dg, g1..gg)
    perm = list(range(0, n, 2)) + list(range(1, n, 2))
    pm = [[1 if perm[j] == i else 0 for j in range(n)] for i in range(n)]
    P = IntMatrix(pm)
    return IntMatrix(u) @ P

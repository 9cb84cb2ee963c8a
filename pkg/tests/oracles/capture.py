"""Run the oracles on the pinned examples and print the frozen values.

Usage: python -m tests.oracles.capture   (from the repository root)

The printed values are copied into the test files as literals; this
script is kept so the freeze is reproducible.
"""

from fractions import Fraction

from .cohom import cochain_h1, cyclic_h1
from .linalg import cokernel_invariants, diagonalize
from .padic import hilbert_bruteforce, unit_group_structure


def signed_perm_matrix_e(perm, signs):
    """5x5 matrix of e_i -> signs[i] * e_perm[i] (0-based, column action)."""
    m = [[0] * 5 for _ in range(5)]
    for i in range(5):
        m[perm[i]][i] = signs[i]
    return m


def to_integral_basis(mat_e):
    """Conjugate a matrix on the e-basis into ([e1..e4], h), h = half sum.

    Change of basis C has columns e1..e4, h; C inverse is integral.
    The result must be integral for lattice automorphisms.
    """
    # C doubled to stay integer: columns 2*e1..2*e4, 2*h
    c2 = [[2 if i == j else 0 for j in range(4)] + [1] for i in range(5)]
    # mat_e * C2
    mc = [[sum(mat_e[i][t] * c2[t][j] for t in range(5)) for j in range(5)]
          for i in range(5)]
    # C^-1 rows: (x_i - x_5) for i<4, then 2 x_5
    out = []
    for i in range(4):
        out.append([mc[i][j] - mc[4][j] for j in range(5)])
    out.append([2 * mc[4][j] for j in range(5)])
    # un-double
    for i in range(5):
        for j in range(5):
            assert out[i][j] % 2 == 0
            out[i][j] //= 2
    return out


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def main():
    print("SNF diagonal of [[2,4],[6,8]]:", diagonalize([[2, 4], [6, 8]]))
    print("cokernel of diag(2,3) in Z^2:",
          cokernel_invariants([[2, 0], [0, 3]], 2))
    print("H1(Z/2, Z(-1)):", cyclic_h1([[-1]], 2))

    print("hilbert(-1,-1)_2:", hilbert_bruteforce(-1, -1, 2))
    print("hilbert(2,5)_5:", hilbert_bruteforce(2, 5, 5))
    print("hilbert(3,2)_3:", hilbert_bruteforce(3, 2, 3))
    print("hilbert(-1,-1)_real: -1 (sign rule)")
    print("units of Z/9:", unit_group_structure(9))
    print("units of Z/8:", unit_group_structure(8))

    # order-4 element of figure: e1 -> -e1, e2 <-> e3, e4 -> e5 -> -e4
    fig5 = signed_perm_matrix_e((0, 2, 1, 4, 3), (-1, 1, 1, 1, -1))
    m5 = to_integral_basis(fig5)
    print("figure-5 cyclic H1 (cyclic oracle):", cyclic_h1(m5, 4))
    powers = [[[int(i == j) for j in range(5)] for i in range(5)]]
    for _ in range(3):
        last = powers[-1]
        powers.append([[sum(m5[i][t] * last[t][j] for t in range(5))
                        for j in range(5)] for i in range(5)])
    print("figure-5 cyclic H1 (cochain oracle):",
          cochain_h1(cyclic_table(4), powers, 5))

    # order-4 element: e1 -> e2 -> -e1, e3 -> -e3, e4 and e5 fixed
    fig2 = signed_perm_matrix_e((1, 0, 2, 3, 4), (1, -1, -1, 1, 1))
    m2 = to_integral_basis(fig2)
    print("figure-2 cyclic H1 (cyclic oracle):", cyclic_h1(m2, 4))

    # order-8 element: e1 -> -e1, e2 -> e3 -> e4 -> e5 -> -e2
    fig6 = signed_perm_matrix_e((0, 2, 3, 4, 1), (-1, 1, 1, 1, -1))
    m6 = to_integral_basis(fig6)
    print("figure-6 cyclic H1 (cyclic oracle):", cyclic_h1(m6, 8))


if __name__ == "__main__":
    main()

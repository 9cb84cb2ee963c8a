"""Naive integer linear algebra, independent of the package.

Diagonalization here picks the first nonzero pivot it finds and loops
until done; no pivot strategy, no transform bookkeeping.  Good enough to
pin elementary divisors for small matrices.
"""

from math import gcd


def diagonalize(mat):
    """Elementary divisors of an integer matrix, naive row/col reduction.

    Returns the sorted list of diagonal entries > 1 plus the count of
    zero diagonal entries, as (divisors, free_rank_of_cokernel_part).
    """
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    k = 0
    while k < min(rows, cols):
        # find any nonzero entry in the remaining block
        piv = None
        for i in range(k, rows):
            for j in range(k, cols):
                if m[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        m[k], m[i] = m[i], m[k]
        for r in range(rows):
            m[r][k], m[r][j] = m[r][j], m[r][k]
        # clear row and column k by repeated remainder steps
        again = True
        while again:
            again = False
            for i in range(k + 1, rows):
                if m[i][k] != 0:
                    q = m[i][k] // m[k][k]
                    for j in range(cols):
                        m[i][j] -= q * m[k][j]
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        again = True
            for j in range(k + 1, cols):
                if m[k][j] != 0:
                    q = m[k][j] // m[k][k]
                    for r in range(rows):
                        m[r][j] -= q * m[r][k]
                    if m[k][j] != 0:
                        for r in range(rows):
                            m[r][k], m[r][j] = m[r][j], m[r][k]
                        again = True
        k += 1
    diag = [abs(m[i][i]) for i in range(min(rows, cols))]
    # enforce the divisibility chain by gcd/lcm swaps
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            if a and b:
                g = gcd(a, b)
                diag[i], diag[j] = g, a * b // g
            elif b and not a:
                diag[i], diag[j] = b, 0
    return diag


def cokernel_invariants(mat, ambient_rank):
    """Invariant factors and free rank of Z^ambient / column span of mat."""
    diag = diagonalize(mat)
    nonzero = [d for d in diag if d != 0]
    tors = [d for d in nonzero if d > 1]
    free = ambient_rank - len(nonzero)
    return free, sorted(tors)

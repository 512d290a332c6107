"""Independent brute-force oracles for the test-suite.

Everything here recomputes expected values by a route that shares no code
with the library: gcd/determinant identities for tiny Smith forms, coset
enumeration for quotient orders, direct solution enumeration for kernels.
Slow on purpose -- these only run on small inputs.
"""

from __future__ import annotations

from math import gcd


def snf_2x2_oracle(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    """Invariant factors of [[a, b], [c, d]] from first principles.

    The first invariant factor is the gcd of the entries; the product of
    both is |det|.  Rank-deficient cases degrade to (gcd, 0) or (0, 0).
    """
    g = gcd(gcd(a, b), gcd(c, d))
    det = a * d - b * c
    if g == 0:
        return (0, 0)
    if det == 0:
        return (g, 0)
    return (g, abs(det) // g)


def coset_count_2x2(matrix) -> int:
    """Order of Z^2 / (column lattice of a nonsingular 2x2 matrix).

    Counts lattice points inside the box [0, |det|)^2 by solving the
    Cramer system exactly; the quotient order is |box| / |points found|.
    Never touches any normal-form code.
    """
    (a, b), (c, d) = matrix
    det = a * d - b * c
    if det == 0:
        raise ValueError("oracle needs a nonsingular matrix")
    n = abs(det)
    inside = 0
    for p in range(n):
        for q in range(n):
            # p = x*a + y*b, q = x*c + y*d must have an integer solution
            if (p * d - q * b) % det == 0 and (a * q - c * p) % det == 0:
                inside += 1
    return (n * n) // inside


def kernel_rank_by_enumeration(rows: list[list[int]], box: int = 6) -> int:
    """Rank of the integer solution set of ``rows @ x = 0``.

    Enumerates all integer vectors in [-box, box]^n, keeps the solutions,
    and computes the rank of the lattice they span by exact fraction-free
    elimination on a list of vectors.  Only usable for very small n.
    """
    import itertools
    from fractions import Fraction

    n = len(rows[0])
    sols = [
        v
        for v in itertools.product(range(-box, box + 1), repeat=n)
        if all(sum(r * x for r, x in zip(row, v)) == 0 for row in rows)
    ]
    basis: list[list[Fraction]] = []
    for v in sols:
        vec = [Fraction(x) for x in v]
        for b in basis:
            lead = next((i for i, x in enumerate(b) if x), None)
            if lead is not None and vec[lead]:
                coef = vec[lead] / b[lead]
                vec = [x - coef * y for x, y in zip(vec, b)]
        if any(vec):
            basis.append(vec)
    return len(basis)


def invariant_factors_by_primes(factors: list[int]) -> tuple[int, ...]:
    """Canonical invariant-factor chain of a direct sum of cyclic groups,
    computed the slow way: trial-division factorization into elementary
    divisors, then zipping prime powers largest-to-largest."""
    primes: dict[int, list[int]] = {}
    for f in factors:
        f = abs(f)
        if f <= 1:
            continue
        p = 2
        while p * p <= f:
            if f % p == 0:
                e = 0
                while f % p == 0:
                    f //= p
                    e += 1
                primes.setdefault(p, []).append(e)
            p += 1
        if f > 1:
            primes.setdefault(f, []).append(1)
    width = max((len(v) for v in primes.values()), default=0)
    chain = []
    for slot in range(width):
        t = 1
        for p, exps in primes.items():
            exps_sorted = sorted(exps, reverse=True)
            if slot < len(exps_sorted):
                t *= p ** exps_sorted[slot]
        chain.append(t)
    return tuple(sorted(c for c in chain if c > 1))


def random_int_matrix(rng, max_dim: int = 6, max_entry: int = 50, min_dim: int = 0):
    """Random IntMatrix with independently chosen dimensions and entries."""
    from spherecp.fgab import IntMatrix

    m = rng.randint(min_dim, max_dim)
    n = rng.randint(min_dim, max_dim)
    return IntMatrix.from_rows(
        [[rng.randint(-max_entry, max_entry) for _ in range(n)] for _ in range(m)],
        cols=n,
    )


def random_unimodular(rng, n: int, steps: int = 12):
    """Random determinant +-1 matrix built from elementary operations."""
    from spherecp.fgab import IntMatrix

    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.choice(("shear", "swap", "negate"))
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == "shear" and i != j:
            q = rng.randint(-3, 3)
            m[i] = [x + q * y for x, y in zip(m[i], m[j])]
        elif op == "swap" and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == "negate":
            m[i] = [-x for x in m[i]]
    return IntMatrix.from_rows(m, cols=n)


def is_divisor_chain(diagonal: tuple[int, ...]) -> bool:
    """True when the diagonal is nonnegative, zeros trail, and each nonzero
    entry divides the next."""
    nonzero = [x for x in diagonal if x]
    if any(x < 0 for x in diagonal):
        return False
    if list(diagonal[: len(nonzero)]) != nonzero:
        return False
    return all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


# -- generation helpers (not oracles, but shared by several suites) ---------


def random_cuntz_element(rng, base: int, max_terms: int = 4, max_len: int = 3):
    """Random reduced element: up to max_terms monomials with words of
    length <= max_len and small nonzero rational coefficients."""
    from fractions import Fraction

    from spherecp.cuntz_words import CuntzElement

    def word():
        return tuple(rng.randint(1, base) for _ in range(rng.randint(0, max_len)))

    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.choice([1, 1, 2, 3])
        coeffs[(word(), word())] = Fraction(num, den)
    return CuntzElement(base, coeffs)


def random_homogeneous_element(rng, base: int, degree: int, max_terms: int = 3, max_len: int = 3):
    """Random element all of whose monomials have gauge degree ``degree``."""
    from fractions import Fraction

    from spherecp.cuntz_words import CuntzElement

    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        nu_len = rng.randint(max(0, -degree), max_len)
        mu_len = nu_len + degree
        if mu_len < 0 or mu_len > max_len + abs(degree):
            continue
        mu = tuple(rng.randint(1, base) for _ in range(mu_len))
        nu = tuple(rng.randint(1, base) for _ in range(nu_len))
        coeffs[(mu, nu)] = Fraction(rng.choice([-2, -1, 1, 2]))
    return CuntzElement(base, coeffs)

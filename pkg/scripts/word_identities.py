#!/usr/bin/env python3
"""Decide a batch of identities in the isometry word calculus.

Each identity is written as two expressions; the calculus reduces both to
canonical form and, where monomial supports differ, compares them after
expanding along the defining relation sum(s_i s_i*) = 1.  The point of the
demo: equalities that hold only *because of* that relation (not term by
term) are decided exactly, with rational coefficients.

Run:  python3 scripts/word_identities.py [--d 3]
"""

import argparse

from spherecp import CuntzElement, parse_expression


IDENTITIES = [
    # name, left (None = built per d), right, expected verdict
    ("isometry relation", "s1* s1", "1", True),
    ("orthogonality", "s1* s2", "0", True),
    ("range projections are idempotent", "s1 s1* s1 s1*", "s1 s1*", True),
    ("unit resolution", None, "1", True),
    ("refined unit resolution (depth 2)", None, "1", True),
    ("partial sum is not the unit", "s1 s1*", "1", False),
    ("left shift absorbs a letter", "s1* s1 s2", "s2", True),
    ("orthogonal projections annihilate", "s1 s1* s2 s2*", "0", True),
    ("scalar arithmetic", "1/2 s1 + 1/2 s1", "s1", True),
]


def build_cases(d: int):
    unit_terms = " + ".join(f"s{i} s{i}*" for i in range(1, d + 1))
    refined = CuntzElement.unit(d).expand(2)
    for name, left, right, expected in IDENTITIES:
        if name == "unit resolution":
            built = parse_expression(d, unit_terms)
        elif name.startswith("refined unit resolution"):
            built = refined
        else:
            built = parse_expression(d, left)
        yield name, built, parse_expression(d, right), expected


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--d", type=int, default=3, help="number of isometries (>= 2)")
    args = parser.parse_args()
    d = args.d

    print(f"word calculus on {d} isometries\n")
    bad = 0
    for name, left, right, expected in build_cases(d):
        verdict = left.equals(right)
        ok = verdict is expected
        bad += not ok
        print(f"  {'OK ' if ok else 'BUG'}  {name:<38} equal={'yes' if verdict else 'no'}"
              f"  [{left} | {right}]")

    print("\ngauge grading of x = s1 + 2 s1 s2* s1* + 3 s2 s2*:")
    x = parse_expression(d, "s1 + 2 s1 s2* s1* + 3 s2 s2*")
    for k in (-1, 0, 1):
        print(f"  degree {k:+d} component: {x.spectral_component(k)}")
    print(f"  overall degree: {x.degree()} (None = mixed degrees)")
    raise SystemExit(0 if bad == 0 else 1)


if __name__ == "__main__":
    main()

"""Weight distributions from a single Walsh transform, checked by enumeration.

For f with support D_f of size n_f, the codeword of x != 0 in C_{D_f} has
weight (2*n_f + W_f(x)) / 4.  One fast transform therefore yields the whole
weight distribution; zero-weight multiplicity e reveals the code dimension
m - log2(e).
"""

import random

from walshcodes import (
    BooleanFunction,
    DefiningSet,
    code_from_defining_set,
    field,
    random_function,
    spectral_weight_distribution,
)


def compare(fn, title):
    rep = spectral_weight_distribution(fn)
    code = code_from_defining_set(
        DefiningSet.from_support(fn.field, fn.support_values()))
    print(title)
    print(f"  n_f = {rep.n_f}, e = {rep.e}, dimension = {rep.dimension}")
    print(f"  spectral weights:   {dict(sorted(rep.weights.items()))}")
    print(f"  enumerated weights: {dict(sorted(code.weight_distribution().items()))}")
    print(f"  agree: {rep.weights == code.weight_distribution()}"
          f" | enumerated rank: {code.k}\n")


def main():
    f = field(4)

    rng = random.Random(2024)
    compare(random_function(f, rng), "random f on GF(16)")

    support = [x for x in range(1, 16) if f.trace(x) == 0]
    compare(BooleanFunction.from_support(f, support),
            "support inside the hyperplane Tr(x) = 0: e = 2, dimension drops")

    compare(BooleanFunction(f, [1] * 16),
            "f identically 1 (support includes 0): the identity still holds")


if __name__ == "__main__":
    main()

"""Bent functions and the two-weight codes their supports generate.

A function on GF(2^m) (m even) is bent when every Walsh coefficient has
magnitude 2^(m/2) -- the flattest possible spectrum, hence maximal
nonlinearity.  The code built from a bent support has exactly two nonzero
weights, read straight off the two spectrum values.
"""

from walshcodes import (
    DefiningSet,
    bent_function,
    code_from_defining_set,
    field,
    spectral_weight_distribution,
)


def main():
    for m in (4, 6, 8):
        f = field(m)
        fn = bent_function(f)
        spec = fn.walsh_transform()
        label, histogram = fn.classify()
        print(f"m = {m}: f = Tr(lambda * x^(2^{m // 2}+1)), "
              f"support size n_f = {fn.weight()}")
        print(f"  algebraic normal form degree: {fn.algebraic_degree()}")
        print(f"  classification: {label}")
        print(f"  spectrum histogram: {histogram}")
        print(f"  nonlinearity: {fn.nonlinearity()} "
              f"(the bent bound 2^(m-1) - 2^(m/2-1) = "
              f"{(1 << (m - 1)) - (1 << (m // 2 - 1))})")

        code = code_from_defining_set(
            DefiningSet.from_support(f, fn.support_values()))
        rep = spectral_weight_distribution(fn)
        print(f"  code parameters [n, k] = [{code.n}, {code.k}]")
        print(f"  weight distribution: {dict(sorted(rep.weights.items()))}")
        nonzero = sorted(w for w in rep.weights if w)
        print(f"  exactly two nonzero weights: {nonzero}\n")


if __name__ == "__main__":
    main()

"""Build a binary linear code from a defining set of field elements.

Each element d of the defining set contributes one coordinate; the codeword
of x is (Tr(x*d1), ..., Tr(x*dn)) as x runs over the field.
"""

from walshcodes import DefiningSet, code_from_defining_set, codeword_weight, field


def show(ds, title):
    code = code_from_defining_set(ds)
    print(f"{title}")
    print(f"  defining set (ordered): {list(ds.values)}")
    print(f"  generator rows (row i = traces against alpha^i):")
    for s in code.to_strings():
        print(f"    {s}")
    print(f"  parameters [n, k] = [{code.n}, {code.k}]")
    print(f"  weight distribution: {code.weight_distribution()}\n")
    return code


def main():
    f = field(3)

    # the full multiplicative group gives the one-weight simplex code
    show(DefiningSet.from_support(f, range(1, 8)), "D = GF(8)* (all 7 nonzero)")

    # a small hand-picked set
    ds = DefiningSet(f, [3, 5, 6, 1])
    code = show(ds, "D = {3, 5, 6, 1} (order fixes the column order)")
    x = 0b101
    print(f"weight of the codeword of x={x:#05b}: "
          f"{codeword_weight(ds, x)} (matches the built matrix)\n")

    # repeated elements are legal: they duplicate coordinates and can only
    # collapse the rank, never grow it
    show(DefiningSet(field(2), [1, 1]), "multiset D = {1, 1} over GF(4)")

    # a defining set inside a subfield cannot span the full field
    show(DefiningSet(field(2), [1]), "D = {1} over GF(4): rank drops below m")


if __name__ == "__main__":
    main()

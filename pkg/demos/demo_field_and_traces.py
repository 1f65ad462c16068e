"""Tour of GF(2^m) arithmetic: words, multiplication, traces, and dual bases."""

from walshcodes import Basis, field


def main():
    f = field(3)
    print(f"GF(8) with modulus {f.modulus:#b} (x^3 + x + 1)")
    print("elements are 3-bit words; alpha is the class of x, word 0b010\n")

    a, b = f.element(0b010), f.element(0b100)
    print(f"alpha * alpha^2      = {int(a * b):#05b}  (x^3 reduces to x + 1)")
    print(f"inverse of alpha     = {int(a.inverse()):#05b}")
    print(f"alpha * alpha^{{-1}}   = {int(a * a.inverse()):#05b}\n")

    print("absolute trace Tr(v) = v + v^2 + v^4, computed two independent ways:")
    print(" v | mask path | sum-of-squares")
    for v in range(8):
        print(f" {v} |     {f.trace(v)}     |       {f.trace_sum_of_squares(v)}")
    print()

    basis = f.polynomial_basis()
    dual = basis.dual()
    print("polynomial basis {1, a, a^2} and its trace-dual basis:")
    print("  basis:", [f"{int(e):#05b}" for e in basis])
    print("  dual: ", [f"{int(e):#05b}" for e in dual])
    print("checking Tr(basis_i * dual_j) = identity matrix:")
    for i in range(3):
        row = [f.trace(f.mul(int(basis[i]), int(dual[j]))) for j in range(3)]
        print("  ", row)
    print()

    x = f.element(0b110)
    coords = basis.coordinates(x)
    print(f"coordinates of {int(x):#05b} over the basis: {coords}")
    print(f"recombined: {int(basis.combine(coords)):#05b}")

    emb = field(4).subfield(2)
    print("\nGF(4) inside GF(16): the embedding lifts standalone words")
    for c in range(4):
        print(f"  GF(4) word {c} -> GF(16) word {emb.lift(c):#06x}")


if __name__ == "__main__":
    main()

"""Terms recovered from determinants, and closed-form partial sums checked by brute force."""

from tribospin import (
    MathError,
    det_term_cereceda,
    det_term_hessenberg,
    family_lookup,
    spinor_det_cereceda,
    spinor_sums,
    spinor_term,
    sum_even,
    sum_first,
    sum_odd,
    terms,
)

for name in ("perrin", "tribonacci-lucas", "padovan"):
    params = family_lookup(name).params
    row = []
    for n in range(8):
        h = det_term_hessenberg(params, n)
        try:
            c = det_term_cereceda(params, n)
        except MathError as exc:
            c = type(exc).__name__
        row.append(f"{h}/{c}")
    print(f"{name:>17}: {' '.join(row)}")

lucas = family_lookup("tribonacci-lucas").params
print("\nspinor from a hyperbolic determinant, n=5:", spinor_det_cereceda(lucas, 5))
print("direct:                                   ", spinor_term(lucas, 5))

trib = family_lookup("tribonacci").params
m = 10
v = terms(trib, 2 * m + 2)
print(f"\nsums up to m={m}:")
print("  first", sum_first(trib, m), "==", sum(v[: m + 1]))
print("  even ", sum_even(trib, m), "==", sum(v[0 : 2 * m + 1 : 2]))
print("  odd  ", sum_odd(trib, m), "==", sum(v[1 : 2 * m + 2 : 2]))
first, even, odd = spinor_sums(trib, m)
print("  spinor first sum:", first)

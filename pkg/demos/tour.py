"""A short walk from a named sequence to its split quaternions and spinors."""

from tribospin import (
    ConjugationKind,
    conjugate,
    family_lookup,
    f_map,
    gtn_quaternion,
    sq_norm,
    spinor_binet,
    spinor_norm,
    spinor_term,
    spinor_term_by_matrix,
    terms,
)

params = family_lookup("tribonacci").params
print("Tribonacci:", ", ".join(str(v) for v in terms(params, 12)))

q = gtn_quaternion(params, 3)
print("quaternion Q3 =", q, " norm", sq_norm(q))

phi = spinor_term(params, 3)
print("spinor phi3 =", phi)
print("f(Q3) agrees:", f_map(q) == phi)
print("matrix path agrees:", spinor_term_by_matrix(params, 3) == phi)
print("bar(phi)^T phi =", spinor_norm(phi))

for kind in ConjugationKind:
    print(f"  {kind.value:>5}: {conjugate(phi, kind)}")

c1, c2 = spinor_binet(params, 10)
parts = [c1.re.real, c1.jpart.real, c2.re.real, c2.jpart.real]
print("Binet estimate of phi10: [{:.6f}{:+.6f}j; {:.6f}{:+.6f}j]".format(*parts))
print("exact phi10:            ", spinor_term(params, 10))

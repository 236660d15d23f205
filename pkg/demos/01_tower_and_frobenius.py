"""Build F_16 over F_4 and look at its subfields through the Frobenius map."""
from primfield import build_tower, element_degree, frobenius_q, subfield_basis

t = build_tower(2, 2, 2, seed=0)  # F_2 < F_4 < F_16
print("base modulus h:", t.h, " extension modulus g:", t.g)
print("q =", t.q, " order =", t.order)

x = t.gen()  # the class of x in F_4[x]/(g)
print("x       =", x)
print("x^q     =", frobenius_q(x, t))
print("x^(q^2) =", frobenius_q(frobenius_q(x, t), t))  # back to x

# degree over F_4 of every element: 1 for the 4 base elements, 2 otherwise
degrees = [element_degree(a, t) for a in t.elements()]
print("degree histogram:", {d: degrees.count(d) for d in sorted(set(degrees))})

# the fixed space of Frobenius is the base field, as a subspace
print("F_4 inside F_16:", subfield_basis(1, t).basis)

# towers are reproducible from their JSON record
again = type(t).from_json(t.to_json())
print("round trip equal:", again == t)

"""
Receptive-field relations from the neural ideal
===============================================

A code is the zero set of a unique square-free polynomial over F2.  The
minimal pseudo-monomials vanishing on the code translate into statements
about how the receptive fields sit inside each other.
"""

from neuralcode import Code, canonical_form, code_to_polynomial, polynomial_to_code, rf_relations

# Neuron 2 never fires without neuron 1.
code = Code.from_strings(["00", "10", "11"])

p = code_to_polynomial(code)
print("P =", p)
assert polynomial_to_code(p) == code

for z in canonical_form(code):
    print("canonical form:", z)

for rel in rf_relations(code):
    print(f"{rel.kind.value:>20}: {rel}")

# Four fields in a chain, where fields 2 and 4 also overlap.
chain = Code.from_strings(["0000", "1000", "1100", "0100", "0110", "0010", "0011", "0001", "0101"])
print()
for rel in rf_relations(chain):
    print(f"{rel.kind.value:>20}: {rel}")

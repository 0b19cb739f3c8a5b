# From the quantum Grassmannian to a quantum toric algebra.

from qrichardson.degeneration import extract_graded, filtered_dimensions, weight_census
from qrichardson.grassmann import straightening_table
from qrichardson.toric import confluence_certify, gkdim_toric, torus_embedding, verify_torus_relations

ext = extract_graded(straightening_table(2, 4))
print("weights:", ext.filtration.weights)

P = ext.presentation
print("c(14,23) =", P.cmap[((1, 4), (2, 3))])
print("confluent:", confluence_certify(P).ok)

# Graded pieces of the filtration versus the count of standard monomials.
print("filtered:", filtered_dimensions(2, 4, 2))
print("census:  ", weight_census(2, 4, 2))

# The toric algebra sits inside a quantum torus on five generators.
torus, images = torus_embedding(P)
print("torus generators:", torus.gens)
print("X_24 ->", images[(2, 4)])
checked, failures = verify_torus_relations(P, torus, images)
print(f"{checked} relations checked, {len(failures)} failures; GKdim =", gkdim_toric(P))

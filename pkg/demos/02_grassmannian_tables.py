# Straightening and commutation relations of O_q(G(2,4)).

from qrichardson.grassmann import expand_in_std, straightening_table, verify_symmetric_asl

table = straightening_table(2, 4)

# Only one pair of Plücker coordinates is incomparable: [14] and [23].
for (I, J), exp in table.straightening.items():
    print(f"[{I}][{J}] =", exp)

# The classical Plücker relation shows up at q = 1.
print("q=1:", expand_in_std(((1, 4), (2, 3)), 2, 4, q=1))

# Commutation: [I][J] - p [J][I] = tail.
for key in [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]:
    p, tail = table.commutation[key]
    print(key, "factor", p, "tail", tail)

rep = verify_symmetric_asl(2, 4, 3)
print("standard monomials per degree:", rep.degree_counts)
print("PBW ranks per degree:         ", rep.degree_ranks)

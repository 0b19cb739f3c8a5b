# Quantum 2x2 matrices: how the PBW normal form behaves.

from qrichardson.qmatrix import confluence_check, qmatrix_algebra, quantum_minor, transpose

A = qmatrix_algebra(2, 2)

# Generators in the wrong order get rewritten; at q = 1 everything commutes.
x = A.normal_form([(2, 2), (1, 1)])
print("X22 X11 =", x)
print("at q=1   =", x.specialize(1))

# The quantum determinant.
det = quantum_minor((1, 2), (1, 2), (2, 2))
print("det_q =", det)

# Every rewriting order of every word of length <= 3 gives the same answer.
report = confluence_check((2, 2), 3)
print(f"{report.words_checked} words checked, confluent: {report.ok}")

# Transposition swaps the row and column sets of a minor.
m = quantum_minor((1, 2), (1, 3), (3, 3))
print("tr([12|13]) == [13|12]:", transpose(m) == quantum_minor((1, 3), (1, 2), (3, 3)))

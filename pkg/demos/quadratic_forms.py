"""
Counting with quadratic forms
=============================

Representation counts for even positive-definite forms: exact lattice
walks, the deletion sieve for all-nonzero counts, and a box-scan cross
check.
"""

from thetacharge import (
    QuadForm,
    an_form,
    brute_form_count,
    form_table,
    nonzero_form_count,
    parse_form_text,
)

# A form is given by its integer Gram matrix: symmetric, even diagonal,
# positive definite.  Validation is exact (fraction-free minors).
Q = an_form(2)
print("Gram matrix:", Q.entries)
print("determinant:", Q.determinant())

# Counts index by half the Gram value, so Q(x) = 2N.  For this matrix
# that means counting x^2 + xy + y^2 = N, the hexagonal lattice norm.
table = form_table(Q, 12)
print("counts N=0..12:", " ".join(str(table[n]) for n in range(13)))

# Deleting rows and columns gives the principal subforms; inclusion-
# exclusion over deleted variables isolates the all-nonzero solutions.
print("all-nonzero counts:",
      " ".join(str(nonzero_form_count(Q, n)) for n in range(1, 13)))

# The unpruned box scan knows nothing about theta series or deletion,
# so agreement here is a real two-implementation check.
for n in range(1, 13):
    assert nonzero_form_count(Q, n) == brute_form_count(Q, n, require_nonzero=True)
print("box scan agrees through N=12")

# The 2/1 family has determinant n+1 in every rank.
print()
print("determinants:", [an_form(n).determinant() for n in range(1, 9)])

# Forms can also be read from plain text: rank, then the matrix rows.
text = """\
3
2 0 1
0 4 0
1 0 2
"""
R = parse_form_text(text)
print()
print("parsed form counts:", [form_table(R, 10)[n] for n in range(11)])

# Diagonal matrices with 2s recover the sums-of-squares counts exactly.
D = QuadForm(((2, 0), (0, 2)))
print("2*identity counts:", [form_table(D, 10)[n] for n in range(11)])

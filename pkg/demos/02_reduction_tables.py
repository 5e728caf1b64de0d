"""Reduced webs, reduction matrices and pairing matrices for small boundary types.

Run with ``python demos/02_reduction_tables.py``.
"""
from tripledimer import fixtures as F
from tripledimer.partitions import kostka
from tripledimer.skein import pairing_matrices, reduction_matrix

for types in ["bwwww", "wbwbwb", "bbwbww", "bbbwww", "wwwwww"]:
    rm = reduction_matrix(types)
    print(f"{types}: {len(rm.partitions)} 3-partitions, {len(rm.classes)} reduced webs "
          f"(Kostka number {kostka(types.count('b'), len(types))})")
    labels = F.PRINTED_TABLES[types][0]
    print("   columns in reference order:", " ".join(labels))
    for row in F.table_in_printed_order(types):
        print("   ", " ".join(f"{x:3d}" for x in row))
    print("   matches the reference table:", F.table_in_printed_order(types) == F.PRINTED_TABLES[types][1])

# The pairing matrix M glues two webs; E glues a web with a 3-partition.  M P = E.
M, E, rm = pairing_matrices("wbwbwb")
print("\nM for wbwbwb:")
for row in M:
    print("   ", row)
MP = [[sum(M[i][k] * rm.matrix[k][j] for k in range(len(M))) for j in range(len(E[0]))] for i in range(len(M))]
print("M P == E:", MP == E)

"""
Which triples (M, N, K) allow what
==================================

The classifier is pure integer logic; each positive claim names a window
that backs it, and ``witness_check`` builds and tests those windows.
"""

from zgabor.classify import classify, witness_check

for triple in [(1, 5, 3), (4, 2, 7), (2, 3, 5), (3, 3, 2)]:
    v = classify(*triple)
    print(triple, "frame:", v.frame_exists, "riesz:", v.riesz_sequence_exists, v.dependence_class)
    for row in witness_check(v):
        print("   ", row["claim"], row["family"], row["detail"])

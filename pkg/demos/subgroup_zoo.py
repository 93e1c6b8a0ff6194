"""
Finite-index Schottky subgroups and their quotients
===================================================

Inside each certified group sits a distinguished free subgroup realized
by explicit matrix words. Coset enumeration pins down the index exactly;
for normal subgroups the quotient is identified by its multiplication
table and the quotient surface genus follows from the cone structure.
"""

from origami_schottky.builder import build_case_a, build_case_b, realize_subgroup
from origami_schottky.presentation import (
    normal_core,
    presentation_case_a,
    subgroup_words_a4,
    subgroup_words_even,
    subgroup_words_odd,
    todd_coxeter,
)


def show(label, built, words):
    report = realize_subgroup(built, words)
    quotient = report.quotient_tag or "-"
    hurwitz = "-" if report.hurwitz_equality is None else report.hurwitz_equality
    print(f"{label:<14} rank {report.rank}  index {report.index:>2}  "
          f"normal {str(report.normal):<5} quotient {quotient:<12} "
          f"genus {report.genus}  hurwitz {hurwitz}")
    assert report.freeness.passed and report.loxodromy.passed
    return report


print("family         free rank / index / quotient data")
for n in (3, 5):
    show(f"odd n={n}", build_case_a(n), subgroup_words_odd(n))
for n in (2, 4):
    show(f"even n={n}", build_case_a(n), subgroup_words_even(n))
report = show("tetrahedral", build_case_b(), subgroup_words_a4())

# the order-12 quotient acting on the genus-4 surface meets the bound
# 4(g-1) with equality
print(f"\ntetrahedral quotient order 12 = 4*(4-1): "
      f"{report.hurwitz_equality}")

# the even subgroups are not normal; their normal cores are smaller
# free groups of twice the index
for n in (2, 4):
    table = todd_coxeter(presentation_case_a(n), subgroup_words_even(n))
    core = normal_core(table)
    print(f"even n={n}: index {table.num_cosets}, normal core index "
          f"{core.index}")

"""
Reproducing the reference tables
================================

"""

# Every reference table is recomputed and compared cell by cell. Cells that
# disagree beyond tolerance are listed with the reason.
from collections import Counter

from helifeas.reproduce import reproduce_tables

bundle = reproduce_tables()
print("tables:", ", ".join(bundle.tables))
print(bundle.tables["table28"].to_markdown())

by_note = Counter(d.note for d in bundle.discrepancies)
for note, n in by_note.most_common():
    print(f"{n:3d}  {note}")

# The full list is what `helifeas tables` writes to discrepancies.md.
print(bundle.discrepancies_markdown().splitlines()[2])

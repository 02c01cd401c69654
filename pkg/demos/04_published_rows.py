"""
Checking published tensor rows
==============================

Rows transcribed literally are run through the Racah commutation relations.
A failing row is paired with the verified multiplet of the same rank that
shares the most generators with it.
"""

from lieboson.tables import TABLES, check_table, spinor_text_check

for key in TABLES:
    res = check_table(key)
    print(f"[{key}] J-set from {res.jset_source}")
    for row in res.rows:
        status = "ok" if row.ok else "fails"
        print(f"  {row.name:<8} {status}")
        if row.replacement is not None:
            print("      closest verified:", ", ".join(row.replacement.labels))

print("spinors written in prose, u(4):")
for name, (ok, residuals) in spinor_text_check("u4").items():
    print(f"  {name:<4} {'ok' if ok else 'fails ' + residuals[0]}")

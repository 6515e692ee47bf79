# The known lists of d-critical values, and which constructions reach them.

from collections import Counter

from thetacrit import fixtures

for d in sorted(fixtures.FIXTURES):
    rs = fixtures.realize_list(d)
    tags = Counter(r.entry.expected_provenance for r in rs)
    done = sum(r.realized for r in rs)
    print(f"d={d:2d}: {len(rs):2d} entries ({fixtures.COMPLETENESS[d]}), {done} realised, "
          f"{fixtures.distinct_values(d)} distinct; {dict(tags)}")

# %% d = 13 in detail, with the misread items flagged
print()
for r in fixtures.realize_list(13):
    e = r.entry
    flag = f"  [printed {e.printed}]" if e.misprint else ""
    print(f"{e.display:16s} {e.expected_provenance:16s} {'yes' if r.realized else 'no':3s} "
          f"{', '.join(r.tags)}{flag}")

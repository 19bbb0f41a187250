"""Run the conjugation identity catalogue over every concrete family and summarise it."""

from collections import Counter

from tribospin import registry, verify_all
from tribospin.identities import unexpected

families = [f for f in registry() if not f.generic]
report = verify_all(50, families)

tally = Counter((e.theorem, e.identity_index, e.status) for e in report)
for (theorem, index, status), count in sorted(tally.items()):
    print(f"{theorem:>20} #{index}: {status:<10} on {count} families")

surprises = unexpected(report)
print(f"\n{len(report)} checks, {len(surprises)} unexpected")
for entry in surprises:
    print("  ", entry)

sample = next(e for e in report if e.status == "DISCREPANT")
print("\nexample detail:", sample.detail)

"""Print the whole congruence lattice of the four-element running example.

The table has exactly five congruences and its lattice is a pentagon, the
smallest non-modular lattice. The script lists every congruence with its
markers, shows the canonical four, and exhibits the modularity failure.
"""

from aggroupoids import (
    all_congruences,
    canonical_suite,
    format_lattice_report,
    is_modular_sublattice,
)
from aggroupoids.samples import inverse_monoid4


def main():
    g = inverse_monoid4()
    report = all_congruences(g)
    print(format_lattice_report(report))

    print("canonical congruences")
    for name, c in canonical_suite(g).items():
        print(f"  {name}: {c.partition_text()}")
    print()

    everything = range(len(report.congruences))
    modular, witness = is_modular_sublattice(report, everything)
    print(f"modular: {'yes' if modular else 'no'}")
    if not modular:
        texts = [report.congruences[i].partition_text() for i in witness]
        print("pentagon witness:")
        for text in texts:
            print(f"  {text}")


if __name__ == "__main__":
    main()

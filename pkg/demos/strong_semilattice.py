"""Take a table apart into groups glued over a semilattice, then rebuild it.

A completely inverse table decomposes into one group per idempotent, a
semilattice of those idempotents, and a coherent family of linking maps.
The rebuilt table reproduces the original operation exactly.
"""

from aggroupoids import (
    compose,
    decompose,
    format_mag,
    format_strong_semilattice,
    same_operation,
)
from aggroupoids.samples import collapsing_strong_semilattice, inverse_monoid4


def main():
    g = inverse_monoid4()
    print("original table")
    print(format_mag(g))

    structure = decompose(g)
    print(format_strong_semilattice(structure))

    rebuilt = compose(structure)
    print("rebuilt table")
    print(format_mag(rebuilt))
    print(f"identical operation: {'yes' if same_operation(g, rebuilt) else 'no'}")
    print()

    # a structure with a genuinely collapsing linking map
    collapse = compose(collapsing_strong_semilattice())
    print("composed from a collapsing structure")
    print(format_mag(collapse))


if __name__ == "__main__":
    main()

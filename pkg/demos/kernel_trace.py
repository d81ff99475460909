"""Show that a congruence is its kernel plus its trace, nothing more.

Each congruence of the running example is split into the pair (kernel,
trace) and rebuilt from it. The script then prints the images of the six
bounding operators for a generated congruence, the coordinates every
other congruence with the same kernel or trace must sit between.
"""

from aggroupoids import (
    all_congruences,
    congruence_generated_by,
    congruence_pair_of,
    format_partition,
    from_kernel_trace,
    idempotents,
    kernel_max,
    kernel_min,
    trace_max,
    trace_min,
)
from aggroupoids.samples import inverse_monoid4


def main():
    g = inverse_monoid4()
    report = all_congruences(g)
    id_names = [g.names[i] for i in idempotents(g)]

    print("kernel-trace coordinates")
    for c in report.congruences:
        pair = congruence_pair_of(c)
        names = sorted(g.names[i] for i in pair.kernel)
        rebuilt = from_kernel_trace(g, pair)
        assert rebuilt.rel == c.rel
        trace_text = format_partition(pair.trace, id_names)
        print(
            f"  {c.partition_text():<14} "
            f"kernel {{{' '.join(names)}}}  trace {trace_text}"
        )
    print()

    rho = congruence_generated_by(g, [(g.index("a"), g.index("e"))])
    print(f"generated congruence: {rho.partition_text()}")
    for label, op in [
        ("smallest with this trace", trace_min),
        ("largest with this trace", trace_max),
        ("smallest with this kernel", kernel_min),
        ("largest with this kernel", kernel_max),
    ]:
        print(f"  {label}: {op(rho).partition_text()}")


if __name__ == "__main__":
    main()

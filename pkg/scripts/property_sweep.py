"""Sweep seeded random posets and tabulate how far the partition sums sit
from the ideal counts, per construction.

    python scripts/property_sweep.py --count 200 --max-n 8 --seed 1
"""

import argparse
from collections import Counter
from fractions import Fraction

from latmin import (
    ConstructionVariant,
    build_prop2,
    build_table,
    check_min_condition,
    enumerate_ideals,
    is_mnat_concave,
    partition_sum_dyadic,
)
from latmin.generate import random_poset_corpus


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    corpus = random_poset_corpus(args.count, args.max_n, args.seed)
    builders = {"prop2": build_prop2, **{v.value: (lambda P, v=v: build_table(P, v)) for v in ConstructionVariant}}
    mnat = Counter()
    cond = Counter()
    worst_gap = {name: Fraction(0) for name in builders}
    max_value = Counter()
    for P in corpus:
        count = len(enumerate_ideals(P))
        for name, build in builders.items():
            f = build(P)
            mnat[name] += is_mnat_concave(f) is None
            cond[name] += check_min_condition(f, P)
            worst_gap[name] = max(worst_gap[name], abs(partition_sum_dyadic(f).value - count))
            max_value[name] = max(max_value[name], max(f.values))

    print(f"{len(corpus)} posets, n <= {args.max_n}, seed {args.seed}")
    print(f"{'function':>8} {'M-nat':>6} {'cond':>6} {'max f':>6}  worst |sum - #ideals|")
    for name in builders:
        gap = worst_gap[name]
        print(f"{name:>8} {mnat[name]:>6} {cond[name]:>6} {max_value[name]:>6}  {gap} (~{float(gap):.3g})")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Evidence gathering: deflation kernels versus the max-cyclic intersection.

Two observations are probed over the catalog, neither of which is settled
in general, so this script reports counts and never asserts an answer:

  1. whenever deflation along N commutes with the lift, is N contained in
     the intersection M of all maximal cyclic subgroups?
  2. does deflation along M itself commute with the lift?

M is characteristic, hence normal, so (2) is always well posed. A "no"
in column (1) would be a counterexample worth a close look; a "no" in
column (2) is unremarkable since containment in M is only known to be
necessary-looking, not sufficient.
"""

from __future__ import annotations

import argparse
import sys

from fwburnside import (
    check_commutes,
    construct_group,
    full_catalog,
    fw_context,
    subgroup_lattice,
)


def examine(spec, cap):
    G = construct_group(spec, cap=cap)
    lat = subgroup_lattice(G)
    ctx = fw_context(G)
    M = lat.max_cyclic_intersection()

    commuting = []
    contained = True
    for c in lat.normal_class_indices():
        N = lat.class_rep(c)
        if check_commutes(ctx, "def", N).commutes:
            commuting.append(lat.class_label(c))
            if not N <= M:
                contained = False
    m_commutes = check_commutes(ctx, "def", M).commutes
    return {
        "group": G.label,
        "maxcyc": lat.class_label(lat.class_index(M)),
        "maxcyc_order": M.order,
        "def_commuting": commuting,
        "all_contained": contained,
        "maxcyc_commutes": m_commutes,
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cap", type=int, default=512)
    args = parser.parse_args(argv)

    rows = [examine(spec, args.cap) for spec in full_catalog()]

    width = max(len(r["group"]) for r in rows)
    print(f"{'group'.ljust(width)}  maxcyc  contained  maxcyc_commutes  def-commuting classes")
    violations = 0
    m_failures = []
    for r in rows:
        if not r["all_contained"]:
            violations += 1
        if not r["maxcyc_commutes"]:
            m_failures.append(r["group"])
        print(
            f"{r['group'].ljust(width)}  {r['maxcyc']:<6}  "
            f"{str(r['all_contained']).lower():<9}  "
            f"{str(r['maxcyc_commutes']).lower():<15}  "
            f"{' '.join(r['def_commuting'])}"
        )

    print()
    print(f"groups examined: {len(rows)}")
    print(f"containment violations (commuting N not inside maxcyc): {violations}")
    print(f"groups where maxcyc itself fails to commute: {len(m_failures)}"
          + (f" ({', '.join(m_failures)})" if m_failures else ""))
    print("evidence only; nothing here decides the general question")
    return 0


if __name__ == "__main__":
    sys.exit(main())

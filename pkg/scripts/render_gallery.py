#!/usr/bin/env python3
"""Render cycle diagrams for the smallest generators of one prime field,
one standalone SVG per generator."""

from __future__ import annotations

import argparse
from pathlib import Path

from elgamalmap import GroupParams, all_generators, cycle_decompose, elgamal_permutation
from elgamalmap.render import cycle_diagram_svg


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--prime", type=int, default=1009)
    parser.add_argument("--count", type=int, default=12, help="how many generators, smallest first")
    parser.add_argument("--outdir", type=Path, default=Path("out/gallery"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for g in all_generators(args.prime)[: args.count]:
        structure = cycle_decompose(elgamal_permutation(GroupParams(args.prime, g)))
        path = args.outdir / f"cycles_p{args.prime}_g{g}.svg"
        path.write_text(cycle_diagram_svg(structure), encoding="utf-8")
        print(f"wrote {path} ({len(structure.cycle_lengths)} cycles)")


if __name__ == "__main__":
    main()

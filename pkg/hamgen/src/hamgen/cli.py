"""Command line for the fixture generator."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .generate import GenerationSpec, generate

H2_SWEEP = tuple(round(0.1 * k, 2) for k in range(1, 26))  # 0.1 .. 2.5 Angstrom
H2_EXTRA = (0.74,)  # equilibrium reference geometry
LIH_SET = (1.0, 1.2, 1.4, 1.6, 1.8, 2.0, 2.25, 2.5)


def _parse_bonds(text: str) -> tuple[float, ...]:
    return tuple(float(v) for v in text.split(",") if v.strip())


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="hamgen")
    parser.add_argument("--molecule", choices=["H2", "LiH"], help="single-molecule mode")
    parser.add_argument("--bond-lengths", type=_parse_bonds, help="comma-separated Angstrom values")
    parser.add_argument("--output-dir", type=Path, help="target directory for fixture files")
    parser.add_argument(
        "--all",
        type=Path,
        metavar="FIXTURES_ROOT",
        help="generate the full committed set under FIXTURES_ROOT/{h2,lih}",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    if args.all:
        h2_bonds = tuple(sorted(set(H2_SWEEP) | set(H2_EXTRA)))
        written = generate(GenerationSpec("H2", h2_bonds, args.all / "h2"))
        written += generate(GenerationSpec("LiH", LIH_SET, args.all / "lih"))
        print(f"wrote {len(written)} fixture files under {args.all}")
        return 0

    if not (args.molecule and args.bond_lengths and args.output_dir):
        parser.error("either --all or all of --molecule/--bond-lengths/--output-dir")
    written = generate(GenerationSpec(args.molecule, args.bond_lengths, args.output_dir))
    print(f"wrote {len(written)} fixture files under {args.output_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

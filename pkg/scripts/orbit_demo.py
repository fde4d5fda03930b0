#!/usr/bin/env python3
"""Flag and grading orbit sizes for the catalog entries over a small prime field."""

import argparse

from jpgeom import catalog
from jpgeom.errors import CapExceeded
from jpgeom.exactla import Field
from jpgeom.grading import plus_filtration
from jpgeom.projgroup import grading_orbit, orbit_enumerate


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--field", default="fp:5")
    parser.add_argument("--cap", type=int, default=5000)
    args = parser.parse_args()
    field = Field.parse(args.field)
    print(f"{'entry':10} {'dims':10} {'flags':>6} {'gradings':>9}")
    for name in catalog.names():
        d = catalog.get(name, field).grading
        sizes = []
        for count in (lambda: orbit_enumerate(d, plus_filtration(d), args.cap), lambda: grading_orbit(d, args.cap)):
            try:
                sizes.append(str(len(count())))
            except CapExceeded:
                sizes.append(f">{args.cap}")
        print(f"{name:10} {str(d.dims):10} {sizes[0]:>6} {sizes[1]:>9}")


if __name__ == "__main__":
    main()

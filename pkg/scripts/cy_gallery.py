"""Print a gallery of Calabi-Yau complete intersections: for each manifold
its Euler number, chi_y genus, elliptic genus, and the coordinates of the
genus in the weight-0 weak Jacobi basis of index dim/2.

Usage: python scripts/cy_gallery.py [--order N]
"""

import argparse
from dataclasses import dataclass, field

from ellgenus.bundles import completely_reducible_bundle
from ellgenus.ci import CompleteIntersection, chern_number
from ellgenus.genus import chi_y, elliptic_genus
from ellgenus.homog import homogeneous_space
from ellgenus.jacobi import basis_half_integral, linear_fit
from ellgenus.qseries import QYSeries
from ellgenus.render import format_laurent


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    space_type: str
    crossed: tuple[int, ...]
    section_weights: tuple[tuple[int, ...], ...]

    def build(self):
        space = homogeneous_space(self.space_type, list(self.crossed))
        bundle = completely_reducible_bundle(space, list(self.section_weights))
        return CompleteIntersection(bundle)


@dataclass(frozen=True)
class GalleryConfig:
    order: int = 2
    entries: tuple[GalleryEntry, ...] = (
        GalleryEntry("quartic K3", "A3", (1,), ((4, 0, 0),)),
        GalleryEntry("quintic threefold", "A4", (1,), ((5, 0, 0, 0),)),
        GalleryEntry("G2-flag CY threefold", "G2", (1, 2),
                     ((2, 0), (0, 1), (0, 1))),
    )


def jacobi_coordinates(manifold, genus):
    """Exact coordinates of the genus in the weight-0 basis of index dim/2."""
    d = manifold.dimension()
    shift = (d - d % 2) // 2
    elements = [
        QYSeries(e.series.prec2,
                 {k2: lau.shift(shift) for k2, lau in e.series.c.items()})
        for e in basis_half_integral(0, d, prec=genus.q_order)]
    labels = [e.label() for e in basis_half_integral(0, d, prec=0)]
    coords = linear_fit(genus, elements)
    return labels, coords


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=GalleryConfig.order,
                        help="number of q powers of the elliptic genus")
    args = parser.parse_args(argv)
    config = GalleryConfig(order=args.order)

    for entry in config.entries:
        manifold = entry.build()
        d = manifold.dimension()
        genus = elliptic_genus(manifold, config.order)
        labels, coords = jacobi_coordinates(manifold, genus)
        print(f"== {entry.name}  ({entry.space_type}"
              f"{list(entry.crossed)}, sections {list(entry.section_weights)})")
        print(f"   dimension     {d}")
        print(f"   Euler number  {chern_number(manifold, [d])}")
        print(f"   chi_y         {format_laurent(sorted(chi_y(manifold).c.items()))}")
        print(f"   genus         {genus}")
        shift = (d - d % 2) // 2
        fit = " + ".join(f"{c} * y^{shift} * {l}"
                         for c, l in zip(coords, labels) if c)
        print(f"   Jacobi form   {fit}")
        print()


if __name__ == "__main__":
    main()

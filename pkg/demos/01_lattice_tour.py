#!/usr/bin/env python3
"""Tour of the intersection lattice: pairings, adjunction, Riemann-Roch,
effectivity and exact section counts.

Run after installing the package:  python3 demos/01_lattice_tour.py
"""

from ruledmoduli import (
    SurfaceConfig,
    canonical_class,
    effectivity,
    euler_char,
    h0_hirzebruch,
    intersect,
)


def main():
    print("=" * 64)
    print("A blowup of a ruled surface and its numerical lattice")
    print("=" * 64)

    # genus-0 base, invariant e = 1, two blown-up general points
    cfg = SurfaceConfig(genus=0, invariant_e=1, num_points=2)
    c0, f = cfg.minimal_section(), cfg.fiber()
    print(f"\nsurface: genus {cfg.genus}, e = {cfg.invariant_e}, "
          f"{cfg.num_points} points, lattice rank {cfg.rank}")

    print("\npairing table on the basis {C0, F, E1, E2}:")
    basis = [("C0", c0), ("F", f), ("E1", cfg.exceptional(1)), ("E2", cfg.exceptional(2))]
    header = "      " + "".join(f"{name:>5}" for name, _ in basis)
    print(header)
    for name, d in basis:
        row = "".join(f"{intersect(d, other):5d}" for _, other in basis)
        print(f"{name:>5} {row}")

    d = cfg.divisor(1, -10, (-1, -1))
    print(f"\nD = {d}")
    print(f"D.D = {intersect(d, d)}   (expect -1 - 20 - 2 = -23)")

    k = canonical_class(cfg)
    print(f"\ncanonical class K = {k}")
    print(f"adjunction checks: K.F = {intersect(k, f)} (= -2), "
          f"K.C0 = {intersect(k, c0)} (= e + 2g - 2), "
          f"K.E1 = {intersect(k, cfg.exceptional(1))} (= -1)")

    print("\nEuler characteristics by Riemann-Roch:")
    for cls in (cfg.zero(), cfg.divisor(b=-7), d):
        print(f"  chi({cls}) = {euler_char(cfg, cls)}")

    print("\neffectivity semi-decisions:")
    for cls in (cfg.fiber_transform(1), -f, c0 - cfg.exceptional(1)):
        verdict = effectivity(cls)
        extra = verdict.decomposition if verdict.decomposition is not None else verdict.violated
        print(f"  {str(cls):>12}: {verdict.verdict.value}  {extra if extra is not None else ''}")

    hirzebruch = SurfaceConfig(0, 1, 0)
    print("\nexact section counts on the minimal surface (e = 1):")
    for a, b in [(0, 0), (1, 1), (0, 7)]:
        cls = hirzebruch.divisor(a, b)
        print(f"  h0({cls}) = {h0_hirzebruch(hirzebruch, cls)}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Extension invariants of rank-two bundles: the wall class zeta, subscheme
lengths, generic section degrees and twisting.
"""

from ruledmoduli import (
    ChernData,
    ExtensionDatum,
    SurfaceConfig,
    chern_twist,
    is_extension_unique,
    normalize_chern,
    r0_generic,
    subscheme_length,
    zeta_class,
)


def main():
    print("=" * 64)
    print("From (d, r, q_i) to the wall class and the subscheme length")
    print("=" * 64)

    # odd fibre degree: c1 = C0 + beta*F + E1 + E2, the presentation is unique
    cfg = SurfaceConfig(genus=0, invariant_e=2, num_points=2)
    beta, c2 = 1, 6
    chern = ChernData(cfg.divisor(1, beta, (1, 1)), c2)
    datum = ExtensionDatum(d=1, r=beta - c2, q=(0, 0), chern=chern)
    print(f"\nc1 = {chern.c1}, c2 = {c2}")
    print(f"datum d = {datum.d}, r = {datum.r}, q = {datum.q}")
    print(f"zeta = {zeta_class(datum)}")
    print(f"subscheme length = {subscheme_length(datum)}  (this family needs no subscheme)")
    print(f"extension uniquely determined by the bundle: {is_extension_unique(datum)}")

    # even fibre degree: candidate section degrees and the generic value r0
    print("\neven fibre degree: c1 = F + E1, c2 = 2n")
    cfg2 = SurfaceConfig(genus=0, invariant_e=1, num_points=1)
    for n in (1, 2, 3, 4):
        print(f"  n = {n}: r0 = {r0_generic(0, 1, 2 * n)}  (sub-line-bundle O((1-n)F))")

    chern2 = ChernData(cfg2.divisor(b=1, exc=(1,)), 6)
    for ells in [(0,), (1,), (2,)]:
        datum2 = ExtensionDatum(d=0, r=-3, q=ells, chern=chern2)
        print(f"  multiplicities q = {ells}: zeta = {zeta_class(datum2)}, "
              f"length = {subscheme_length(datum2)}")

    # twisting changes (c1, c2) but not the discriminant
    print("\ntwisting by O(T):")
    twisted = chern_twist(chern2, cfg2.exceptional(1))
    print(f"  before: c1 = {chern2.c1}, c2 = {chern2.c2}, disc = {chern2.discriminant}")
    print(f"  after : c1 = {twisted.c1}, c2 = {twisted.c2}, disc = {twisted.discriminant}")
    normal = normalize_chern(twisted)
    print(f"  normal form: c1 = {normal.c1}, c2 = {normal.c2}")


if __name__ == "__main__":
    main()

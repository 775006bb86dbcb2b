#!/usr/bin/env python3
"""Box-certified numerical stability for the worked extension family, and
what happens on the wrong side of a wall.
"""

from ruledmoduli import (
    Polarization,
    SearchBox,
    SurfaceConfig,
    destabilizer_search,
    slope_margin,
)


def main():
    print("=" * 64)
    print("L-stability of the family sub = -nF, quot = (n+1)F, length 2n")
    print("=" * 64)

    n, e, w = 3, 1, 2 * 3 + 2 * 1 + 3
    cfg = SurfaceConfig(0, e, 0)
    sub, quot = cfg.divisor(b=-n), cfg.divisor(b=n + 1)
    pol = Polarization(cfg.divisor(1, w))
    print(f"\nn = {n}, e = {e}, polarization L = {pol.cls}")

    verdict = destabilizer_search(cfg, sub, quot, 2 * n, pol, SearchBox(n + 3, n + 3, n + 3))
    print(f"verdict: {verdict.verdict.value}")
    print(f"margin of the sub-line-bundle itself: "
          f"{slope_margin(sub, sub + quot, pol.cls)} / 2 (safely negative)")
    pruned = [c for c in verdict.candidates if c.pruned]
    print(f"{len(pruned)} slope-dangerous candidates were pruned by the generality "
          "of the vanishing subscheme, for example:")
    for candidate in pruned[:4]:
        print(f"  A = {candidate.divisor}: margin {candidate.margin_times_two}/2, "
              f"branch {candidate.branch}, class effective but no injection survives "
              "a general subscheme")
    for note in verdict.notes:
        print(f"note: {note}")

    print("\ncrossing a wall: c1 = F, c2 = 2 with L = 3C0 + F on the quadric")
    quadric = SurfaceConfig(0, 0, 0)
    wall_pol = Polarization(quadric.divisor(3, 1))
    wall_sub = quadric.minimal_section()
    wall_quot = quadric.fiber() - quadric.minimal_section()
    verdict = destabilizer_search(quadric, wall_sub, wall_quot, 1, wall_pol, SearchBox(5, 5, 5))
    print(f"verdict: {verdict.verdict.value}")
    hits = [c for c in verdict.candidates if c.effectivity.decomposition is not None and not c.pruned]
    for candidate in hits[:3]:
        print(f"  A = {candidate.divisor}: margin {candidate.margin_times_two}/2 >= 0, "
              f"branch {candidate.branch} witness {candidate.effectivity.decomposition}")


if __name__ == "__main__":
    main()

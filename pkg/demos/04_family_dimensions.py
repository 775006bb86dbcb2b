#!/usr/bin/env python3
"""Dimension bookkeeping: moduli counts, the two normal-form extension
families, the worked n-indexed family, and the maximizer.
"""

from ruledmoduli import (
    ChernData,
    SurfaceConfig,
    c1f1_report,
    classify_structure,
    family_dim_c1f0,
    maximize_family_dim,
    moduli_dim,
    reference_family_dims,
)


def main():
    print("=" * 64)
    print("The n-indexed family on a Hirzebruch surface: c1 = F, c2 = 2n")
    print("=" * 64)
    print(f"\n{'n':>3} {'dim':>6} {'ext1':>6} {'h0(V(nF))':>10} {'moduli':>8}")
    cfg = SurfaceConfig(0, 1, 0)
    for n in range(1, 9):
        dims = reference_family_dims(n)
        expected = moduli_dim(cfg, ChernData(cfg.fiber(), 2 * n))
        print(f"{n:>3} {dims.family_dim:>6} {dims.ext1:>6} {dims.h0_twist:>10} {expected:>8}")
    print("the family dimension 8n - 3 matches the moduli count for every n")

    print("\nodd fibre degree: the extension family fills the moduli space")
    report = c1f1_report(SurfaceConfig(1, 2, 3), beta=1, c2=5)
    print(f"  family dim = {report.family_dim}, moduli dim = {report.moduli_dim}, "
          f"ext1 = {report.ext1}, dominance = {report.dominance.value}")

    print("\neven fibre degree: maximizing over (r1, multiplicities, h0)")
    for g, eta, m, n, eps in [(0, 1, 0, 3, 0), (0, 0, 1, 3, 0), (1, 0, 2, 4, 1)]:
        result = maximize_family_dim(g, eta, m, n, eps)
        cap = 4 * (2 * n + eps) + 4 * g - 3 + m
        raw = family_dim_c1f0(g, eta, m, n, eps, result.r1, result.ell, result.h0)
        print(f"  (g={g}, eta={eta}, m={m}, n={n}, eps={eps}): argmax r1 = {result.r1}, "
              f"value = {result.value} (cap {cap}, raw count {raw})")

    print("\nbirational classification by the parity of c1.F:")
    quadric = SurfaceConfig(0, 0, 0)
    for c1, c2 in [(quadric.divisor(1, 1), 5), (quadric.fiber(), 6)]:
        result = classify_structure(quadric, ChernData(c1, c2))
        print(f"  c1 = {c1}: {result.kind.value}, {result.rationality.value}, "
              f"symmetric-product exponent {result.hilbert_exponent}")


if __name__ == "__main__":
    main()

"""Quasienergy bands across the four spectral classes.

Four angle pairs, one per class, all at the same loss p = 9/25:

  unbroken            all quasienergies real; |eigenvalues| = 1
  exceptional point   bands touch with zero imaginary part
  partially broken    imaginary parts open on an interval of momenta
  completely broken   imaginary parts open at every momentum

The plot shows Re(eps) and Im(eps) for both bands over one Brillouin
zone k in [-pi/2, pi/2); the product of the two band eigenvalues is 1
at every k, so the imaginary parts always come in +/- pairs.

Run:  python3 demos/02_bands_and_classes.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from ptwalk import bands, classify_pt_detail, k_grid, make_params

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

XI = 0.1113
P = 9.0 / 25.0
CASES = [
    ("unbroken", (-np.pi / 4, 3 * np.pi / 4 - 3 * XI)),
    ("exceptional point", (-4 * np.pi / 9, 5 * np.pi / 9 + XI)),
    ("partially broken", (-17 * np.pi / 36, 19 * np.pi / 36 + XI / 2)),
    ("completely broken", (-np.pi / 2 - 3 * XI / 8, -np.pi / 2 - 3 * XI / 8)),
]

ks = k_grid(1024)
fig, axes = plt.subplots(2, 4, figsize=(16, 6.5), sharex=True, constrained_layout=True)

for col, (label, thetas) in enumerate(CASES):
    params = make_params(*thetas, P)
    point = bands(params, ks)
    report = classify_pt_detail(params)
    print(
        f"{label:18s} class={report.pt_class.value:17s} "
        f"d0^2 in [{report.d0sq_min:.4f}, {report.d0sq_max:.4f}]"
        + (f"  subcase: {report.subcase}" if report.subcase else "")
    )
    for eps, style in [(point.eps_plus, "C0"), (point.eps_minus, "C1")]:
        axes[0, col].plot(ks, eps.real, style, lw=1)
        axes[1, col].plot(ks, eps.imag, style, lw=1)
    axes[0, col].set_title(f"{label}\n{report.pt_class.value}")
    axes[1, col].set_xlabel("k")
axes[0, 0].set_ylabel(r"Re $\epsilon(k)$")
axes[1, 0].set_ylabel(r"Im $\epsilon(k)$")
for ax in axes.flat:
    ax.grid(alpha=0.3)

fig.savefig(OUT / "bands_classes.png", dpi=150)
print(f"wrote {OUT / 'bands_classes.png'}")

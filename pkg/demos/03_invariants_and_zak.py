"""Geometric phases: quantization, band sums, and exceptional points.

Three exhibits:

1. The global geometric phase is 2*pi times an integer for any angle
   pair away from gap closings, broken spectrum or not, and that
   integer matches the projected winding number.

2. Per-band generalized phases (biorthogonal convention) exist in the
   fully unbroken and fully broken classes.  Unbroken: a complex
   conjugate pair whose sum is the real quantized total.  Fully
   broken: two reals that differ from naive expectations but still
   sum to the quantized total.

3. At an exceptional momentum the band-resolved connection diverges
   like 1/sqrt, yet the divergence cancels exactly in the band sum.
   The plot shows |a_+| blowing up while a_+ + a_- tracks the smooth
   in-plane angle derivative.

Run:  python3 demos/03_invariants_and_zak.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
from scipy.optimize import brentq

from ptwalk import (
    berry_connection,
    bloch_vector,
    generalized_zak_phase,
    global_berry_phase,
    make_params,
    theta_angle,
    winding_number_projected,
)

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

XI = 0.1113
P = 9.0 / 25.0

print("-- quantization across classes --")
POINTS = [
    ("unbroken", (-9 * np.pi / 16, -5 * np.pi / 16)),
    ("partially broken", (-17 * np.pi / 36, 19 * np.pi / 36 + XI / 2)),
    ("fully broken", (np.pi / 2 + 0.07, np.pi / 2 + 0.03)),
]
for label, thetas in POINTS:
    params = make_params(*thetas, P)
    phi = global_berry_phase(params)
    nu = winding_number_projected(params)
    print(f"{label:18s} phi_B/2pi = {phi / (2 * np.pi):+.9f}   winding = {nu:+d}")

print("\n-- per-band phases (only defined off the partially broken class) --")
for label, thetas in [(POINTS[0][0], POINTS[0][1]), (POINTS[2][0], POINTS[2][1])]:
    params = make_params(*thetas, P)
    zp = generalized_zak_phase(params, band="+")
    zm = generalized_zak_phase(params, band="-")
    total = zp + zm
    print(
        f"{label:18s} zak(+) = {zp:+.6f}  zak(-) = {zm:+.6f}  "
        f"sum/2pi = {total.real / (2 * np.pi):+.9f}"
    )

# exhibit 3: divergence and cancellation at an exceptional momentum
params = make_params(-4 * np.pi / 9, 5 * np.pi / 9 + XI, P)


def gap(k):
    return float(bloch_vector(params, np.atleast_1d(k)).d0[0] ** 2) - 1.0


kc = brentq(gap, -np.pi / 2 + 1e-9, -np.pi / 2 + 0.05, xtol=1e-15)
print(f"\nexceptional momentum k_c = {kc:.12f}")

offsets = np.logspace(-10, -2, 33)
ks = kc + offsets
a_plus = np.array([berry_connection(params, k).a_plus for k in ks])
sums = np.array(
    [berry_connection(params, k).a_plus + berry_connection(params, k).a_minus for k in ks]
)
smooth = np.array(
    [(theta_angle(params, k + 1e-6) - theta_angle(params, k - 1e-6)) / 2e-6 for k in ks]
)

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, 4.2), constrained_layout=True)
ax1.loglog(offsets, np.abs(a_plus), "o-", ms=3, label=r"$|a_+|$")
ax1.loglog(offsets, 0.5 / np.sqrt(2 * offsets * abs(gap(kc + 1e-4)) / 1e-4), "--",
           label=r"$\propto 1/\sqrt{k - k_c}$")
ax1.set_xlabel(r"$k - k_c$")
ax1.set_title("band-resolved connection diverges")
ax1.legend()
ax2.semilogx(offsets, np.abs(sums.real - smooth) / np.abs(smooth), "o-", ms=3)
ax2.set_xlabel(r"$k - k_c$")
ax2.set_ylabel(r"$|a_+ + a_- - \vartheta'| / |\vartheta'|$")
ax2.set_title("...but cancels in the band sum")
ax2.grid(alpha=0.3)

fig.savefig(OUT / "berry_connection.png", dpi=150)
print(f"wrote {OUT / 'berry_connection.png'}")

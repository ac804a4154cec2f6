"""
Recording an inline hologram of a point and inspecting its ring system
======================================================================

A point object illuminated by a plane wave produces the classic circular
interference pattern.  This script records one, measures where the dark
rings actually sit, and reconstructs the point by back propagation.
"""

import os

import numpy as np

from holodepth import point_object, reconstruct_intensity, synthesize_inline_hologram, write_pgm16

PITCH = 10e-6
WAVELENGTH = 633e-9
Z = 0.1
SIZE = 1024

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)

# record: a single bright pixel at the frame center, propagated to the
# sensor plane and interfered with the unit reference wave
obj = point_object(SIZE)
holo = synthesize_inline_hologram(obj, Z, PITCH, WAVELENGTH)
write_pgm16(os.path.join(out_dir, "point_hologram.pgm"), holo,
            meta={"pitch": PITCH, "wavelength": WAVELENGTH, "z": Z})

# azimuthally average the pattern and list the first few dark rings
yy, xx = np.ogrid[:SIZE, :SIZE]
r = np.hypot(yy - SIZE // 2, xx - SIZE // 2).astype(np.intp)
profile = np.bincount(r.ravel(), holo.ravel()) / np.bincount(r.ravel())
minima = [i for i in range(10, 400)
          if profile[i] < profile[i - 1] and profile[i] < profile[i + 1]][:6]

print(f"hologram recorded at z = {Z} m, mean intensity {holo.mean():.3f}")
print(f"first dark rings at radii {minima} px")

# the ring radii follow r^2 = (c + 2m) * lambda * z, so successive dark
# rings are spaced 2 * lambda * z apart in r^2; verify that spacing
r2 = (np.array(minima) * PITCH) ** 2
spacing = np.diff(r2)
print(f"r^2 spacing between rings: {spacing / (WAVELENGTH * Z)} (in units of lambda*z)")

# back propagate to the recording distance; the point snaps back into focus
recon = reconstruct_intensity(holo, Z, PITCH, WAVELENGTH)
peak = np.unravel_index(np.argmax(recon), recon.shape)
print(f"reconstruction peak at {peak}, expected ({SIZE // 2}, {SIZE // 2})")
write_pgm16(os.path.join(out_dir, "point_reconstruction.pgm"), recon,
            meta={"pitch": PITCH, "wavelength": WAVELENGTH, "z": Z})
print(f"wrote hologram and reconstruction into {out_dir}")

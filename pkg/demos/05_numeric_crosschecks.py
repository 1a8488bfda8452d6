"""Cross-check the symbolic relations numerically: every certified kernel
element should evaluate to (nearly) zero under the Z-map.

Run: python3 demos/05_numeric_crosschecks.py
"""

import math

from mzvkit import NcPoly, derivation, dual_index, z_eval, zeta_eval
from mzvkit.span import corollary_check

# zeta(2) = pi^2/6, as a sanity anchor.
r = zeta_eval((2,), 10 ** 6)
print(f"zeta(2) partial sum = {r.value:.10f}  (pi^2/6 = {math.pi**2/6:.10f})")
print(f"  cutoff={r.cutoff}, tail bound={r.tail_bound:.2e}")

# Euler: zeta(2,1) = zeta(3), i.e. Z(d_1(xy)) = 0.
res = z_eval(derivation(1, NcPoly.word("xy")), 10 ** 6)
print(f"\nZ(d_1(xy)) = {res.value:+.3e}  (tail bound {res.tail_bound:.3e})")

# Duality residuals for a few indices.
print("\nduality residuals at cutoff 1e5:")
for i in [(3,), (4,), (3, 2), (2, 1, 1, 2)]:
    d = dual_index(i)
    a, b = zeta_eval(i, 10 ** 5), zeta_eval(d, 10 ** 5)
    print(f"  |zeta{i} - zeta{d}| = {abs(a.value - b.value):.3e}"
          f"  (bound {a.tail_bound + b.tail_bound:.3e})")

# A corollary certificate, re-checked in floating point.
cert = corollary_check(6, 3, 2)
res = z_eval(cert.target, 10 ** 5)
print(f"\nZ((1-tau)(sum at k=6,m=3,l=2)) = {res.value:+.3e}"
      f"  (tail bound {res.tail_bound:.3e})")

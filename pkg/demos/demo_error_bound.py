"""
The explicit error bound
========================

The bound adds a term driven by ``||f||_1`` and the Bessel decay ``eta*``
to a term driven by the spectral tail ``eps_1(f, b)``. For small ``b`` it is
far above the observed error. It only becomes informative once ``b`` passes
``5 / (1 - theta^2)^{3/2}``.
"""

from fractions import Fraction

from vline_sampling import Geometry, Phantom, full_bound
from vline_sampling.bounds import asymptotic_threshold
from vline_sampling.export import bound_text

blob = Phantom.single((0.2, 0.1), 0.125)
geo = Geometry(Fraction(3, 2), 1, 5, Fraction(5, 6))
print(bound_text(full_bound(blob, geo)))
print()

th = 5 / 6
print(f"asymptotic regime starts near b = {asymptotic_threshold(th):.1f}")
for b in (5, 10, 20, 40, 60, 80, 120):
    bd = full_bound(blob, Geometry(1.5, 1, b, th))
    print(f"b={b:3d}  eta*={bd.eta_star:.3e}  term_f={bd.term_f:.3e}  term_tail={bd.term_tail:.3e}"
          f"  total={bd.total:.3e}")

"""Kernel backend selection.

The compiled ``_speedups`` extension is used when it was built; otherwise the
pure-Python module with the identical interface takes over.
"""

from pkaequiv import _purekernels as pure

try:
    from pkaequiv import _speedups as compiled
except ImportError:  # extension not built
    compiled = None

impl = compiled if compiled is not None else pure
BACKEND = "compiled" if compiled is not None else "pure"

GREVLEX = impl.GREVLEX
LEX = impl.LEX

mono_mul = impl.mono_mul
mono_divides = impl.mono_divides
mono_quo = impl.mono_quo
mono_lcm = impl.mono_lcm
mono_coprime = impl.mono_coprime
mono_degree = impl.mono_degree
mono_cmp = impl.mono_cmp
sort_monomials = impl.sort_monomials
leading = impl.leading
poly_add = impl.poly_add
poly_mul = impl.poly_mul
axpy_inplace = impl.axpy_inplace
normal_form = impl.normal_form

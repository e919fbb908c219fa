"""Row-operation kernels for the exact simplex.

Two interchangeable implementations: `pure` (plain Python) and `_speed`
(Cython, built via ``python setup.py build_ext --inplace`` or a regular
install with Cython present).  The compiled module is preferred when it
imports; set ``PIRTRADE_PURE_KERNELS=1`` to force the fallback.  Both operate
on arbitrary exact-rational Python objects and produce identical results;
``benchmarks/bench_kernels.py`` compares them.
"""

import os

from . import pure

if os.environ.get("PIRTRADE_PURE_KERNELS") == "1":
    impl = pure
else:
    try:
        from . import _speed as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

IMPLEMENTATION = "pure" if impl is pure else "cython"

axpy = impl.axpy
gather_axpy = impl.gather_axpy
sparse_dot = impl.sparse_dot
pivot_update = impl.pivot_update

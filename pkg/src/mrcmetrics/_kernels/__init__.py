"""Hot numeric kernels: compiled extension when built, pure Python otherwise.

``BACKEND`` records which implementation is active ("compiled" or
"python"). Both are always importable individually for cross-checking and
benchmarking; see benchmarks/bench_kernels.py.
"""

from ._lcs_py import lcs_len_ids as lcs_len_ids_py

try:
    from ._lcs import lcs_len_ids as lcs_len_ids_compiled

    lcs_len_ids = lcs_len_ids_compiled
    BACKEND = "compiled"
except ImportError:
    lcs_len_ids_compiled = None
    lcs_len_ids = lcs_len_ids_py
    BACKEND = "python"

__all__ = ["lcs_len_ids", "lcs_len_ids_py", "lcs_len_ids_compiled", "BACKEND"]


__all__ = [
    "ComputeBackend",
    "MainProcessCompute",
    "MultiprocessCompute",
]

from surfdraw.compute.compute_backend import ComputeBackend

from surfdraw.compute.main_process_compute import MainProcessCompute
from surfdraw.compute.multiprocess_compute import MultiprocessCompute

from concurrent.futures import ProcessPoolExecutor
from functools import partial
import multiprocessing as mp
import os
from typing import List, Optional, Sequence, Tuple, TypeVar

from loguru import logger

from surfdraw.checks import PairIntersections
from surfdraw.compute import general as gc
from surfdraw.compute.compute_backend import ComputeBackend
from surfdraw.convention import Convention
from surfdraw.drawing import Drawing
from surfdraw.rotation_system import RotationSystem
from surfdraw.system_analysis import SystemAnalysis

T = TypeVar("T")


class MultiprocessCompute(ComputeBackend):
    """Local multiprocessing compute backend.

    Uses a pool of processes for compute.
    Made with the "spawn" context.
    Work is cut into contiguous chunks and results are joined back in input order.

    Parameters
    ----------
    max_workers : Optional[int], optional
        The max number of worker processes.
        By default it will be the number of processor cores on the system.
    log_workers : bool, default: False
        Enable ``surfdraw`` logging inside the worker processes.

    Examples
    --------
    .. code-block:: python

        from surfdraw import MultiprocessCompute, load_drawing, star_crossing_matrix

        with MultiprocessCompute(max_workers=4) as compute:
            matrix = star_crossing_matrix(load_drawing("fixtures/k45_klein_counterexample.tgd"), compute=compute)
    """


    def __init__(
        self,
        max_workers: Optional[int] = None,
        log_workers: bool = False
    ):
        super().__init__(parallel=True)
        self._max_workers = max_workers
        if self._max_workers is None:
            self._max_workers = len(os.sched_getaffinity(0))

        self._log_workers = log_workers
        self._process_pool: Optional[ProcessPoolExecutor] = None


    @property
    def max_workers(self) -> int:
        return self._max_workers


    def initialize(self) -> None:
        """Start the process pool.
        """
        if self._process_pool is not None:
            return

        logger.debug(f"Starting process pool with {self._max_workers} workers.")
        self._process_pool = ProcessPoolExecutor(
            max_workers=self._max_workers,
            mp_context=mp.get_context("spawn"), # must use spawn, it's also the most compatible
            initializer=partial(
                _executor_init,
                log_enabled=self._log_workers
            )
        )


    def shutdown(self) -> None:
        """Shut the process pool down, waiting for running chunks.
        """
        if self._process_pool is not None:
            self._process_pool.shutdown(wait=True)
            self._process_pool = None


    def _chunks(self, items: Sequence[T]) -> List[List[T]]:
        if len(items) == 0:
            return []

        n_chunks = max(1, min(len(items), self._max_workers * 4))
        size = -(-len(items) // n_chunks)
        return [list(items[i:i + size]) for i in range(0, len(items), size)]


    def edge_pair_intersections(
        self,
        drawing: Drawing,
        pairs: Sequence[Tuple[int, int]]
    ) -> List[PairIntersections]:
        self.initialize()
        chunks = self._chunks(pairs)
        logger.debug(f"Dispatching {len(pairs)} edge pairs in {len(chunks)} chunks.")
        results = []
        for chunk_results in self._process_pool.map(
            partial(_executor_pair_intersections, drawing=drawing),
            chunks
        ):
            results.extend(chunk_results)

        return results


    def analyze_rotation_systems(
        self,
        systems: Sequence[RotationSystem],
        convention: Convention
    ) -> List[SystemAnalysis]:
        self.initialize()
        chunks = self._chunks(systems)
        logger.debug(f"Dispatching {len(systems)} rotation systems in {len(chunks)} chunks.")
        results = []
        for chunk_results in self._process_pool.map(
            partial(_executor_analyze_systems, convention=convention),
            chunks
        ):
            results.extend(chunk_results)

        return results


def _executor_init(log_enabled: bool) -> None:
    if log_enabled:
        logger.enable("surfdraw")
    else:
        logger.disable("surfdraw")


def _executor_pair_intersections(
    pairs: List[Tuple[int, int]],
    drawing: Drawing
) -> List[PairIntersections]:
    return gc.pair_intersections_chunk(drawing=drawing, pairs=pairs)


def _executor_analyze_systems(
    systems: List[RotationSystem],
    convention: Convention
) -> List[SystemAnalysis]:
    return gc.analyze_systems_chunk(systems=systems, convention=convention)

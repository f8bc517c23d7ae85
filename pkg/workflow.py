#!/usr/bin/env python3
"""
Chunked execution for the counting kernels.
Maps a module-level pure function over a list of chunk tasks sequentially,
on a thread pool or on a process pool, always returning results in task order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

import config
from bus import ActionTypes, CommandBus, get_command_bus

logger = logging.getLogger(__name__)


class WorkflowTopology(Enum):
    """Supported workflow topologies."""
    SEQUENTIAL = "sequential"  # In-process loop
    THREADS = "threads"        # ThreadPoolExecutor
    PROCESSES = "processes"    # ProcessPoolExecutor (tasks and results must pickle)


class ChunkWorkflow:
    """
    Ordered map of a chunk function over tasks.

    The reduction is left to the caller, which receives the results in task
    order whatever the topology, so parallel and sequential runs reduce to
    identical values.
    """

    def __init__(self, topology: str = None, workers: int = None, bus: Optional[CommandBus] = None,
                 source: str = "workflow"):
        self.topology = WorkflowTopology(topology or config.TOPOLOGY)
        self.workers = workers or config.WORKERS
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        self.command_bus = bus
        self.source = source

    def _bus(self) -> CommandBus:
        if self.command_bus is None:
            self.command_bus = get_command_bus()
        return self.command_bus

    def map(self, function: Callable[[Any], Any], tasks: Sequence[Any]) -> List[Any]:
        """
        Execute `function` on every task.

        Args:
            function: module-level callable (picklable for PROCESSES)
            tasks: chunk tasks

        Returns:
            Results in task order
        """
        total = len(tasks)
        if self.topology is WorkflowTopology.SEQUENTIAL or self.workers == 1 or total <= 1:
            results = []
            for index, task in enumerate(tasks):
                results.append(function(task))
                self._chunk_complete(index, total)
            return results

        executor_class = ThreadPoolExecutor if self.topology is WorkflowTopology.THREADS else ProcessPoolExecutor
        results = []
        with executor_class(max_workers=self.workers) as executor:
            for index, result in enumerate(executor.map(function, tasks)):
                results.append(result)
                self._chunk_complete(index, total)
        return results

    def _chunk_complete(self, index: int, total: int):
        self._bus().emit(ActionTypes.CHUNK_COMPLETE, {
            "chunk": index + 1,
            "of": total,
            "topology": self.topology.value,
        }, source=self.source)

    def describe(self) -> Dict[str, Any]:
        return {"topology": self.topology.value, "workers": str(self.workers)}

#!/usr/bin/env python3
"""
Base command class for the Cartesian Lab command line.
Provides command bus integration and the report/exit-code contract.
"""

import time
from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

from bus import ActionTypes, get_command_bus
from cli.reports import ExperimentConfig, build_report
from errors import LabError
from .inputs import CommandInputs

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATHEMATICAL = 2


class BaseCommand(ABC):
    """
    Base class for all subcommands.

    A command delegates to one library operation; `run` returns the result
    block of the report and `exit_code` maps that result to the process
    exit code.
    """

    explanation = ""

    def __init__(self, name: str, description: str = ""):
        self.name = name
        self.description = description
        self.is_active = False

    def emit(self, action: str, data: Dict[str, Any]) -> str:
        """
        Emit an action to the command bus with this command as the source.

        Returns:
            Action ID
        """
        return get_command_bus().emit(action, data, source=self.name)

    def notify_start(self, task: str):
        self.is_active = True
        self.emit(ActionTypes.COMMAND_START, {"command": self.name, "task": task})

    def notify_progress(self, message: str, progress: float = None):
        data = {"command": self.name, "message": message}
        if progress is not None:
            data["progress"] = progress
        self.emit(ActionTypes.SHOW_PROGRESS, data)

    def notify_finding(self, message: str, details: Dict[str, Any] = None):
        self.emit(ActionTypes.FINDING, {"command": self.name, "message": message, **(details or {})})

    def notify_complete(self, result: Any = None):
        self.is_active = False
        self.emit(ActionTypes.COMMAND_COMPLETE, {"command": self.name, "result": result})

    def notify_error(self, error: str, details: Dict[str, Any] = None):
        self.is_active = False
        error_data = {"command": self.name, "error": error}
        if details:
            error_data.update(details)
        self.emit(ActionTypes.ERROR, error_data)

    @abstractmethod
    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        """
        Execute the operation behind this command.

        Args:
            inputs: resolved polynomials, point sets and options

        Returns:
            The report's result block
        """

    def exit_code(self, result: Dict[str, Any]) -> int:
        return EXIT_OK

    def execute(self, experiment: ExperimentConfig) -> Tuple[Dict[str, Any], int]:
        """
        Run the command and assemble its report.

        Lab errors become an `error` block with their exit code; anything
        else propagates.
        """
        self.notify_start(experiment.command)
        inputs = CommandInputs(experiment)
        started = time.perf_counter()
        error = None
        try:
            result = self.run(inputs)
            code = self.exit_code(result)
        except LabError as e:
            self.notify_error(e.message, e.details)
            result, error, code = {}, e.to_dict(), e.exit_code
        timing = time.perf_counter() - started if experiment.options.get("timing") else None
        report = build_report(experiment, result, inputs.settings(), error, timing)
        self.notify_complete({"exit_code": code})
        return report, code

#!/usr/bin/env python3
"""
Experiment configurations and JSON reports.

A report is a pure function of its configuration: keys are sorted, counts
are decimal strings and nothing time-dependent is written unless timing was
requested.
"""

import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Union

import config

PathLike = Union[str, Path]


@dataclass
class ExperimentConfig:
    """
    One CLI run.

    Args:
        command: subcommand name, e.g. "count"
        polynomials: role -> grammar text, e.g. {"F": "x*s - y + t"}
        points: role -> CSV path, e.g. {"P": "p.csv"}
        construct: construction spec such as "elekes:3,3"
        options: remaining settings (order, M, budgets, seed, mode, ...)
    """

    command: str
    polynomials: Dict[str, str] = field(default_factory=dict)
    points: Dict[str, str] = field(default_factory=dict)
    construct: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        unknown = set(data) - {"command", "polynomials", "points", "construct", "options"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        if "command" not in data:
            raise ValueError("config has no 'command'")
        return cls(
            command=data["command"],
            polynomials=dict(data.get("polynomials") or {}),
            points=dict(data.get("points") or {}),
            construct=data.get("construct"),
            options=dict(data.get("options") or {}),
        )

    def save(self, path: PathLike):
        Path(path).write_text(dumps(self.to_dict()), encoding="utf-8")

    @classmethod
    def load(cls, path: PathLike) -> "ExperimentConfig":
        return cls.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def build_report(experiment: ExperimentConfig, result: Dict[str, Any],
                 settings: Optional[Dict[str, Any]] = None, error: Optional[Dict[str, Any]] = None,
                 timing: Optional[float] = None) -> Dict[str, Any]:
    report: Dict[str, Any] = {
        "schema": config.REPORT_SCHEMA,
        "command": experiment.command,
        "inputs": experiment.to_dict(),
        "settings": settings or {},
        "result": result,
    }
    if error is not None:
        report["error"] = error
    if timing is not None:
        report["timing"] = {"seconds": f"{timing:.6f}"}
    return report


def write_report(report: Dict[str, Any], path: Optional[PathLike] = None, stream: TextIO = None):
    text = dumps(report)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    else:
        (stream or sys.stdout).write(text)

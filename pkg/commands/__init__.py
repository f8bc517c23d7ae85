"""
Subcommands of the Cartesian Lab command line.
Each command delegates to one library operation.
"""

from typing import Dict

from .base_command import EXIT_MATHEMATICAL, EXIT_OK, EXIT_USAGE, BaseCommand
from .inputs import CommandInputs
from .algebraic import CartesianTestCommand, GridWitnessCommand, ProbeCommand
from .incidence import CountCommand, IncidenceCommand, PartitionCommand, ValuesCommand
from .construct import ConstructCommand


def create_commands() -> Dict[str, BaseCommand]:
    commands = [
        CartesianTestCommand(), GridWitnessCommand(), CountCommand(), IncidenceCommand(),
        PartitionCommand(), ValuesCommand(), ConstructCommand(), ProbeCommand(),
    ]
    return {command.name: command for command in commands}


__all__ = [
    "EXIT_MATHEMATICAL", "EXIT_OK", "EXIT_USAGE", "BaseCommand", "CommandInputs",
    "CartesianTestCommand", "GridWitnessCommand", "ProbeCommand",
    "CountCommand", "IncidenceCommand", "PartitionCommand", "ValuesCommand",
    "ConstructCommand", "create_commands",
]

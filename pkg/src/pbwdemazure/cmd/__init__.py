"""
# pbwdemazure.cmd

Command definition and dispatch package for the `pbwdemazure` CLI.

Exports the `CommandHandler` class, which combines command implementations (from `commands.py`)
with a runtime registry (built in `handler.py`) to support parser construction, help generation,
and execution. Command metadata is attached via the `@command` decorator defined in `base.py`.
"""
from .handler import CommandHandler
from .types import CommandResult, CommandSpec, RunConfig

__all__ = ["CommandHandler", "CommandResult", "CommandSpec", "RunConfig"]

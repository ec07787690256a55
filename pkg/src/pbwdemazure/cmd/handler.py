"""
# pbwdemazure.cmd.handler

Provides the `CommandHandler` class, which serves as the central command dispatcher
for the command line. It inherits command definitions from `Commands`, builds a
runtime registry mapping command names and aliases to their handler methods and metadata,
and runs one command, turning library errors into a `CommandResult` with the mapped exit code.
"""
from typing import Callable
from rich.markup import escape
from .commands import Commands
from .types import CommandResult, CommandSpec, RunConfig
from .base import _get_command_spec
from ..errors import ConsistencyError, PbwError
from ..logging import logger



class CommandHandler(Commands):
    """
    Implements command business logic and exposes command metadata.

    Inherits from `Commands` to gain access to all `cmd_*` handler methods.
    Builds a registry mapping command names and aliases to their handlers and
    specifications, which is used for parser construction, dispatch and help output.
    """
    def __init__(self) -> None:
        self._registry: dict[str, tuple[Callable, CommandSpec]] = self._build_registry()


    def _build_registry(self) -> dict[str, tuple[Callable, CommandSpec]]:
        """
        Scans all methods on this instance for command specifications and builds a registry.

        ## Returns
        - A dictionary mapping command tokens (names and aliases) to a tuple of
        `(handler, CommandSpec)`.
        """
        registry: dict[str, tuple[Callable, CommandSpec]] = {}
        for attr_name in dir(self):
            method = getattr(self, attr_name)
            if not callable(method):
                continue
            spec = _get_command_spec(method)
            if spec is None:
                continue
            registry[spec.name] = (method, spec)
            for alias in spec.aliases:
                registry[alias] = (method, spec)
        return registry


    def get_dispatch(self) -> dict[str, Callable]:
        """
        Returns a flat dispatch table mapping command tokens to their handler methods.
        """
        return {token: method for token, (method, _) in self._registry.items()}


    def specs(self) -> list[CommandSpec]:
        """
        Returns each registered command once, ordered by name.
        """
        unique = {spec.name: spec for _, spec in self._registry.values()}
        return [unique[name] for name in sorted(unique)]


    def run(self, name: str, config: RunConfig) -> CommandResult:
        """
        Dispatches `name` with the resolved options.

        ## Parameters
        - `name` ( *str* ) – A command name or alias.
        - `config` ( *RunConfig* ) – The resolved options.

        ## Returns
        - *CommandResult* – The handler's result; a raised `PbwError` becomes a failed result
          carrying the error's exit code (2 for input errors, 3 for consistency violations).
        """
        entry = self._registry.get(name.lower())
        if entry is None:
            return CommandResult(False, f"Unknown command {name!r}", exit_code=2)
        method, spec = entry
        logger.info(f"Running {spec.name}")
        try:
            return method(config)
        except ConsistencyError as e:
            logger.error(f"{spec.name}: {e}")
            return CommandResult(False, f"[red]Consistency error:[/red] {escape(str(e))}", exit_code=e.exit_code)
        except PbwError as e:
            logger.warning(f"{spec.name}: {e}")
            return CommandResult(False, f"[red]Error:[/red] {escape(str(e))}", exit_code=e.exit_code)

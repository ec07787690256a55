"""
# pbwdemazure.cli

Defines the `main` entry point for the `pbwdemazure` command-line application.
Builds an `argparse` parser with one subcommand per registered command (flags taken from each
command's `CommandSpec.params`), resolves the options against the stored settings, runs the
command through `CommandHandler` and renders the result. This module is referenced by the
`project.scripts` entry point in `pyproject.toml`.

Exit codes: `0` success, `1` a certificate check failed, `2` usage error, `3` internal
consistency violation.
"""
import argparse
from typing import Any, Sequence

from rich.console import Console
from rich.markup import escape

from . import __version__
from .cmd import CommandHandler, RunConfig
from .config import load_settings
from .errors import InputError
from .logging import logger
from .render import FORMATS, emit
from .sweep import FIELDS

# param name -> (flag, argparse keyword arguments)
FLAGS: dict[str, tuple[str, dict[str, Any]]] = {
    "n":          ("--n",          {"type": int, "help": "permutation size (implied by --w)"}),
    "w":          ("--w",          {"help": "permutation in one-line notation, e.g. 6,4,2,5,3,1"}),
    "lambda":     ("--lambda",     {"dest": "lambda", "help": "dominant weight, e.g. 1,1,0,1,1"}),
    "mu":         ("--mu",         {"help": "a second dominant weight to compare with --lambda"}),
    "k":          ("--k",          {"type": int, "help": "fundamental level"}),
    "max_coord":  ("--max-coord",  {"type": int, "help": "largest weight coordinate in a sweep"}),
    "filter":     ("--filter",     {"choices": ("triangular", "all"), "help": "restrict the sweep to triangular w"}),
    "cache_dir":  ("--cache-dir",  {"help": "result cache directory"}),
    "no_cache":   ("--no-cache",   {"action": "store_true", "default": None, "help": "disable the result cache"}),
    "jobs":       ("--jobs",       {"type": int, "help": "worker processes (sweeps run in parallel, other commands sequentially)"}),
    "checkpoint": ("--checkpoint", {"help": "JSON-lines checkpoint to resume from and append to"}),
    "q":          ("--q",          {"help": "Plücker binomial, e.g. 'X[6]*X[4,5] - X[5]*X[4,6]'"}),
    "kind":       ("--kind",       {"choices": ("classical", "induced", "cartan"), "help": "profile kind"}),
    "only":       ("--only",       {"choices": ("lambda", "mu", "all"), "help": "restrict the check list"}),
    "timings":    ("--timings",    {"action": "store_true", "default": None, "help": "record elapsed seconds"}),
    "key":        ("--key",        {"help": "setting or command name"}),
    "value":      ("--value",      {"help": "setting value"}),
}



def build_parser(handler: CommandHandler) -> argparse.ArgumentParser:
    """
    Builds the top-level parser from the command registry.

    ## Parameters
    - `handler` ( *CommandHandler* ) – Supplies the registered `CommandSpec`s.

    ## Returns
    - *ArgumentParser* – One subparser per command, aliases included; every subparser accepts `--format`.
    """
    parser = argparse.ArgumentParser(
        prog="pbwdemazure",
        description="PBW degenerations of type A Demazure modules.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")

    for spec in handler.specs():
        sub = subparsers.add_parser(spec.name, aliases=list(spec.aliases), help=spec.summary, description=spec.summary)
        sub.add_argument("--format", choices=FORMATS, help="output format (default from settings)")
        for param in spec.params:
            flag, options = FLAGS[param]
            sub.add_argument(flag, **options)
        sub.set_defaults(command=spec.name)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs one command.

    ## Parameters
    - `argv` ( *list[str]*, *optional* ) – Arguments without the program name; defaults to `sys.argv[1:]`.

    ## Returns
    - *int* – The process exit code.
    """
    handler = CommandHandler()
    parser = build_parser(handler)
    args = parser.parse_args(argv)
    name = args.command or "help"
    flags = vars(args)

    err = Console(stderr=True)
    try:
        config = RunConfig.resolve(flags, load_settings())
        if config.format not in FORMATS:
            raise InputError(f"Unknown output format {config.format!r}; expected one of {', '.join(FORMATS)}")
    except InputError as e:
        logger.warning(f"{name}: {e}")
        err.print(f"[red]Error:[/red] {escape(str(e))}")
        return e.exit_code

    if name == "help":
        config.format = "text"
    result = handler.run(name, config)

    try:
        emit(result, config.format, fields=FIELDS if name == "sweep" else None)
    except InputError as e:
        err.print(f"[red]Error:[/red] {escape(str(e))}")
        return e.exit_code
    return result.exit_code

"""
# pbwdemazure.cmd.types

Defines the shared dataclass types used across the `pbwdemazure` command layer.

`CommandResult` – The return type for all command handler methods. Carries a
success flag, a user-facing message, the JSON-ready data payload and the process exit code.

`CommandSpec` – Immutable metadata attached to each registered command via the
`@command` decorator. Stores the canonical name, aliases, usage string, summary and the
command-line flags the command reads, used for parser construction and help generation.

`RunConfig` – The resolved options of one invocation: command-line flags over stored
settings over built-in defaults.
"""
from typing import Any, Mapping
from dataclasses import dataclass

from ..algebra.rootsystem import DominantWeight, Permutation
from ..errors import InputError



@dataclass
class CommandResult:
    """
    Represents the outcome of executing a command handler.

    ## Attributes
    - `ok` ( *bool* ) – Indicates whether the command completed successfully.
    - `message` ( *string* ) – User-facing summary (rich markup allowed).
    - `data` ( *any*, *optional* ) – JSON-ready payload rendered in the requested format.
    - `exit_code` ( *int*, *optional* ) – Process exit code; a failed result defaults to `1`.
    """
    ok: bool
    message: str = ""
    data: Any = None
    exit_code: int = 0

    def __post_init__(self) -> None:
        if not self.ok and self.exit_code == 0:
            self.exit_code = 1


@dataclass(frozen=True)
class CommandSpec:
    """
    Defines immutable metadata for a registered command.

    ## Attributes
    - `name` ( *string* ) – Canonical command name used for primary lookup.
    - `usage` ( *string* ) – Usage text shown in help output.
    - `summary` ( *string* ) – Short one-line description of the command.
    - `aliases` ( *tuple[string]*, *optional* ) – Alternate names that map to the same command.
    - `params` ( *tuple[string]*, *optional* ) – The flags the command reads, e.g. `("w", "lambda")`.
    """
    name: str
    usage: str
    summary: str
    aliases: tuple[str, ...] = ()
    params: tuple[str, ...] = ()


def _permutation(text: str | None) -> Permutation | None:
    return Permutation.parse(text) if text else None


def _weight(text: str | None) -> DominantWeight | None:
    return DominantWeight.parse(text) if text else None


@dataclass
class RunConfig:
    """
    Options for one command invocation.

    ## Attributes
    - `n` ( *int*, *optional* ) – Permutation size; implied by `w` when omitted.
    - `w` ( *Permutation*, *optional* ) – The Weyl group element.
    - `weight` ( *DominantWeight*, *optional* ) – `--lambda`.
    - `mu` ( *DominantWeight*, *optional* ) – `--mu`, a second weight for commands that compare two.
    - `format` ( *str* ) – `json`, `csv` or `text`.
    - `cache_dir` ( *str*, *optional* ) – Result cache directory; `None` disables caching.
    - `jobs` ( *int* ) – Sweep worker processes.
    """
    n: int | None = None
    w: Permutation | None = None
    weight: DominantWeight | None = None
    mu: DominantWeight | None = None
    k: int | None = None
    max_coord: int = 1
    filter: str = "all"
    format: str = "json"
    cache_dir: str | None = None
    jobs: int = 1
    sweep_limit: int = 6
    checkpoint: str | None = None
    q: str | None = None
    kind: str = "classical"
    only: str = "all"
    timings: bool = False
    key: str | None = None
    value: str | None = None

    @classmethod
    def resolve(cls, flags: Mapping[str, Any], settings: Mapping[str, Any]) -> "RunConfig":
        """
        Builds a `RunConfig` from parsed flags, falling back to stored settings.

        ## Parameters
        - `flags` ( *dict* ) – Parsed command-line values; `None` means "not given".
        - `settings` ( *dict* ) – Effective settings from `config.load_settings()`.

        ## Raises
        - *InputError* – On malformed values or when `--n` disagrees with `--w`.
        """
        def pick(name: str) -> Any:
            value = flags.get(name)
            return value if value is not None else settings.get(name)

        w = _permutation(flags.get("w"))
        n = flags.get("n")
        if n is not None and w is not None and n != w.n:
            raise InputError(f"--n {n} disagrees with --w {w.format()} (n={w.n})")
        if n is None and w is not None:
            n = w.n

        jobs = int(pick("jobs") or 1)
        if jobs < 1:
            raise InputError(f"--jobs must be positive, got {jobs}")

        return cls(
            n=n,
            w=w,
            weight=_weight(flags.get("lambda")),
            mu=_weight(flags.get("mu")),
            k=flags.get("k"),
            max_coord=int(pick("max_coord") or 1),
            filter=flags.get("filter") or "all",
            format=pick("format") or "json",
            cache_dir=None if flags.get("no_cache") else pick("cache_dir"),
            jobs=jobs,
            sweep_limit=int(settings.get("sweep_limit", 6)),
            checkpoint=flags.get("checkpoint"),
            q=flags.get("q"),
            kind=flags.get("kind") or "classical",
            only=flags.get("only") or "all",
            timings=bool(flags.get("timings")),
            key=flags.get("key"),
            value=flags.get("value"),
        )

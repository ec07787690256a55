"""
# pbwdemazure.cmd.commands

Defines the `Commands` mixin class, which contains every user-facing command implementation.
Each method decorated with `@command` represents a single dispatchable subcommand, complete with
metadata (name, aliases, usage, summary and the flags it reads). Commands are thin wrappers:
they validate the `RunConfig`, call into `pbwdemazure.algebra` (through the result cache for the
closure profiles) and return a `CommandResult` whose `data` is rendered by `pbwdemazure.render`.
"""
from typing import Callable
from rich.markup import escape

from .base import command
from .types import CommandResult, CommandSpec, RunConfig
from ..algebra import counterexample
from ..algebra.cartan import kernel_profile, limit_is_torus_fixed, top_grade_slice
from ..algebra.demazure import GradedProfile, demazure_dim
from ..algebra.fflv import format_monomial, gamma_set, lattice_to_json, minkowski_count, sorted_points
from ..algebra.plucker import PlueckerPolynomial, verify_q
from ..algebra.rootsystem import DominantWeight, Permutation, ordered_inversions, support
from ..cache import PROFILE_KINDS, ResultCache, load_profile
from ..config import DEFAULTS, get_config_path, set_value
from ..errors import InputError
from ..logging import get_log_path, logger
from ..sweep import run_sweep, sweep_tasks



class Commands:
    """
    Collection of command definitions.

    ## Commands
    - `help` – Show command list or details for one command.
    - `inversions` – List the inversions of `w`.
    - `demazure-dim` – `dim D_{wλ}` by the character formula.
    - `profile` – A (grade, weight) profile: classical, induced or cartan.
    - `cartan` – The profile of `E_{wλ}`.
    - `kernel` – The kernel profile of `φ_{wλ}`.
    - `fflv-count` – `|Γ_λ|`.
    - `gamma` – The set `Γ_{w_k}`.
    - `verify-q` – Certificate checks for a Plücker binomial.
    - `counterexample` – The full sl_6 check list.
    - `sweep` – Sweep `(w, λ)` over `S_n`.
    - `paths` – Show config, log and cache locations.
    - `setconfig` – Persist a setting.
    """
    _registry: dict[str, tuple[Callable, CommandSpec]]


    @staticmethod
    def _require_w(config: RunConfig) -> Permutation:
        if config.w is None:
            raise InputError("This command needs --w")
        return config.w


    @staticmethod
    def _require_weight(config: RunConfig) -> DominantWeight:
        if config.weight is None:
            raise InputError("This command needs --lambda")
        return config.weight


    @staticmethod
    def _cache(config: RunConfig) -> ResultCache | None:
        return ResultCache(config.cache_dir) if config.cache_dir else None


    def _profile(self, kind: str, config: RunConfig) -> GradedProfile:
        w, weight = self._require_w(config), self._require_weight(config)
        return load_profile(kind, w, weight, self._cache(config))


    @command(
        name    = "help",
        aliases = ("h",),
        usage   = "help [--key COMMAND]",
        summary = "Show command list or details for one command.",
        params  = ("key",),
    )
    def cmd_help(self, config: RunConfig) -> CommandResult:
        """
        Shows general help or detailed help for the command named by `--key`.

        ## Returns
        - A `CommandResult` with the listing, the details of one command, or an error for an unknown name.
        """
        name = (config.key or "").strip().lower()

        seen = set()
        unique_specs = []
        for _, (_, spec) in self._registry.items():
            if spec.name not in seen and spec.name != "help":
                seen.add(spec.name)
                unique_specs.append(spec)

        if name:
            entry = self._registry.get(name)
            if entry is None:
                return CommandResult(False, f"Unknown command {name!r}", exit_code=2)
            _, spec = entry
            aliases = f" (aliases: {', '.join(spec.aliases)})" if spec.aliases else ""
            details = [f"{spec.name}{aliases}", f"  usage: {escape(spec.usage)}"]
            if spec.summary:
                details.append(f"  {spec.summary}")
            return CommandResult(True, "\n".join(details))

        lines = ["Commands:"]
        width = max(len(spec.name) for spec in unique_specs)
        for spec in sorted(unique_specs, key=lambda s: s.name):
            dots = "[dim]" + "." * (width - len(spec.name) + 2) + "[/dim]"
            lines.append(f"  [cyan]{spec.name}[/cyan] {dots} {spec.summary}")
        return CommandResult(True, "\n".join(lines))


    @command(
        name    = "inversions",
        usage   = "inversions --w W",
        summary = "List the inversions (i, j) of w, i.e. the roots of n_-w.",
        params  = ("n", "w", "jobs"),
    )
    def cmd_inversions(self, config: RunConfig) -> CommandResult:
        """
        Lists the inversions of `--w` in the root order, as `[i, j]` pairs.
        """
        w = self._require_w(config)
        pairs = sorted([root.i, root.j] for root in ordered_inversions(w))
        return CommandResult(True, f"{len(pairs)} inversions of {w}", data=pairs)


    @command(
        name    = "demazure-dim",
        usage   = "demazure-dim --w W --lambda L",
        summary = "Dimension of the Demazure module by the character formula.",
        params  = ("n", "w", "lambda", "jobs"),
    )
    def cmd_demazure_dim(self, config: RunConfig) -> CommandResult:
        """
        Computes `dim D_{wλ}` by the character formula.

        ## Returns
        - `CommandResult` with data `{"dim": D}`.
        """
        w, weight = self._require_w(config), self._require_weight(config)
        dim = demazure_dim(w, weight)
        return CommandResult(True, f"dim D = [bold]{dim}[/bold]", data={"dim": dim})


    @command(
        name    = "profile",
        usage   = "profile --w W --lambda L [--kind classical|induced|cartan]",
        summary = "Graded, weight-refined profile of D~^a, H or E.",
        params  = ("n", "w", "lambda", "kind", "jobs", "cache_dir", "no_cache"),
    )
    def cmd_profile(self, config: RunConfig) -> CommandResult:
        """
        Returns the `--kind` profile of `(w, λ)`, read from the result cache when enabled.

        ## Raises
        - `InputError` – If `--kind` is not one of `classical`, `induced`, `cartan`.
        """
        if config.kind not in PROFILE_KINDS:
            raise InputError(f"Unknown profile kind {config.kind!r}")
        profile = self._profile(config.kind, config)
        return CommandResult(True, f"{config.kind} profile: total {profile.total}", data=profile.to_json())


    @command(
        name    = "cartan",
        usage   = "cartan --w W --lambda L",
        summary = "Graded, weight-refined profile of the Cartan component E.",
        params  = ("n", "w", "lambda", "jobs", "cache_dir", "no_cache"),
    )
    def cmd_cartan(self, config: RunConfig) -> CommandResult:
        """
        Returns the Cartan component profile of `(w, λ)`.
        """
        profile = self._profile("cartan", config)
        return CommandResult(True, f"dim E = [bold]{profile.total}[/bold]", data=profile.to_json())


    @command(
        name    = "kernel",
        usage   = "kernel --w W --lambda L [--mu M]",
        summary = "Kernel profile of the comparison map D~^a -> L^a; --mu compares a second weight.",
        params  = ("n", "w", "lambda", "mu", "jobs", "cache_dir", "no_cache"),
    )
    def cmd_kernel(self, config: RunConfig) -> CommandResult:
        """
        Computes the kernel report for `--lambda`, and for `--mu` as well when given.

        With two weights the payload maps `lambda` and `mu` to their reports and records whether
        the weights share a support and whether the limit points agree in being torus-fixed.
        """
        w, weight = self._require_w(config), self._require_weight(config)
        cache = self._cache(config)
        reports = {}
        lines = []
        fixed = {}
        for label, current in (("lambda", weight), ("mu", config.mu)):
            if current is None:
                continue
            classical = load_profile("classical", w, current, cache)
            report = kernel_profile(w, current, classical, load_profile("cartan", w, current, cache))
            top, cells = top_grade_slice(classical)
            fixed[label] = limit_is_torus_fixed(classical)
            state = "fixed" if fixed[label] else "[yellow]not fixed[/yellow]"
            reports[label] = report.to_json()
            lines.append(
                f"{current}: kernel {report.kernel_total} (d={report.d_dim}, e={report.e_dim}); "
                f"top grade {top} with {len(cells)} weight(s), limit point {state}"
            )

        if config.mu is None:
            return CommandResult(True, lines[0], data=reports["lambda"])
        data = {
            **reports,
            "same_support": support(weight) == support(config.mu),
            "same_limit_behaviour": fixed["lambda"] == fixed["mu"],
        }
        return CommandResult(True, "\n".join(lines), data=data)


    @command(
        name    = "fflv-count",
        usage   = "fflv-count --w W --lambda L",
        summary = "Cardinality of the Minkowski sum of minimal-monomial sets.",
        aliases = ("gamma-count",),
        params  = ("n", "w", "lambda", "jobs"),
    )
    def cmd_fflv_count(self, config: RunConfig) -> CommandResult:
        """
        Counts the Minkowski sum `Γ_λ` of the fundamental minimal-monomial sets.

        ## Returns
        - `CommandResult` with data `{"count": |Γ_λ|}`.
        """
        w, weight = self._require_w(config), self._require_weight(config)
        _, count = minkowski_count(w, weight)
        return CommandResult(True, f"|Γ| = [bold]{count}[/bold]", data={"count": count})


    @command(
        name    = "gamma",
        usage   = "gamma --w W --k K",
        summary = "Minimal monomials reaching the fundamental Demazure basis at level k.",
        params  = ("n", "w", "k", "jobs"),
    )
    def cmd_gamma(self, config: RunConfig) -> CommandResult:
        """
        Lists the minimal monomials `Γ_{ω_k}` for `--w` and `--k`.

        Text output prints each monomial as `f[i,j]*...`; the other formats get `{"root", "exp"}` lists.
        """
        w = self._require_w(config)
        if config.k is None:
            raise InputError("This command needs --k")
        points = gamma_set(w, config.k)
        if config.format == "text":
            return CommandResult(True, f"{len(points)} monomials", data=[format_monomial(w, p) for p in sorted_points(points)])
        return CommandResult(True, f"{len(points)} monomials", data=lattice_to_json(w, points))


    @command(
        name    = "verify-q",
        usage   = "verify-q [--w W] [--q POLY]",
        summary = "Certificate checks for a Plücker binomial (defaults to the sl_6 example).",
        params  = ("n", "w", "q", "jobs"),
    )
    def cmd_verify_q(self, config: RunConfig) -> CommandResult:
        """
        Runs the Plücker binomial certificate on `--q` (default: the sl_6 binomial) against `--w`.

        ## Returns
        - `CommandResult` carrying the certificate; failed when any sub-check fails, naming those checks.
        """
        w = config.w or counterexample.W
        q = PlueckerPolynomial.parse(config.q or counterexample.Q_TEXT, w.n)
        certificate = verify_q(w, q)
        if certificate.passed:
            return CommandResult(True, "[green]all checks passed[/green]", data=certificate.to_json())
        failed = ", ".join(check.name for check in certificate.failed())
        return CommandResult(False, f"[red]failed:[/red] {failed}", data=certificate.to_json())


    @command(
        name    = "counterexample",
        usage   = "counterexample [--only lambda|mu|all]",
        summary = "Run every check of the sl_6 example and print a pass/fail table.",
        aliases = ("verify-counterexample",),
        params  = ("only", "jobs", "cache_dir", "no_cache"),
    )
    def cmd_counterexample(self, config: RunConfig) -> CommandResult:
        """
        Runs the sl_6 check list, restricted to one weight by `--only`.

        ## Returns
        - `CommandResult` whose data is one `{"check", "passed", "expected", "actual"}` row per check;
          failed at the first failing check.

        ## Raises
        - `InputError` – If `--only` is not `lambda`, `mu` or `all`.
        """
        if config.only not in ("lambda", "mu", "all"):
            raise InputError(f"--only must be lambda, mu or all, got {config.only!r}")
        cache = self._cache(config)
        results = counterexample.run_checks(
            lambda kind, w, weight: load_profile(kind, w, weight, cache),
            config.only,
        )
        rows = [
            {"check": r.name, "passed": r.passed,
             "expected": r.detail.get("expected"), "actual": r.detail.get("actual")}
            for r in results
        ]
        failed = [r.name for r in results if not r.passed]
        if failed:
            return CommandResult(False, f"[red]first failing check:[/red] {failed[0]}", data=rows)
        return CommandResult(True, f"[green]{len(rows)} checks passed[/green]", data=rows)


    @command(
        name    = "sweep",
        usage   = "sweep --n N [--max-coord C] [--filter triangular|all] [--jobs J] [--checkpoint PATH] [--timings] [--cache-dir PATH] [--no-cache]",
        summary = "Dimensions of D, E and Γ for every w in S_n and every small λ.",
        params  = ("n", "max_coord", "filter", "jobs", "checkpoint", "timings", "cache_dir", "no_cache"),
    )
    def cmd_sweep(self, config: RunConfig) -> CommandResult:
        """
        Sweeps every `(w, λ)` for `--n`, in parallel with `--jobs`, resuming from `--checkpoint`.

        ## Returns
        - `CommandResult` with one row per record in `FIELDS` order; failed if any task failed.

        ## Raises
        - `InputError` – If `--n` is missing or above the `sweep_limit` setting, or `--filter` is unknown.
        """
        if config.n is None:
            raise InputError("This command needs --n")
        if config.n > config.sweep_limit:
            raise InputError(f"n={config.n} exceeds the sweep limit {config.sweep_limit} (setconfig sweep_limit)")
        if config.filter not in ("all", "triangular"):
            raise InputError(f"--filter must be all or triangular, got {config.filter!r}")
        tasks = sweep_tasks(config.n, config.max_coord, config.filter == "triangular")
        records = run_sweep(tasks, config.jobs, config.checkpoint, config.timings, config.cache_dir)
        rows = [record.to_json() for record in records]
        nonzero = sum(1 for record in records if record.kernel_total)
        missing = len(tasks) - len(records)
        message = f"{len(records)} records, {nonzero} with a nonzero kernel"
        if missing:
            logger.warning(f"Sweep n={config.n}: {missing} tasks failed")
            return CommandResult(False, f"{message}; [red]{missing} tasks failed[/red] (see log)", data=rows)
        return CommandResult(True, message, data=rows)


    @command(
        name    = "paths",
        aliases = ("whereconfig",),
        usage   = "paths",
        summary = "Show the config file, log file and cache directory.",
        params  = ("cache_dir",),
    )
    def cmd_paths(self, config: RunConfig) -> CommandResult:
        """
        Shows where settings, the log file and cached results live.
        """
        data = {
            "config": str(get_config_path()),
            "log": str(get_log_path()),
            "cache": str(config.cache_dir or DEFAULTS["cache_dir"]),
        }
        return CommandResult(True, "", data=data)


    @command(
        name    = "setconfig",
        usage   = "setconfig --key KEY --value VALUE",
        summary = "Persist a setting (jobs, max_coord, format, cache_dir, sweep_limit).",
        params  = ("key", "value"),
    )
    def cmd_setconfig(self, config: RunConfig) -> CommandResult:
        """
        Persists `--key` = `--value` in the settings file.

        ## Raises
        - `InputError` – If either flag is missing or the key is not a known setting.
        """
        if not config.key or config.value is None:
            raise InputError("setconfig needs --key and --value")
        if config.key not in DEFAULTS:
            raise InputError(f"Unknown setting {config.key!r}; known: {', '.join(sorted(DEFAULTS))}")
        set_value(config.key, config.value)
        logger.info(f"Setting {config.key} = {config.value!r}")
        return CommandResult(True, f"Saved {config.key} = {escape(config.value)}", data={config.key: config.value})

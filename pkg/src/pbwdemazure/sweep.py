"""
# pbwdemazure.sweep

Parameter sweeps over `(w, λ)`: for every task computes `dim D_{wλ}`, `dim E_{wλ}` and `|Γ_λ|`.

Tasks run inline or on a `ProcessPoolExecutor`. Every finished record is appended to an optional
JSON-lines checkpoint at once, and tasks already present there are skipped on the next run, so an
interrupted sweep resumes where it stopped. The returned records are ordered by `(w, λ)` whatever
the completion order.
"""
import json
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from itertools import product
from pathlib import Path
from typing import Any, Iterable

from .algebra.demazure import demazure_dim
from .algebra.fflv import minkowski_count
from .algebra.rootsystem import DominantWeight, Permutation, all_permutations, is_triangular
from .cache import ResultCache, load_profile
from .errors import ConsistencyError, InputError
from .logging import logger

SweepTask = tuple[tuple[int, ...], tuple[int, ...]]

FIELDS = ("n", "w", "lambda", "d_dim", "e_dim", "kernel_total", "gamma_count", "is_triangular", "elapsed")



@dataclass
class SweepRecord:
    """
    One sweep result.

    ## Attributes
    - `n` ( *int* ) – The size of the permutations.
    - `w` ( *str* ) – One-line notation, e.g. `"6,4,2,5,3,1"`.
    - `lambda_` ( *str* ) – Weight coordinates, e.g. `"1,1,0,1,1"`; serialized as `lambda`.
    - `d_dim` ( *int* ) – `dim D_{wλ}`.
    - `e_dim` ( *int* ) – `dim E_{wλ}`.
    - `kernel_total` ( *int* ) – `d_dim - e_dim`.
    - `gamma_count` ( *int* ) – `|Γ_λ|`.
    - `is_triangular` ( *bool* ) – Whether `w` avoids 4231 and 2413.
    - `elapsed` ( *float* ) – Seconds spent, or `0.0` when timings are off.
    """
    n: int
    w: str
    lambda_: str
    d_dim: int
    e_dim: int
    kernel_total: int
    gamma_count: int
    is_triangular: bool
    elapsed: float = 0.0

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """
        The `(w, λ)` task this record answers.
        """
        return (tuple(int(v) for v in self.w.split(",")), tuple(int(a) for a in self.lambda_.split(",")))

    def to_json(self) -> dict[str, Any]:
        row = asdict(self)
        row["lambda"] = row.pop("lambda_")
        return {name: row[name] for name in FIELDS}

    @classmethod
    def from_json(cls, payload: dict[str, Any]) -> "SweepRecord":
        row = dict(payload)
        row["lambda_"] = row.pop("lambda")
        return cls(**row)


def sweep_tasks(n: int, max_coord: int = 1, only_triangular: bool = False) -> list[SweepTask]:
    """
    All `(w, λ)` with `w ∈ S_n` and nonzero `λ ∈ {0..max_coord}^{n-1}`, both in lexicographic order.

    ## Raises
    - *InputError* – If `n < 2` or `max_coord < 1`.
    """
    if n < 2:
        raise InputError(f"Sweeps need n >= 2, got {n}")
    if max_coord < 1:
        raise InputError(f"Coordinate bound must be positive, got {max_coord}")
    weights = [coords for coords in product(range(max_coord + 1), repeat=n - 1) if any(coords)]
    tasks = []
    for w in all_permutations(n):
        if only_triangular and not is_triangular(w):
            continue
        tasks.extend((w.image, coords) for coords in weights)
    return tasks


def run_task(task: SweepTask, timings: bool = False, cache_dir: str | None = None) -> SweepRecord:
    """
    Computes one record. With `cache_dir` the Cartan profile is read from and stored in the result cache.

    ## Raises
    - *ConsistencyError* – If `dim E_{wλ}` exceeds `dim D_{wλ}`.
    """
    start = time.perf_counter()
    w, weight = Permutation(task[0]), DominantWeight(task[1])
    d_dim = demazure_dim(w, weight)
    cache = ResultCache(cache_dir) if cache_dir else None
    e_dim = load_profile("cartan", w, weight, cache).total
    _, gamma_count = minkowski_count(w, weight)
    if e_dim > d_dim:
        raise ConsistencyError(f"dim E = {e_dim} exceeds dim D = {d_dim} for {w}, {weight}")
    return SweepRecord(
        n=w.n,
        w=w.format(),
        lambda_=weight.format(),
        d_dim=d_dim,
        e_dim=e_dim,
        kernel_total=d_dim - e_dim,
        gamma_count=gamma_count,
        is_triangular=is_triangular(w),
        elapsed=round(time.perf_counter() - start, 3) if timings else 0.0,
    )


def load_checkpoint(path: str | Path | None) -> dict[SweepTask, SweepRecord]:
    """
    Reads the records already stored in a checkpoint; unreadable lines are skipped.
    """
    if path is None or not Path(path).exists():
        return {}
    records: dict[SweepTask, SweepRecord] = {}
    with open(path, "r", encoding="utf-8") as f:
        for number, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                record = SweepRecord.from_json(json.loads(line))
            except (json.JSONDecodeError, TypeError, KeyError, ValueError) as e:
                logger.warning(f"Skipping checkpoint line {number} of {path}: {e}")
                continue
            records[record.key] = record
    logger.info(f"Loaded {len(records)} records from checkpoint {path}")
    return records


def _append(path: str | Path | None, record: SweepRecord) -> None:
    if path is None:
        return
    with open(path, "a", encoding="utf-8") as f:
        f.write(json.dumps(record.to_json(), sort_keys=True) + "\n")
        f.flush()


def run_sweep(
    tasks: Iterable[SweepTask],
    jobs: int = 1,
    checkpoint: str | Path | None = None,
    timings: bool = False,
    cache_dir: str | None = None,
) -> list[SweepRecord]:
    """
    Runs every task not already in the checkpoint.

    ## Parameters
    - `tasks` ( *list[SweepTask]* ) – `(w image, λ coordinates)` pairs.
    - `jobs` ( *int*, *optional* ) – Worker processes; `1` runs inline.
    - `checkpoint` ( *str* | *Path*, *optional* ) – JSON-lines file to resume from and append to.
    - `timings` ( *bool*, *optional* ) – Record wall-clock seconds in `elapsed`.
    - `cache_dir` ( *str*, *optional* ) – Result cache directory shared by all workers; `None` disables it.

    ## Returns
    - *list[SweepRecord]* – The records of all tasks that succeeded, sorted by `(w, λ)`.
    """
    tasks = list(tasks)
    done = load_checkpoint(checkpoint)
    pending = [task for task in tasks if task not in done]
    logger.info(f"Sweep: {len(tasks)} tasks, {len(tasks) - len(pending)} from checkpoint, {jobs} jobs")

    if checkpoint is not None:
        Path(checkpoint).parent.mkdir(parents=True, exist_ok=True)

    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {pool.submit(run_task, task, timings, cache_dir): task for task in pending}
            for future in as_completed(futures):
                task = futures[future]
                try:
                    record = future.result()
                except Exception as e:
                    logger.warning(f"Sweep task {task} failed: {e}")
                    continue
                done[task] = record
                _append(checkpoint, record)
    else:
        for task in pending:
            try:
                record = run_task(task, timings, cache_dir)
            except Exception as e:
                logger.warning(f"Sweep task {task} failed: {e}")
                continue
            done[task] = record
            _append(checkpoint, record)

    wanted = set(tasks)
    records = sorted((r for key, r in done.items() if key in wanted), key=lambda r: r.key)
    logger.info(f"Sweep finished: {len(records)} records")
    return records

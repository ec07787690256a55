"""
# pbwdemazure.cache

On-disk cache for the expensive closure profiles.

One JSON file per `(kind, n, w, λ)`, named by the SHA-256 of the canonical key. Each file
embeds `format_version`; files written by another version are ignored and recomputed.
"""
import hashlib
import json
from pathlib import Path
from typing import Any, Callable

from .algebra.cartan import cartan_profile
from .algebra.demazure import GradedProfile, classical_filtration_profile, induced_profile
from .algebra.rootsystem import DominantWeight, Permutation
from .logging import logger

FORMAT_VERSION = 1

PROFILE_KINDS: dict[str, Callable[[Permutation, DominantWeight], GradedProfile]] = {
    "classical": classical_filtration_profile,
    "induced": induced_profile,
    "cartan": cartan_profile,
}



class ResultCache:
    """
    A directory of cached computation results.

    ## Init Parameters
    - `directory` ( *str* | *Path* ) – Where cache files live; created on first write.
    """
    def __init__(self, directory: str | Path) -> None:
        self.directory = Path(directory)


    @staticmethod
    def _key(kind: str, w: Permutation, weight: DominantWeight) -> dict[str, Any]:
        return {"kind": kind, "n": w.n, "w": list(w.image), "lambda": list(weight.coords)}


    def path_for(self, kind: str, w: Permutation, weight: DominantWeight) -> Path:
        """
        The entry file for `(kind, w, λ)`, named by the SHA-256 of its canonical JSON key.
        """
        canonical = json.dumps(self._key(kind, w, weight), sort_keys=True, separators=(",", ":"))
        digest = hashlib.sha256(canonical.encode("utf-8")).hexdigest()
        return self.directory / f"{digest}.json"


    def get(self, kind: str, w: Permutation, weight: DominantWeight) -> dict[str, Any] | None:
        """
        Returns the cached payload, or `None` on a miss, a stale version or an unreadable file.
        """
        path = self.path_for(kind, w, weight)
        try:
            with open(path, "r", encoding="utf-8") as f:
                entry = json.load(f)
        except FileNotFoundError:
            logger.info(f"Cache miss: {kind} {w} {weight}")
            return None
        except (OSError, json.JSONDecodeError) as e:
            logger.warning(f"Unreadable cache entry {path}: {e}")
            return None

        if entry.get("format_version") != FORMAT_VERSION or entry.get("key") != self._key(kind, w, weight):
            logger.warning(f"Stale cache entry {path} ignored")
            return None
        logger.info(f"Cache hit: {kind} {w} {weight}")
        return entry["payload"]


    def put(self, kind: str, w: Permutation, weight: DominantWeight, payload: dict[str, Any]) -> None:
        """
        Stores `payload` atomically; write failures are logged and otherwise ignored.
        """
        path = self.path_for(kind, w, weight)
        entry = {"format_version": FORMAT_VERSION, "key": self._key(kind, w, weight), "payload": payload}
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            with open(tmp, "w", encoding="utf-8") as f:
                json.dump(entry, f, sort_keys=True)
            tmp.replace(path)
        except OSError as e:
            logger.warning(f"Could not write cache entry {path}: {e}")


def load_profile(
    kind: str,
    w: Permutation,
    weight: DominantWeight,
    cache: ResultCache | None = None,
) -> GradedProfile:
    """
    Returns the `kind` profile of `(w, λ)`, from the cache when possible.

    ## Parameters
    - `kind` ( *str* ) – One of `classical`, `induced`, `cartan`.
    - `w` ( *Permutation* ) – The Weyl group element.
    - `weight` ( *DominantWeight* ) – The highest weight.
    - `cache` ( *ResultCache*, *optional* ) – Disabled when `None`.
    """
    compute = PROFILE_KINDS[kind]
    if cache is not None:
        payload = cache.get(kind, w, weight)
        if payload is not None:
            return GradedProfile.from_json(payload)
    profile = compute(w, weight)
    if cache is not None:
        cache.put(kind, w, weight, profile.to_json())
    return profile

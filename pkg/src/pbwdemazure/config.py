"""
# pbwdemazure.config

Handles persistent settings for `pbwdemazure` using a JSON file stored in the
platform-appropriate user config directory (via `platformdirs`). Provides generic key/value
storage (`get_value`, `set_value`) and `load_settings`, which merges the stored values over
the built-in defaults used to resolve a `RunConfig`.
"""
import json
from pathlib import Path
from typing import Any
from platformdirs import user_config_dir, user_cache_dir

CONFIG_DIR = Path(user_config_dir("pbwdemazure", appauthor=False))
CONFIG_FILE = CONFIG_DIR / "config.json"

DEFAULTS: dict[str, Any] = {
    "jobs": 1,
    "max_coord": 1,
    "format": "json",
    "sweep_limit": 6,
    "cache_dir": str(Path(user_cache_dir("pbwdemazure", appauthor=False))),
}


def _load_config() -> dict:
    """
    Attempts to load the config file.

    ## Returns
    - *dict* – The loaded configuration, or an empty
      dictionary if the file doesn't exist or is invalid.
    """
    if CONFIG_FILE.exists():
        try:
            loaded = json.loads(CONFIG_FILE.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, OSError):
            return {}
        return loaded if isinstance(loaded, dict) else {}
    return {}


def _save_config(config: dict) -> None:
    """
    Saves configuration to the disk, creating directories as needed.

    ## Parameters
    - `config` ( *dict* ) – The configuration dictionary to save.
    """
    CONFIG_DIR.mkdir(parents=True, exist_ok=True)
    CONFIG_FILE.write_text(json.dumps(config, indent=2, sort_keys=True), encoding="utf-8")


def get_config_dir() -> Path:
    """
    Gets the config directory's path.

    ## Returns
    - *Path* – The absolute path to the config directory.
    """
    return CONFIG_DIR.resolve()


def get_config_path() -> Path:
    """
    Gets the config file's path.

    ## Returns
    - *Path* – The absolute path to the config file.
    """
    return CONFIG_FILE.resolve()


def load_settings() -> dict[str, Any]:
    """
    Returns the built-in defaults overridden by any stored values.

    ## Returns
    - *dict* – Effective settings; unknown stored keys are carried along unchanged.
    """
    settings = dict(DEFAULTS)
    settings.update(_load_config())
    return settings


def set_value(key: str, value: Any) -> None:
    """
    Stores an arbitrary config value.

    Integer-looking strings are stored as integers so that `jobs`, `max_coord` and
    `sweep_limit` round-trip with the right type.

    ## Parameters
    - `key` ( *str* ) – The configuration key to set.
    - `value` ( *Any* ) – The value to associate with the key.
    """
    if isinstance(value, str) and value.lstrip("-").isdigit():
        value = int(value)
    config = _load_config()
    config[key] = value
    _save_config(config)


def get_value(key: str, default: Any = None) -> Any:
    """
    Retrieves a config value, falling back to the built-in default and then to `default`.

    ## Parameters
    - `key` ( *str* ) – The configuration key to retrieve.
    - `default` ( *Any*, *optional* ) – The value to return if the key isn't known (default: `None`).

    ## Returns
    - The stored value, the built-in default, or `default`.
    """
    return load_settings().get(key, default)

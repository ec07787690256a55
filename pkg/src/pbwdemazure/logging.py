"""
# pbwdemazure.logging

Configures a shared rotating file logger for the `pbwdemazure` package.
Log files are stored in the platform-appropriate log directory (via `platformdirs`).
Imported from anywhere in the codebase to record closures, cache activity, sweep progress and check outcomes.
"""
import logging
from pathlib import Path
from platformdirs import user_log_dir
from logging.handlers import RotatingFileHandler


LOG_DIR = Path(user_log_dir("pbwdemazure", appauthor=False))
LOG_FILE = LOG_DIR / "pbwdemazure.log"


_formatter = logging.Formatter(
    datefmt = "%m-%d-%Y %H:%M:%S",
    fmt = "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
)


logger = logging.getLogger("pbwdemazure")
logger.setLevel(logging.DEBUG)

try:
    LOG_DIR.mkdir(parents=True, exist_ok=True)
    _handler: logging.Handler = RotatingFileHandler(
        LOG_FILE,
        backupCount = 3,
        encoding = "utf-8",
        maxBytes = 10 * 1024 * 1024,  # 10 MB per file
    )
except OSError:
    # read-only home directories (CI sandboxes) still get a working package
    _handler = logging.NullHandler()

_handler.setFormatter(_formatter)
logger.addHandler(_handler)


def get_log_path() -> Path:
    """
    Gets the active log file's path.

    ### Returns
    - `Path` – The absolute path to the current log file.
    """
    return LOG_FILE.resolve()

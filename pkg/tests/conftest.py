import pytest

from pbwdemazure import config



@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """
    Points the settings file at a temporary directory so tests never read or write the user's config.
    """
    config_dir = tmp_path / "config"
    monkeypatch.setattr(config, "CONFIG_DIR", config_dir)
    monkeypatch.setattr(config, "CONFIG_FILE", config_dir / "config.json")
    monkeypatch.setitem(config.DEFAULTS, "cache_dir", str(tmp_path / "cache"))
    return config_dir

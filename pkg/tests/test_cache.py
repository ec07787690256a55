import json

from pbwdemazure.algebra.demazure import classical_filtration_profile
from pbwdemazure.algebra.rootsystem import DominantWeight, Permutation
from pbwdemazure.cache import FORMAT_VERSION, ResultCache, load_profile


W = Permutation((3, 1, 4, 2))
WEIGHT = DominantWeight((1, 0, 1))


def test_miss_then_hit(tmp_path):
    cache = ResultCache(tmp_path / "cache")
    assert cache.get("classical", W, WEIGHT) is None
    profile = load_profile("classical", W, WEIGHT, cache)
    assert profile == classical_filtration_profile(W, WEIGHT)
    assert cache.get("classical", W, WEIGHT) == profile.to_json()
    assert load_profile("classical", W, WEIGHT, cache) == profile
    assert len(list((tmp_path / "cache").glob("*.json"))) == 1


def test_keys_are_distinct_per_kind_and_input(tmp_path):
    cache = ResultCache(tmp_path)
    paths = {
        cache.path_for("classical", W, WEIGHT),
        cache.path_for("cartan", W, WEIGHT),
        cache.path_for("classical", Permutation((3, 1, 2, 4)), WEIGHT),
        cache.path_for("classical", W, DominantWeight((1, 1, 1))),
    }
    assert len(paths) == 4


def test_stale_and_corrupt_entries_are_recomputed(tmp_path):
    cache = ResultCache(tmp_path)
    path = cache.path_for("cartan", W, WEIGHT)
    path.write_text(json.dumps({"format_version": FORMAT_VERSION + 1, "key": {}, "payload": {}}), encoding="utf-8")
    assert cache.get("cartan", W, WEIGHT) is None

    profile = load_profile("cartan", W, WEIGHT, cache)
    entry = json.loads(path.read_text(encoding="utf-8"))
    assert entry["format_version"] == FORMAT_VERSION
    assert entry["payload"] == profile.to_json()

    path.write_text("{truncated", encoding="utf-8")
    assert cache.get("cartan", W, WEIGHT) is None


def test_disabled_cache_computes_directly():
    assert load_profile("induced", W, WEIGHT).total == classical_filtration_profile(W, WEIGHT).total

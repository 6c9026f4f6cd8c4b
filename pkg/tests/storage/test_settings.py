from src.settings import Settings, load_settings


def test_defaults(monkeypatch):
    for name in ("QDOT_WORKERS", "QDOT_RESULTS_DIR", "QDOT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    assert load_settings() == Settings()


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("QDOT_WORKERS", "4")
    monkeypatch.setenv("QDOT_RESULTS_DIR", "/tmp/results")
    monkeypatch.setenv("QDOT_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.workers == 4
    assert settings.results_dir == "/tmp/results"
    assert settings.log_level == "DEBUG"


def test_worker_count_is_at_least_one(monkeypatch):
    monkeypatch.setenv("QDOT_WORKERS", "0")
    assert load_settings().workers == 1


def test_unknown_log_level_falls_back(monkeypatch):
    monkeypatch.setenv("QDOT_LOG_LEVEL", "chatty")
    assert load_settings().log_level == "WARNING"


def test_non_integer_worker_count_falls_back(monkeypatch):
    monkeypatch.setenv("QDOT_WORKERS", "many")
    assert load_settings().workers == 1

import logging

from confplan.config import DEFAULT_EPS, ConfplanConfig, get_bool
from confplan.planner import StackStrategy, TransferMode


def test_default_config():
    config = ConfplanConfig()
    assert config.collision_eps == DEFAULT_EPS
    assert config.stack_strategy is None
    assert config.transfer_mode is TransferMode.SEQUENTIAL
    assert config.workers == 1
    assert config.strict_endpoints is True


def test_config_from_env_reads_every_variable(monkeypatch):
    monkeypatch.setenv("CONFPLAN_EPS", "1e-9")
    monkeypatch.setenv("CONFPLAN_STACK_STRATEGY", "RANK")
    monkeypatch.setenv("CONFPLAN_TRANSFER_MODE", "simultaneous")
    monkeypatch.setenv("CONFPLAN_SVG_SAMPLES", "4")
    monkeypatch.setenv("CONFPLAN_WORKERS", "3")
    monkeypatch.setenv("CONFPLAN_LOG_LEVEL", "debug")
    monkeypatch.setenv("CONFPLAN_STRICT_ENDPOINTS", "off")

    config = ConfplanConfig.from_env()

    assert config.collision_eps == 1e-9
    assert config.stack_strategy is StackStrategy.RANK
    assert config.transfer_mode is TransferMode.SIMULTANEOUS
    assert config.svg_samples == 4
    assert config.workers == 3
    assert config.log_level == "DEBUG"
    assert config.strict_endpoints is False


def test_config_from_env_keeps_defaults_on_bad_values(monkeypatch, caplog):
    caplog.set_level(logging.WARNING, logger="confplan")
    monkeypatch.setenv("CONFPLAN_EPS", "-1")
    monkeypatch.setenv("CONFPLAN_STACK_STRATEGY", "sideways")
    monkeypatch.setenv("CONFPLAN_TRANSFER_MODE", "teleport")
    monkeypatch.setenv("CONFPLAN_WORKERS", "zero")
    monkeypatch.setenv("CONFPLAN_SVG_SAMPLES", "0")
    monkeypatch.setenv("CONFPLAN_LOG_LEVEL", "chatty")

    config = ConfplanConfig.from_env()

    assert config.collision_eps == DEFAULT_EPS
    assert config.stack_strategy is None
    assert config.transfer_mode is TransferMode.SEQUENTIAL
    assert config.workers == 1
    assert config.svg_samples == 16
    assert config.log_level == "WARNING"
    assert "CONFPLAN_EPS" in caplog.text
    assert "CONFPLAN_WORKERS" in caplog.text


def test_config_eps_rejects_non_numbers(monkeypatch):
    monkeypatch.setenv("CONFPLAN_EPS", "tiny")
    assert ConfplanConfig.from_env().collision_eps == DEFAULT_EPS


def test_get_bool_vocabulary(monkeypatch):
    for value in ("true", "1", "yes", "ON"):
        monkeypatch.setenv("CONFPLAN_FLAG", value)
        assert get_bool("CONFPLAN_FLAG") is True
    for value in ("false", "0", "no", "off"):
        monkeypatch.setenv("CONFPLAN_FLAG", value)
        assert get_bool("CONFPLAN_FLAG", True) is False
    monkeypatch.setenv("CONFPLAN_FLAG", "maybe")
    assert get_bool("CONFPLAN_FLAG", True) is True


def test_strategy_for_falls_back_to_dimension_default():
    assert ConfplanConfig().strategy_for(2) is StackStrategy.DISTANCE
    assert ConfplanConfig().strategy_for(3) is StackStrategy.RANK
    pinned = ConfplanConfig(stack_strategy=StackStrategy.RANK)
    assert pinned.strategy_for(2) is StackStrategy.RANK


def test_describe_is_json_ready():
    described = ConfplanConfig().describe()
    assert described["stack_strategy"] == "auto"
    assert described["transfer_mode"] == "sequential"
    assert described["collision_eps"] == DEFAULT_EPS

# tests/test_events.py
import json

from infrastructure.logging import EventLogger, get_logger, set_logger
from main import main

from conftest import TYPE_D_EMPTY_TEXT


def _read(path):
    with open(path, encoding="utf-8") as f:
        return [json.loads(line) for line in f]


def test_events_are_jsonl_with_timestamp(tmp_path):
    path = tmp_path / "logs" / "events.jsonl"
    logger = EventLogger(str(path))
    logger.event("SEARCH_DONE", status="Witness", depth=6)
    logger.event("SEARCH_DONE", status="NotFound", depth=8)
    rows = _read(path)
    assert [r["status"] for r in rows] == ["Witness", "NotFound"]
    assert all("ts" in r for r in rows)
    assert logger.count("SEARCH_DONE") == 2


def test_disabled_logger_only_counts(tmp_path):
    path = tmp_path / "none.jsonl"
    logger = EventLogger(str(path), enabled=False)
    logger.event("FUZZ_START", seed=1)
    assert logger.count("FUZZ_START") == 1
    assert not path.exists()


def test_error_keeps_traceback(tmp_path):
    path = tmp_path / "err.jsonl"
    logger = EventLogger(str(path))
    try:
        raise RuntimeError("boom")
    except RuntimeError:
        logger.error("fallo", exc_info=True, command="fuzz")
    row = _read(path)[0]
    assert row["level"] == "ERROR"
    assert "RuntimeError" in row["traceback"]


def test_cli_emits_classify_and_validation_events(write_text):
    events = EventLogger("unused.jsonl", enabled=False)
    set_logger(events)
    good = write_text("d.txt", TYPE_D_EMPTY_TEXT)
    bad = write_text("bad.txt", TYPE_D_EMPTY_TEXT.replace("beta1 = [(1*p^-3)*d]", "beta1 = [1]"))
    main(["classify", good])
    main(["classify", bad])
    assert get_logger() is events
    assert events.count("CLASSIFY_START") == 1
    assert events.count("CLASSIFY_DONE") == 1
    assert events.count("VALIDATION_FAILED") == 1

"""
Logger tests - Level threshold, structured fields and error output.
"""

import io

from domo_fv.actors.logger import ConsoleLogger, LogLevel


def make_logger(level: LogLevel = LogLevel.INFO):
    stream = io.StringIO()
    return ConsoleLogger("test", level, stream), stream


# ============================================================================
# Tests
# ============================================================================

def test_default_level_is_info():
    """Test that a fresh logger writes INFO and above."""
    logger, stream = make_logger()

    logger.debug("hidden")
    logger.info("shown")

    output = stream.getvalue()
    assert "hidden" not in output, "DEBUG should be filtered at INFO level"
    assert "[INFO] [test] shown" in output, f"Unexpected output: {output!r}"


def test_fields_are_appended_as_key_value_pairs():
    """Test structured fields rendering."""
    logger, stream = make_logger()

    logger.info("run finished", scheme="h3", n=200)

    assert stream.getvalue().rstrip().endswith("run finished scheme=h3 n=200"), \
        f"Fields not rendered: {stream.getvalue()!r}"


def test_set_level_changes_threshold():
    """Test switching to ERROR silences warnings."""
    logger, stream = make_logger()
    logger.set_level(LogLevel.ERROR)

    logger.warn("careful")
    logger.error("broken")

    output = stream.getvalue()
    assert logger.level() == LogLevel.ERROR
    assert "careful" not in output
    assert "[ERROR] [test] broken" in output


def test_error_includes_traceback():
    """Test that an attached exception is rendered with its traceback."""
    logger, stream = make_logger()

    try:
        raise ValueError("bad value")
    except ValueError as error:
        logger.error("failed", error)

    output = stream.getvalue()
    assert "Traceback" in output, f"Missing traceback: {output!r}"
    assert "ValueError: bad value" in output


def test_debug_level_writes_everything():
    """Test that DEBUG lets every level through."""
    logger, stream = make_logger(LogLevel.DEBUG)

    logger.debug("one")
    logger.info("two")
    logger.warn("three")
    logger.error("four")

    lines = stream.getvalue().splitlines()
    assert len(lines) == 4, f"Expected 4 lines, got {lines}"
    assert [line.split("] ")[1].strip("[") for line in lines] == ["DEBUG", "INFO", "WARN", "ERROR"]

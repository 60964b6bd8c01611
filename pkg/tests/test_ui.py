import io

import pytest

from kegraph.utils.ui import UI, format_table


def test_format_table_pads_columns():
    lines = format_table(["name", "n"], [["petersen", "10"], ["c5", "5"]])
    assert lines == ["name      n", "--------  --", "petersen  10", "c5        5"]


def test_progress_reports_success_and_failure():
    stream = io.StringIO()
    ui = UI(stream, color=False)
    with ui.progress("Checking..."):
        pass
    with pytest.raises(ValueError):
        with ui.progress("Parsing..."):
            raise ValueError("bad line")
    text = stream.getvalue()
    assert "✓ Checking" in text
    assert "✗ Failed: bad line" in text

import runpy
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).resolve().parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.name)
def test_demo_runs_to_completion(script, capsys):
    runpy.run_path(str(script), run_name="__main__")
    assert capsys.readouterr().out

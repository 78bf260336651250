import json
import sys

import pytest
from hypothesis import settings

settings.register_profile("exact", deadline=None, max_examples=100)
settings.load_profile("exact")


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""
    from cobfilt.cli import main

    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run


@pytest.fixture
def run_cli_json(run_cli):
    """Invoke the CLI with --json appended; returns (exit_code, envelope)."""

    def run(*argv):
        code, out, _ = run_cli(*argv, "--json")
        return code, json.loads(out)

    return run

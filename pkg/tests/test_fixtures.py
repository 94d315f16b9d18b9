"""Golden fixtures regenerate bit-identically through the current pipeline."""

import pytest

from hrbaselines import cli
from hrbaselines.fixtures import fixture_suite


@pytest.mark.parametrize("fixture", fixture_suite(), ids=lambda f: f.name)
def test_fixture_regenerates_byte_identical(fixture, tmp_path):
    for name, content in fixture.files.items():
        (tmp_path / name).write_text(content)
    for command in fixture.commands:
        argv = [str(tmp_path / a) if a.endswith((".csv", ".json")) else a for a in command]
        assert cli.main(argv) == 0
    for name, expected in fixture.expected.items():
        produced = (tmp_path / name).read_text()
        assert produced == expected, f"{fixture.name}/{name} drifted from the golden copy"

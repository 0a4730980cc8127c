import json
from pathlib import Path

import pytest

from capbound import Graph, parse_graph6

REPO = Path(__file__).resolve().parent.parent
FIXTURES = REPO / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    if not (FIXTURES / "manifest.json").is_file():
        pytest.skip("fixtures not built (run scripts/build_fixtures.py)")
    return FIXTURES


@pytest.fixture(scope="session")
def manifest(fixtures_dir) -> dict:
    return json.loads((fixtures_dir / "manifest.json").read_text())


@pytest.fixture(scope="session")
def fixture_graph(fixtures_dir, manifest):
    cache = {}
    files = {g["slug"]: g["file"] for g in manifest["graphs"]}

    def load(slug: str) -> Graph:
        if slug not in cache:
            cache[slug] = parse_graph6(
                (fixtures_dir / files[slug]).read_text().strip()
            )
        return cache[slug]

    return load

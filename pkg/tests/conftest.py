from pathlib import Path

import pytest

from quotekit.config import DATA_DIR, PipelineConfig
from quotekit.langid import load_profiles
from quotekit.text import PosLexicon, load_abbreviations

TESTS_DIR = Path(__file__).resolve().parent
FIXTURE_TSV = TESTS_DIR / "data" / "fixture.tsv"


@pytest.fixture(scope="session")
def config():
    return PipelineConfig().validate()


@pytest.fixture(scope="session")
def pos_lexicon(config):
    return PosLexicon.load(config.pos_lexicon_path, config.suffix_rules_path)


@pytest.fixture(scope="session")
def abbreviations(config):
    return load_abbreviations(config.abbreviations_path)


@pytest.fixture(scope="session")
def profiles(config):
    return load_profiles(config.profile_dir)


@pytest.fixture(scope="session")
def fixture_rows():
    with open(FIXTURE_TSV, encoding="utf-8") as fh:
        return fh.readlines()


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR

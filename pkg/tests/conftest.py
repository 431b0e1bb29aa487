import pytest

from gecedit.lexicon import default_tagset_path, load_lexicon, load_patterns
from gecedit.tags import load_tagset


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="session")
def patterns():
    return load_patterns()


@pytest.fixture(scope="session")
def default_tagset():
    return load_tagset(default_tagset_path())

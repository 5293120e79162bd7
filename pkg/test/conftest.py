import pytest

from autocomplexity.config import Settings
from autocomplexity.structure import StructureCache


@pytest.fixture(scope="session")
def settings() -> Settings:
    return Settings(exact_max_n={2: 8, 3: 5})


@pytest.fixture(scope="session")
def structure_cache(settings: Settings) -> StructureCache:
    return StructureCache(settings)

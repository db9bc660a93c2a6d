import pytest
from hypothesis import settings

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def tmp_files(tmp_path):
    """Write named text files into a temp dir and return their paths."""

    def write(**files):
        paths = {}
        for name, text in files.items():
            path = tmp_path / name.replace("_", ".")
            path.write_text(text)
            paths[name] = path
        return paths

    return write

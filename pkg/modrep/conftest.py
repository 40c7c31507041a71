import pytest


@pytest.fixture(autouse=True)
def doctest_fixtures(doctest_namespace, client, tmp_path):
    doctest_namespace["modrep"] = client
    doctest_namespace["tmp_path"] = tmp_path

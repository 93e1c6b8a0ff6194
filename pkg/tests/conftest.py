import pytest

from origami_schottky.builder import build_case_a, build_case_b


@pytest.fixture(scope="session")
def built_a2():
    return build_case_a(2)


@pytest.fixture(scope="session")
def built_a3():
    return build_case_a(3)


@pytest.fixture(scope="session")
def built_a4():
    return build_case_a(4)


@pytest.fixture(scope="session")
def built_a5():
    return build_case_a(5)


@pytest.fixture(scope="session")
def built_b():
    return build_case_b()

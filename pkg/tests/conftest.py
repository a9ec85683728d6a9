import pathlib

import pytest

from siltlab import zoo
from siltlab.harness import load_workbench

ALG_DIR = pathlib.Path(__file__).resolve().parent.parent / "algebras"


@pytest.fixture(scope="session")
def alg_dir():
    return ALG_DIR


@pytest.fixture(scope="session")
def a2_parsed():
    return zoo.a2()


@pytest.fixture(scope="session")
def a2_algebra(a2_parsed):
    return a2_parsed.build()


@pytest.fixture(scope="session")
def a3_parsed():
    return zoo.linear_an(3)


@pytest.fixture(scope="session")
def a3_algebra(a3_parsed):
    return a3_parsed.build()


@pytest.fixture(scope="session")
def nak3_parsed():
    return zoo.nakayama_a3()


@pytest.fixture(scope="session")
def nak3_algebra(nak3_parsed):
    return nak3_parsed.build()


@pytest.fixture(scope="session")
def cyc2_parsed():
    return zoo.cyclic_nakayama_2()


@pytest.fixture(scope="session")
def cyc2_algebra(cyc2_parsed):
    return cyc2_parsed.build()


@pytest.fixture(scope="session")
def a4_parsed():
    return zoo.linear_an(4)


@pytest.fixture(scope="session")
def a4_wb(a4_parsed):
    return load_workbench(a4_parsed)


@pytest.fixture(scope="session")
def a2_wb(a2_parsed):
    return load_workbench(a2_parsed)


@pytest.fixture(scope="session")
def a3_wb(a3_parsed):
    return load_workbench(a3_parsed)


@pytest.fixture(scope="session")
def nak3_wb(nak3_parsed):
    return load_workbench(nak3_parsed)


@pytest.fixture(scope="session")
def cyc2_wb(cyc2_parsed):
    return load_workbench(cyc2_parsed)

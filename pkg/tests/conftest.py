import itertools
import pathlib

import pytest

from bilattice import lattice, perm

DATA = pathlib.Path(__file__).parent / "data"
GOLDEN = pathlib.Path(__file__).parent / "golden"

PERMS2 = list(perm.all_perms(2))
PERMS3 = list(perm.all_perms(3))


def spec3(lam, w1, w2, w3, w4, N=3):
    return lattice.SystemSpec(3, N, lam, w1, w2, w3, w4)


class SweepCache:
    """Partition functions for the full S_3^4 sweep at lambda=(6,3,0), N=7.

    Z tables are built lazily per (w3, w4) family and shared across the
    acceptance criteria that consume the same sweep.
    """

    LAM = (6, 3, 0)
    N = 7

    def __init__(self):
        self._tables = {}

    def spec(self, w1, w2, w3, w4):
        return lattice.SystemSpec(3, self.N, self.LAM, w1, w2, w3, w4)

    def ztable(self, w3, w4):
        key = (w3, w4)
        if key not in self._tables:
            self._tables[key] = {
                (w1, w2): lattice.partition_function(self.spec(w1, w2, w3, w4))
                for w1 in PERMS3
                for w2 in PERMS3
            }
        return self._tables[key]

    def all_tuples(self):
        return itertools.product(PERMS3, repeat=4)


@pytest.fixture(scope="session")
def sweep3():
    return SweepCache()


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN


@pytest.fixture(scope="session")
def fig3_spec():
    return lattice.load_system(str(DATA / "fig3.json"))


@pytest.fixture(scope="session")
def mono_spec():
    return lattice.load_system(str(DATA / "mono.json"))


@pytest.fixture(scope="session")
def fig12_spec():
    return lattice.load_system(str(DATA / "fig12.json"))

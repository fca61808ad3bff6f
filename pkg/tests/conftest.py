import numpy as np
import pytest

from pcnkit import Lut, get_field


def brute_cddt(F, c):
    """Scalar triple loop over (a, x); independent of the vectorised tables."""
    f = F.field
    out = np.zeros((f.q, f.q), dtype=np.int64)
    vals = F.values.tolist()
    for a in range(f.q):
        for x in range(f.q):
            b = f.sub(vals[f.add(x, a)], f.mul(c, vals[x]))
            out[a, b] += 1
    return out


def brute_is_pcn(F, c):
    f = F.field
    vals = F.values.tolist()
    for a in range(f.q):
        img = {f.sub(vals[f.add(x, a)], f.mul(c, vals[x])) for x in range(f.q)}
        if len(img) != f.q:
            return False
    return True


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_perm(field, rng):
    return Lut(field, rng.permutation(field.q))


@pytest.fixture(scope="session")
def gf64():
    return get_field(2, 6)


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """record(n, ok, detail) prints and stores one verdict line per criterion."""

    def record(n, ok, detail=""):
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}{' - ' + detail if detail else ''}"
        _CRITERIA[n] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[n])

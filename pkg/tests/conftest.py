import pytest

from perroncensus.census import CensusSpec, enumerate_bi_perron_census, enumerate_perron_census

_ACCEPTANCE_LINES: list[tuple[int, bool, str]] = []


@pytest.fixture(scope="session")
def criterion_report():
    def record(num: int, ok: bool, detail: str) -> None:
        _ACCEPTANCE_LINES.append((num, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for num, ok, detail in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")


@pytest.fixture(scope="session")
def perron_grid_n2():
    return {R: enumerate_perron_census(CensusSpec(2, float(R))) for R in (8, 16, 32, 64, 128)}


@pytest.fixture(scope="session")
def perron_grid_n3():
    return {
        R: enumerate_perron_census(CensusSpec(3, float(R), shard_count=8)) for R in (4, 8, 16)
    }


@pytest.fixture(scope="session")
def biperron_grid_n2():
    return {
        R: enumerate_bi_perron_census(CensusSpec(2, float(R), "bi_perron"))
        for R in (8, 16, 32, 64)
    }

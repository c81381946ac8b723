import pytest

_CRITERIA: list[tuple[int, str, bool, float]] = []


def record_criterion(num: int, title: str, passed: bool, seconds: float) -> None:
    _CRITERIA.append((num, title, passed, seconds))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, seconds in sorted(_CRITERIA):
        terminalreporter.write_line(
            f"[{'PASS' if passed else 'FAIL'}] {num:>2}. {title} ({seconds:.2f}s)"
        )

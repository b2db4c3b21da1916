from __future__ import annotations

import pytest

_CRITERIA: dict[int, dict] = {}


class CriterionLog:
    """Collects sub-checks for one acceptance criterion."""

    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.checks: list[tuple[str, bool, str]] = []
        self.deviations: list[str] = []
        _CRITERIA[number] = {"title": title, "checks": self.checks, "deviations": self.deviations}

    def check(self, what: str, ok, detail: str = "") -> bool:
        self.checks.append((what, bool(ok), detail))
        return bool(ok)

    def deviation(self, what: str, ok, detail: str) -> bool:
        """A published value we do not reproduce; ``ok`` means it was shown wrong."""
        self.deviations.append(f"{what}: {detail}")
        return self.check(f"documented deviation: {what}", ok, detail)

    def assert_all(self):
        failed = [f"{w} ({d})" for w, ok, d in self.checks if not ok]
        assert not failed, "; ".join(failed)


@pytest.fixture
def criterion():
    return CriterionLog


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        c = _CRITERIA[n]
        ok = bool(c["checks"]) and all(ok for _, ok, _ in c["checks"])
        note = f" ({len(c['deviations'])} documented deviation(s))" if c["deviations"] else ""
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {c['title']}{note}")
        for what, sub_ok, detail in c["checks"]:
            mark = "ok  " if sub_ok else "FAIL"
            tr.write_line(f"        {mark} {what}" + (f" [{detail}]" if detail else ""))

"""Verification reports and their canonical text/JSON renderings."""

from __future__ import annotations

import contextvars
import json
import re
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"
_VARIANT_RE = re.compile(r"resolved-variant\(([^()]+)\)\Z")


def resolved(tag: str) -> str:
    return f"resolved-variant({tag})"


def variant_tag(status: str) -> str | None:
    m = _VARIANT_RE.match(status)
    return m.group(1) if m else None


def is_failure(status: str) -> bool:
    return status == FAIL


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    lhs_terms: int = 0
    rhs_terms: int = 0
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status not in (PASS, FAIL) and variant_tag(self.status) is None:
            raise ValueError(f"bad check status {self.status!r}")

    @property
    def ok(self) -> bool:
        return not is_failure(self.status)

    def to_dict(self) -> dict:
        return {
            "elapsed_ms": int(self.elapsed_ms),
            "lhs_terms": int(self.lhs_terms),
            "name": self.name,
            "rhs_terms": int(self.rhs_terms),
            "status": self.status,
        }


@dataclass
class Report:
    suite: str
    params: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    def sorted_checks(self) -> list:
        return sorted(self.checks, key=lambda c: c.name)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.sorted_checks() if not c.ok]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "checks": [c.to_dict() for c in self.sorted_checks()],
            "params": self.params,
            "suite": self.suite,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        checks = [
            Check(
                name=c["name"],
                status=c["status"],
                lhs_terms=c["lhs_terms"],
                rhs_terms=c["rhs_terms"],
                elapsed_ms=c["elapsed_ms"],
            )
            for c in d["checks"]
        ]
        return cls(suite=d["suite"], params=d.get("params", {}), checks=checks)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @classmethod
    def from_text(cls, text: str) -> "Report":
        """Inverse of :func:`render_text` (check names contain no spaces)."""
        lines = text.splitlines()
        if not lines or not lines[0].startswith("suite: "):
            raise ValueError("not a text report")
        r = cls(lines[0][len("suite: "):])
        i = 1
        while i < len(lines) and lines[i].startswith("  "):
            k, _, v = lines[i].strip().partition(" = ")
            r.params[k] = json.loads(v)
            i += 1
        for line in lines[i + 2:]:
            if line.endswith(" checks ok"):
                break
            name, status, lhs, rhs, ms = line.split()
            r.add(Check(name, status, int(lhs), int(rhs), int(ms)))
        return r


def _check_float_free(obj: Any, path: str = "$"):
    if isinstance(obj, float):
        raise TypeError(f"float in report at {path}")
    if isinstance(obj, dict):
        for k, v in obj.items():
            _check_float_free(v, f"{path}.{k}")
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            _check_float_free(v, f"{path}[{i}]")


def render_json(r: Report) -> str:
    d = r.to_dict()
    _check_float_free(d)
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


_COLS = (("check", 44), ("status", 36), ("lhs", 7), ("rhs", 7), ("ms", 7))


def render_text(r: Report) -> str:
    lines = [f"suite: {r.suite}"]
    for k in sorted(r.params):
        lines.append(f"  {k} = {json.dumps(r.params[k], sort_keys=True, ensure_ascii=False)}")
    header = "".join(
        name.ljust(w) if i < 2 else name.rjust(w) for i, (name, w) in enumerate(_COLS)
    )
    lines.append(header.rstrip())
    lines.append("-" * sum(w for _, w in _COLS))
    for c in r.sorted_checks():
        cells = (c.name, c.status, str(c.lhs_terms), str(c.rhs_terms), str(c.elapsed_ms))
        row = ""
        for i, (cell, (_, w)) in enumerate(zip(cells, _COLS)):
            if i < 2:
                row += cell.ljust(w - 1) + " " if len(cell) < w else cell + " "
            else:
                row += cell.rjust(w)
        lines.append(row.rstrip())
    if r.checks:
        n_fail = len(r.failures())
        lines.append(f"{len(r.checks) - n_fail}/{len(r.checks)} checks ok")
    return "\n".join(lines) + "\n"


def render_report(r: Report, fmt: str = "text") -> str:
    if fmt == "json":
        return render_json(r)
    if fmt == "text":
        return render_text(r)
    raise ValueError(f"unknown report format {fmt!r}")


# Wall-clock timings make reports non-reproducible, so elapsed_ms stays 0
# unless a caller opts in.
_RECORD_TIMINGS = contextvars.ContextVar("vltwist_record_timings", default=False)


@contextmanager
def record_timings(enabled: bool = True):
    token = _RECORD_TIMINGS.set(enabled)
    try:
        yield
    finally:
        _RECORD_TIMINGS.reset(token)


class _Stopwatch:
    def __enter__(self):
        self.t0 = time.perf_counter()
        self.ms = 0
        return self

    def __exit__(self, *exc):
        if _RECORD_TIMINGS.get():
            self.ms = int(round((time.perf_counter() - self.t0) * 1000))
        return False


def term_count(x) -> int:
    if hasattr(x, "__len__"):
        return len(x)
    return 1 if x else 0


def check_equal(name: str, lhs, rhs) -> Check:
    """Evaluate two thunks and compare their results exactly."""
    with _Stopwatch() as sw:
        a = lhs()
        b = rhs()
        ok = a == b
    return Check(name, PASS if ok else FAIL, term_count(a), term_count(b), sw.ms)


def check_true(name: str, predicate) -> Check:
    with _Stopwatch() as sw:
        ok = bool(predicate())
    return Check(name, PASS if ok else FAIL, 0, 0, sw.ms)


def check_variants(name: str, candidates: dict) -> tuple:
    """Decide between readings of one formula.

    ``candidates`` maps a tag to a thunk returning True when that reading
    holds.  The check resolves to the tag when exactly one reading holds and
    fails otherwise.  Returns the check and the list of tags that held.
    """
    with _Stopwatch() as sw:
        held = [tag for tag, fn in candidates.items() if fn()]
    status = resolved(held[0]) if len(held) == 1 else FAIL
    return Check(name, status, len(candidates), len(held), sw.ms), held

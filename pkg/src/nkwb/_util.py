from __future__ import annotations

import functools
import threading
from dataclasses import dataclass, field
from typing import Callable, TypeVar

T = TypeVar("T")

_GLOBAL_LOCK = threading.RLock()


def memoized(method: Callable[..., T]) -> Callable[..., T]:
    """Cache a zero-argument method per instance.

    The first caller computes under a lock, later callers read the stored
    value; every caller observes the same object.
    """
    key = "_memo_" + method.__name__

    @functools.wraps(method)
    def wrapper(self):
        d = self.__dict__
        if key in d:
            return d[key]
        lock = d.get("_memo_lock")
        if lock is None:
            with _GLOBAL_LOCK:
                lock = d.setdefault("_memo_lock", threading.RLock())
        with lock:
            if key not in d:
                d[key] = method(self)
        return d[key]

    return wrapper


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    status: str | None = None  # overrides pass/fail wording, e.g. "inconclusive"

    def label(self) -> str:
        if self.status:
            return self.status
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.label()}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None, status: str | None = None) -> Check:
        c = Check(name, bool(passed), witness, status)
        self.checks.append(c)
        return c

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.status))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


def cached(obj, key: str, compute: Callable[[], T]) -> T:
    """Per-object cache for derived data that is not a zero-argument method."""
    d = obj.__dict__
    store = d.get("_derived")
    if store is None:
        with _GLOBAL_LOCK:
            store = d.setdefault("_derived", {})
    if key in store:
        return store[key]
    with _GLOBAL_LOCK:
        if key not in store:
            store[key] = compute()
    return store[key]

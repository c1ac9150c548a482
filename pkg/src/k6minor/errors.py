"""Exception types shared across the toolkit."""

from __future__ import annotations

from typing import Any


class GraphParseError(ValueError):
    """Malformed graph text. ``line`` is 1-based, ``offset`` is a byte offset."""

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.offset = offset


class HypothesisViolation(ValueError):
    """An operation was called on an input outside its hypotheses."""

    def __init__(self, clause: str, message: str = ""):
        super().__init__(f"[{clause}] {message}".strip())
        self.clause = clause


class InternalAssertionFailed(AssertionError):
    """A claim that the underlying argument guarantees did not hold.

    Carries the claim id and a JSON-friendly dump of the offending instance,
    so that a failure doubles as a reproducible counterexample report.
    """

    def __init__(self, claim: str, message: str = "", dump: dict[str, Any] | None = None):
        super().__init__(f"claim {claim} failed: {message}".strip())
        self.claim = claim
        self.dump = dump or {}


class NoFatHammock(LookupError):
    pass


class NotNearlyLong(ValueError):
    def __init__(self, k: int, witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None):
        msg = f"graph is not nearly {k}-long"
        if witness is not None:
            msg += f"; disjoint short cycles {list(witness[0])} and {list(witness[1])}"
        super().__init__(msg)
        self.k = k
        self.witness = witness


class NotAJump(ValueError):
    pass


class JumpDetected(Exception):
    """A bridge attaches to two vertices that share no face."""

    def __init__(self, path: list[int], ends: tuple[int, int]):
        super().__init__(f"bridge path {path} joins non-cofacial vertices {ends}")
        self.path = path
        self.ends = ends


class NoCase(RuntimeError):
    pass


class Inconsistent(RuntimeError):
    pass


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes before reaching a verdict."""

    def __init__(self, what: str, nodes: int):
        super().__init__(f"{what}: search budget exhausted after {nodes} nodes")
        self.nodes = nodes

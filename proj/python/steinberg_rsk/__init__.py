"""Partial permutations to (signed Young diagram, tableau, tableau) triples.

Every function here goes through the same command runner as the
``steinberg-rsk`` executable, so results are identical for a given seed.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from . import _core
from ._core import DEFAULT_PRIME, SchemaError, count_syt, dominance_leq, is_admissible, pp_count, z_shape

__all__ = [
    "DEFAULT_PRIME",
    "CommandError",
    "SchemaError",
    "census",
    "count_syt",
    "dominance_leq",
    "dual",
    "enum_pp",
    "enum_syd",
    "evac",
    "forward",
    "inverse",
    "is_admissible",
    "poset",
    "pp_count",
    "rect",
    "rsk",
    "rsk_inverse",
    "run",
    "tau_hat",
    "verify",
    "z_shape",
]


class CommandError(RuntimeError):
    """A command exited nonzero; ``code`` is 1 for failures, 2 for bad input."""

    def __init__(self, code: int, diagnostics: list[str]):
        super().__init__("; ".join(diagnostics) or f"exit code {code}")
        self.code = code
        self.diagnostics = diagnostics


def run(command: str, document: Any = None, *, seed: Optional[int] = None, trials: Optional[int] = None,
        pmax: int = 3, qmax: int = 3, strict: bool = False) -> Any:
    text = document if isinstance(document, str) else ("" if document is None else json.dumps(document))
    code, payload, diagnostics = _core.run_command(command, text, seed, trials, pmax, qmax, strict)
    if code != 0:
        raise CommandError(code, list(diagnostics))
    return json.loads(payload)


def _pp(p: int, q: int, ones: Iterable[Iterable[int]]) -> dict:
    return {"p": p, "q": q, "ones": [list(c) for c in ones]}


def forward(p: int, q: int, ones: Iterable[Iterable[int]] = (), *, seed: Optional[int] = 0) -> dict:
    return run("map", _pp(p, q, ones), seed=seed)


def inverse(triple: dict, *, seed: Optional[int] = 0) -> dict:
    return run("unmap", triple, seed=seed)


def dual(p: int, q: int, ones: Iterable[Iterable[int]] = (), *, seed: Optional[int] = 0) -> dict:
    return run("dual", _pp(p, q, ones), seed=seed)


def tau_hat(p: int, q: int, ones: Iterable[Iterable[int]] = ()) -> dict:
    return run("tauhat", _pp(p, q, ones), seed=0)


def rsk(entries: list[list[int]], *, seed: Optional[int] = 0) -> dict:
    return run("rsk", {"entries": entries}, seed=seed)


def rsk_inverse(qhat: dict, phat: dict, *, seed: Optional[int] = 0) -> dict:
    return run("rsk", {"qhat": qhat, "phat": phat}, seed=seed)


def evac(tableau: dict) -> dict:
    return run("evac", tableau, seed=0)


def rect(tableau: dict, index: int) -> dict:
    return run("rect", {"tableau": tableau, "index": index}, seed=0)


def enum_syd(q: int, p: int) -> list:
    return run("enum-syd", {"q": q, "p": p}, seed=0)


def enum_pp(p: int, q: int) -> list:
    return run("enum-pp", {"p": p, "q": q}, seed=0)


def census(p: int, q: int, *, seed: Optional[int] = 0) -> dict:
    return run("census", {"p": p, "q": q}, seed=seed)


def poset(q: int, p: int) -> dict:
    return run("poset", {"q": q, "p": p}, seed=0)


def verify(pmax: int = 3, qmax: int = 3, *, seed: Optional[int] = 0, trials: Optional[int] = None) -> dict:
    return run("verify", seed=seed, trials=trials, pmax=pmax, qmax=qmax)

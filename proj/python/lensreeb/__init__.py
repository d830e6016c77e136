"""Exact lens-space invariants: Chen-Ruan degrees, toric Conley-Zehnder indices,
ellipsoid spectra and density certificates.

Rational results come back as ``fractions.Fraction``; everything else is plain
Python data.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import _core
from ._core import DomainError, IdentityViolation

__all__ = [
    "DomainError",
    "IdentityViolation",
    "lens_space",
    "normalize",
    "cr_table",
    "existence_report",
    "toric_model",
    "cz_index",
    "mean_index",
    "hc_table",
    "k0_threshold",
    "ellipsoid_cz",
    "ellipsoid_mean_index",
    "symmetric_spectrum",
    "check_dynamical_convexity",
    "check_final_inequality",
    "single_orbit_contradiction",
    "matching_feasibility",
    "orbit_density",
    "run_cli",
]

_RATIONAL = re.compile(r"-?\d+/\d+")


def _fractions(value: Any) -> Any:
    if isinstance(value, str) and _RATIONAL.fullmatch(value):
        return Fraction(value)
    if isinstance(value, list):
        return [_fractions(v) for v in value]
    if isinstance(value, dict):
        return {k: _fractions(v) for k, v in value.items()}
    return value


def _load(text: str) -> Any:
    return _fractions(json.loads(text))


def _q(x: Fraction | int | str) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _axes(axes: Iterable[Fraction | int | str]) -> list[str]:
    return [_q(a) for a in axes]


def _budget(budget: dict | str) -> str:
    if isinstance(budget, str):
        return budget
    orbits = [{**o, "mean_index": _q(o["mean_index"])} for o in budget["orbits"]]
    return json.dumps({**budget, "orbits": orbits})


def lens_space(p: int, weights: Sequence[int]) -> dict:
    return _load(_core.lens_space(p, list(weights)))


def normalize(p: int, weights: Sequence[int]) -> dict:
    """Rescaled weights with last entry 1 and the relabelling factor."""
    return _load(_core.normalize(p, list(weights)))


def cr_table(p: int, weights: Sequence[int]) -> list[dict]:
    return _load(_core.cr_table(p, list(weights)))


def existence_report(p: int, weights: Sequence[int]) -> dict:
    return _load(_core.existence_report(p, list(weights)))


def toric_model(p: int, weights: Sequence[int]) -> dict:
    """Toric data of the normalized space, with determinant and kernel verdict."""
    return _load(_core.toric_model(p, list(weights)))


def cz_index(p: int, weights: Sequence[int], n: int) -> Fraction:
    return Fraction(_core.cz_index(p, list(weights), n))


def mean_index(p: int, weights: Sequence[int]) -> Fraction:
    return Fraction(_core.mean_index(p, list(weights)))


def hc_table(p: int, weights: Sequence[int], cls: int, cap: Fraction | int | str) -> dict:
    return _load(_core.hc_table(p, list(weights), cls, _q(cap)))


def k0_threshold(p: int, weights: Sequence[int], cls: int) -> Fraction:
    return Fraction(_core.k0_threshold(p, list(weights), cls))


def ellipsoid_cz(p: int, weights: Sequence[int], axes, j: int, n: int) -> int:
    return _core.ellipsoid_cz(p, list(weights), _axes(axes), j, n)


def ellipsoid_mean_index(p: int, weights: Sequence[int], axes, j: int) -> Fraction:
    return Fraction(_core.ellipsoid_mean_index(p, list(weights), _axes(axes), j))


def symmetric_spectrum(p: int, weights: Sequence[int], axes, cls: int, cap) -> list[dict]:
    return _load(_core.symmetric_spectrum(p, list(weights), _axes(axes), cls, _q(cap)))


def check_dynamical_convexity(p: int, weights: Sequence[int], axes, max_iter: int = 1000) -> dict:
    return _load(_core.check_dynamical_convexity(p, list(weights), _axes(axes), max_iter))


def check_final_inequality(budget: dict | str) -> dict:
    return _load(_core.check_final_inequality(_budget(budget)))


def single_orbit_contradiction(p: int, delta) -> str:
    return _core.single_orbit_contradiction(p, _q(delta))


def matching_feasibility(budget: dict | str, horizon: int, n: int, k0) -> dict:
    return _load(_core.matching_feasibility(_budget(budget), horizon, n, _q(k0)))


def orbit_density(p: int, delta) -> Fraction:
    return Fraction(_core.orbit_density(p, _q(delta)))


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the ``lensreeb`` command line in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))

"""Bundled example algebras.

``e4``, ``e23``, ``e17``, ``e18`` and ``e24`` are small algebras whose
homological data is known by hand; they double as regression fixtures.
"""
from __future__ import annotations

from importlib import resources

from .presentation import StringAlgebra, load_algebra

NAMES = ("e4", "e23", "e17", "e18", "e24")


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("data", f"{name}.txt").read_text()


def fixture(name: str) -> StringAlgebra:
    return load_algebra(fixture_text(name))


def fixture_path(name: str) -> str:
    return str(resources.files(__package__).joinpath("data", f"{name}.txt"))

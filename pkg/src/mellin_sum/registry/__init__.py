"""Catalog of verifiable identities and the verification driver.

>>> from mellin_sum import registry
>>> [r.id for r in registry.list_identities("G3")]
['Eq3', 'Eq4', 'Ls', 'Pid1', 'Triv', 'X3a']
"""

from __future__ import annotations

from typing import Iterable

from ..errors import InvalidParams
from .core import (EQUALITY, GROUPS, TREND, IdentityRecord, Param, VerificationReport, run_tasks, verify,
                   verify_all)

_CATALOG: dict[str, IdentityRecord] | None = None
_ALIASES: dict[str, str] = {}


def _load() -> dict[str, IdentityRecord]:
    global _CATALOG
    if _CATALOG is None:
        from . import appendix, contour_groups, series_groups

        catalog: dict[str, IdentityRecord] = {}
        for module in (series_groups, contour_groups, appendix):
            for record in module.RECORDS:
                if record.id in catalog:
                    raise RuntimeError(f"duplicate identity id {record.id}")
                catalog[record.id] = record
                for alias in record.aliases:
                    _ALIASES[alias] = record.id
        _CATALOG = catalog
    return _CATALOG


def get(id: str) -> IdentityRecord:
    """Record by id or alias."""
    catalog = _load()
    key = _ALIASES.get(id, id)
    try:
        return catalog[key]
    except KeyError:
        raise InvalidParams(f"unknown identity {id!r}") from None


def list_identities(filter: str | Iterable[str] | None = None) -> list[IdentityRecord]:
    """Records sorted by id, optionally restricted to group names or an id prefix."""
    records = sorted(_load().values(), key=lambda r: r.id)
    if filter is None:
        return records
    names = [filter] if isinstance(filter, str) else list(filter)
    out = []
    for r in records:
        for name in names:
            if name in GROUPS:
                if r.group == name:
                    out.append(r)
                    break
            elif r.id.startswith(name):
                out.append(r)
                break
    return out


__all__ = ["IdentityRecord", "Param", "VerificationReport", "EQUALITY", "TREND", "GROUPS",
           "get", "list_identities", "run_tasks", "verify", "verify_all"]

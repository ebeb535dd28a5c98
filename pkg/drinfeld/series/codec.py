"""
DRINFELD Series Encoding

Versioned text cache for truncated u-series and the JSON payload used by
the CLI. The cache is a YAML header followed by "index<TAB>scalar" lines;
dump/load round-trips bit-exactly.
"""

from typing import Optional

import yaml

from ..algebra.field import FiniteField, get_field
from ..algebra.text import parse_poly, parse_scalar
from ..core.exceptions import FieldError
from ..core.models import SeriesPayload
from .useries import USeries

FORMAT_VERSION = 1
_SEPARATOR = "---\n"


def dump_series(series: USeries) -> str:
    """Encode a series as header + coefficient lines."""
    field = series.field
    header = {
        "format-version": FORMAT_VERSION,
        "q": field.q,
        "p": field.p,
        "r": field.r,
        "modulus": list(field.spec.modulus) if field.r > 1 else None,
        "weight": series.weight,
        "type": series.type,
        "order": series.order,
        "prec": series.prec,
        "level": str(series.level),
    }
    lines = [f"{i}\t{c}" for i, c in series.items()]
    body = "\n".join(lines) + ("\n" if lines else "")
    return yaml.safe_dump(header, sort_keys=True) + _SEPARATOR + body


def load_series(text: str, field: Optional[FiniteField] = None) -> USeries:
    """Decode a series written by dump_series."""
    head, sep, body = text.partition(_SEPARATOR)
    if not sep:
        raise FieldError("series cache is missing its header separator")
    header = yaml.safe_load(head)
    if header.get("format-version") != FORMAT_VERSION:
        raise FieldError(f"unsupported series cache version {header.get('format-version')!r}")
    modulus = tuple(header["modulus"]) if header.get("modulus") else None
    if field is None:
        field = get_field(header["p"], header["r"], modulus)
    elif (field.p, field.r) != (header["p"], header["r"]):
        raise FieldError("series cache was written over a different field")
    coeffs = {}
    for line in body.splitlines():
        if not line.strip():
            continue
        index, _, value = line.partition("\t")
        coeffs[int(index)] = parse_scalar(field, value)
    series = USeries(field, coeffs, header["prec"], weight=header["weight"], type=header["type"],
                     level=parse_poly(field, header.get("level", "1")))
    if series.order != header["order"]:
        raise FieldError(f"series cache order {header['order']} disagrees with its coefficients")
    return series


def series_payload(name: str, series: USeries, limit: Optional[int] = None) -> SeriesPayload:
    """JSON payload of the first coefficients of a named form."""
    items = series.items()
    if limit is not None:
        items = [(i, c) for i, c in items if i < limit]
    return SeriesPayload(
        form=name,
        q=series.field.q,
        k=series.weight,
        l=series.type,
        order=series.order,
        certified_prec=series.prec if limit is None else min(series.prec, limit),
        coefficients=[[i, str(c)] for i, c in items],
    )

"""
Binary relation formats.

Text: rows of bits separated by ``/``, row ``m`` being the characteristic
vector of ``A_m`` (``"110/011/001"``). JSON: a list of 1-based point lists.
"""

import json
from typing import List, Sequence

from ..utils.errors import ValidationError
from .element import FpElement

Relation = List[List[bool]]


def parse_relation_text(text: str) -> Relation:
    """
    Parse ``"110/011/001"``.

    Raises:
        ValidationError: If rows have different lengths or contain other characters
    """
    rows = [r.strip() for r in text.strip().split("/")]
    if not rows or any(set(r) - {"0", "1"} for r in rows):
        raise ValidationError(f"cannot parse relation {text!r}")
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValidationError(f"relation {text!r} is not square")
    return [[c == "1" for c in r] for r in rows]


def format_relation_text(relation: Sequence[Sequence[bool]]) -> str:
    return "/".join("".join("1" if cell else "0" for cell in row) for row in relation)


def relation_from_json(text: str) -> Relation:
    try:
        columns = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"invalid relation JSON: {e}") from e
    if not isinstance(columns, list) or not all(isinstance(c, list) for c in columns):
        raise ValidationError("relation JSON must be a list of point lists")
    n = len(columns)
    relation = [[False] * n for _ in range(n)]
    for m, points in enumerate(columns):
        for x in points:
            if not isinstance(x, int) or not 1 <= x <= n:
                raise ValidationError(f"point {x!r} outside 1..{n}")
            relation[m][x - 1] = True
    return relation


def relation_to_json(relation: Sequence[Sequence[bool]]) -> str:
    return json.dumps([[x + 1 for x, cell in enumerate(row) if cell] for row in relation])


def element_from_relation(relation: Sequence[Sequence[bool]]) -> FpElement:
    """Read rows as columns ``A_m``; every row must be non-empty."""
    return FpElement.from_sets([[x for x, cell in enumerate(row) if cell] for row in relation])


def element_to_relation(element: FpElement) -> Relation:
    return [[bool(bit) for bit in row] for row in element.relation_rows()]

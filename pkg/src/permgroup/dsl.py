"""
Group specification strings.

``S<n>``, ``C<n>``, ``D<n>``, ``A<n>`` name the natural actions; anything else
is read as generators in cycle notation separated by ``;`` or by commas
outside parentheses, optionally followed by ``@<degree>``.
"""

import re
from typing import List, Optional

from ..config.yaml_loader import Budgets
from ..utils.errors import ValidationError
from .group import (PermutationGroup, alternating_group, cyclic_group, dihedral_group,
                    generate_group, symmetric_group)
from .permutation import Permutation

_NAMED = {
    "S": symmetric_group,
    "C": cyclic_group,
    "D": dihedral_group,
    "A": alternating_group,
}
_NAMED_PATTERN = re.compile(r"^\s*([SCDA])\s*(\d+)\s*$", re.IGNORECASE)


def split_generators(text: str) -> List[str]:
    """Split on ``;`` anywhere and on ``,`` outside parentheses."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValidationError(f"unbalanced parentheses in {text!r}")
        if ch == ";" or (ch == "," and depth == 0):
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ValidationError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def parse_group(text: str, budgets: Optional[Budgets] = None) -> PermutationGroup:
    """
    Parse a group specification.

    Examples: ``"S3"``, ``"D4"``, ``"(1 2)(3 4); (1 3)"``, ``"(1 2)@4"``.

    Raises:
        ValidationError: If the text cannot be parsed
    """
    named = _NAMED_PATTERN.match(text)
    if named:
        degree = int(named.group(2))
        if degree < 1:
            raise ValidationError("degree must be positive")
        return _NAMED[named.group(1).upper()](degree, budgets)

    body, _, degree_text = text.partition("@")
    chunks = split_generators(body)
    if not chunks:
        raise ValidationError(f"no generators in {text!r}")
    if degree_text.strip():
        try:
            degree = int(degree_text)
        except ValueError as e:
            raise ValidationError(f"bad degree suffix in {text!r}") from e
    else:
        points = [int(t) for t in re.findall(r"\d+", body)]
        degree = max(points) if points else 1
    gens = [Permutation.parse(chunk, degree) for chunk in chunks]
    return generate_group(degree, gens, budgets)

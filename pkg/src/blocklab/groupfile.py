"""Ingestion of permutation groups from text files.

The format is line-oriented `field: value` with fields `name`, `degree`,
`generators` (one or more cycle strings, 1-based, e.g. "(1,2,3)(4,5)")
and an optional `comment`.  Generators may continue over several lines;
whitespace is insignificant inside cycle strings.  Example:

    name: s3
    degree: 3
    generators: (1,2,3)
                (1,2)
    comment: symmetric group on three points
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .group import PermGroup
from .perm import MalformedPermutation, parse_cycles

__all__ = ["GroupFile", "parse_group_file", "load_group_file"]


@dataclass(frozen=True)
class GroupFile:
    name: str
    degree: int
    generator_strings: tuple[str, ...]
    comment: str

    def build(self) -> PermGroup:
        gens = [parse_cycles(s, self.degree) for s in self.generator_strings]
        return PermGroup(self.degree, gens)


def parse_group_file(text: str) -> GroupFile:
    fields: dict[str, list[str]] = {}
    current: str | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, rest = line.partition(":")
        key = head.strip().lower()
        if sep and key in ("name", "degree", "generators", "comment"):
            fields[key] = [rest.strip()] if rest.strip() else []
            current = key
        elif current is not None:
            fields[current].append(line)
        else:
            raise MalformedPermutation(f"unexpected line before any field: {raw!r}")

    for required in ("name", "degree", "generators"):
        if required not in fields:
            raise MalformedPermutation(f"missing required field {required!r}")
    name = " ".join(fields["name"])
    try:
        degree = int(" ".join(fields["degree"]))
    except ValueError:
        raise MalformedPermutation(
            f"degree is not an integer: {' '.join(fields['degree'])!r}"
        ) from None
    if degree <= 0:
        raise MalformedPermutation(f"degree must be positive, got {degree}")

    # one generator per line; a line with unbalanced parentheses continues
    # onto the next, and whitespace inside cycle strings is insignificant
    merged: list[str] = []
    for chunk in fields["generators"]:
        piece = "".join(chunk.split())
        if not piece:
            continue
        if merged and merged[-1].count("(") != merged[-1].count(")"):
            merged[-1] += piece
        else:
            merged.append(piece)
    if not merged:
        raise MalformedPermutation("no generators given")
    for s in merged:
        if s.count("(") != s.count(")"):
            raise MalformedPermutation(f"unbalanced parentheses in {s!r}")

    comment = " ".join(fields.get("comment", []))
    return GroupFile(name, degree, tuple(merged), comment)


def load_group_file(path: str | Path) -> GroupFile:
    return parse_group_file(Path(path).read_text())

"""Group-data files and textual group specs.

A generators file carries one permutation group:

    # optional comments
    degree 11
    gen a = (1,2,3,4,5,6,7,8,9,10,11)
    gen b = (3,7,11,8)(4,10,5,6)

The first payload line declares the degree; every following line binds a
named generator given in 1-based cycle notation.  Blank lines and text
after '#' are ignored.  A textual group spec is either a family tag with
parameter ("alt:9", "psl2:7", optionally wrapped as "product:alt:9" for
the direct square) or a path to such a file.
"""

from __future__ import annotations

import os
import re

from .bsgs import GroupHandle, build_bsgs
from .errors import DegreeMismatch, MissingData, ParseError, PointOutOfRange
from .groups import (
    alternating_group,
    cyclic_group,
    dicyclic_permutation_group,
    dihedral_group,
    symmetric_group,
)
from .perm import parse_cycles
from .psl2 import psl2_group
from .triples import direct_product

_GEN_LINE = re.compile(r"gen\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.+)")
_DEGREE_LINE = re.compile(r"degree\s+(\d+)$")


def load_group_file(path: str) -> GroupHandle:
    """Read a generators file and return the handle, BSGS built.

    Raises ParseError (with the 1-based line number) on malformed input
    and DegreeMismatch when a cycle mentions a point past the declared
    degree.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.readlines()

    degree: int | None = None
    names: list[str] = []
    gens = []
    for lineno, line in enumerate(raw, start=1):
        payload = line.split("#", 1)[0].strip()
        if not payload:
            continue
        if degree is None:
            m = _DEGREE_LINE.fullmatch(payload)
            if not m:
                raise ParseError(
                    "expected 'degree N' before any generator", line=lineno
                )
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be at least 1", line=lineno)
            continue
        m = _GEN_LINE.fullmatch(payload)
        if not m:
            raise ParseError(
                "expected 'gen <name> = <cycles>'", line=lineno
            )
        name, cycles_text = m.group(1), m.group(2)
        if name in names:
            raise ParseError(f"duplicate generator name {name!r}", line=lineno)
        try:
            perm = parse_cycles(cycles_text, degree=degree)
        except PointOutOfRange as exc:
            raise DegreeMismatch(f"line {lineno}: {exc}") from exc
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from exc
        names.append(name)
        gens.append(perm)

    if degree is None:
        raise ParseError("no 'degree N' line found (empty file?)")
    if not gens:
        raise ParseError("file declares a degree but no generators")
    stem = os.path.splitext(os.path.basename(path))[0]
    return build_bsgs(gens, degree=degree, name=stem, gen_names=tuple(names))


def save_group_file(path: str, group: GroupHandle, comment: str | None = None) -> None:
    """Write a handle's named generators in the file format above."""
    if group.gen_names is None or len(group.gen_names) != len(group.generators):
        raise ValueError("saving requires a fully named generating set")
    lines = []
    if comment:
        lines.extend(f"# {text}" for text in comment.splitlines())
    lines.append(f"degree {group.degree}")
    for name, gen in zip(group.gen_names, group.generators):
        cycles = "".join(
            "(" + ",".join(str(p + 1) for p in cyc) + ")" for cyc in gen.cycles()
        ) or "()"
        lines.append(f"gen {name} = {cycles}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


_FAMILIES = {
    "alt": (alternating_group, "n"),
    "sym": (symmetric_group, "n"),
    "psl2": (psl2_group, "q"),
    "dihedral": (dihedral_group, "m"),
    "dicyclic": (dicyclic_permutation_group, "k"),
    "cyclic": (cyclic_group, "n"),
}


def resolve_group_spec(spec: str, data_dir: str | None = None) -> GroupHandle:
    """Turn a textual group spec into a handle.

    Family tags take one integer parameter ("alt:9").  The "product:"
    prefix squares the inner spec.  Anything else is read as a file path,
    tried relative to ``data_dir`` as a fallback.
    """
    spec = spec.strip()
    if spec.startswith("product:"):
        inner = resolve_group_spec(spec[len("product:") :], data_dir)
        name = f"({inner.name or 'G'})^2"
        return direct_product(inner, inner, name=name)
    head, sep, tail = spec.partition(":")
    if sep and head in _FAMILIES:
        ctor, letter = _FAMILIES[head]
        try:
            value = int(tail)
        except ValueError:
            raise ParseError(
                f"group spec {spec!r}: parameter {letter} must be an integer"
            ) from None
        return ctor(value)
    if os.path.exists(spec):
        return load_group_file(spec)
    if data_dir is not None:
        candidate = os.path.join(data_dir, spec)
        if os.path.exists(candidate):
            return load_group_file(candidate)
    raise MissingData(f"no group data for spec {spec!r}")

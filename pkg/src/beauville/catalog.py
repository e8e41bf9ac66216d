"""The bundled recipe catalog: manifest format, sporadic tables, runner.

The manifest (``data/catalog.txt``) is a versioned text file with one
recipe per line::

    schema 1
    alt-6 | alt:6 | (1,2)(3,4,5,6) | ... | ... | ... | 4,4,4;5,5,5

Element fields are either explicit disjoint cycles, words over the
group's named generators, or pair directives.  A pair directive must
appear verbatim in both slots of its pair and produces both elements at
once:

* ``search:l,m,n:seed=S`` — seeded typed-triple search in the group;
* ``lift:<pair>`` — resolve ``<pair>`` in the base group of a
  ``product:`` spec and lift it to the direct square along the coprime
  construction;
* ``<pair>|<pair>`` — resolve both pairs in the base group and join
  them coordinate by coordinate;

where ``<pair>`` is a search directive or ``words:U;V`` (two words
separated by ``;``).  Rows whose group data file is absent report
``skipped: no data`` instead of failing.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from time import perf_counter

from .bsgs import GroupHandle, build_bsgs
from .errors import (
    BeauvilleError,
    GenerationFailure,
    MissingData,
    ParseError,
)
from .families import StructureRecipe, check_expected_type, search_triple
from .groupfile import resolve_group_spec
from .perm import Permutation, parse_cycles
from .triples import (
    MixableStructure,
    TripleType,
    is_mixable,
    lift_coprime_triple,
    pair_element,
)
from .words import evaluate

CATALOG_SCHEMA = 1
SKIPPED_NO_DATA = "skipped: no data"


@dataclass(frozen=True)
class SporadicEntry:
    """One sporadic group: its data file, catalog words, and types."""

    file: str
    words: tuple[str, str, str, str]
    type6: tuple[tuple[int, int, int], tuple[int, int, int]]
    signature: tuple[int, int, int]
    squared: tuple[str, str, tuple[tuple[int, int, int], tuple[int, int, int]]] | None


# Words are evaluated at the pair (a, b) stored in each data file; the
# stored pair is chosen so that these words realize exactly these types.
# Squared rows lift a coprime rotation of each triple to the direct
# square; the Janko group has no squared row because its even triple
# (10,10,10) has no coprime pair of orders to lift along.
SPORADIC: dict[str, SporadicEntry] = {
    "m11": SporadicEntry(
        file="m11.grp",
        words=("ab(ab^2)^2", "(ab(ab^2)^2)^b", "(ab)^5", "[a,b]^2"),
        type6=((8, 8, 5), (11, 3, 11)),
        signature=(2, 4, 11),
        squared=(
            "lift:words:(ab(ab^2)^2)^b;(ab(ab^2)^2(ab(ab^2)^2)^b)^-1",
            "lift:words:(ab)^5;[a,b]^2",
            ((8, 40, 40), (11, 33, 33)),
        ),
    ),
    "m12": SporadicEntry(
        file="m12.grp",
        words=(
            "(ab)^4ba(bab)^2b",
            "((ab)^4ba(bab)^2b)^(b^2aba)",
            "ab",
            "ba",
        ),
        type6=((8, 8, 5), (11, 11, 3)),
        signature=(2, 3, 11),
        squared=(
            "lift:words:((ab)^4ba(bab)^2b)^(b^2aba)"
            ";((ab)^4ba(bab)^2b((ab)^4ba(bab)^2b)^(b^2aba))^-1",
            "lift:words:ba;(abba)^-1",
            ((8, 40, 40), (11, 33, 33)),
        ),
    ),
    "m22": SporadicEntry(
        file="m22.grp",
        words=("(ab)^3b^2ab^2", "ba(bab^2)^2a", "ab", "(ab)^4b^2ab^2"),
        type6=((8, 8, 5), (11, 7, 7)),
        signature=(2, 4, 11),
        squared=(
            "lift:words:ba(bab^2)^2a;((ab)^3b^2ab^2ba(bab^2)^2a)^-1",
            "lift:words:ab;(ab)^4b^2ab^2",
            ((8, 40, 40), (77, 77, 7)),
        ),
    ),
    "m23": SporadicEntry(
        file="m23.grp",
        words=("abab^2", "babab", "ab", "(abab)^(ba)"),
        type6=((8, 8, 11), (23, 23, 7)),
        signature=(2, 4, 23),
        squared=(
            "lift:words:babab;(abab^2babab)^-1",
            "lift:words:(abab)^(ba);(ab(abab)^(ba))^-1",
            ((8, 88, 88), (23, 161, 161)),
        ),
    ),
    "m24": SporadicEntry(
        file="m24.grp",
        words=("(ab)^4b", "(((ab)^4b)^3)^b", "ab", "ba"),
        type6=((8, 8, 5), (23, 23, 3)),
        signature=(2, 3, 23),
        squared=(
            "lift:words:(((ab)^4b)^3)^b;((ab)^4b(((ab)^4b)^3)^b)^-1",
            "lift:words:ba;(abba)^-1",
            ((8, 40, 40), (23, 69, 69)),
        ),
    ),
    "j2": SporadicEntry(
        file="j2.grp",
        words=(
            "ab(abab^2)^2ab^2",
            "(ab(abab^2)^2ab^2)^(ab^2)",
            "ab",
            "ba",
        ),
        type6=((10, 10, 10), (7, 7, 3)),
        signature=(2, 3, 7),
        squared=None,
    ),
    "hs": SporadicEntry(
        file="hs.grp",
        words=("abab^3", "b^3aba", "(ab)^3b", "((ab)^3b)^b"),
        type6=((8, 8, 15), (7, 7, 11)),
        signature=(2, 5, 11),
        squared=(
            "lift:words:b^3aba;(abab^3b^3aba)^-1",
            "lift:words:((ab)^3b)^b;((ab)^3b((ab)^3b)^b)^-1",
            ((8, 120, 120), (7, 77, 77)),
        ),
    ),
}


@dataclass(frozen=True)
class CatalogRow:
    """One manifest line."""

    tag: str
    group: str
    elements: tuple[str, str, str, str]
    expected: tuple[TripleType, TripleType]

    def to_recipe(self) -> StructureRecipe:
        return StructureRecipe(
            group=self.group,
            elements=self.elements,
            expected=self.expected,
            tag=self.tag,
        )

    def to_line(self) -> str:
        t1, t2 = self.expected
        expected = (
            f"{t1.l},{t1.m},{t1.n};{t2.l},{t2.m},{t2.n}"
        )
        return " | ".join((self.tag, self.group) + self.elements + (expected,))


@dataclass(frozen=True)
class RowResult:
    """Outcome of running one catalog row."""

    row: CatalogRow
    verdict: str  # pass | fail | skipped
    detail: str
    seconds: float
    structure: MixableStructure | None = None


def data_dir() -> str:
    return os.path.join(os.path.dirname(__file__), "data")


def default_manifest_path() -> str:
    return os.path.join(data_dir(), "catalog.txt")


def _parse_expected(text: str, lineno: int) -> tuple[TripleType, TripleType]:
    halves = text.split(";")
    if len(halves) != 2:
        raise ParseError("expected type must be 'l,m,n;l,m,n'", line=lineno)
    out = []
    for half in halves:
        parts = half.split(",")
        if len(parts) != 3:
            raise ParseError("each triple type needs three orders", line=lineno)
        try:
            out.append(TripleType(*(int(p) for p in parts)))
        except ValueError:
            raise ParseError(
                f"non-integer order in type {half!r}", line=lineno
            ) from None
    return out[0], out[1]


def load_catalog(path: str | None = None) -> list[CatalogRow]:
    """Read a manifest file into rows, schema line first."""
    if path is None:
        path = default_manifest_path()
    rows: list[CatalogRow] = []
    seen_schema = False
    tags: set[str] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            payload = line.split("#", 1)[0].strip()
            if not payload:
                continue
            if not seen_schema:
                if payload != f"schema {CATALOG_SCHEMA}":
                    raise ParseError(
                        f"manifest must open with 'schema {CATALOG_SCHEMA}'",
                        line=lineno,
                    )
                seen_schema = True
                continue
            fields = [f.strip() for f in payload.split("|")]
            if len(fields) < 7:
                raise ParseError(
                    "row needs tag | group | four elements | expected type",
                    line=lineno,
                )
            # pair combos legitimately contain '|'; rejoin the middle
            tag, group = fields[0], fields[1]
            expected = _parse_expected(fields[-1], lineno)
            middle = fields[2:-1]
            elements = _regroup_elements(middle, lineno)
            if tag in tags:
                raise ParseError(f"duplicate tag {tag!r}", line=lineno)
            tags.add(tag)
            rows.append(
                CatalogRow(
                    tag=tag, group=group, elements=elements, expected=expected
                )
            )
    if not seen_schema:
        raise ParseError("empty manifest")
    return rows


def _regroup_elements(parts: list[str], lineno: int) -> tuple[str, str, str, str]:
    """Rebuild four element fields from '|'-split pieces.

    A combo directive 'A|B' was split by the field separator.  Pair
    directives always occupy two identical consecutive slots, so the
    original grouping is recovered by trying every contiguous 4-way
    partition and keeping the one where directive fields match their
    slot partner and every multi-piece field is built from directives.
    """
    if len(parts) == 4:
        return tuple(parts)  # type: ignore[return-value]
    n = len(parts)
    if n < 4 or n > 8:
        raise ParseError("row needs exactly four element fields", line=lineno)
    candidates: list[tuple[str, str, str, str]] = []
    for i in range(1, n - 2):
        for j in range(i + 1, n - 1):
            for k in range(j + 1, n):
                fields = (
                    "|".join(parts[:i]),
                    "|".join(parts[i:j]),
                    "|".join(parts[j:k]),
                    "|".join(parts[k:]),
                )
                if _plausible_fields(fields) and fields not in candidates:
                    candidates.append(fields)
    if len(candidates) == 1:
        return candidates[0]
    if not candidates:
        raise ParseError("row needs exactly four element fields", line=lineno)
    raise ParseError("ambiguous combo grouping", line=lineno)


def _plausible_fields(fields: tuple[str, str, str, str]) -> bool:
    for a, b in ((fields[0], fields[1]), (fields[2], fields[3])):
        for field in (a, b):
            if "|" in field and not all(
                _is_pair_component(piece) for piece in field.split("|")
            ):
                return False
        paired = "|" in a or _is_pair_component(a) or _is_pair_component(b)
        if paired and a != b:
            return False
    return True


def _is_pair_component(text: str) -> bool:
    return text.startswith(("search:", "words:", "lift:"))


def dump_catalog(rows: list[CatalogRow], path: str) -> None:
    lines = [f"schema {CATALOG_SCHEMA}"]
    lines.extend(row.to_line() for row in rows)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def sporadic_rows() -> list[CatalogRow]:
    """Catalog rows for the sporadic tables (data-dependent)."""
    rows = []
    for name, entry in SPORADIC.items():
        t1, t2 = entry.type6
        rows.append(
            CatalogRow(
                tag=name,
                group=entry.file,
                elements=entry.words,
                expected=(TripleType(*t1), TripleType(*t2)),
            )
        )
        if entry.squared is None:
            continue
        even, odd, (s1, s2) = entry.squared
        rows.append(
            CatalogRow(
                tag=f"{name}-squared",
                group=f"product:{entry.file}",
                elements=(even, even, odd, odd),
                expected=(TripleType(*s1), TripleType(*s2)),
            )
        )
    return rows


def _is_pair_spec(spec: str) -> bool:
    return spec.startswith(("search:", "lift:")) or "|" in spec


def _parse_search(spec: str) -> tuple[TripleType, int]:
    body = spec[len("search:") :]
    type_text, _, seed_text = body.partition(":")
    if not seed_text.startswith("seed="):
        raise ParseError(f"bad search directive {spec!r}")
    try:
        l, m, n = (int(p) for p in type_text.split(","))
        seed = int(seed_text[len("seed=") :])
    except ValueError:
        raise ParseError(f"bad search directive {spec!r}") from None
    return TripleType(l, m, n), seed


def _word_env(group: GroupHandle) -> dict:
    if group.gen_names is None:
        raise GenerationFailure(
            f"group {group.name!r} has no named generators for word evaluation"
        )
    return dict(zip(group.gen_names, group.generators))


def _resolve_base_pair(
    spec: str, base: GroupHandle
) -> tuple[Permutation, Permutation]:
    """A search directive or words:U;V, evaluated in the base group."""
    if spec.startswith("search:"):
        t, seed = _parse_search(spec)
        found = search_triple(base, t, seed=seed)
        if found is None:
            raise GenerationFailure(
                f"search {spec!r} found nothing in {base.name}"
            )
        return found.x, found.y
    if spec.startswith("words:"):
        body = spec[len("words:") :]
        u, sep, v = body.partition(";")
        if not sep:
            raise ParseError(f"words pair needs ';' in {spec!r}")
        env = _word_env(base)
        return evaluate(u, env), evaluate(v, env)
    raise ParseError(f"unrecognized pair component {spec!r}")


def _resolve_pair(
    spec: str, group: GroupHandle, base: GroupHandle
) -> tuple[Permutation, Permutation]:
    if "|" in spec:
        left, right = spec.split("|", 1)
        ux, uy = _resolve_base_pair(left, base)
        vx, vy = _resolve_base_pair(right, base)
        return pair_element(ux, vx), pair_element(uy, vy)
    if spec.startswith("lift:"):
        u, v = _resolve_base_pair(spec[len("lift:") :], base)
        lift = lift_coprime_triple(base, u, v)
        return lift.x, lift.y
    return _resolve_base_pair(spec, group)


def _materialize(
    row: CatalogRow, group: GroupHandle, base: GroupHandle
) -> tuple[Permutation, Permutation, Permutation, Permutation]:
    out: list[Permutation] = []
    i = 0
    while i < 4:
        spec = row.elements[i]
        if _is_pair_spec(spec):
            if i == 3 or row.elements[i + 1] != spec:
                raise ParseError(
                    f"pair directive {spec!r} must fill two matching slots"
                )
            x, y = _resolve_pair(spec, group, base)
            out.extend((x, y))
            i += 2
        elif spec.startswith("(") and len(spec) > 1 and spec[1].isdigit():
            out.append(parse_cycles(spec, degree=group.degree))
            i += 1
        else:
            out.append(evaluate(spec, _word_env(group)))
            i += 1
    return out[0], out[1], out[2], out[3]


def run_row(row: CatalogRow, data: str | None = None) -> RowResult:
    """Execute one row: resolve, materialize, verify, compare types."""
    if data is None:
        data = data_dir()
    start = perf_counter()

    def done(verdict: str, detail: str, structure=None) -> RowResult:
        return RowResult(
            row=row,
            verdict=verdict,
            detail=detail,
            seconds=perf_counter() - start,
            structure=structure,
        )

    try:
        group = resolve_group_spec(row.group, data_dir=data)
    except MissingData:
        return done("skipped", SKIPPED_NO_DATA)
    except BeauvilleError as exc:
        return done("fail", f"group spec: {exc}")
    try:
        quad = _materialize(row, group, _base_group(row.group, data))
        outcome = is_mixable(group, *quad)
        if not outcome.ok:
            return done(
                "fail", "mixable violations: " + ", ".join(outcome.violations)
            )
        check_expected_type(row.to_recipe(), outcome.structure)
    except BeauvilleError as exc:
        return done("fail", str(exc))
    return done(
        "pass",
        f"type {outcome.structure.type_string()}",
        structure=outcome.structure,
    )


def _base_group(spec: str, data: str) -> GroupHandle:
    if spec.startswith("product:"):
        return resolve_group_spec(spec[len("product:") :], data_dir=data)
    return resolve_group_spec(spec, data_dir=data)


def run_catalog(
    rows: list[CatalogRow] | None = None,
    data: str | None = None,
    threads: int = 1,
) -> list[RowResult]:
    """Run every row; rows are independent, so a thread pool is legal."""
    if rows is None:
        rows = load_catalog()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda r: run_row(r, data), rows))
    return [run_row(row, data) for row in rows]

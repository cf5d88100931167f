"""Number-field records: ingestion, coclass classification, minimal tables.

A record carries one field's label (absolute discriminant or conductor),
the abelian type invariants of the 3-class groups of its four unramified
cyclic cubic extensions, and optional capitulation metadata.  The CSV
schema is

    family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra

with ATI fields in the logarithmic grammar and a required header row.
Bundled fixtures transcribe the four published minimal-discriminant and
minimal-conductor tables row for row.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CoclassLabError, RecordError, UnsupportedFamily
from .invariants import AbelianType, format_log, parse_log
from .rules import CoclassVerdict, coclass_from_class_numbers

FAMILIES = ("imaginary-quadratic", "real-quadratic", "cyclic-cubic", "pure-sextic")

_HEADER = ["family", "label", "factorization", "ati1", "ati2", "ati3", "ati4",
           "ct", "kappa", "nu", "m", "extra"]


@dataclass(frozen=True)
class FieldRecord:
    family: str
    label: int
    tau: tuple[AbelianType, AbelianType, AbelianType, AbelianType]
    factorization: str = ""
    ct: str = ""
    kappa: str = ""
    nu: int | None = None
    m: int | None = None
    graph_or_species: str = ""

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RecordError(f"unknown family {self.family!r}")
        if len(self.tau) != 4:
            raise RecordError(f"expected 4 extension invariants, got {len(self.tau)}")
        if any(t.log_order < 1 for t in self.tau):
            raise RecordError("every extension must have 3-class number >= 3")

    def log_class_numbers(self) -> tuple[int, int, int, int]:
        return tuple(t.log_order for t in self.tau)


def classify(rec: FieldRecord, strict: bool = False) -> tuple[CoclassVerdict, int]:
    """Coclass verdict plus the co-polarization log-order (the second
    largest of the four class-number logarithms)."""
    e = rec.log_class_numbers()
    verdict = coclass_from_class_numbers(*e, strict=strict)
    copol = sorted(e, reverse=True)[1]
    return verdict, copol


def minimal_table(records, family: str | None = None) -> dict[int, FieldRecord]:
    """Per-coclass minimal label, optionally restricted to one family."""
    best: dict[int, FieldRecord] = {}
    for rec in records:
        if family is not None and rec.family != family:
            continue
        cc = classify(rec)[0].coclass
        if cc not in best or rec.label < best[cc].label:
            best[cc] = rec
    return dict(sorted(best.items()))


def discriminant_from_conductor(family: str, f: int) -> int:
    """d = f^2 for cyclic cubic fields, d = -27 f^4 for pure sextic ones."""
    if family == "cyclic-cubic":
        return f * f
    if family == "pure-sextic":
        return -27 * f ** 4
    raise UnsupportedFamily(
        f"conductor-discriminant formula undefined for {family!r}")


# --------------------------------------------------------------------------
# CSV I/O
# --------------------------------------------------------------------------

def _parse_row(row: dict, line: int) -> FieldRecord:
    family = (row.get("family") or "").strip()
    label_text = (row.get("label") or "").strip()
    if not label_text.isdigit():
        raise RecordError(f"label must be a positive integer, got {label_text!r}", line)
    atis = []
    for key in ("ati1", "ati2", "ati3", "ati4"):
        text = (row.get(key) or "").strip()
        if not text:
            raise RecordError("expected 4 extension invariants", line)
        try:
            atis.append(parse_log(text))
        except CoclassLabError as exc:
            raise RecordError(f"bad {key}: {exc}", line) from exc
    def opt_int(key):
        text = (row.get(key) or "").strip()
        return int(text) if text else None
    try:
        return FieldRecord(
            family=family, label=int(label_text), tau=tuple(atis),
            factorization=(row.get("factorization") or "").strip(),
            ct=(row.get("ct") or "").strip(),
            kappa=(row.get("kappa") or "").strip(),
            nu=opt_int("nu"), m=opt_int("m"),
            graph_or_species=(row.get("extra") or "").strip())
    except RecordError as exc:
        raise RecordError(str(exc), line) from exc


def load_records(path, strict: bool = False) -> list[FieldRecord]:
    """Parse a record file; malformed rows are skipped with a diagnostic in
    lenient mode and fatal in strict mode."""
    with open(path, newline="", encoding="utf-8") as f:
        return _load_stream(f, strict, str(path))


def _load_stream(stream, strict: bool, source: str) -> list[FieldRecord]:
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        return []
    missing = [col for col in _HEADER[:7] if col not in reader.fieldnames]
    if missing:
        raise RecordError(f"{source}: header lacks columns {missing}")
    out: list[FieldRecord] = []
    for line, row in enumerate(reader, start=2):
        try:
            out.append(_parse_row(row, line))
        except RecordError as exc:
            if strict:
                raise
            print(f"{source}: skipping row ({exc})")
    return out


def save_records(records, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow(_HEADER)
        for rec in records:
            writer.writerow([
                rec.family, rec.label, rec.factorization,
                *[format_log(t) for t in rec.tau],
                rec.ct, rec.kappa,
                "" if rec.nu is None else rec.nu,
                "" if rec.m is None else rec.m,
                rec.graph_or_species])


_FIXTURES = {
    "imaginary-quadratic": "imaginary_quadratic.csv",
    "real-quadratic": "real_quadratic.csv",
    "cyclic-cubic": "cyclic_cubic.csv",
    "pure-sextic": "pure_sextic.csv",
}


def fixture_path(family: str) -> Path:
    if family not in _FIXTURES:
        raise UnsupportedFamily(f"no bundled fixture for {family!r}")
    return Path(str(resources.files("coclasslab.data").joinpath(_FIXTURES[family])))


def load_fixture(family: str) -> list[FieldRecord]:
    """The bundled minimal-label table for one family."""
    text = resources.files("coclasslab.data").joinpath(_FIXTURES[family]).read_text()
    return _load_stream(io.StringIO(text), strict=True, source=_FIXTURES[family])

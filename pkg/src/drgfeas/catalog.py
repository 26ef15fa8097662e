"""Known graphs, nonexistence results and classified families keyed by array.

The data file has one record per line::

    array | status | name | source [| note]

``#`` starts a comment. A family record uses the parameter ``t`` in its
entries and carries a range, e.g. ``2t,t-1;1,2t (t>=2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import ArrayValidationError, IntersectionArray, format_array, parse_array

STATUSES = (
    "exists-unique",
    "exists",
    "exists-possibly-nonunique",
    "nonexistent",
    "existence-open",
)
SEP = " | "


class CatalogError(ValueError):
    pass


_TERM = re.compile(r"^(\d*)(t?)([+-]\d+)?$")
_RANGE = re.compile(r"^(.*?)\s*\(t\s*>=\s*(\d+)(?:\s*,\s*t\s*<=\s*(\d+))?\)\s*$")


@dataclass(frozen=True)
class Linear:
    """``a*t + b``; ``a = 0`` for a constant entry."""

    a: int
    b: int

    @classmethod
    def parse(cls, text: str) -> Linear:
        m = _TERM.match(text.strip())
        if not m or not (m.group(1) or m.group(2)):
            raise CatalogError(f"bad family entry {text!r}")
        coef, var, off = m.groups()
        if not var:
            if off:
                raise CatalogError(f"bad family entry {text!r}")
            return cls(0, int(coef))
        return cls(int(coef) if coef else 1, int(off) if off else 0)

    def __call__(self, t: int) -> int:
        return self.a * t + self.b


@dataclass(frozen=True)
class Family:
    text: str
    b: tuple[Linear, ...]
    c: tuple[Linear, ...]
    t_min: int
    t_max: int | None = None

    @classmethod
    def parse(cls, text: str) -> Family:
        m = _RANGE.match(text)
        if not m:
            raise CatalogError(f"family {text!r} needs a range like (t>=2)")
        body, lo, hi = m.groups()
        halves = body.strip("{} ").split(";")
        if len(halves) != 2:
            raise CatalogError(f"bad family {text!r}")
        b = tuple(Linear.parse(x) for x in halves[0].split(","))
        c = tuple(Linear.parse(x) for x in halves[1].split(","))
        if len(b) != len(c) or b[0].a <= 0:
            raise CatalogError(f"bad family {text!r}: valency must grow with t")
        return cls(text, b, c, int(lo), int(hi) if hi else None)

    @property
    def D(self) -> int:
        return len(self.b)

    def instantiate(self, t: int) -> IntersectionArray:
        return IntersectionArray([f(t) for f in self.b], [f(t) for f in self.c])

    def parameter_for(self, arr: IntersectionArray) -> int | None:
        """The ``t`` whose instance is ``arr``, if any."""
        if arr.D != self.D:
            return None
        a, b = self.b[0].a, self.b[0].b
        t, r = divmod(arr.k - b, a)
        if r or t < self.t_min or (self.t_max is not None and t > self.t_max):
            return None
        try:
            return t if self.instantiate(t) == arr else None
        except ArrayValidationError:
            return None

    def members(self, t_max: int) -> list[IntersectionArray]:
        hi = t_max if self.t_max is None else min(t_max, self.t_max)
        return [self.instantiate(t) for t in range(self.t_min, hi + 1)]


@dataclass(frozen=True)
class CatalogRecord:
    array: IntersectionArray | Family
    status: str
    name: str
    source: str
    note: str = ""

    @property
    def is_family(self) -> bool:
        return isinstance(self.array, Family)

    @property
    def D(self) -> int:
        return self.array.D

    @property
    def array_text(self) -> str:
        return self.array.text if self.is_family else format_array(self.array)

    def instantiate(self, arr: IntersectionArray) -> CatalogRecord:
        """A concrete record for ``arr``, a member of this family."""
        t = self.array.parameter_for(arr)
        name = self.name.replace("K_{t,t,t}", f"K_{{{t},{t},{t}}}")
        return CatalogRecord(arr, self.status, name, self.source, _join(self.note, f"t = {t}"))

    def render(self) -> str:
        fields = [self.array_text, self.status, self.name, self.source]
        if self.note:
            fields.append(self.note)
        return SEP.join(fields)

    def sort_key(self):
        first = self.array.instantiate(self.array.t_min) if self.is_family else self.array
        return (self.D, first.k, first.b, first.c, self.is_family)


def _join(a: str, b: str) -> str:
    return f"{a}; {b}" if a else b


def parse_record(line: str) -> CatalogRecord:
    fields = line.split(SEP)
    if len(fields) not in (4, 5):
        raise CatalogError(f"expected 4 or 5 fields: {line!r}")
    fields = [f.strip() for f in fields]
    text, status, name, source = fields[:4]
    note = fields[4] if len(fields) == 5 else ""
    if status not in STATUSES:
        raise CatalogError(f"unknown status {status!r}")
    if status == "nonexistent" and not source:
        raise CatalogError(f"nonexistent record {text} needs a source")
    arr = Family.parse(text) if "t" in text else parse_array(text)
    return CatalogRecord(arr, status, name, source, note)


class Catalog:
    """Immutable after loading. ``lines`` keeps comments so ``dumps`` round-trips."""

    def __init__(self, lines: list[str | CatalogRecord]):
        self.lines = tuple(lines)
        self.records = tuple(x for x in lines if isinstance(x, CatalogRecord))
        self._exact = {}
        self._families = []
        for rec in self.records:
            if rec.is_family:
                self._families.append(rec)
            elif rec.array in self._exact:
                raise CatalogError(f"duplicate record {rec.array_text}")
            else:
                self._exact[rec.array] = rec
        for arr in self._exact:
            for fam in self._families:
                if fam.array.parameter_for(arr) is not None:
                    raise CatalogError(f"{format_array(arr)} duplicates family {fam.array_text}")

    @classmethod
    def loads(cls, text: str) -> Catalog:
        lines = []
        for raw in text.splitlines():
            if not raw.strip() or raw.lstrip().startswith("#"):
                lines.append(raw)
            else:
                lines.append(parse_record(raw))
        return cls(lines)

    @classmethod
    def load(cls, path: str | Path) -> Catalog:
        return cls.loads(Path(path).read_text(encoding="utf-8"))

    def dumps(self) -> str:
        return "".join(
            (x.render() if isinstance(x, CatalogRecord) else x) + "\n" for x in self.lines
        )

    def lookup(self, arr: IntersectionArray) -> CatalogRecord | None:
        rec = self._exact.get(arr)
        if rec is not None:
            return rec
        for fam in self._families:
            if fam.array.parameter_for(arr) is not None:
                return fam.instantiate(arr)
        return None

    def list(self, D: int | None = None, status: str | None = None) -> list[CatalogRecord]:
        out = [
            r
            for r in self.records
            if (D is None or r.D == D) and (status is None or r.status == status)
        ]
        return sorted(out, key=CatalogRecord.sort_key)

    def arrays(self, t_max: int, D: int | None = None, status: str | None = None):
        """Concrete arrays of the listed records, families instantiated up to ``t_max``."""
        out = []
        for rec in self.list(D, status):
            out.extend(rec.array.members(t_max) if rec.is_family else [rec.array])
        return sorted(out)

    def __len__(self):
        return len(self.records)


_DEFAULT: Catalog | None = None


def default_catalog() -> Catalog:
    global _DEFAULT
    if _DEFAULT is None:
        text = resources.files("drgfeas").joinpath("data/catalog.txt").read_text("utf-8")
        _DEFAULT = Catalog.loads(text)
    return _DEFAULT

"""Exhaustive classification of the power maps of GF(2^n), one coset at a time."""

from __future__ import annotations

import csv
import io
import json
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import families as fam
from . import gf2n, spectra
from .spectra import ClassificationRecord

SCHEMA_VERSION = 1
MAX_SCAN_DEGREE = 14
MAX_BU_SCAN_DEGREE = 12

FLAGS = ("apn", "locally_apn", "zero_apn", "permutation")
DEFAULT_CLAIMS = ("locally_apn & !apn", "zero_apn & !apn", "bu=2 & !apn")
CSV_COLUMNS = ("rep", "coset_size", "du", "bu", "apn", "locally_apn", "zero_apn", "permutation", "families")


class BudgetError(ValueError):
    """The requested scan is too expensive for this tool."""


class ClaimError(ValueError):
    pass


def coset_reps(n: int) -> list[int]:
    if not 2 <= n <= MAX_SCAN_DEGREE:
        raise BudgetError(f"coset enumeration limited to 2 <= n <= {MAX_SCAN_DEGREE}")
    return list(fam.coset_reps(n))


# -- claims -------------------------------------------------------------------

_ATOM = re.compile(r"^(!|not\s+|¬)?\s*(apn|locally_apn|zero_apn|permutation|bu2|bu\s*=\s*\d+|du\s*=\s*\d+)$")


@dataclass(frozen=True)
class Claim:
    """Conjunction of flag atoms, e.g. ``locally_apn & !apn`` or ``bu=2 & !apn``."""

    text: str
    atoms: tuple[tuple[str, int | None, bool], ...]  # (name, value, negated)

    @classmethod
    def parse(cls, text: str) -> "Claim":
        parts = [p.strip() for p in re.split(r"&|∧|\band\b", text)]
        atoms = []
        for part in parts:
            m = _ATOM.match(part)
            if not m:
                raise ClaimError(f"cannot parse claim atom {part!r} in {text!r}")
            neg = m.group(1) is not None
            body = m.group(2).replace(" ", "")
            if body == "bu2":
                body = "bu=2"
            if "=" in body:
                name, value = body.split("=")
                atoms.append((name, int(value), neg))
            else:
                atoms.append((body, None, neg))
        return cls(text, tuple(atoms))

    @property
    def needs_bu(self) -> bool:
        return any(name == "bu" for name, _, _ in self.atoms)

    def holds(self, rec: ClassificationRecord) -> bool:
        for name, value, neg in self.atoms:
            if value is None:
                v = getattr(rec, f"is_{name}")
            elif name == "bu":
                if rec.bu is None:
                    raise ClaimError(f"claim {self.text!r} needs boomerang data")
                v = rec.bu == value
            else:
                v = rec.du == value
            if v == neg:
                return False
        return True

    def family_kinds(self) -> list[str]:
        kinds = []
        for name, value, neg in self.atoms:
            if neg:
                continue
            if name == "bu" and value == 2:
                kinds.append("bu2")
            elif name in ("apn", "locally_apn", "zero_apn"):
                kinds.append(name)
        return kinds

    def default_families(self) -> list[str]:
        kinds = self.family_kinds()
        return [name for name, spec in fam.CATALOG.items() if any(k in spec.claims for k in kinds)]


# -- report -------------------------------------------------------------------

@dataclass
class ScanReport:
    n: int
    modulus: int
    with_bu: bool
    rows: list[ClassificationRecord]
    summary: dict = field(default_factory=dict)
    unexplained: dict[str, list[int]] = field(default_factory=dict)

    def row(self, rep: int) -> ClassificationRecord:
        rep = fam.coset_rep(rep, self.n)
        for r in self.rows:
            if r.coset_rep == rep:
                return r
        raise KeyError(rep)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "n": self.n,
            "modulus": self.modulus,
            "with_bu": self.with_bu,
            "rows": [_row_to_json(r) for r in self.rows],
            "summary": self.summary,
            "unexplained": self.unexplained,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScanReport":
        if data.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {data.get('schema_version')!r}")
        n = data["n"]
        rows = [_row_from_json(n, r) for r in data["rows"]]
        return cls(n, data["modulus"], data["with_bu"], rows, data["summary"], data["unexplained"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            j = _row_to_json(r)
            w.writerow(["" if j["bu"] is None else j["bu"] if c == "bu" else
                        "|".join(j[c]) if c == "families" else
                        str(j[c]).lower() if isinstance(j[c], bool) else j[c]
                        for c in CSV_COLUMNS])
        return buf.getvalue()


def _row_to_json(r: ClassificationRecord) -> dict:
    return {
        "rep": r.coset_rep,
        "coset_size": len(fam.coset(r.coset_rep, r.n)),
        "du": r.du,
        "bu": r.bu,
        "apn": r.is_apn,
        "locally_apn": r.is_locally_apn,
        "zero_apn": r.is_zero_apn,
        "permutation": r.is_permutation,
        "families": list(r.matched_families),
    }


def _row_from_json(n: int, j: dict) -> ClassificationRecord:
    return ClassificationRecord(
        n=n, d=j["rep"], coset_rep=j["rep"], du=j["du"], bu=j["bu"],
        is_apn=j["apn"], is_locally_apn=j["locally_apn"], is_zero_apn=j["zero_apn"],
        is_permutation=j["permutation"], matched_families=list(j["families"]),
    )


def summarize(rows: list[ClassificationRecord], with_bu: bool) -> dict:
    combos: dict[str, int] = {}
    for r in rows:
        key = "+".join(f for f in FLAGS if getattr(r, f"is_{f}")) or "none"
        combos[key] = combos.get(key, 0) + 1
    out = {
        "cosets": len(rows),
        "exponents": sum(len(fam.coset(r.coset_rep, r.n)) for r in rows),
    }
    for f in FLAGS:
        out[f] = sum(getattr(r, f"is_{f}") for r in rows)
    out["locally_apn_not_apn"] = sum(r.is_locally_apn and not r.is_apn for r in rows)
    out["zero_apn_not_apn"] = sum(r.is_zero_apn and not r.is_apn for r in rows)
    out["bu2_not_apn"] = sum(r.bu == 2 and not r.is_apn for r in rows) if with_bu else None
    out["combinations"] = dict(sorted(combos.items()))
    return out


# -- scanning -----------------------------------------------------------------

def _classify_reps(args) -> list[ClassificationRecord]:
    f, reps, with_bu = args
    return [spectra.classify(f, d, with_bu) for d in reps]


def check_budget(n: int, with_bu: bool) -> None:
    if with_bu and n > MAX_BU_SCAN_DEGREE:
        raise BudgetError(f"boomerang scan limited to n <= {MAX_BU_SCAN_DEGREE}; drop --bu")
    if n > MAX_SCAN_DEGREE or n < 2:
        raise BudgetError(f"scan limited to 2 <= n <= {MAX_SCAN_DEGREE}")


def scan(n: int, with_bu: bool = False, workers: int = 1, modulus: int | None = None) -> ScanReport:
    """Classify one representative per cyclotomic coset of exponents mod 2^n - 1."""
    check_budget(n, with_bu)
    f = gf2n.make_field(n, modulus)
    reps = coset_reps(n)
    if workers <= 1:
        rows = _classify_reps((f, reps, with_bu))
    else:
        stripes = [reps[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for part in pool.map(_classify_reps, [(f, s, with_bu) for s in stripes]) for r in part]
    rows.sort(key=lambda r: r.coset_rep)
    report = ScanReport(n, f.modulus, with_bu, rows, summarize(rows, with_bu))
    for text in DEFAULT_CLAIMS:
        claim = Claim.parse(text)
        if claim.needs_bu and not with_bu:
            continue
        report.unexplained[text] = coverage(report, claim).unexplained
    return report


@dataclass
class Coverage:
    claim: str
    families: list[str]
    satisfying: list[int]
    explained: dict[int, list[str]]
    unexplained: list[int]


def coverage(report: ScanReport, claim: Claim | str, families: list[str] | None = None,
             with_inverses: bool = False) -> Coverage:
    """Split the cosets satisfying ``claim`` into those some family explains and the rest.

    With ``with_inverses`` a permutation exponent also counts as explained
    when the coset of its inverse mod 2^n - 1 meets a family.
    """
    if isinstance(claim, str):
        claim = Claim.parse(claim)
    if claim.needs_bu and not report.with_bu:
        raise ClaimError(f"claim {claim.text!r} needs a report built with boomerang data")
    names = list(families) if families is not None else claim.default_families()
    for name in names:
        fam.get_family(name)
    satisfying, explained, unexplained = [], {}, []
    for r in report.rows:
        if not claim.holds(r):
            continue
        satisfying.append(r.coset_rep)
        hits = [name for name in names if fam.covered_by(name, report.n, r.coset_rep)]
        if not hits and with_inverses and r.is_permutation:
            inv = pow(r.coset_rep, -1, (1 << report.n) - 1)
            hits = [f"{name}^-1" for name in names if fam.covered_by(name, report.n, inv)]
        if hits:
            explained[r.coset_rep] = hits
        else:
            unexplained.append(r.coset_rep)
    return Coverage(claim.text, names, satisfying, explained, unexplained)


def explained_locally_apn(report: ScanReport) -> Coverage:
    """Locally-APN non-APN cosets against the wider explanation used when the
    scan results are described in the literature.

    A coset counts as explained when it is linear (rep 1), has the j(2^m - 1)
    shape for either parity of m, is an f2 exponent, or is the reciprocity
    partner 2^(n-t+1) - 1 of an explained or APN exponent 2^t - 1.
    """
    n = report.n
    claim = Claim.parse("locally_apn & !apn")
    basis = {fam.coset_rep(d, n) for d in fam.f1_shape_exponents(n)}
    basis |= {fam.coset_rep(d, n) for name in ("f1", "f2")
              for d in _safe_cosets(name, n)}
    basis.add(1)
    apn = {r.coset_rep for r in report.rows if r.is_apn}
    for lo, hi in (fam.blondeau_pairs(n) if n >= 3 else []):
        a, b = fam.coset_rep(lo, n), fam.coset_rep(hi, n)
        if a in basis or a in apn:
            basis.add(b)
        if b in basis or b in apn:
            basis.add(a)
    satisfying = [r.coset_rep for r in report.rows if claim.holds(r)]
    explained = {rep: ["closure"] for rep in satisfying if rep in basis}
    unexplained = [rep for rep in satisfying if rep not in basis]
    return Coverage(claim.text, ["f1-shape", "f2", "blondeau", "linear"], satisfying, explained, unexplained)


def _safe_cosets(name: str, n: int) -> list[int]:
    try:
        return [d for d, _ in fam.gen_exponents(name, n)]
    except fam.FamilyShapeError:
        return []

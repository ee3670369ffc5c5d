"""Bundled reference dataset and measurement file I/O.

The bundled dataset is the published comparison of ten lightweight block
ciphers against an AES-192 reference: a general algorithmic profile (GAP),
a software profile (SWP) measured on a multi-core Xeon host, and a hardware
profile (HWP) from a Stratix-IV FPGA flow.  Values are stored exactly as
printed in the source tables.

Three printed cells are provably inconsistent with the dataset's own
published classification table and are replaced when the corrections
overlay is enabled (the default for reproduction):

* HIGHT propagation delay 127.78 ns is a decimal-shift misprint; 12.778 ns
  is the value consistent with the published hardware-lightness score 2.02.
* HIGHT cache miss ratio is printed as 0.000, which has no valid ratio;
  back-solving the published software-lightness score 3.40 gives 1.0e-4.
* KTANTAN-32 hardware execution time 0.09 µs is a two-decimal rounding that
  breaks the published hardware-lightness score 3.88; throughput and block
  size imply 0.086 µs (32 bits / 372.09 Mbps), which reproduces it.

The GAP table keeps the printed key sizes even where they conflict with the
canonical cipher specifications (XTEA is printed as 96 though the cipher
uses 128-bit keys; 3-WAY is printed as 128 though it uses 96-bit keys).
The executable cipher implementations in :mod:`lis.ciphers` use the
canonical sizes; the dataset reproduces the published study.

Measurement files are CSV with header ``algorithm,indicator,value``, UTF-8,
``.`` decimal separator, ``#`` comments.  Units are fixed by indicator id
(µs for et_sw/et_hw, Mbps for th_sw/th_hw, ns for pd, mW for pc, bits for
ks/bs, counts for nr/alut/lr, fractions for ac/cmr).  Floats are rendered
with up to six significant digits; tables whose values carry more precision
than that are rounded at serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import ParseError, UsageError
from .indicators import (CompositeDef, CompositeTerm, MeasurementTable,
                         builtin_indicators)

REFERENCE = "AES"

#: Algorithms in canonical (dataset) order; the reference comes last.
ALGORITHMS = ("Skipjack", "XTEA", "3-WAY", "HIGHT",
              "KATAN-32", "KATAN-48", "KATAN-64",
              "KTANTAN-32", "KTANTAN-48", "KTANTAN-64", "AES")

# General algorithmic profile: mapped complexity fraction, key size, rounds,
# block size.  Complexity is "almost quadratic" (0.8) for every entry.
_GAP = {
    "Skipjack":   (0.8, 80, 32, 64),
    "XTEA":       (0.8, 96, 64, 64),
    "3-WAY":      (0.8, 128, 11, 96),
    "HIGHT":      (0.8, 128, 32, 64),
    "KATAN-32":   (0.8, 80, 254, 32),
    "KATAN-48":   (0.8, 80, 254, 48),
    "KATAN-64":   (0.8, 80, 254, 64),
    "KTANTAN-32": (0.8, 80, 254, 32),
    "KTANTAN-48": (0.8, 80, 254, 48),
    "KTANTAN-64": (0.8, 80, 254, 64),
    "AES":        (0.8, 192, 12, 128),
}

# Software profile: execution time (µs/block), throughput (Mbps), clocks per
# instruction, cache miss ratio.
_SWP = {
    "Skipjack":   (0.410, 156.098, 1.327, 0.164),
    "XTEA":       (2.570, 24.903, 0.729, 0.033),
    "3-WAY":      (2.320, 41.379, 1.107, 0.036),
    "HIGHT":      (8.640, 7.407, 1.330, 0.000),
    "KATAN-32":   (27.460, 1.165, 0.634, 0.006),
    "KATAN-48":   (40.330, 1.190, 0.634, 0.004),
    "KATAN-64":   (52.830, 1.211, 0.627, 0.003),
    "KTANTAN-32": (791.080, 0.040, 0.986, 0.001),
    "KTANTAN-48": (803.320, 0.060, 0.975, 0.001),
    "KTANTAN-64": (821.830, 0.078, 0.965, 0.001),
    "AES":        (23.210, 5.515, 1.235, 0.004),
}

# Hardware profile: execution time (µs), throughput (Mbps), propagation
# delay (ns), adaptive LUTs, logic registers, power (mW).
_HWP = {
    "Skipjack":   (7.49, 8.55, 11.90, 554.0, 142.0, 331.01),
    "XTEA":       (6.18, 10.35, 11.10, 2799.0, 135.0, 332.77),
    "3-WAY":      (0.80, 120.00, 3.82, 77.0, 167.0, 331.01),
    "HIGHT":      (1.85, 34.59, 127.78, 2036.0, 72.0, 332.66),
    "KATAN-32":   (1.47, 21.77, 43.57, 2145.0, 540.0, 328.63),
    "KATAN-48":   (1.89, 25.40, 79.94, 3982.0, 556.0, 329.95),
    "KATAN-64":   (2.38, 26.89, 78.31, 4315.0, 572.0, 330.94),
    "KTANTAN-32": (0.09, 372.09, 40.03, 1947.0, 112.0, 328.58),
    "KTANTAN-48": (0.10, 480.00, 72.78, 3662.0, 128.0, 329.81),
    "KTANTAN-64": (0.15, 438.36, 79.30, 4075.0, 144.0, 331.00),
    "AES":        (1.46, 6.83, 5.35, 3998.0, 750.0, 654.87),
}

_GAP_IDS = ("ac", "ks", "nr", "bs")
_SWP_IDS = ("et_sw", "th_sw", "cpi", "cmr")
_HWP_IDS = ("et_hw", "th_hw", "pd", "alut", "lr", "pc")


@dataclass(frozen=True)
class CorrectionRecord:
    algorithm: str
    indicator: str
    printed: float
    corrected: float
    justification: str


CORRECTIONS = (
    CorrectionRecord(
        "HIGHT", "pd", 127.78, 12.778,
        "decimal-shift misprint; 12.778 ns reproduces the published "
        "hardware lightness score 2.02"),
    CorrectionRecord(
        "HIGHT", "cmr", 0.000, 1.0e-4,
        "printed as 0.000, which admits no ratio; back-solved from the "
        "published software lightness score 3.40"),
    CorrectionRecord(
        "KTANTAN-32", "et_hw", 0.09, 0.086,
        "two-decimal rounding that breaks the published hardware lightness "
        "score 3.88; block size over throughput gives 32/372.09 = 0.086 µs"),
)


@dataclass(frozen=True)
class ReferenceDataset:
    """The bundled profiles with the corrections flag they were built with."""

    gap: MeasurementTable
    swp: MeasurementTable
    hwp: MeasurementTable
    corrections_applied: bool

    def merged(self) -> MeasurementTable:
        return self.gap.merged(self.swp).merged(self.hwp)


def _build_table(data, ids) -> MeasurementTable:
    t = MeasurementTable(REFERENCE)
    for alg in ALGORITHMS:
        for ind, val in zip(ids, data[alg]):
            if val > 0:
                t.set(alg, ind, val)
            # zero cells (HIGHT cmr, uncorrected) are left absent; the
            # evaluation layer raises on the gap when the term is required
    return t


def load_bundled_dataset(apply_corrections: bool = True) -> ReferenceDataset:
    """Return the bundled GAP/SWP/HWP tables.

    With corrections disabled the tables equal the printed values exactly;
    the HIGHT cache-miss cell (printed 0.000) is stored as 0 and rejected at
    evaluation time.  With corrections enabled, exactly the cells listed in
    :data:`CORRECTIONS` differ.
    """
    gap = _build_table(_GAP, _GAP_IDS)
    swp = _build_table(_SWP, _SWP_IDS)
    hwp = _build_table(_HWP, _HWP_IDS)
    if not apply_corrections:
        # keep the printed zero visible to the domain check: model the
        # HIGHT cmr cell as an explicit zero by bypassing validation
        swp._cells[("HIGHT", "cmr")] = 0.0
        return ReferenceDataset(gap, swp, hwp, False)
    for rec in CORRECTIONS:
        profile = {"pd": hwp, "cmr": swp, "et_hw": hwp}[rec.indicator]
        profile.set(rec.algorithm, rec.indicator, rec.corrected)
    return ReferenceDataset(gap, swp, hwp, True)


# ---------------------------------------------------------------------------
# measurement CSV

CSV_HEADER = "algorithm,indicator,value"


def _format_value(v: float) -> str:
    """Canonical float rendering: up to 6 significant digits, no locale."""
    s = format(v, ".6g")
    # normalize exponent form like 1e-04 -> 0.0001 for small magnitudes
    if "e" in s or "E" in s:
        f = float(s)
        alt = format(f, ".10f").rstrip("0").rstrip(".")
        if len(alt) <= 12 and float(alt) == f:
            return alt
    return s


def parse_measurements(text: str, registry=None) -> MeasurementTable:
    """Parse a measurement CSV into a table.

    Rejects malformed headers, unknown indicator ids, non-numeric or
    non-positive values, and duplicate cells, naming the offending line.
    """
    registry = registry if registry is not None else builtin_indicators()
    lines = text.splitlines()
    table = MeasurementTable()
    header_seen = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not header_seen:
            if line != CSV_HEADER:
                raise ParseError(
                    f"expected header {CSV_HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        parts = line.split(",")
        if len(parts) != 3:
            raise ParseError(f"expected 3 comma-separated fields, got {len(parts)}",
                             lineno)
        alg, ind, raw_val = (p.strip() for p in parts)
        if not alg:
            raise ParseError("empty algorithm name", lineno)
        if ind not in registry:
            raise ParseError(f"unknown indicator id {ind!r}", lineno)
        try:
            val = float(raw_val)
        except ValueError:
            raise ParseError(f"non-numeric value {raw_val!r}", lineno)
        if not val > 0:
            raise ParseError(f"non-positive value {raw_val!r} for ({alg}, {ind})",
                             lineno)
        if table.has(alg, ind):
            raise ParseError(f"duplicate cell ({alg}, {ind})", lineno)
        table.set(alg, ind, val)
    if not header_seen:
        raise ParseError(f"missing header {CSV_HEADER!r}", 1)
    return table


def serialize_table(table: MeasurementTable, comments=()) -> str:
    """Canonical CSV: algorithms in table order, indicators in registry order."""
    out = [f"# {c}" for c in comments]
    out.append(CSV_HEADER)
    inds = table.indicators()
    for alg in table.algorithms:
        for ind in inds:
            if table.has(alg, ind):
                out.append(f"{alg},{ind},{_format_value(table.value(alg, ind))}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# composite definition JSON

def parse_composite_defs(text: str, registry=None) -> list[CompositeDef]:
    """Parse one composite definition or an array of them from JSON.

    Schema per composite: ``{"id": str, "terms": [{"indicator": str,
    "orientation": "direct"|"inverse", "weight": number}]}``; orientation
    defaults to inverse and weight to 1.
    """
    registry = registry if registry is not None else builtin_indicators()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")
    if isinstance(doc, dict):
        doc = [doc]
    if not isinstance(doc, list):
        raise UsageError("composite definitions must be an object or array")
    defs = []
    for entry in doc:
        if not isinstance(entry, dict) or not entry.get("id"):
            raise UsageError("every composite definition needs a nonempty 'id'")
        cid = entry["id"]
        raw_terms = entry.get("terms")
        if not raw_terms:
            raise UsageError(f"composite {cid!r}: empty term list")
        terms = []
        for rt in raw_terms:
            ind = rt.get("indicator")
            if ind not in registry:
                raise UsageError(f"composite {cid!r}: unknown indicator {ind!r}")
            orientation = rt.get("orientation", "inverse")
            weight = rt.get("weight", 1.0)
            if not isinstance(weight, (int, float)) or not weight > 0:
                raise UsageError(
                    f"composite {cid!r}: weight for {ind!r} must be a "
                    f"positive number, got {weight!r}")
            try:
                terms.append(CompositeTerm(ind, orientation, float(weight)))
            except UsageError as e:
                raise UsageError(f"composite {cid!r}: {e}")
        defs.append(CompositeDef(cid, tuple(terms)))
    return defs


def serialize_composite_defs(defs) -> str:
    doc = [{"id": d.id,
            "terms": [{"indicator": t.indicator, "orientation": t.orientation,
                       "weight": t.weight} for t in d.terms]}
           for d in defs]
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# synthesis-report helper schema

#: Column-to-indicator mapping for hardware rows exported from synthesis
#: tool reports.
SYNTHESIS_COLUMNS = {
    "ET_hw_us": "et_hw",
    "TH_hw_mbps": "th_hw",
    "PD_ns": "pd",
    "ALUT": "alut",
    "LR": "lr",
    "PC_mW": "pc",
}


def parse_synthesis_table(text: str) -> MeasurementTable:
    """Parse the wide hardware-export CSV into measurement rows.

    Expected header: ``algorithm`` followed by any of the
    :data:`SYNTHESIS_COLUMNS` keys, comma separated.
    """
    lines = [l for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty synthesis export", 1)
    header = [h.strip() for h in lines[0].split(",")]
    if header[:1] != ["algorithm"]:
        raise ParseError("first column must be 'algorithm'", 1)
    for col in header[1:]:
        if col not in SYNTHESIS_COLUMNS:
            raise ParseError(f"unknown synthesis column {col!r}", 1)
    table = MeasurementTable()
    for lineno, line in enumerate(lines[1:], start=2):
        parts = [p.strip() for p in line.split(",")]
        if len(parts) != len(header):
            raise ParseError(
                f"expected {len(header)} fields, got {len(parts)}", lineno)
        alg = parts[0]
        for col, raw in zip(header[1:], parts[1:]):
            try:
                val = float(raw)
            except ValueError:
                raise ParseError(f"non-numeric value {raw!r} in {col}", lineno)
            if not val > 0:
                raise ParseError(f"non-positive value {raw!r} in {col}", lineno)
            table.set(alg, SYNTHESIS_COLUMNS[col], val)
    return table

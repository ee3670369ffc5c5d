"""Key indicators and their geometric-mean combination.

Measurements are normalized into ratios against a reference algorithm and
aggregated into composite scores.  A composite is a weighted geometric mean
of per-indicator ratios; with a direct orientation the ratio is
``value / reference`` (bigger is better), with an inverse orientation it is
``reference / value`` (smaller is better).  Because the aggregate is a
geometric mean of ratios, the ranking of algorithms does not depend on which
algorithm is chosen as the reference, and rescaling the unit of any single
indicator cancels out.

All values are required to be strictly positive: a zero measurement has no
meaningful ratio and is rejected rather than clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DataError, UsageError

# Analysis profiles: themed groups of indicators.
GAP = "GAP"   # general algorithmic profile
SWP = "SWP"   # software profile
HWP = "HWP"   # hardware profile

DIRECT = "direct"
INVERSE = "inverse"

# Ranks treat scores within this tolerance as tied.
RANK_TIE_TOL = 1e-9


@dataclass(frozen=True)
class IndicatorDef:
    """A single measurable characteristic of an algorithm implementation.

    Attributes:
        id: Short identifier, unique within a registry.
        profile: Analysis profile the indicator belongs to (GAP, SWP, HWP,
            or a user-defined group name).
        unit: Fixed unit for all measurements of this indicator.
        kind: "quantitative" for measured values, "rubric" for fractions
            mapped from a qualitative scale.
        description: Human-readable summary.
    """

    id: str
    profile: str
    unit: str
    kind: str = "quantitative"
    description: str = ""


def builtin_indicators() -> dict[str, IndicatorDef]:
    """The built-in indicator registry, in canonical serialization order."""
    defs = [
        IndicatorDef("ac", GAP, "fraction", "rubric",
                     "algorithm complexity class mapped onto (0, 1]"),
        IndicatorDef("ks", GAP, "bits", description="key size"),
        IndicatorDef("nr", GAP, "count", description="number of rounds"),
        IndicatorDef("bs", GAP, "bits", description="block size"),
        IndicatorDef("et_sw", SWP, "µs", description="software execution time per block"),
        IndicatorDef("th_sw", SWP, "Mbps", description="software throughput"),
        IndicatorDef("cpi", SWP, "dimensionless", description="clock cycles per instruction"),
        IndicatorDef("cmr", SWP, "fraction", description="cache miss ratio"),
        IndicatorDef("et_hw", HWP, "µs", description="hardware execution time"),
        IndicatorDef("th_hw", HWP, "Mbps", description="hardware throughput"),
        IndicatorDef("pd", HWP, "ns", description="combinational propagation delay"),
        IndicatorDef("alut", HWP, "count", description="adaptive lookup tables used"),
        IndicatorDef("lr", HWP, "count", description="logic registers used"),
        IndicatorDef("pc", HWP, "mW", description="power consumption"),
    ]
    return {d.id: d for d in defs}


@dataclass(frozen=True)
class RubricScale:
    """Ordered qualitative scale mapped onto fractions in (0, 1]."""

    points: tuple[tuple[str, float], ...]

    def __post_init__(self):
        fracs = [f for _, f in self.points]
        if any(f <= 0 or f > 1 for f in fracs):
            raise UsageError("rubric fractions must lie in (0, 1]")
        if any(b <= a for a, b in zip(fracs, fracs[1:])):
            raise UsageError("rubric fractions must be strictly increasing")

    def map_label(self, label: str) -> float:
        """Return the fraction for a scale label; this fraction is the value
        stored in measurement tables."""
        for name, frac in self.points:
            if name == label:
                return frac
        valid = ", ".join(name for name, _ in self.points)
        raise UsageError(f"unknown rubric label {label!r}; valid labels: {valid}")


#: Complexity rubric: logarithmic-low through higher-than-quadratic.
COMPLEXITY_RUBRIC = RubricScale((
    ("LL", 0.2), ("LH", 0.4), ("L", 0.6), ("AQ", 0.8), ("HQ", 1.0),
))


def map_rubric(scale: RubricScale, label: str) -> float:
    return scale.map_label(label)


class MeasurementTable:
    """Per-algorithm indicator values, all strictly positive.

    Algorithms keep insertion order (the canonical row order for
    serialization).  The reference algorithm is optional until composites
    are evaluated.
    """

    def __init__(self, reference: str | None = None):
        self.reference = reference
        self._algorithms: list[str] = []
        self._cells: dict[tuple[str, str], float] = {}

    @property
    def algorithms(self) -> list[str]:
        return list(self._algorithms)

    def indicators(self) -> list[str]:
        """Indicator ids present, registry order first, then first-seen order."""
        present = {ind for _, ind in self._cells}
        ordered = [i for i in builtin_indicators() if i in present]
        extra = []
        for _, ind in self._cells:
            if ind not in ordered and ind not in extra:
                extra.append(ind)
        return ordered + sorted(extra)

    def set(self, algorithm: str, indicator: str, value: float) -> None:
        if not value > 0:
            raise DataError(
                f"non-positive value {value!r} for indicator {indicator!r} "
                f"of algorithm {algorithm!r}")
        if algorithm not in self._algorithms:
            self._algorithms.append(algorithm)
        self._cells[(algorithm, indicator)] = float(value)

    def has(self, algorithm: str, indicator: str) -> bool:
        return (algorithm, indicator) in self._cells

    def value(self, algorithm: str, indicator: str) -> float:
        try:
            return self._cells[(algorithm, indicator)]
        except KeyError:
            raise UsageError(
                f"no value for indicator {indicator!r} of algorithm {algorithm!r}")

    def cells(self) -> dict[tuple[str, str], float]:
        return dict(self._cells)

    def with_reference(self, reference: str) -> "MeasurementTable":
        t = MeasurementTable(reference)
        t._algorithms = list(self._algorithms)
        t._cells = dict(self._cells)
        return t

    def merged(self, other: "MeasurementTable") -> "MeasurementTable":
        """Union of two tables; overlapping cells must agree."""
        t = MeasurementTable(self.reference or other.reference)
        for table in (self, other):
            for (alg, ind), val in table._cells.items():
                if (alg, ind) in t._cells and t._cells[(alg, ind)] != val:
                    raise UsageError(
                        f"conflicting values for ({alg}, {ind}): "
                        f"{t._cells[(alg, ind)]} vs {val}")
                t.set(alg, ind, val)
        return t

    def scaled(self, indicator: str, factor: float) -> "MeasurementTable":
        """Copy with one indicator rescaled by a positive factor (unit change)."""
        if not factor > 0:
            raise UsageError("scale factor must be positive")
        t = MeasurementTable(self.reference)
        for (alg, ind), val in self._cells.items():
            t.set(alg, ind, val * factor if ind == indicator else val)
        return t

    def __eq__(self, other):
        return (isinstance(other, MeasurementTable)
                and self.reference == other.reference
                and self._algorithms == other._algorithms
                and self._cells == other._cells)

    def __repr__(self):
        return (f"MeasurementTable({len(self._algorithms)} algorithms, "
                f"{len(self._cells)} cells, reference={self.reference!r})")


@dataclass(frozen=True)
class CompositeTerm:
    indicator: str
    orientation: str = INVERSE
    weight: float = 1.0

    def __post_init__(self):
        if self.orientation not in (DIRECT, INVERSE):
            raise UsageError(f"orientation must be {DIRECT!r} or {INVERSE!r}, "
                             f"got {self.orientation!r}")
        if not self.weight > 0:
            raise UsageError(f"weight for {self.indicator!r} must be positive, "
                             f"got {self.weight}")


@dataclass(frozen=True)
class CompositeDef:
    """A combined indicator: a weighted geometric mean over indicator ratios."""

    id: str
    terms: tuple[CompositeTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise UsageError(f"composite {self.id!r} has no terms")

    def reweighted(self, weights: dict[str, float]) -> "CompositeDef":
        """Copy with per-indicator weight multipliers applied to matching terms."""
        terms = tuple(
            CompositeTerm(t.indicator, t.orientation,
                          t.weight * weights.get(t.indicator, 1.0))
            for t in self.terms)
        return CompositeDef(self.id, terms)


@dataclass(frozen=True)
class TermWarning:
    """A term dropped during reconciliation, with the algorithms lacking it."""

    composite_id: str
    indicator: str
    missing_algorithms: tuple[str, ...]

    def message(self) -> str:
        who = ", ".join(self.missing_algorithms)
        return (f"composite {self.composite_id!r}: dropped indicator "
                f"{self.indicator!r} for all algorithms (missing for: {who})")


@dataclass(frozen=True)
class CompositeScoreSet:
    composite_id: str
    scores: dict[str, float]
    ranks: dict[str, int]
    effective_terms: tuple[CompositeTerm, ...] = field(default=())
    warnings: tuple[TermWarning, ...] = field(default=())


def ratio(value: float, ref_value: float, orientation: str,
          algorithm: str = "?", indicator: str = "?") -> float:
    """Normalized performance ratio of one measurement against the reference."""
    if not value > 0 or not ref_value > 0:
        raise DataError(
            f"indicator {indicator!r} of algorithm {algorithm!r}: ratios need "
            f"strictly positive values (got {value!r} vs reference {ref_value!r})")
    if orientation == DIRECT:
        return value / ref_value
    if orientation == INVERSE:
        return ref_value / value
    raise UsageError(f"unknown orientation {orientation!r}")


def geometric_mean(ratios) -> float:
    """Plain geometric mean, computed in log space.

    Products over many terms can span several orders of magnitude, so the
    mean is evaluated as exp(mean(log)) rather than via the raw product.
    """
    ratios = list(ratios)
    if not ratios:
        raise UsageError("geometric mean of an empty sequence")
    acc = 0.0
    for r in ratios:
        if not r > 0:
            raise DataError(f"geometric mean requires positive ratios, got {r!r}")
        acc += math.log(r)
    return math.exp(acc / len(ratios))


def weighted_geometric_mean(ratios, weights) -> float:
    """Geometric mean with per-ratio weights: (prod r_k^w_k)^(1/sum w)."""
    ratios = list(ratios)
    weights = list(weights)
    if not ratios:
        raise UsageError("weighted geometric mean of an empty sequence")
    if len(ratios) != len(weights):
        raise UsageError(
            f"{len(ratios)} ratios but {len(weights)} weights")
    acc = 0.0
    total = 0.0
    for r, w in zip(ratios, weights):
        if not w > 0:
            raise UsageError(f"weights must be positive, got {w!r}")
        if not r > 0:
            raise DataError(f"geometric mean requires positive ratios, got {r!r}")
        acc += w * math.log(r)
        total += w
    return math.exp(acc / total)


def reconcile_terms(cdef: CompositeDef, table: MeasurementTable):
    """Drop any term that is missing for at least one algorithm.

    Geometric means cannot absorb absent terms for a single algorithm without
    breaking reference invariance, so a missing cell removes the term for
    everyone and shrinks the radical degree.  Returns the effective term
    tuple and one warning per dropped term.
    """
    effective = []
    warnings = []
    for term in cdef.terms:
        missing = tuple(a for a in table.algorithms
                        if not table.has(a, term.indicator))
        if missing:
            warnings.append(TermWarning(cdef.id, term.indicator, missing))
        else:
            effective.append(term)
    return tuple(effective), tuple(warnings)


def rank_scores(scores: dict[str, float]) -> dict[str, int]:
    """Competition ranking, highest score first; ties within RANK_TIE_TOL
    share a rank and the following rank skips."""
    ordered = sorted(scores, key=lambda a: (-scores[a], a))
    ranks: dict[str, int] = {}
    for pos, alg in enumerate(ordered):
        if pos and abs(scores[alg] - scores[ordered[pos - 1]]) <= RANK_TIE_TOL:
            ranks[alg] = ranks[ordered[pos - 1]]
        else:
            ranks[alg] = pos + 1
    return ranks


def evaluate_composite(cdef: CompositeDef, table: MeasurementTable) -> CompositeScoreSet:
    """Score every algorithm in the table against the reference.

    The reference row scores exactly 1 when every effective term is present
    for it.  Raises a usage error when reconciliation leaves no terms and a
    configuration (usage) error when the reference algorithm is absent.
    """
    if not table.reference:
        raise UsageError(f"composite {cdef.id!r}: no reference algorithm set")
    if table.reference not in table.algorithms:
        raise UsageError(
            f"composite {cdef.id!r}: reference algorithm {table.reference!r} "
            f"is not in the table")
    effective, warnings = reconcile_terms(cdef, table)
    if not effective:
        raise UsageError(
            f"composite {cdef.id!r}: no effective terms remain after "
            f"reconciling missing data")
    ref = table.reference
    scores = {}
    for alg in table.algorithms:
        rs = [ratio(table.value(alg, t.indicator), table.value(ref, t.indicator),
                    t.orientation, algorithm=alg, indicator=t.indicator)
              for t in effective]
        scores[alg] = weighted_geometric_mean(rs, [t.weight for t in effective])
    return CompositeScoreSet(cdef.id, scores, rank_scores(scores),
                             effective, warnings)


def builtin_composites() -> dict[str, CompositeDef]:
    """The six built-in composites, all terms with weight 1.

    The complexity and security-strength composites use inverse orientation
    throughout; that is the orientation that reproduces the bundled
    classification table (see dataset documentation).
    """
    inv = INVERSE
    drt = DIRECT

    def terms(spec):
        return tuple(CompositeTerm(i, o) for i, o in spec)

    li = terms([("ac", inv), ("ks", inv), ("nr", inv), ("bs", inv),
                ("et_sw", inv), ("th_sw", drt), ("cpi", inv), ("cmr", inv),
                ("et_hw", inv), ("th_hw", drt), ("pd", inv), ("alut", inv),
                ("lr", inv), ("pc", inv)])
    ci = terms([("ac", inv), ("ks", inv), ("nr", inv), ("bs", inv), ("cpi", inv)])
    ssi = terms([("ac", inv), ("ks", inv), ("nr", inv), ("bs", inv)])
    hli = terms([("et_hw", inv), ("th_hw", drt), ("pd", inv), ("alut", inv),
                 ("lr", inv), ("pc", inv)])
    sli = terms([("et_sw", inv), ("th_sw", drt), ("cpi", inv), ("cmr", inv)])
    si = terms([("et_sw", inv), ("th_sw", drt), ("et_hw", inv), ("th_hw", drt),
                ("pd", inv)])
    return {
        "li": CompositeDef("li", li),
        "ci": CompositeDef("ci", ci),
        "ssi": CompositeDef("ssi", ssi),
        "hli": CompositeDef("hli", hli),
        "sli": CompositeDef("sli", sli),
        "si": CompositeDef("si", si),
    }

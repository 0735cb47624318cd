"""Decision procedures for the wreath decomposition of lexicographic products.

For graphs X, Y write S_Y for the ordered pairs of distinct vertices of Y
with equal open neighbourhoods and T_Y for those with equal closed
neighbourhoods. Aut(X∘Y) equals the wreath product Aut(X) wr Aut(Y) iff

    (S_Y nonempty => X connected) and (T_Y nonempty => complement of X connected)

and for regular X, Y the same condition decides the free wreath
decomposition of the quantum automorphism group.
"""

from __future__ import annotations

import enum
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .autgroup import automorphism_group, wreath_embedding_order
from .graph import Graph, all_graphs, complement, is_connected, lex_product, regularity
from .graph_io import write_graph6
from .spectral import SpectralVerdict, spectral_condition

DEFAULT_AUT_LIMIT = 24
SWEEP_MAX_X = 5
SWEEP_MAX_Y = 4


class SweepLimitError(ValueError):
    pass


@dataclass(frozen=True)
class SabidussiSets:
    s_pairs: tuple[tuple[int, int], ...]
    t_pairs: tuple[tuple[int, int], ...]


def _twin_pairs(rows) -> tuple[tuple[int, int], ...]:
    n = len(rows)
    return tuple((a, b) for a in range(n) for b in range(n) if a != b and rows[a] == rows[b])


def sabidussi_sets(g: Graph) -> SabidussiSets:
    closed = [row | (1 << i) for i, row in enumerate(g.rows)]
    return SabidussiSets(_twin_pairs(g.rows), _twin_pairs(closed))


def classical_condition(x: Graph, y: Graph) -> bool:
    sets = sabidussi_sets(y)
    if sets.s_pairs and not is_connected(x):
        return False
    if sets.t_pairs and not is_connected(complement(x)):
        return False
    return True


class Quantum(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class QuantumVerdict:
    status: Quantum
    reason: str | None = None


def quantum_verdict(x: Graph, y: Graph) -> QuantumVerdict:
    irregular = [name for name, g in (("X", x), ("Y", y)) if regularity(g) is None]
    if irregular:
        return QuantumVerdict(Quantum.NOT_APPLICABLE, " and ".join(irregular) + " not regular")
    return QuantumVerdict(Quantum.HOLDS if classical_condition(x, y) else Quantum.FAILS)


# reports

def _summary(g: Graph) -> dict:
    valence = regularity(g)
    return {
        "order": g.vertex_count,
        "valence": valence if valence is not None else "irregular",
        "connected": is_connected(g),
        "complement_connected": is_connected(complement(g)),
    }


@dataclass
class Report:
    x_summary: dict
    y_summary: dict
    sabidussi_y: dict
    classical_holds: bool
    quantum: Quantum
    spectral: SpectralVerdict
    cross_check: dict | None = None
    quantum_reason: str | None = None
    cross_check_reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "x_summary": self.x_summary,
            "y_summary": self.y_summary,
            "sabidussi_y": self.sabidussi_y,
            "classical_holds": self.classical_holds,
            "quantum": self.quantum.value,
            "quantum_reason": self.quantum_reason,
            "spectral": self.spectral.to_dict(),
            "cross_check": self.cross_check,
            "cross_check_reason": self.cross_check_reason,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            x_summary=d["x_summary"],
            y_summary=d["y_summary"],
            sabidussi_y=d["sabidussi_y"],
            classical_holds=d["classical_holds"],
            quantum=Quantum(d["quantum"]),
            spectral=SpectralVerdict.from_dict(d["spectral"]),
            cross_check=d.get("cross_check"),
            quantum_reason=d.get("quantum_reason"),
            cross_check_reason=d.get("cross_check_reason"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        def fmt(s):
            return (f"order {s['order']}, valence {s['valence']}, "
                    f"{'connected' if s['connected'] else 'disconnected'}, complement "
                    f"{'connected' if s['complement_connected'] else 'disconnected'}")
        lines = [
            f"X: {fmt(self.x_summary)}",
            f"Y: {fmt(self.y_summary)}",
            f"|S_Y| = {self.sabidussi_y['s_count']}, |T_Y| = {self.sabidussi_y['t_count']}",
            f"classical wreath criterion: {'holds' if self.classical_holds else 'fails'}",
            f"quantum free wreath verdict: {self.quantum.value}"
            + (f" ({self.quantum_reason})" if self.quantum_reason else ""),
        ]
        sp = self.spectral
        if sp.applicable:
            line = f"spectral condition: {'holds' if sp.holds else 'fails'}"
            if sp.witness is not None:
                line += f" (common value ~ {sp.witness:g})"
        else:
            line = f"spectral condition: not applicable ({sp.reason})"
        lines.append(line)
        if self.cross_check is not None:
            cc = self.cross_check
            lines.append(f"cross-check: |Aut(X∘Y)| = {cc['aut_product_order']}, "
                         f"|Aut(X) wr Aut(Y)| = {cc['wreath_order']}, "
                         f"{'equal' if cc['equal'] else 'different'}")
        elif self.cross_check_reason:
            lines.append(f"cross-check skipped: {self.cross_check_reason}")
        if "s_pairs" in self.sabidussi_y:
            lines.append(f"S_Y pairs: {self.sabidussi_y['s_pairs']}")
            lines.append(f"T_Y pairs: {self.sabidussi_y['t_pairs']}")
        return "\n".join(lines)


def cross_check(x: Graph, y: Graph) -> dict:
    product_order = automorphism_group(lex_product(x, y)).order
    wreath = wreath_embedding_order(x, y)
    return {
        "aut_product_order": str(product_order),
        "wreath_order": str(wreath),
        "equal": product_order == wreath,
    }


def analyze(x: Graph, y: Graph, *, with_cross_check: bool = True,
            aut_limit: int = DEFAULT_AUT_LIMIT, verbose: bool = False) -> Report:
    sets = sabidussi_sets(y)
    sab = {"s_count": len(sets.s_pairs), "t_count": len(sets.t_pairs)}
    if verbose:
        sab["s_pairs"] = [list(p) for p in sets.s_pairs]
        sab["t_pairs"] = [list(p) for p in sets.t_pairs]
    quantum = quantum_verdict(x, y)
    report = Report(
        x_summary=_summary(x),
        y_summary=_summary(y),
        sabidussi_y=sab,
        classical_holds=classical_condition(x, y),
        quantum=quantum.status,
        quantum_reason=quantum.reason,
        spectral=spectral_condition(x, y),
    )
    if with_cross_check:
        size = x.vertex_count * y.vertex_count
        if size <= aut_limit:
            report.cross_check = cross_check(x, y)
        else:
            report.cross_check_reason = f"product has {size} vertices, above aut limit {aut_limit}"
    return report


# exhaustive sweep

@dataclass
class SweepSummary:
    pairs_checked: int = 0
    agreements: int = 0
    wreath_pairs: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.agreements == self.pairs_checked


def graphs_up_to(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in all_graphs(n)]


def _sweep_chunk(args) -> tuple[int, int, int, list]:
    x, ys = args
    checked = agree = wreath = 0
    bad = []
    ax = automorphism_group(x).order
    for y, ay in ys:
        predicted = classical_condition(x, y)
        actual = automorphism_group(lex_product(x, y)).order == ax ** y.vertex_count * ay
        checked += 1
        wreath += actual
        if predicted == actual:
            agree += 1
        else:
            bad.append((write_graph6(x).decode(), write_graph6(y).decode(), predicted, actual))
    return checked, agree, wreath, bad


def verify_sabidussi(max_x: int, max_y: int, workers: int = 1) -> SweepSummary:
    """Check the criterion against exact group orders on all small labeled graphs."""
    if not (1 <= max_x <= SWEEP_MAX_X and 1 <= max_y <= SWEEP_MAX_Y):
        raise SweepLimitError(
            f"sweep limited to max_x <= {SWEEP_MAX_X}, max_y <= {SWEEP_MAX_Y}; got {max_x}, {max_y}")
    ys = [(y, automorphism_group(y).order) for y in graphs_up_to(max_y)]
    jobs = [(x, ys) for x in graphs_up_to(max_x)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_chunk, jobs, chunksize=8))
    else:
        results = map(_sweep_chunk, jobs)
    summary = SweepSummary()
    for checked, agree, wreath, bad in results:
        summary.pairs_checked += checked
        summary.agreements += agree
        summary.wreath_pairs += wreath
        summary.counterexamples.extend(bad)
    summary.counterexamples.sort()
    return summary


def default_workers() -> int:
    env = os.environ.get("LEXWREATH_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1

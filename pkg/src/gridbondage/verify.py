"""Replay harness: solver results against the closed-form predictions.

Each ``verify_*`` function returns a :class:`CaseReport` holding the
computed values, the predicted ones and a list of named checks. Sweeps
collect case reports over a rectangle of path orders and serialize to JSON
or a flat table.
"""

from __future__ import annotations

import csv
import io
import json
import platform
import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

from . import __version__
from .bondage import BondageResult, bondage_number, is_bondage_set, lemma1_bound, lemma2_bound
from .domination import (
    DEFAULT_CAP, EnumerationIncomplete, domination_number, enumerate_gamma_sets,
    max_disjoint_gamma_sets, property_P_gamma_sets,
)
from .graph import Graph, GraphError, GridSpec, bits, connected_components, grid_graph, path_graph, \
    remove_edges, to_mask
from .oracle import (
    KNOWN_DIRECT_VALUES, Prediction, ResidueClass, canonical_path_gamma_sets, gamma_path,
    gamma_strong, is_degenerate, predict_bondage_direct, predict_bondage_strong,
    witness_bondage_set_strong,
)

REPORT_VERSION = 1

# Domination numbers of direct products stated alongside the direct-product theorem.
KNOWN_DIRECT_GAMMA = {(4, 4): 4, (6, 5): 10, (5, 6): 10}

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerifyOptions:
    k_max: Optional[int] = None
    cap: int = DEFAULT_CAP
    workers: int = 1
    deterministic: bool = True
    time_budget: Optional[float] = 60.0
    sweep_budget: Optional[float] = None

    def to_dict(self) -> dict:
        return {"k_max": self.k_max, "cap": self.cap, "workers": self.workers,
                "deterministic": self.deterministic, "time_budget": self.time_budget,
                "sweep_budget": self.sweep_budget}


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    degenerate: bool = False

    def to_dict(self) -> dict:
        d = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.degenerate:
            d["degenerate"] = True
        return d


@dataclass
class CaseReport:
    kind: str
    n: int
    m: Optional[int] = None
    gamma_computed: Optional[int] = None
    gamma_oracle: Optional[int] = None
    bondage: Optional[BondageResult] = None
    bondage_predicted: Optional[Prediction] = None
    lemma1: Optional[int] = None
    lemma2: Optional[int] = None
    witness: Optional[tuple] = None
    witness_checked: Optional[bool] = None
    disjoint_gamma_sets: Optional[int] = None
    disjoint_lower_bound: Optional[int] = None
    degenerate: bool = False
    incomplete: bool = False
    checks: List[Check] = field(default_factory=list)
    findings: List[str] = field(default_factory=list)
    extra: Dict[str, object] = field(default_factory=dict)
    wall_time: Dict[str, float] = field(default_factory=dict)

    def check(self, name: str, ok: bool, detail: str = "") -> Check:
        """Record a pass/fail check; a failure keeps ``detail`` with the offending values."""
        c = Check(name, PASS if ok else FAIL, "" if ok else detail,
                  degenerate=self.degenerate and not ok)
        self.checks.append(c)
        if c.degenerate:
            self.findings.append(f"degenerate-parameter disagreement in {name}: {detail}")
        return c

    def skip(self, name: str, reason: str) -> None:
        self.checks.append(Check(name, SKIPPED, reason))

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL and not c.degenerate]

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if any(c.status == FAIL for c in self.checks):
            return "degenerate-fail"
        if self.incomplete:
            return "incomplete"
        return "pass"

    @property
    def bondage_value(self) -> Optional[int]:
        return self.bondage.value if self.bondage is not None else None

    def _spec(self):
        if self.kind in GridSpec.KINDS:
            return GridSpec(self.kind, self.n, self.m)
        return None

    def to_dict(self) -> dict:
        spec = self._spec()
        b = None
        if self.bondage is not None:
            r = self.bondage
            b = {"value": r.value, "exact": r.exact, "ruled_out": r.ruled_out,
                 "witness": _render_edges(r.witness, spec),
                 "evaluated_subsets": r.evaluated_subsets, "cache_hits": r.cache_hits,
                 "solver_calls": r.solver_calls, "timed_out": r.timed_out}
        return {
            "spec": {"kind": self.kind, "n": self.n, "m": self.m},
            "status": self.status,
            "degenerate": self.degenerate,
            "incomplete": self.incomplete,
            "gamma_computed": self.gamma_computed,
            "gamma_oracle": self.gamma_oracle,
            "bondage_computed": b,
            "bondage_predicted": self.bondage_predicted.to_dict() if self.bondage_predicted else None,
            "lemma1": self.lemma1,
            "lemma2": self.lemma2,
            "witness": _render_edges(self.witness, spec),
            "witness_checked": self.witness_checked,
            "disjoint_gamma_sets": self.disjoint_gamma_sets,
            "disjoint_lower_bound": self.disjoint_lower_bound,
            "checks": [c.to_dict() for c in self.checks],
            "findings": list(self.findings),
            "extra": self.extra,
            "wall_time": {k: round(v, 6) for k, v in self.wall_time.items()},
        }

    def row(self) -> dict:
        p = self.bondage_predicted
        b = self.bondage
        return {"n": self.n, "m": self.m, "gamma": self.gamma_computed,
                "gamma_oracle": self.gamma_oracle,
                "b": None if b is None else str(b),
                "b_lo": p.low if p else None, "b_hi": p.high if p else None,
                "lemma1": self.lemma1, "lemma2": self.lemma2, "status": self.status}


def _render_edges(edges, spec: Optional[GridSpec]):
    if edges is None:
        return None
    if spec is None:
        return [[u + 1, v + 1] for u, v in edges]
    return [spec.edge_coords(e) for e in edges]


class _Timer:
    def __init__(self, report: CaseReport, phase: str):
        self.report, self.phase = report, phase

    def __enter__(self):
        self.t0 = time.perf_counter()

    def __exit__(self, *exc):
        self.report.wall_time[self.phase] = time.perf_counter() - self.t0


def _bondage_checks(rep: CaseReport, g: Graph, options: VerifyOptions, upper: int) -> None:
    """Shared bondage, bound and disjoint-γ-set checks for a product case."""
    with _Timer(rep, "bounds"):
        rep.lemma1 = lemma1_bound(g)
        rep.lemma2 = lemma2_bound(g)
    with _Timer(rep, "bondage"):
        k_max = options.k_max or min(rep.lemma1, rep.lemma2)
        r = bondage_number(g, k_max=k_max, workers=options.workers,
                           deterministic=options.deterministic, time_budget=options.time_budget)
    rep.bondage = r
    pred = rep.bondage_predicted
    if r.exact:
        b = r.value
        if pred.is_exact:
            rep.check("bondage_prediction", b == pred.value,
                      f"computed b={b}, predicted {pred.value} ({pred.source})")
        else:
            rep.check("bondage_prediction", pred.contains(b),
                      f"computed b={b}, predicted [{pred.low},{pred.high}] ({pred.source})")
        rep.check("bondage_range", 1 <= b <= upper, f"computed b={b}, expected 1 <= b <= {upper}")
        rep.check("bondage_le_lemma1", b <= rep.lemma1, f"b={b} > lemma1 bound {rep.lemma1}")
        rep.check("bondage_le_lemma2", b <= rep.lemma2, f"b={b} > lemma2 bound {rep.lemma2}")
        rep.check("witness_raises_gamma", is_bondage_set(g, r.witness),
                  f"solver witness {r.witness} does not raise γ")
    else:
        rep.incomplete = True
        lo = r.ruled_out + 1
        if lo > pred.high:
            rep.check("bondage_prediction", False,
                      f"b > {r.ruled_out} exceeds predicted high {pred.high}")
        else:
            rep.skip("bondage_prediction", f"search stopped with b > {r.ruled_out}")
        for name in ("bondage_range", "bondage_le_lemma1", "bondage_le_lemma2"):
            rep.skip(name, f"search stopped with b > {r.ruled_out}")

    with _Timer(rep, "disjoint"):
        try:
            t = max_disjoint_gamma_sets(g, options.cap)
        except EnumerationIncomplete as exc:
            rep.incomplete = True
            rep.skip("disjoint_gamma_set_bound", str(exc))
            return
    rep.disjoint_gamma_sets = t
    rep.disjoint_lower_bound = -(-t // 2)
    if r.exact:
        rep.check("disjoint_gamma_set_bound", r.value >= rep.disjoint_lower_bound,
                  f"b={r.value} < ceil({t}/2)")
    else:
        rep.skip("disjoint_gamma_set_bound", "bondage not exact")


def verify_strong_case(n: int, m: int, options: Optional[VerifyOptions] = None) -> CaseReport:
    options = options or VerifyOptions()
    rep = CaseReport("strong", n, m, degenerate=is_degenerate(n, m))
    rep.extra["residue_class"] = str(ResidueClass.of(n, m))
    g = grid_graph("strong", n, m)
    with _Timer(rep, "gamma"):
        rep.gamma_computed = domination_number(g)
    rep.gamma_oracle = gamma_strong(n, m)
    rep.check("gamma_formula", rep.gamma_computed == rep.gamma_oracle,
              f"computed γ={rep.gamma_computed}, formula {rep.gamma_oracle}")
    rep.bondage_predicted = predict_bondage_strong(n, m)
    _bondage_checks(rep, g, options, upper=5)
    rep.check("lemma1_le_5", rep.lemma1 <= 5, f"lemma1 bound {rep.lemma1} > 5")

    with _Timer(rep, "witness"):
        w = witness_bondage_set_strong(n, m)
        if w is not None:
            rep.witness = w
            rep.witness_checked = is_bondage_set(g, w)
    if w is not None:
        rep.check("construction_raises_gamma", rep.witness_checked,
                  f"constructed edges {_render_edges(w, GridSpec('strong', n, m))} leave γ unchanged")
        if rep.bondage_value is not None:
            rep.check("construction_optimal", len(w) == rep.bondage_value,
                      f"construction has {len(w)} edges, b={rep.bondage_value}")

    pred = rep.bondage_predicted
    if pred.conjecture is not None and rep.bondage_value is not None:
        verdict = "agrees with" if rep.bondage_value == pred.conjecture else "contradicts"
        rep.findings.append(
            f"b(P{n} strong P{m}) = {rep.bondage_value} {verdict} conjectured value {pred.conjecture}")
    return rep


def verify_direct_case(n: int, m: int, options: Optional[VerifyOptions] = None) -> CaseReport:
    options = options or VerifyOptions()
    rep = CaseReport("direct", n, m)
    g = grid_graph("direct", n, m)
    with _Timer(rep, "gamma"):
        rep.gamma_computed = domination_number(g)
        comps = connected_components(g)
        comp_gammas = [domination_number(g.induced(c)) for c in comps]
    rep.extra["components"] = [{"size": len(c), "gamma": cg} for c, cg in zip(comps, comp_gammas)]
    rep.check("gamma_is_component_sum", rep.gamma_computed == sum(comp_gammas),
              f"γ={rep.gamma_computed}, component sum {sum(comp_gammas)}")
    rep.gamma_oracle = KNOWN_DIRECT_GAMMA.get((n, m))
    if rep.gamma_oracle is not None:
        rep.check("gamma_known_value", rep.gamma_computed == rep.gamma_oracle,
                  f"computed γ={rep.gamma_computed}, stated {rep.gamma_oracle}")
    rep.bondage_predicted = predict_bondage_direct(n, m)
    _bondage_checks(rep, g, options, upper=2)
    known = KNOWN_DIRECT_VALUES.get((n, m))
    if known is not None:
        if rep.bondage_value is not None:
            rep.check("bondage_known_value", rep.bondage_value == known,
                      f"computed b={rep.bondage_value}, stated {known}")
        else:
            rep.skip("bondage_known_value", "bondage not exact")
    return rep


def _one_based(s) -> List[int]:
    return [v + 1 for v in sorted(s)]


def verify_path_observations(n: int, cap: int = DEFAULT_CAP) -> CaseReport:
    """Uniqueness and membership facts about the γ-sets of P_n, by enumeration."""
    if n < 2:
        raise GraphError(f"path order must be >= 2, got {n}")
    rep = CaseReport("path", n)
    g = path_graph(n)
    t0 = time.perf_counter()
    fam = enumerate_gamma_sets(g, cap)
    rep.gamma_computed = fam.gamma
    rep.gamma_oracle = gamma_path(n)
    rep.check("gamma_formula", fam.gamma == rep.gamma_oracle,
              f"computed γ={fam.gamma}, formula {rep.gamma_oracle}")
    rep.extra["gamma_sets"] = len(fam.sets)
    if fam.truncated:
        rep.incomplete = True
        rep.skip("path_observation", f"more than {cap} γ-sets")
        rep.wall_time["enumerate"] = time.perf_counter() - t0
        return rep

    canon = canonical_path_gamma_sets(n)
    prop = property_P_gamma_sets(g, cap).sets
    rep.extra["property_P_sets"] = [_one_based(s) for s in prop]
    union = frozenset().union(*fam.sets)
    r = n % 3
    if r == 0:
        rep.check("unique_gamma_set", len(fam.sets) == 1, f"{len(fam.sets)} γ-sets")
        rep.check("gamma_set_is_canonical", list(fam.sets) == canon,
                  f"found {[_one_based(s) for s in fam.sets]}, expected {_one_based(canon[0])}")
        rep.check("canonical_has_property_P", list(prop) == canon,
                  f"property-P sets {rep.extra['property_P_sets']}")
    elif r == 1:
        rep.check("unique_property_P_set", list(prop) == canon,
                  f"property-P sets {rep.extra['property_P_sets']}, expected {_one_based(canon[0])}")
        rep.check("every_vertex_in_some_gamma_set", union == frozenset(range(n)),
                  f"uncovered {_one_based(set(range(n)) - union)}")
    else:
        rep.check("two_property_P_sets", sorted(map(sorted, prop)) == sorted(map(sorted, canon)),
                  f"property-P sets {rep.extra['property_P_sets']}, "
                  f"expected {[_one_based(s) for s in canon]}")
        expected = frozenset(j for j in range(n) if (j + 1) % 3 != 0)
        rep.check("gamma_set_union_is_nonmultiples_of_3", union == expected,
                  f"union {_one_based(union)}, expected {_one_based(expected)}")
        pairs = [(1 << i) | (1 << (i + 1)) for i in range(0, n - 1, 3)]
        masks = [to_mask(s) for s in fam.sets]
        meets = [s for s in masks if all(s & p for p in pairs)]
        missing = [j for j in bits(to_mask(expected)) if not any(s >> j & 1 for s in meets)]
        rep.check("consecutive_pair_property_existential", not missing,
                  f"no pair-meeting γ-set contains {_one_based(missing)}")
        rep.extra["consecutive_pair_property_universal"] = len(meets) == len(masks)
    rep.wall_time["enumerate"] = time.perf_counter() - t0
    return rep


def _check_gadget_params(n: int, m: int) -> None:
    if n < 2 or m < 2 or n % 3 != 2 or m % 3 != 2:
        raise GraphError(f"gadget needs n, m >= 2 with n, m = 2 mod 3, got n={n}, m={m}")


def build_gadget_H(n: int, m: int) -> Graph:
    """P_n strong P_2 glued to P_2 strong P_m along one 2x2 block.

    Strip A (``P_n strong P_2``) takes indices ``0..2n-1`` row-major. Its
    rows n-1, n are identified with columns m-1, m of strip B
    (``P_2 strong P_m``); the remaining B vertices follow.
    """
    _check_gadget_params(n, m)
    a = grid_graph("strong", n, 2)
    b = grid_graph("strong", 2, m)
    base = 2 * n

    def b_index(v: int) -> int:
        x, j = divmod(v, m)  # 0-based row x in {0, 1}, column j
        if j >= m - 2:
            return (n - 2 + x) * 2 + (j - (m - 2))
        return base + x * (m - 2) + j

    order = 2 * n + 2 * m - 4
    adj = [0] * order
    for u, v in a.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for u, v in b.edges:
        x, y = b_index(u), b_index(v)
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    return Graph(adj)


def gadget_block_diagonals(n: int, m: int) -> tuple:
    """The two diagonals of the identified block, as edges of ``build_gadget_H(n, m)``."""
    _check_gadget_params(n, m)
    i = n - 2  # 0-based row of u_{n-1} in strip A
    e = (2 * i, 2 * (i + 1) + 1)
    f = (2 * i + 1, 2 * (i + 1))
    return tuple(sorted((e, f)))


def verify_gadget_identity(n: int, m: int) -> CaseReport:
    _check_gadget_params(n, m)
    if n < 5 or m < 5:
        raise GraphError(f"gadget identity needs n, m >= 5, got n={n}, m={m}")
    rep = CaseReport("gadget", n, m)
    t, r = (n - 2) // 3, (m - 2) // 3
    t0 = time.perf_counter()
    h = build_gadget_H(n, m)
    g_h = domination_number(h)
    g_hef = domination_number(remove_edges(h, gadget_block_diagonals(n, m)))
    g_full = domination_number(grid_graph("strong", n, m))
    g_inner = domination_number(grid_graph("strong", n - 2, m - 2))
    rep.wall_time["gamma"] = time.perf_counter() - t0
    rep.gamma_computed = g_full
    rep.extra.update({"gamma_H": g_h, "gamma_H_minus_ef": g_hef, "gamma_inner": g_inner,
                      "order_H": h.order})
    rep.check("gamma_H", g_h == t + r + 1, f"γ(H)={g_h}, expected t+r+1={t + r + 1}")
    rep.check("gamma_H_minus_diagonals", g_hef == t + r + 2,
              f"γ(H-{{e,f}})={g_hef}, expected t+r+2={t + r + 2}")
    rep.check("decomposition", g_full == g_inner + g_h,
              f"γ(P{n} strong P{m})={g_full}, γ(inner)+γ(H)={g_inner}+{g_h}")
    return rep


@dataclass
class SweepReport:
    kind: str
    cases: List[CaseReport]
    options: VerifyOptions

    @property
    def summary(self) -> dict:
        out = {"cases": len(self.cases), "pass": 0, "fail": 0, "degenerate_fail": 0, "skipped": 0}
        for c in self.cases:
            for ch in c.checks:
                if ch.status == FAIL:
                    out["degenerate_fail" if ch.degenerate else "fail"] += 1
                else:
                    out[ch.status] += 1
        out["incomplete_cases"] = sum(c.incomplete for c in self.cases)
        return out

    @property
    def failed(self) -> bool:
        return self.summary["fail"] > 0

    @property
    def incomplete(self) -> bool:
        return any(c.incomplete for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "version": REPORT_VERSION,
            "kind": self.kind,
            "options": self.options.to_dict(),
            "environment": {"solver_version": __version__, "workers": self.options.workers,
                            "time_budget": self.options.time_budget,
                            "python": platform.python_version()},
            "cases": [c.to_dict() for c in self.cases],
            "summary": self.summary,
        }


def sweep(n_range: Iterable[int], m_range: Iterable[int], kind: str = "strong",
          options: Optional[VerifyOptions] = None) -> SweepReport:
    """Run the per-case verifier over ``n_range x m_range`` in (n, m) order."""
    options = options or VerifyOptions()
    ns, ms = sorted(set(n_range)), sorted(set(m_range))
    if not ns or (kind != "path" and not ms):
        raise ValueError("empty parameter range")
    start = time.monotonic()
    cases = []
    pairs = [(n, None) for n in ns] if kind == "path" else [(n, m) for n in ns for m in ms]
    for n, m in pairs:
        if options.sweep_budget is not None and time.monotonic() - start > options.sweep_budget:
            rep = CaseReport(kind, n, m, incomplete=True)
            rep.skip("case", "sweep time budget exhausted")
            cases.append(rep)
            continue
        if kind == "strong":
            cases.append(verify_strong_case(n, m, options))
        elif kind == "direct":
            cases.append(verify_direct_case(n, m, options))
        elif kind == "path":
            cases.append(verify_path_observations(n, options.cap))
        elif kind == "gadget":
            cases.append(verify_gadget_identity(n, m))
        else:
            raise ValueError(f"unknown sweep kind {kind!r}")
    return SweepReport(kind, cases, options)


def dumps_report(report: SweepReport) -> str:
    return dumps_json(report.to_dict())


def dumps_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


TABLE_COLUMNS = ("n", "m", "gamma", "gamma_oracle", "b", "b_lo", "b_hi", "lemma1", "lemma2", "status")


def report_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    for c in report.cases:
        w.writerow({k: "" if v is None else v for k, v in c.row().items()})
    return buf.getvalue()


def report_table(report: SweepReport) -> str:
    rows = [[("-" if v is None else str(v)) for v in c.row().values()] for c in report.cases]
    widths = [max([len(h)] + [len(r[i]) for r in rows]) for i, h in enumerate(TABLE_COLUMNS)]
    fmt = "  ".join(f"{{:>{w}}}" for w in widths)
    lines = [fmt.format(*TABLE_COLUMNS)] + [fmt.format(*r) for r in rows]
    s = report.summary
    lines.append(f"cases={s['cases']} pass={s['pass']} fail={s['fail']} "
                 f"degenerate_fail={s['degenerate_fail']} skipped={s['skipped']}")
    for c in report.cases:
        for ch in c.checks:
            if ch.status == FAIL:
                tag = " (degenerate)" if ch.degenerate else ""
                lines.append(f"FAIL{tag} n={c.n} m={c.m} {ch.name}: {ch.detail}")
        for note in c.findings:
            if not note.startswith("degenerate-parameter"):
                lines.append(f"finding n={c.n} m={c.m}: {note}")
    return "\n".join(lines) + "\n"

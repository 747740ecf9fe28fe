"""End-to-end pipelines and the comparison reports behind the CLI."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import hook_formulas as hf
from .lpm_core import (
    LatticePathMatroid,
    PathPair,
    border_strip_pair,
    enumerate_bases,
    hook_pair,
)
from .poly import X, Poly
from .polytope import (
    CapExceededError,
    EdgeMetrics,
    FaceLattice,
    Facet,
    Point,
    affine_dimension,
    build_face_lattice,
    edge_metrics,
    enumerate_facets,
    f_vector,
    incidence_vertices,
)
from .toric import GradedPoset, ToricPair, is_eulerian, toric_pairs

JOBS_ENV = "LPM_TORIC_JOBS"


@dataclass(frozen=True)
class Caps:
    max_dim: int = 10
    max_vertices: int = 40
    max_faces: int = 5000
    max_bases: int = 10**5


@dataclass
class SweepConfig:
    alpha_max: int = 4
    beta_max: int | None = None
    m_max: int = 8
    n_max: int = 8
    q_margin: int = 2
    caps: Caps = field(default_factory=Caps)
    fmt: str = "json"
    out: str | None = None

    def __post_init__(self):
        if self.beta_max is None:
            self.beta_max = self.alpha_max
        if min(self.alpha_max, self.beta_max, self.m_max) < 1 or self.n_max < 0:
            raise ValueError("sweep bounds must be at least 1")
        if self.fmt not in ("json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")


@dataclass
class Pipeline:
    pair: PathPair
    matroid: LatticePathMatroid
    points: list[Point]
    dimension: int
    facets: list[Facet]
    lattice: FaceLattice
    poset: GradedPoset
    pairs: list[ToricPair]

    @property
    def toric(self) -> ToricPair:
        return self.pairs[self.poset.top]

    @property
    def f_vector(self) -> tuple[int, ...]:
        return f_vector(self.lattice)

    def h_vector(self) -> list[int]:
        f = self.toric.f
        return [f.coeff(k) for k in range(self.poset.rank)]

    def h_symmetric(self) -> bool:
        h = self.h_vector()
        return h == h[::-1]

    def eulerian(self) -> bool:
        return is_eulerian(self.poset)

    def metrics(self) -> EdgeMetrics:
        return edge_metrics(self.points, self.lattice)


def run_pipeline(pair: PathPair, caps: Caps = Caps()) -> Pipeline:
    matroid = enumerate_bases(pair, cap=caps.max_bases)
    points = incidence_vertices(matroid)
    if len(points) > caps.max_vertices:
        raise CapExceededError(f"{len(points)} vertices exceed the cap {caps.max_vertices}")
    dim = affine_dimension(points)
    if dim > caps.max_dim:
        raise CapExceededError(f"dimension {dim} exceeds the cap {caps.max_dim}")
    facets = enumerate_facets(points, max_dim=caps.max_dim, max_vertices=caps.max_vertices) if dim else []
    lattice = build_face_lattice(points, facets, max_faces=caps.max_faces)
    poset = lattice.to_poset()
    return Pipeline(pair, matroid, points, dim, facets, lattice, poset, toric_pairs(poset))


def hook_pipeline(alpha: int, beta: int, caps: Caps = Caps()) -> Pipeline:
    return run_pipeline(hook_pair(alpha, beta), caps)


def apex_index(pipe: Pipeline, alpha: int) -> int:
    """Vertex of the basis ``{alpha+1, ..., alpha+beta}``, the pyramid apex."""
    beta = pipe.matroid.rank
    return pipe.matroid.bases.index(tuple(range(alpha + 1, alpha + beta + 1)))


def base_facet_pair(pipe: Pipeline, alpha: int) -> ToricPair:
    """Toric f and g of the face opposite the apex (the product of simplices)."""
    apex = apex_index(pipe, alpha)
    base = frozenset(range(len(pipe.points))) - {apex}
    return pipe.pairs[pipe.lattice.index_of(base)]


# ----- reports ---------------------------------------------------------------


def _value(v):
    if isinstance(v, Poly):
        return str(v)
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (set, frozenset)):
        return sorted(_value(x) for x in v)
    if isinstance(v, tuple):
        return [_value(x) for x in v]
    return v


@dataclass
class Record:
    instance: str
    quantity: str
    computed: object
    expected: object
    equal: bool
    asserted: bool = True
    note: str = ""
    params: dict = field(default_factory=dict)

    def sort_key(self):
        return (tuple(sorted(self.params.items())), self.instance, self.quantity)

    def to_json(self) -> dict:
        out = {
            "instance": self.instance,
            "quantity": self.quantity,
            "computed": _value(self.computed),
            "expected": _value(self.expected),
            "equal": self.equal,
            "asserted": self.asserted,
        }
        if self.note:
            out["note"] = self.note
        out.update(self.params)
        return out


def compare(instance, quantity, computed, expected, asserted=True, note="", **params) -> Record:
    return Record(instance, quantity, computed, expected, computed == expected, asserted, note, params)


@dataclass
class VerificationReport:
    kind: str
    records: list[Record] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if r.asserted and not r.equal]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        asserted = [r for r in self.records if r.asserted]
        return {
            "records": len(self.records),
            "asserted": len(asserted),
            "passed": sum(r.equal for r in asserted),
            "failed": len(self.failures),
            "informational": len(self.records) - len(asserted),
            "all_equal": self.ok,
        }

    def sorted_records(self) -> list[Record]:
        return sorted(self.records, key=Record.sort_key)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "summary": self.summary(),
            "records": [r.to_json() for r in self.sorted_records()],
        }
        if self.extra:
            out.update(self.extra)
        if timings:
            out["timings"] = {k: round(v, 6) for k, v in sorted(self.timings.items())}
        return out

    def dumps(self, fmt: str = "json", timings: bool = False) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(timings), sort_keys=True, indent=2) + "\n"
        return self.to_csv()

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.kind == "identities":
            cols = ["identity", "m", "n", "q", "k", "i", "lhs", "rhs", "equal", "asserted", "note"]
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(cols)
            for r in self.sorted_records():
                p = r.params
                writer.writerow([r.quantity, p.get("m", ""), p.get("n", ""), p.get("q", ""),
                                 p.get("k", ""), p.get("i", ""), _value(r.computed),
                                 _value(r.expected), r.equal, r.asserted, r.note])
        else:
            cols = ["instance", "quantity", "computed", "expected", "equal", "asserted", "note"]
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(cols)
            for r in self.sorted_records():
                writer.writerow([r.instance, r.quantity, json.dumps(_value(r.computed)),
                                 json.dumps(_value(r.expected)), r.equal, r.asserted, r.note])
        return buf.getvalue()


# ----- commands --------------------------------------------------------------


def cmd_bases(pair: PathPair, caps: Caps = Caps()) -> dict:
    return enumerate_bases(pair, cap=caps.max_bases).to_json()


def cmd_toric(pair: PathPair, caps: Caps = Caps()) -> dict:
    pipe = run_pipeline(pair, caps)
    return {
        "upper": str(pair.upper),
        "lower": str(pair.lower),
        "dimension": pipe.dimension,
        "f_vector": list(pipe.f_vector),
        "toric_f": pipe.toric.f.to_json(),
        "toric_g": pipe.toric.g.to_json(),
        "toric_f_text": str(pipe.toric.f),
        "toric_g_text": str(pipe.toric.g),
        "h_symmetric": pipe.h_symmetric(),
        "eulerian": pipe.eulerian(),
    }


def verify_hook(alpha: int, beta: int, caps: Caps = Caps()) -> tuple[list[Record], float]:
    start = time.perf_counter()
    inst = f"hook({alpha},{beta})"
    params = {"alpha": alpha, "beta": beta}
    pipe = hook_pipeline(alpha, beta, caps)
    metrics = pipe.metrics()
    base = base_facet_pair(pipe, alpha)
    recs = [
        compare(inst, "vertex_count", len(pipe.points), alpha * beta + 1, **params),
        compare(inst, "dimension", pipe.dimension, alpha + beta - 1, **params),
        compare(inst, "f_vector", pipe.f_vector, hf.f_vector_hook(alpha, beta), **params),
        compare(inst, "toric_f", pipe.toric.f, hf.f_hook(alpha, beta), **params),
        compare(inst, "toric_g", pipe.toric.g, hf.g_hook(alpha, beta), **params),
        compare(inst, "base_toric_g", base.g, hf.gtilde_closed(alpha - 1, beta - 1), **params),
        compare(inst, "pyramid_relation", pipe.toric.f, base.g + X * base.f, **params),
        compare(inst, "edge_squared_lengths", metrics.squared_lengths, frozenset({Fraction(2)}), **params),
        compare(inst, "graph_diameter", metrics.graph_diameter, 2, **params),
        compare(inst, "max_squared_distance", metrics.max_squared_distance, Fraction(4), **params),
        compare(inst, "eulerian", pipe.eulerian(), True, **params),
        compare(inst, "h_symmetric", pipe.h_symmetric(), True, **params),
    ]
    return recs, time.perf_counter() - start


def _jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _verify_hook_args(args):
    return verify_hook(*args)


def cmd_verify_hooks(config: SweepConfig) -> VerificationReport:
    report = VerificationReport("verify-hooks")
    todo = [
        (a, b, config.caps)
        for a in range(1, config.alpha_max + 1)
        for b in range(1, min(a, config.beta_max) + 1)
    ]
    jobs = _jobs()
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_hook_args, todo))
    else:
        results = [verify_hook(*t) for t in todo]
    for (a, b, _), (recs, secs) in zip(todo, results):
        report.records.extend(recs)
        report.timings[f"hook({a},{b})"] = secs
    return report


def identity_records(m: int, n: int, q_margin: int = 2) -> list[Record]:
    """Every identity check for one ``(m, n)`` pair."""
    recs = []
    inst = f"m={m},n={n}"
    for q in range(-1 - q_margin, m + n + 1 + q_margin):
        in_range = -1 <= q <= m + n
        lhs, rhs = hf.triple_sum_identity(m, n, q)
        note = "vandermonde" if q == m + n else ("" if in_range else "outside -1..m+n")
        recs.append(compare(f"{inst},q={q}", "triple_sum", lhs, rhs, asserted=in_range, note=note,
                            m=m, n=n, q=q))
        recs.append(compare(f"{inst},q={q}", "sub_outer", *hf.sub_identity_outer(m, n, q),
                            asserted=in_range, m=m, n=n, q=q))
        for k in range(n + 1):
            recs.append(compare(f"{inst},q={q},k={k}", "sub_middle", *hf.sub_identity_middle(n, q, k),
                                asserted=in_range, m=m, n=n, q=q, k=k))
            for i in range(n - k + 1):
                recs.append(compare(f"{inst},q={q},k={k},i={i}", "sub_inner",
                                    *hf.sub_identity_inner(q, k, i), asserted=in_range,
                                    m=m, n=n, q=q, k=k, i=i))
    for r in range(m + n + 1):
        recs.append(compare(f"{inst},r={r}", "ftilde_coeff_routes", hf.coeff_ftilde_via_fhat(m, n, r),
                            hf.coeff_ftilde_direct(m, n, r), note=f"r={r}", m=m, n=n, q=m + n - 1 - r))
    lhs, rhs = hf.fhat_bridge(m, n)
    recs.append(compare(inst, "fhat_bridge", lhs, rhs, m=m, n=n))
    recs.append(compare(inst, "telescoping", hf.telescoping_sum(m, n), X ** (m + n), m=m, n=n))
    return recs


def cmd_identities(config: SweepConfig) -> VerificationReport:
    report = VerificationReport("identities")
    for m in range(0, config.m_max + 1):
        for n in range(0, min(m, config.n_max) + 1):
            start = time.perf_counter()
            report.records.extend(identity_records(m, n, config.q_margin))
            report.timings[f"m={m},n={n}"] = time.perf_counter() - start
    return report


def triple_product_formula(a: int, b: int, c: int) -> Poly:
    return Poly.from_coeffs(
        hf.binom(a - 1, k) * hf.binom(b - 1, k) * hf.binom(c - 1, k)
        for k in range(min(a, b, c))
    )


def cmd_border_strip(a: int, b: int, c: int, caps: Caps = Caps()) -> dict:
    pair = border_strip_pair(a, b, c)
    pipe = run_pipeline(pair, caps)
    actual = pipe.toric.g
    formula = triple_product_formula(a, b, c)
    return {
        "a": a,
        "b": b,
        "c": c,
        "upper": str(pair.upper),
        "lower": str(pair.lower),
        "f_vector": list(pipe.f_vector),
        "toric_f": pipe.toric.f.to_json(),
        "toric_g_actual": actual.to_json(),
        "toric_g_actual_text": str(actual),
        "product_formula": formula.to_json(),
        "product_formula_text": str(formula),
        "equal": actual == formula,
        "eulerian": pipe.eulerian(),
        "h_symmetric": pipe.h_symmetric(),
    }

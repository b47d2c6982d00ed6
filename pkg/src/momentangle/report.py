"""The end-to-end analysis pipeline and report emission.

A report is stored as pure JSON-ready data: every numeral is a decimal
string, keys are plain strings, and no floating point appears anywhere.
Stage timings are kept beside the report for the markdown rendering but
are excluded from the canonical JSON so that identical inputs yield
byte-identical output.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction
from dataclasses import dataclass, field as dataclass_field
from typing import Iterable

from .catalog import enumerate_complexes, named_complex, parse_facet_file
from .complexes import Face, SimplicialComplex, face_key
from .errors import (GhostVertex, InternalError, NotApplicable,
                     Unsupported)
from .homology import (Chain, Coefficients, GF, HomologyGroups, INTEGERS,
                       RATIONALS, reduced_homology)
from .polyprod import (verify_decomposition, verify_wedge_of_spheres)
from .spanning import (SpanningFacetCertificate, dual_wedge_prediction,
                       spanning_from_shelling, spanning_mod_p,
                       verify_certificate)
from .structure import (DEFAULT_SHELLING_BUDGET, StructureVerdict,
                        extractibility_certificate, find_shelling,
                        greedy_collapse, is_sequentially_cm, is_shifted,
                        is_vertex_decomposable, replay_collapse,
                        verify_shelling)
from .tor import (TorClass, hochster_table, is_golod, koszul_table,
                  make_tor_class, tor_class_is_zero, tor_product)

DEFAULT_COEFFICIENTS = (INTEGERS, GF(2), GF(3), RATIONALS)


# ----------------------------------------------------------------------
# sources and options


@dataclass(frozen=True)
class ComplexSource:
    """Where a complex comes from: a file, the named registry, or the
    exhaustive enumeration."""

    kind: str  # "file" | "named" | "enumerated"
    path: str | None = None
    name: str | None = None
    params: tuple[int, ...] = ()
    n: int = 0
    index: int = 0

    @classmethod
    def file(cls, path: str) -> "ComplexSource":
        return cls("file", path=path)

    @classmethod
    def named(cls, name: str, *params: int) -> "ComplexSource":
        return cls("named", name=name, params=tuple(params))

    @classmethod
    def enumerated(cls, n: int, index: int) -> "ComplexSource":
        return cls("enumerated", n=n, index=index)

    def resolve(self) -> SimplicialComplex:
        if self.kind == "file":
            with open(self.path, "r", encoding="utf-8") as fh:
                return parse_facet_file(fh.read())
        if self.kind == "named":
            return named_complex(self.name, *self.params)
        if self.kind == "enumerated":
            for i, K in enumerate(enumerate_complexes(self.n)):
                if i == self.index:
                    return K
            raise Unsupported(f"enumeration index {self.index} out of range")
        raise Unsupported(f"unknown source kind {self.kind!r}")

    def describe(self) -> str:
        if self.kind == "file":
            return f"file:{self.path}"
        if self.kind == "named":
            params = ",".join(map(str, self.params))
            return f"{self.name}({params})" if params else self.name
        return f"enum:{self.n}:{self.index}"


@dataclass(frozen=True)
class AnalyzeOptions:
    coefficients: tuple[Coefficients, ...] = DEFAULT_COEFFICIENTS
    budget: int = DEFAULT_SHELLING_BUDGET
    stages: tuple[str, ...] = ("structure", "betti", "spanning",
                               "decomposition", "golod")

    def fields(self) -> tuple[Coefficients, ...]:
        return tuple(c for c in self.coefficients if c.is_field)

    def primes(self) -> tuple[int, ...]:
        return tuple(c.p for c in self.coefficients if c.kind == "F")

    def has_integers(self) -> bool:
        return any(c.kind == "Z" for c in self.coefficients)


# ----------------------------------------------------------------------
# JSON-ready encoding helpers: every numeral becomes a decimal string


def jint(x: int) -> str:
    return str(int(x))


def jface(f: Face) -> list[str]:
    return [jint(v) for v in f]


def jfaces(faces: Iterable[Face]) -> list[list[str]]:
    return [jface(f) for f in sorted(faces, key=face_key)]


def unface(data: Iterable) -> Face:
    return tuple(int(v) for v in data)


def jgroups(h: HomologyGroups) -> dict:
    return {jint(d): {"rank": jint(h.rank(d)),
                      "torsion": [jint(t) for t in h.torsion(d)]}
            for d in h.degrees()}


def jchain(chain: Chain) -> dict:
    return {"degree": jint(chain.degree),
            "terms": [[jface(f), jint(c)] for f, c in chain.terms]}


def unchain(data: dict) -> Chain:
    return Chain(int(data["degree"]),
                 tuple((unface(f), int(c)) for f, c in data["terms"]))


def jcomplex(K: SimplicialComplex) -> dict:
    kind = "void" if K.is_void else ("empty" if K.is_empty_complex else "complex")
    return {"ambient": jface(K.ambient), "kind": kind,
            "facets": jfaces(K.facets)}


def uncomplex(data: dict) -> SimplicialComplex:
    ambient = unface(data["ambient"])
    if data["kind"] == "void":
        return SimplicialComplex.void_complex(ambient)
    return SimplicialComplex(ambient,
                             frozenset(unface(f) for f in data["facets"]))


def jverdict(v: StructureVerdict) -> dict:
    out = {"answer": v.answer}
    if v.witness is not None:
        out["witness"] = _encode_witness(v.witness)
    if v.reason:
        out["reason"] = v.reason
    if v.nodes is not None:
        out["nodes"] = jint(v.nodes)
    return out


def _encode_witness(obj):
    if isinstance(obj, (list, tuple)):
        return [_encode_witness(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _encode_witness(v) for k, v in obj.items()}
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return jint(obj)
    return str(obj)


def jcert(cert: SpanningFacetCertificate) -> dict:
    out = {"host": jcomplex(cert.host),
           "coefficients": cert.coefficients.label(),
           "gamma": jfaces(cert.gamma)}
    if cert.witnesses is not None:
        out["witnesses"] = [[jface(f), jchain(c)] for f, c in cert.witnesses]
    return out


def uncert(data: dict) -> SpanningFacetCertificate:
    witnesses = None
    if "witnesses" in data:
        witnesses = tuple((unface(f), unchain(c)) for f, c in data["witnesses"])
    return SpanningFacetCertificate(uncomplex(data["host"]),
                                    tuple(unface(f) for f in data["gamma"]),
                                    Coefficients.parse(data["coefficients"]),
                                    witnesses)


def jcoef(c) -> str:
    # exact integers or Fractions; str keeps both exact ("3", "-1/2")
    return str(c)


def uncoef(s: str):
    return Fraction(s) if "/" in s else int(s)


def jtorclass(cls: TorClass) -> dict:
    return {"bidegree": [jint(cls.bidegree[0]), jint(cls.bidegree[1])],
            "rep": [[jface(s), jface(o), jcoef(c)] for (s, o), c in cls.rep]}


# ----------------------------------------------------------------------
# the report


@dataclass
class AnalysisReport:
    payload: dict
    timings_ms: dict[str, int] = dataclass_field(default_factory=dict, compare=False)

    @property
    def violations(self) -> list[str]:
        return self.payload.get("violations", [])

    def to_json(self) -> str:
        return json.dumps(self.payload, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, AnalysisReport) and self.payload == other.payload


def _timed(timings: dict, stage: str, fn, violations: list[str] | None = None):
    start = time.perf_counter_ns()
    try:
        return fn()
    except InternalError as exc:
        # a stage hit a should-not-happen condition: record it instead of
        # losing the rest of the report
        if violations is None:
            raise
        violations.append(f"{stage}: internal invariant failed: {exc}")
        return {"error": str(exc)}
    finally:
        timings[stage] = timings.get(stage, 0) + (time.perf_counter_ns() - start) // 10 ** 6


def _structure_battery(K: SimplicialComplex, options: AnalyzeOptions,
                       violations: list[str], label: str) -> dict:
    out: dict = {}
    shell = find_shelling(K, options.budget)
    out["shellable"] = jverdict(shell)
    shifted = is_shifted(K)
    out["shifted"] = jverdict(shifted)
    vd = is_vertex_decomposable(K)
    out["vertex_decomposable"] = jverdict(vd)
    out["collapsible"] = jverdict(greedy_collapse(K))
    scm: dict = {}
    for coeff in options.coefficients:
        scm[coeff.label()] = is_sequentially_cm(K, coeff)
    out["sequentially_cm"] = scm
    ext: dict = {}
    for coeff in options.fields():
        try:
            ext[coeff.label()] = jverdict(extractibility_certificate(K, coeff))
        except GhostVertex:
            ext[coeff.label()] = {"answer": "skipped", "reason": "ghost vertices"}
    if ext:
        out["extractible_shadow"] = ext
    # implication chain: shifted => vertex-decomposable => shellable => SCM(Z)
    if shifted.yes and not vd.yes:
        violations.append(f"{label}: shifted but not vertex-decomposable")
    if vd.yes and not shell.yes:
        violations.append(f"{label}: vertex-decomposable but not shellable")
    if shell.yes and options.has_integers() and not scm.get("Z", True):
        violations.append(f"{label}: shellable but not sequentially CM over Z")
    return out


def _betti_stage(K: SimplicialComplex, options: AnalyzeOptions,
                 violations: list[str]) -> dict:
    out = {}
    for coeff in options.fields():
        h = hochster_table(K, coeff)
        k = koszul_table(K, coeff)
        equal = h.entries == k.entries
        if not equal:
            violations.append(f"betti tables disagree over {coeff.label()}")
        out[coeff.label()] = {
            "hochster": {f"{i},{j2}": jint(d) for (i, j2), d in h.entries},
            "koszul": {f"{i},{j2}": jint(d) for (i, j2), d in k.entries},
            "equal": equal,
        }
    return out


def _suspension_groups(K: SimplicialComplex, coeff: Coefficients) -> HomologyGroups:
    return reduced_homology(K.suspension(), coeff)


def _spanning_stage(K: SimplicialComplex, dual: SimplicialComplex,
                    options: AnalyzeOptions, violations: list[str]) -> dict:
    out: dict = {}
    if dual.is_void:
        out["note"] = "dual is Void; nothing to extract"
        return out
    shell = find_shelling(dual, options.budget)
    if shell.yes and options.has_integers():
        cert = spanning_from_shelling(dual, shell.witness)
        spheres = dual_wedge_prediction(K, cert)
        target = _suspension_groups(K, INTEGERS)
        match = target.torsion_free and all(
            target.rank(d) == spheres.multiplicity(d)
            for d in set(target.degrees()) | set(spheres.dims))
        if not match:
            violations.append("dual shelling sphere list does not match "
                              "suspension homology over Z")
        out["dual_shelling"] = {
            "order": jfaces_ordered(shell.witness),
            "certificate": jcert(cert),
            "sphere_list": [jint(d) for d in spheres.dims],
            "suspension": jgroups(target),
            "match": match,
        }
    mod_p: dict = {}
    for p in options.primes():
        key = jint(p)
        if not is_sequentially_cm(dual, GF(p)):
            mod_p[key] = {"applicable": False,
                          "reason": "dual is not sequentially CM over this field"}
            continue
        try:
            cert = spanning_mod_p(dual, p)
        except NotApplicable as exc:
            mod_p[key] = {"applicable": False, "reason": str(exc),
                          "degree": jint(exc.degree)}
            continue
        spheres = dual_wedge_prediction(K, cert)
        target = _suspension_groups(K, GF(p))
        match = all(target.dimension(d) == spheres.multiplicity(d)
                    for d in set(target.degrees()) | set(spheres.dims))
        if not match:
            violations.append(f"mod-{p} sphere list does not match suspension "
                              f"homology dimensions")
        mod_p[key] = {"applicable": True, "certificate": jcert(cert),
                      "sphere_list": [jint(d) for d in spheres.dims],
                      "suspension": jgroups(target), "match": match}
    if mod_p:
        out["dual_mod_p"] = mod_p
    return out


def jfaces_ordered(faces: Iterable[Face]) -> list[list[str]]:
    return [jface(f) for f in faces]


def _decomposition_stage(K: SimplicialComplex, options: AnalyzeOptions,
                         violations: list[str]) -> dict:
    out: dict = {}
    try:
        for coeff in options.coefficients:
            rep = verify_decomposition(K, coeff)
            if not rep.matches:
                violations.append(f"decomposition mismatch over {coeff.label()}")
            out[coeff.label()] = {
                "real": {"computed": jgroups(rep.real_computed),
                         "predicted": jgroups(rep.real_predicted)},
                "complex": {"computed": jgroups(rep.complex_computed),
                            "predicted": jgroups(rep.complex_predicted)},
                "match": rep.matches,
            }
    except Unsupported as exc:
        return {"note": str(exc)}
    if options.has_integers():
        try:
            wedge = verify_wedge_of_spheres(K)
            if not wedge.passed:
                violations.append("wedge-of-spheres shadow failed despite "
                                  "a sequentially CM dual over Z")
            out["wedge_of_spheres"] = {
                "applicable": True,
                "torsion_free": wedge.torsion_free,
                "vanishes_through_degree_2": wedge.vanishes_through_degree_2,
                "ranks_match": wedge.ranks_match,
                "passed": wedge.passed,
            }
        except NotApplicable as exc:
            out["wedge_of_spheres"] = {"applicable": False, "reason": str(exc)}
    return out


def _golod_stage(K: SimplicialComplex, dual: SimplicialComplex,
                 options: AnalyzeOptions, violations: list[str]) -> dict:
    out: dict = {}
    for coeff in options.fields():
        verdict = is_golod(K, coeff)
        dual_scm = is_sequentially_cm(dual, coeff)
        entry: dict = {"golod": verdict.golod, "dual_scm": dual_scm}
        if verdict.witness is not None:
            a, b, product = verdict.witness
            entry["witness"] = {"a": jtorclass(a), "b": jtorclass(b),
                                "product": jtorclass(product)}
        if dual_scm and not verdict.golod:
            violations.append(
                f"dual sequentially CM over {coeff.label()} but products "
                f"survive: Golod implication violated")
            entry["implication_ok"] = False
        else:
            entry["implication_ok"] = True
        out[coeff.label()] = entry
    return out


def analyze(source: ComplexSource | SimplicialComplex,
            options: AnalyzeOptions = AnalyzeOptions()) -> AnalysisReport:
    """Run the selected stages and assemble the verdict bundle.

    Any theorem-level mismatch lands in the violations list rather than
    raising, so a full report is always produced for NonVoid inputs.
    """
    if isinstance(source, SimplicialComplex):
        K, described = source, "in-memory"
    else:
        K, described = source.resolve(), source.describe()
    if K.is_void:
        raise Unsupported("the Void complex has no analysis to run")
    timings: dict[str, int] = {}
    violations: list[str] = []
    dual = K.alexander_dual()
    payload: dict = {
        "complex": {**jcomplex(K), "m": jint(K.m), "hash": K.canonical_hash(),
                    "source": described},
        "dual": jcomplex(dual),
        "options": {"coefficients": [c.label() for c in options.coefficients],
                    "budget": jint(options.budget),
                    "stages": list(options.stages)},
    }
    if "structure" in options.stages:
        payload["structure"] = _timed(
            timings, "structure",
            lambda: _structure_battery(K, options, violations, "complex"),
            violations)
        if not dual.is_void:
            payload["dual_structure"] = _timed(
                timings, "structure",
                lambda: _structure_battery(dual, options, violations, "dual"),
                violations)
    if "betti" in options.stages:
        payload["betti"] = _timed(timings, "betti",
                                  lambda: _betti_stage(K, options, violations),
                                  violations)
    if "spanning" in options.stages:
        payload["spanning"] = _timed(
            timings, "spanning",
            lambda: _spanning_stage(K, dual, options, violations), violations)
    if "decomposition" in options.stages:
        payload["decomposition"] = _timed(
            timings, "decomposition",
            lambda: _decomposition_stage(K, options, violations), violations)
    if "golod" in options.stages:
        payload["golod"] = _timed(
            timings, "golod",
            lambda: _golod_stage(K, dual, options, violations), violations)
    payload["violations"] = violations
    return AnalysisReport(payload, timings)


# ----------------------------------------------------------------------
# re-verification of embedded witnesses


def verify_report(report: AnalysisReport) -> list[str]:
    """Re-check every witness the report carries; returns failure notes."""
    failures: list[str] = []
    payload = report.payload
    K = uncomplex(payload["complex"])
    dual = uncomplex(payload["dual"])
    if dual != K.alexander_dual():
        failures.append("stored dual is not the Alexander dual of the complex")

    def check_structure(section: dict, host: SimplicialComplex, label: str):
        shell = section.get("shellable", {})
        if shell.get("answer") == "yes":
            order = tuple(unface(f) for f in shell["witness"])
            if not verify_shelling(host, order):
                failures.append(f"{label}: shelling witness fails")
        shifted = section.get("shifted", {})
        if shifted.get("answer") == "yes":
            order = tuple(int(v) for v in shifted["witness"])
            if not is_shifted(host, order).yes:
                failures.append(f"{label}: shifted witness fails")
        collapse = section.get("collapsible", {})
        if collapse.get("answer") == "yes":
            seq = [(unface(s), unface(t)) for s, t in collapse["witness"]]
            if not replay_collapse(host, seq):
                failures.append(f"{label}: collapse witness fails")

    if "structure" in payload:
        check_structure(payload["structure"], K, "complex")
    if "dual_structure" in payload:
        check_structure(payload["dual_structure"], dual, "dual")
    spanning = payload.get("spanning", {})
    if "dual_shelling" in spanning:
        cert = uncert(spanning["dual_shelling"]["certificate"])
        if not verify_certificate(cert):
            failures.append("dual shelling certificate fails re-verification")
    for p, entry in spanning.get("dual_mod_p", {}).items():
        if entry.get("applicable"):
            cert = uncert(entry["certificate"])
            if not verify_certificate(cert):
                failures.append(f"mod-{p} certificate fails re-verification")
    for label, entry in payload.get("golod", {}).items():
        if "witness" in entry:
            coeff = Coefficients.parse(label)
            w = entry["witness"]

            def rebuild(data):
                rep = {(unface(s), unface(o)): uncoef(c) for s, o, c in data["rep"]}
                bd = (int(data["bidegree"][0]), int(data["bidegree"][1]))
                return make_tor_class(K, coeff, bd, rep)

            a, b = rebuild(w["a"]), rebuild(w["b"])
            product = tor_product(a, b)
            stored = rebuild(w["product"])
            if product != stored or tor_class_is_zero(product):
                failures.append(f"golod witness over {label} fails re-verification")
    return failures


# ----------------------------------------------------------------------
# emission


def emit_report(report: AnalysisReport, fmt: str) -> str:
    if fmt == "json":
        return report.to_json()
    if fmt == "markdown":
        return _markdown(report)
    raise Unsupported(f"unknown report format {fmt!r}")


def _md_groups(groups: dict, field: bool = False) -> str:
    if not groups:
        return "trivial"
    parts = []
    for deg in sorted(groups, key=int):
        entry = groups[deg]
        if field:
            parts.append(f"dim H~_{deg} = {entry['rank']}")
        else:
            terms = ["Z"] * int(entry["rank"]) + [f"Z/{t}" for t in entry["torsion"]]
            parts.append(f"H~_{deg} = {' + '.join(terms)}")
    return "; ".join(parts)


def _markdown(report: AnalysisReport) -> str:
    p = report.payload
    lines: list[str] = []
    info = p["complex"]
    lines.append(f"# Analysis of {info.get('source', 'complex')}")
    lines.append("")
    facets = ", ".join("{" + ",".join(f) + "}" for f in info["facets"]) or info["kind"]
    lines.append(f"- ambient size m = {info['m']}")
    lines.append(f"- facets: {facets}")
    lines.append(f"- canonical hash: `{info['hash'][:16]}...`")
    dual_facets = ", ".join("{" + ",".join(f) + "}" for f in p["dual"]["facets"])
    lines.append(f"- Alexander dual: {dual_facets or p['dual']['kind']}")
    lines.append("")
    if "structure" in p:
        for key, title in (("structure", "Structure"),
                           ("dual_structure", "Dual structure")):
            if key not in p:
                continue
            lines.append(f"## {title}")
            section = p[key]
            for prop in ("shellable", "shifted", "vertex_decomposable",
                         "collapsible"):
                if prop in section:
                    lines.append(f"- {prop}: {section[prop]['answer']}")
            scm = section.get("sequentially_cm", {})
            scm_s = ", ".join(f"{k}: {'yes' if v else 'no'}"
                              for k, v in sorted(scm.items()))
            lines.append(f"- sequentially CM: {scm_s}")
            ext = section.get("extractible_shadow", {})
            if ext:
                ext_s = ", ".join(f"{k}: {v['answer']}" for k, v in sorted(ext.items()))
                lines.append(f"- extractible shadow: {ext_s}")
            lines.append("")
    if "betti" in p:
        lines.append("## Bigraded Betti tables")
        for label in sorted(p["betti"]):
            entry = p["betti"][label]
            lines.append(f"### over {label} "
                         f"({'tables agree' if entry['equal'] else 'TABLES DISAGREE'})")
            for bidegree in sorted(entry["hochster"],
                                   key=lambda s: tuple(map(int, s.split(",")))):
                i, j2 = bidegree.split(",")
                lines.append(f"({i},{j2}) : {entry['hochster'][bidegree]}")
            lines.append("")
    if "spanning" in p:
        lines.append("## Spanning facets of the dual")
        sp = p["spanning"]
        if "note" in sp:
            lines.append(f"- {sp['note']}")
        if "dual_shelling" in sp:
            entry = sp["dual_shelling"]
            gamma = ", ".join("{" + ",".join(f) + "}"
                              for f in entry["certificate"]["gamma"])
            lines.append(f"- from a shelling: gamma = {gamma or 'empty'}; "
                         f"spheres {entry['sphere_list']}; "
                         f"match: {'yes' if entry['match'] else 'NO'}")
        for q, entry in sorted(sp.get("dual_mod_p", {}).items()):
            if entry.get("applicable"):
                lines.append(f"- mod {q}: spheres {entry['sphere_list']}; "
                             f"match: {'yes' if entry['match'] else 'NO'}")
            else:
                lines.append(f"- mod {q}: not applicable ({entry['reason']})")
        lines.append("")
    if "decomposition" in p:
        lines.append("## Wedge decomposition checks")
        for label in sorted(p["decomposition"]):
            entry = p["decomposition"][label]
            if label == "wedge_of_spheres":
                if entry.get("applicable"):
                    lines.append(f"- wedge-of-spheres shadow: "
                                 f"{'pass' if entry['passed'] else 'FAIL'}")
                else:
                    lines.append("- wedge-of-spheres shadow: not applicable")
            elif isinstance(entry, dict) and "match" in entry:
                lines.append(f"- over {label}: "
                             f"{'match' if entry['match'] else 'MISMATCH'}; "
                             f"moment-angle homology: "
                             f"{_md_groups(entry['complex']['computed'], label != 'Z')}")
        lines.append("")
    if "golod" in p:
        lines.append("## Golod verdicts")
        for label in sorted(p["golod"]):
            entry = p["golod"][label]
            line = f"- over {label}: {'Golod' if entry['golod'] else 'not Golod'}"
            if "witness" in entry:
                w = entry["witness"]

                def bd(cls):
                    return "(" + ",".join(cls["bidegree"]) + ")"

                line += (f" (witness {bd(w['a'])} x {bd(w['b'])} "
                         f"-> {bd(w['product'])})")
            lines.append(line)
        lines.append("")
    lines.append("## Verdict")
    if p["violations"]:
        lines.append("Invariant violations:")
        lines.extend(f"- {v}" for v in p["violations"])
    else:
        lines.append("All checked invariants hold.")
    if report.timings_ms:
        lines.append("")
        lines.append("## Timings")
        for stage, ms in sorted(report.timings_ms.items()):
            lines.append(f"- {stage}: {ms} ms")
    return "\n".join(lines) + "\n"

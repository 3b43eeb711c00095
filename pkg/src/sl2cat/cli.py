"""Command line surface: classification, derivation, catalog verification,
oracle runs, and DOT rendering.

Every data-reporting subcommand takes ``--json`` for machine-readable
output (schemas ship under ``sl2cat/schemas/``); all numbers are exact,
with rationals rendered as ``p/q`` strings.  Exit codes: 0 success,
2 usage error, 3 invalid input, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, modcat, oracles
from .dynkin import Classification, GCMError, classify, gcm_of, graph_of
from .modcat import ModuleCategoryModel, PreconditionFailed, Transitivity
from .oracles import NamedOObject, NotInCatalog, SlCharacter
from .presented import PresentationError, PresentedMatrix, PresentedVector

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVALID = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    """Invalid input the user can fix; reported on stderr with exit code 3."""


class UsageError(Exception):
    """Inconsistent flag combination; reported on stderr with exit code 2."""


# -- input loading ---------------------------------------------------------------


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _load_json_file(path: str):
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}") from exc


def _load_gcm(path: str) -> PresentedMatrix:
    doc = _load_json_file(path)
    try:
        return PresentedMatrix.from_json_dict(doc)
    except PresentationError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_model(spec: str) -> ModuleCategoryModel:
    """Resolve a catalog name, or load a model/matrix JSON document."""
    if spec in modcat.catalog_names():
        return modcat.catalog(spec)
    if not Path(spec).exists():
        names = ", ".join(modcat.catalog_names())
        raise CliError(f"{spec!r} is neither a catalog model ({names}) nor a file")
    doc = _load_json_file(spec)
    try:
        if isinstance(doc, dict) and "f1" in doc:
            return ModuleCategoryModel(
                name=doc.get("name", Path(spec).stem),
                basis=doc.get("basis", "projectives"),
                f1=PresentedMatrix.from_json_dict(doc["f1"]),
                provenance=doc.get("provenance", f"loaded from {spec}"),
            )
        return ModuleCategoryModel(
            name=Path(spec).stem,
            basis="projectives",
            f1=PresentedMatrix.from_json_dict(doc),
            provenance=f"loaded from {spec}",
        )
    except (PresentationError, ValueError) as exc:
        raise CliError(f"{spec}: {exc}") from exc


def _with_basis(m: ModuleCategoryModel, basis: str | None) -> ModuleCategoryModel:
    if basis is None or basis == m.basis:
        return m
    if basis == "simples":
        try:
            return modcat.to_simples_basis(m)
        except PreconditionFailed as exc:
            raise CliError(str(exc)) from exc
    raise CliError(f"cannot convert a {m.basis}-basis model to the {basis} basis")


# -- formatting ---------------------------------------------------------------------


def _signed(d: int) -> str:
    return f"+{d}" if d > 0 else str(d)


def _affine_expr(a: int, b: int, var: str = "i") -> str:
    if a == 0:
        return str(b)
    term = {1: var, -1: f"-{var}"}.get(a, f"{a}{var}")
    if b == 0:
        return term
    return f"{term} + {b}" if b > 0 else f"{term} - {-b}"


def _format_matrix(mat: PresentedMatrix) -> str:
    if mat.index.kind == "finite":
        return f"dense {mat.truncate(mat.index.size)}"
    tail = ", ".join(f"{_signed(d)}: {v}" for d, v in sorted(mat.diagonals().items()))
    if mat.index.kind == "int":
        return f"Toeplitz on Z, diagonals {{{tail}}}"
    head = ", ".join(f"({i},{j})={v}" for i, j, v in mat.head_entries())
    return f"head size {mat.head_size} {{{head}}}, tail diagonals {{{tail}}}"


def _format_vector_doc(doc: dict) -> str:
    head = list(doc.get("head", []))
    tail = doc.get("tail", {"a": 0, "b": 0})
    a, b = tail.get("a", 0), tail.get("b", 0)
    if not head:
        return f"v_i = {_affine_expr(a, b)}"
    shown = head + [a * i + b for i in range(len(head), len(head) + 2)]
    body = ", ".join(str(x) for x in shown)
    return f"({body}, ...) with v_i = {_affine_expr(a, b)} from i = {len(head)}"


def _display_line(result: Classification) -> str:
    if result.kind == "classical":
        h = result.certificate["coxeter_number"]
        return f"Classical {result.dtype.display()} (h={h})"
    if result.kind == "affine":
        vec = ", ".join(str(x) for x in result.certificate["null_vector"])
        return f"Affine {result.dtype.display()} (null vector ({vec}))"
    if result.kind == "infinite":
        vec = _format_vector_doc(result.certificate["null_vector"])
        return f"Infinite {result.dtype.display()} (null vector {vec})"
    return f"Unrecognized: {result.certificate.get('reason', 'no matching type')}"


def _print_certificate(cert: dict) -> None:
    print("certificate:")
    for key in sorted(cert):
        value = cert[key]
        if isinstance(value, dict) and set(value) <= {"head", "tail"}:
            print(f"  {key}: {_format_vector_doc(value)}")
        elif isinstance(value, list):
            print(f"  {key}: {', '.join(str(x) for x in value)}")
        else:
            print(f"  {key}: {value}")


def _format_event(event: dict) -> str:
    label = event.get("constraint", "constraint")
    status = event.get("status")
    identity = event.get("identity")
    rest = {k: v for k, v in event.items()
            if k not in ("constraint", "status", "identity")}
    pinned = rest.pop("pinned", None)
    line = f"[{status}] {label}" if status else label
    if identity:
        line += f": {identity}"
    if rest:
        line += " (" + ", ".join(f"{k}={rest[k]}" for k in sorted(rest)) + ")"
    if isinstance(pinned, dict) and "variable" in pinned:
        if "range" in pinned:
            lo, hi = pinned["range"]
            line += f"; pins {pinned['variable']} in [{lo}, {hi}]"
        else:
            line += f"; pins {pinned['variable']} = {pinned.get('value')}"
    return line


def _format_factor_multiset(factors: dict) -> str:
    items = sorted(factors.items(), key=lambda kv: int(kv[0]))
    return "{" + ", ".join(f"S_{k}: {v}" for k, v in items) + "}"


def _format_witness_entry(entry: dict) -> str:
    return (f"F_{entry['degree']} S_{entry['object']}: "
            f"top {_format_factor_multiset(entry['top'])}, "
            f"socle {_format_factor_multiset(entry['socle'])}")


def _format_character(c: SlCharacter) -> str:
    window = ", ".join(str(v) for v in c.truncate(10))
    return f"[{window}, ...] (period {c.period} tail)"


# -- classify ------------------------------------------------------------------------


def _connected_components(dense: list[list[int]]) -> list[list[int]]:
    n = len(dense)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in range(n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in range(n):
                if w not in seen and w != v and (dense[v][w] or dense[w][v]):
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def _classify_components(gcm: PresentedMatrix) -> list[tuple[list[int], Classification]]:
    if gcm.index.kind != "finite":
        raise CliError("componentwise classification needs a finite matrix")
    dense = gcm.truncate(gcm.index.size)
    out = []
    for comp in _connected_components(dense):
        sub = [[dense[i][j] for j in comp] for i in comp]
        out.append((comp, classify(PresentedMatrix.from_dense(sub))))
    return out


def _cmd_classify(args) -> int:
    gcm = _load_gcm(args.gcm)
    try:
        if args.components:
            pieces = _classify_components(gcm)
            if args.json:
                _print_json({"components": [
                    {"vertices": comp, "display": _display_line(res), **res.to_json()}
                    for comp, res in pieces
                ]})
            else:
                for comp, res in pieces:
                    vertices = ",".join(str(v) for v in comp)
                    print(f"component {vertices}: {_display_line(res)}")
            return EXIT_OK
        result = classify(gcm)
    except GCMError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        _print_json({"display": _display_line(result), **result.to_json()})
        return EXIT_OK
    print(_display_line(result))
    if args.certificate:
        _print_certificate(result.certificate)
    return EXIT_OK


# -- derive / transitive ---------------------------------------------------------------


def _cmd_derive(args) -> int:
    m = _with_basis(_load_model(args.model), args.basis)
    if args.upto < 0:
        raise CliError("--upto must be >= 0")
    actions = [(i, modcat.derive_action(m, i)) for i in range(args.upto + 1)]

    def window_of(mat: PresentedMatrix) -> list[list[int]] | None:
        if not args.window:
            return None
        size = args.window
        if mat.index.kind == "finite":
            size = min(size, mat.index.size)
        return mat.truncate(size)

    if args.json:
        docs = []
        for i, mat in actions:
            entry = {"index": i, "matrix": mat.to_json_dict()}
            dense = window_of(mat)
            if dense is not None:
                entry["window"] = dense
            docs.append(entry)
        _print_json({"model": m.name, "basis": m.basis,
                     "upto": args.upto, "actions": docs})
        return EXIT_OK
    print(f"model {m.name} (basis {m.basis})")
    for i, mat in actions:
        print(f"F_{i}: {_format_matrix(mat)}")
        dense = window_of(mat)
        if dense is not None:
            for row in dense:
                print("    " + " ".join(f"{v:>2}" for v in row))
    return EXIT_OK


def _cmd_transitive(args) -> int:
    m = _load_model(args.model)
    verdict = modcat.is_transitive(m)
    if args.json:
        _print_json({"model": m.name, "transitive": verdict.value})
    else:
        print(f"transitive: {verdict.value}")
    return EXIT_OK


# -- verify-catalog ----------------------------------------------------------------------

_EXPECTED_FAMILY = {
    "Ainf": "Ainf", "AinfInf": "Ainfinf", "BinfDual": "Binf",
    "Cinf": "Cinf", "Dinf": "Dinf", "Tinf": "Tinf",
}
_EXPECTED_SYMMETRY = {
    "Ainf": True, "AinfInf": True, "BinfDual": False,
    "Cinf": False, "Dinf": True, "Tinf": True,
}
_DERIVATION_ROUTES = {
    "Ainf": ("A_inf_tilting", "N6_borel"),
    "AinfInf": ("A_infinf_generic", "N5_borel"),
    "Cinf": ("C_inf_projinj",),
}
_RELATION_ROUTES = {"BinfDual": "takiff", "Dinf": "dinf", "Tinf": "schrodinger"}
_RESTRICTION_SOLVES = {
    "BinfDual": ("takiff", False),
    "Dinf": ("dinf", True),
    "Tinf": ("schrodinger", False),
}


def _catalog_checks(name: str) -> list[dict]:
    m = modcat.catalog(name)
    checks: list[dict] = []
    state: dict = {}

    def classification() -> Classification:
        if "classify" not in state:
            state["classify"] = modcat.classify_type(m)
        return state["classify"]

    def check(label: str, fn) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # any failure is a verification failure
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        doc = {"name": label, "status": "ok" if ok else "fail"}
        if detail:
            doc["detail"] = detail
        checks.append(doc)

    def round_trip():
        doc = json.loads(json.dumps(m.to_json(), sort_keys=True))
        rebuilt = ModuleCategoryModel(
            doc["name"], doc["basis"],
            PresentedMatrix.from_json_dict(doc["f1"]), doc["provenance"])
        return rebuilt == m, "bit-exact" if rebuilt == m else "differs after JSON"

    def categorifiable():
        ok, first = modcat.check_categorifiability(m, 12)
        return ok, "up to F_12" if ok else f"negative entry in F_{first}"

    def transitive():
        verdict = modcat.is_transitive(m)
        return verdict is Transitivity.YES, verdict.value

    def classify_check():
        result = classification()
        expected = _EXPECTED_FAMILY[name]
        ok = (result.kind == "infinite" and result.dtype is not None
              and result.dtype.family == expected)
        detail = result.dtype.display() if ok else f"got {result.kind}"
        return ok, detail

    def null_vector():
        result = classification()
        doc = result.certificate.get("null_vector")
        if not isinstance(doc, dict):
            return False, "no null vector in the certificate"
        vec = PresentedVector.from_json_dict(doc, m.f1.index)
        gcm = gcm_of(m.projective_matrix())
        ok = vec.is_strictly_positive() and gcm.apply(vec).is_zero()
        return ok, "positive and annihilated" if ok else "certificate fails"

    def symmetry():
        got = modcat.semisimplicity_symmetry_check(m)
        ok = got == _EXPECTED_SYMMETRY[name]
        return ok, "symmetric" if got else "asymmetric"

    def obstruction():
        report = modcat.socle_top_feasibility(m, 2)
        expected = "UNSAT" if name == "BinfDual" else "SAT"
        ok = report.status == expected
        if ok and _EXPECTED_SYMMETRY[name]:
            ok = all(e["top"] == e["socle"] for e in report.witness)
            return ok, f"{report.status}, semisimple witness" if ok else "witness not semisimple"
        return ok, report.status

    check("categorifiable", categorifiable)
    check("classify", classify_check)
    check("null-vector", null_vector)
    check("obstruction", obstruction)
    for realization in _DERIVATION_ROUTES.get(name, ()):
        def derived(r=realization):
            got = oracles.derive_catalog_matrix(r)
            return got == m.f1, "bit-exact" if got == m.f1 else "matrix differs"
        check(f"oracle:{realization}", derived)
    if name == "BinfDual":
        def dual_route():
            got = modcat.catalog("Cinf").f1.transpose()
            return got == m.f1, "bit-exact" if got == m.f1 else "matrix differs"
        check("oracle:transpose-of-Cinf", dual_route)
    if name in _RELATION_ROUTES:
        def relation_route(system=_RELATION_ROUTES[name]):
            got = oracles.restriction_action_matrix(system)
            return got == m.f1, "bit-exact" if got == m.f1 else "matrix differs"
        check(f"oracle:{_RELATION_ROUTES[name]}-relations", relation_route)
    if name in _RESTRICTION_SOLVES:
        def restriction_solve(pair=_RESTRICTION_SOLVES[name]):
            system, assume = pair
            report = oracles.restriction_consistency_solve(system, 20, assume)
            ok = report.status == "consistent"
            return ok, f"{system} {report.status}"
        check("restrictions", restriction_solve)
    check("round-trip", round_trip)
    check("symmetry", symmetry)
    check("transitive", transitive)
    return sorted(checks, key=lambda c: c["name"])


def _cmd_verify_catalog(args) -> int:
    fixtures: dict[str, dict] = {}
    total = failures = 0
    for name in modcat.catalog_names():
        checks = _catalog_checks(name)
        ok = all(c["status"] == "ok" for c in checks)
        shown_type = next(
            (c.get("detail") for c in checks
             if c["name"] == "classify" and c["status"] == "ok"), None)
        fixtures[name] = {
            "checks": checks,
            "status": "ok" if ok else "fail",
            "type": shown_type,
        }
        total += len(checks)
        failures += sum(c["status"] != "ok" for c in checks)
    status = "ok" if failures == 0 else "fail"
    if args.json:
        _print_json({"checks_total": total, "failures": failures,
                     "fixtures": fixtures, "status": status})
    else:
        for name, entry in fixtures.items():
            mark = "ok  " if entry["status"] == "ok" else "FAIL"
            shown = entry["type"] or "-"
            print(f"{mark} {name:<9} type={shown:<10} {len(entry['checks'])} checks")
            for c in entry["checks"]:
                if c["status"] != "ok":
                    print(f"     fail {c['name']}: {c.get('detail', '')}")
        print(f"catalog: {status} ({total} checks, {failures} failures)")
    return EXIT_OK if status == "ok" else EXIT_MISMATCH


# -- obstruction --------------------------------------------------------------------------


def _cmd_obstruction(args) -> int:
    m = _load_model(args.model)
    try:
        report = modcat.socle_top_feasibility(m, args.depth, schur_dim=args.schur_dim)
    except (PreconditionFailed, ValueError) as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        _print_json({"model": m.name, **report.to_json()})
        return EXIT_OK
    print(f"{report.status} at depth {report.depth} (schur dim {report.schur_dim})")
    if report.trace:
        print("trace:")
        for event in report.trace:
            print(f"  {_format_event(event)}")
    if report.witness is not None:
        print("witness (top / socle factors of each F_a S_j):")
        for entry in report.witness:
            print(f"  {_format_witness_entry(entry)}")
    return EXIT_OK


# -- decompose ------------------------------------------------------------------------------

_TENSOR_RE = re.compile(r"^\s*L\((\d+)\)\s*(?:x|\*)\s*(\S.*?)\s*$")


def _parse_tensor(text: str) -> tuple[int, NamedOObject]:
    match = _TENSOR_RE.match(text)
    if match is None:
        raise CliError(
            f"cannot parse tensor expression {text!r}; "
            'expected "L(n) x OBJ" with OBJ one of L(w), P(w), Delta(w)')
    try:
        obj = NamedOObject.parse(match.group(2))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return int(match.group(1)), obj


def _cmd_decompose(args) -> int:
    n, obj = _parse_tensor(args.tensor)
    try:
        parts = oracles.decompose_in_N(oracles.tensor_in_O(n, oracles.class_of(obj)))
    except (NotInCatalog, ValueError) as exc:
        raise CliError(str(exc)) from exc
    ordered = sorted(parts.items(), key=lambda kv: (-kv[0].weight, kv[0].kind))
    if args.json:
        _print_json({
            "tensor": {"simple": n, "object": obj.display()},
            "summands": [{"multiplicity": c, "object": o.display()}
                         for o, c in ordered],
        })
        return EXIT_OK
    terms = []
    simple_projective = False
    for o, c in ordered:
        shown = o.display()
        if o.kind == "L" and o.weight == -1:
            # human display tags the simple projective as a projective
            shown = "P(-1)"
            simple_projective = True
        terms.extend([shown] * c)
    print(" + ".join(terms) if terms else "0")
    if simple_projective:
        print("note: P(-1) = L(-1) is simple and projective; "
              "JSON output uses the canonical tag L(-1)")
    return EXIT_OK


# -- oracle subcommands -------------------------------------------------------------------------


def _coset_name(offset: int) -> str:
    return "Delta(c)" if offset == 0 else f"Delta(c{_signed(offset)})"


def _cmd_o_tensor(args) -> int:
    if args.n < 0:
        raise CliError("--n must be >= 0")
    if args.coset_offset is not None:
        vec = oracles.tensor_in_O(args.n, oracles.verma(args.coset_offset, coset=True))
        shown_input = _coset_name(args.coset_offset)
        name = _coset_name
    else:
        try:
            obj = NamedOObject.parse(args.object)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        vec = oracles.tensor_in_O(args.n, oracles.class_of(obj))
        shown_input = obj.display()

        def name(w: int) -> str:
            return f"Delta({w})"

    ordered = sorted(vec.items(), key=lambda kv: -kv[0])
    if args.json:
        doc = {
            "n": args.n,
            "coset": vec.coset,
            "object": None if args.coset_offset is not None else shown_input,
            "coset_offset": args.coset_offset,
            "verma_flag": {str(w): c for w, c in ordered},
        }
        _print_json(doc)
        return EXIT_OK
    terms: list[str] = []
    for w, c in ordered:
        terms.extend([name(w)] * c)
    print(" + ".join(terms) if terms else "0")
    return EXIT_OK


def _cmd_jordan(args) -> int:
    try:
        lam = Fraction(args.eigenvalue)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"cannot parse eigenvalue {args.eigenvalue!r}: {exc}") from exc
    try:
        partition = oracles.jordan_kronecker_oracle(args.n, lam)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        _print_json({"n": args.n, "eigenvalue": str(lam), **partition.to_json()})
        return EXIT_OK
    print(" + ".join(f"J_{size}({ev})" for size, ev in partition.blocks))
    return EXIT_OK


def _cmd_restrictions(args) -> int:
    names = oracles.restriction_system_names()
    if args.system not in names:
        raise CliError(f"unknown system {args.system!r}; have {', '.join(names)}")
    try:
        report = oracles.restriction_consistency_solve(
            args.system, args.truncation, args.assume_restrictions)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    if args.json:
        _print_json({**report.to_json(), "truncation": args.truncation})
    else:
        print(f"system {report.system}: {report.status} "
              f"({report.relations_checked} relations checked, "
              f"truncation {args.truncation})")
        if report.freedom:
            print(f"freedom: {report.freedom}")
        if report.characters:
            print("characters (multiplicity of L(k), k = 0, 1, 2, ...):")
            for cname in sorted(report.characters):
                print(f"  {cname}: {_format_character(report.characters[cname])}")
    return EXIT_MISMATCH if report.status == "infeasible" else EXIT_OK


# -- render ---------------------------------------------------------------------------------------


def _to_dot(name: str, nodes: list[int], edges: list[tuple[int, int, int]]) -> str:
    pos = {v: k for k, v in enumerate(nodes)}
    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    lines += [f'  v{pos[v]} [label="{v}"];' for v in nodes]
    lines += [f"  v{pos[src]} -> v{pos[dst]} [label={mult}];"
              for src, dst, mult in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_render(args) -> int:
    if args.model is not None:
        m = _load_model(args.model)
        name = m.name
        nodes, edges = modcat.action_graph(m, args.size)
    else:
        gcm = _load_gcm(args.gcm)
        try:
            adjacency = graph_of(gcm)
        except GCMError as exc:
            raise CliError(str(exc)) from exc
        # action_graph reads columns as images, so feed it the transpose to
        # get the diagram convention: an edge i -> j per adjacency entry (i, j)
        name = Path(args.gcm).stem
        wrapper = ModuleCategoryModel(name, "projectives",
                                      adjacency.transpose(), "diagram adjacency")
        nodes, edges = modcat.action_graph(wrapper, args.size)
    dot = _to_dot(name, nodes, edges)
    if args.dot == "-":
        print(dot, end="")
    else:
        try:
            Path(args.dot).write_text(dot, "utf-8")
        except OSError as exc:
            raise CliError(f"cannot write {args.dot}: {exc}") from exc
        print(f"wrote {len(nodes)} nodes, {len(edges)} edges to {args.dot}")
    return EXIT_OK


# -- predict ----------------------------------------------------------------------------------------

_WEIGHT_CASES = {
    "a": ("non-half-integer", False),
    "b": ("half-integer-not-integer", True),
    "c": ("half-integer-not-integer", False),
    "d": ("nonneg-integer", False),
    "e": ("negative-integer", False),
}
_SUBALGEBRA_CASES = {"a": (1, False), "b": (1, True)}


def _cmd_predict(args) -> int:
    if args.theorem == "10.1":
        if args.dim is not None or args.semisimple or args.nilpotent:
            raise UsageError("--dim, --semisimple and --nilpotent belong to --theorem 10.2")
        if (args.case is None) == (args.weight_class is None):
            raise UsageError("give exactly one of --case or --weight-class")
        if args.case is not None:
            if args.special_fixed:
                raise UsageError("--special-fixed combines with --weight-class only; "
                                 "cases b and c already encode it")
            if args.case not in _WEIGHT_CASES:
                raise UsageError(f"theorem 10.1 cases are a-e, got {args.case!r}")
            weight_class, special_fixed = _WEIGHT_CASES[args.case]
        else:
            weight_class, special_fixed = args.weight_class, args.special_fixed
        prediction = modcat.predict_weight_module_type(weight_class, special_fixed)
        fallback_label = f"weight class {weight_class}"
    else:
        if args.weight_class is not None or args.special_fixed:
            raise UsageError("--weight-class and --special-fixed belong to --theorem 10.1")
        if (args.case is None) == (args.dim is None):
            raise UsageError("give exactly one of --case or --dim")
        if args.case is not None:
            if args.case not in _SUBALGEBRA_CASES:
                raise UsageError(f"theorem 10.2 cases are a or b, got {args.case!r}")
            dim, semisimple = _SUBALGEBRA_CASES[args.case]
        else:
            if args.semisimple and args.nilpotent:
                raise UsageError("--semisimple and --nilpotent are mutually exclusive")
            dim = args.dim
            semisimple = True if args.semisimple else (False if args.nilpotent else None)
            if dim == 1 and semisimple is None:
                raise UsageError("--dim 1 needs --semisimple or --nilpotent")
        try:
            prediction = modcat.subalgebra_type(dim, semisimple)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        fallback_label = f"dim {dim}"
    if args.json:
        _print_json({"theorem": args.theorem, **prediction.to_json()})
        return EXIT_OK
    roles = prediction.roles or ("",) * len(prediction.types)
    parts = [t.display() + (f" ({r})" if r else "")
             for t, r in zip(prediction.types, roles)]
    label = f"case {prediction.case}" if prediction.case else fallback_label
    body = " + ".join(parts) if parts else "(no types)"
    print(f"theorem {args.theorem}, {label}: {body}")
    if prediction.notes:
        print(f"note: {prediction.notes}")
    return EXIT_OK


# -- parser ------------------------------------------------------------------------------------------


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON on stdout")


def _add_model(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", required=True, metavar="NAME|FILE",
                   help="catalog model name or JSON model/matrix file")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl2cat",
        description="Exact computations with finitely presented module "
                    "category models over the sl2 fusion ring.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("classify",
                       help="name a generalized Cartan matrix with an exact certificate")
    p.add_argument("--gcm", required=True, metavar="FILE",
                   help="JSON matrix document holding the GCM")
    p.add_argument("--certificate", action="store_true",
                   help="also print the certificate (minors or null vector)")
    p.add_argument("--components", action="store_true",
                   help="classify connected components separately (finite matrices)")
    _add_json(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("derive", help="derive action matrices F_0..F_K from F_1")
    _add_model(p)
    p.add_argument("--upto", required=True, type=int, metavar="K",
                   help="largest simple index to derive")
    p.add_argument("--basis", choices=["projectives", "simples"],
                   help="convert the model to this basis first")
    p.add_argument("--window", type=int, default=0, metavar="N",
                   help="also print a dense NxN window of each matrix")
    _add_json(p)
    p.set_defaults(handler=_cmd_derive)

    p = sub.add_parser("transitive",
                       help="decide strong connectivity of the action graph")
    _add_model(p)
    _add_json(p)
    p.set_defaults(handler=_cmd_transitive)

    p = sub.add_parser("verify-catalog",
                       help="recompute every catalog fixture from the oracles "
                            "and check all invariants")
    _add_json(p)
    p.set_defaults(handler=_cmd_verify_catalog)

    p = sub.add_parser("obstruction",
                       help="run the top/socle feasibility solver on a model")
    _add_model(p)
    p.add_argument("--depth", required=True, type=int, metavar="K",
                   help="number of functor degrees to constrain")
    p.add_argument("--schur-dim", type=int, default=1, metavar="D",
                   help="allowed endomorphism dimension of a simple (default 1)")
    _add_json(p)
    p.set_defaults(handler=_cmd_obstruction)

    p = sub.add_parser("decompose",
                       help="decompose a tensor product over the category-O catalog")
    p.add_argument("--tensor", required=True, metavar="EXPR",
                   help='expression like "L(1) x P(-2)"')
    _add_json(p)
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("oracle", help="run an independent oracle")
    osub = p.add_subparsers(dest="oracle_verb", required=True, metavar="ORACLE")

    ot = osub.add_parser("o-tensor",
                         help="tensor a named object by a simple in the Verma basis")
    ot.add_argument("--n", required=True, type=int, metavar="N",
                    help="highest weight of the tensoring simple L(N)")
    group = ot.add_mutually_exclusive_group(required=True)
    group.add_argument("--object", metavar="OBJ",
                       help="integral object: L(w), P(w) or Delta(w)")
    group.add_argument("--coset-offset", type=int, metavar="J",
                       help="generic-coset Verma at integer offset J")
    _add_json(ot)
    ot.set_defaults(handler=_cmd_o_tensor)

    oj = osub.add_parser("jordan",
                         help="Jordan type of a Jordan cell tensored with the "
                              "2-dimensional simple")
    oj.add_argument("--n", required=True, type=int, metavar="N",
                    help="size of the Jordan cell")
    oj.add_argument("--lambda", required=True, dest="eigenvalue", metavar="Q",
                    help="eigenvalue, an exact rational; write negatives "
                         "with = as in --lambda=-9/4")
    _add_json(oj)
    oj.set_defaults(handler=_cmd_jordan)

    ors = osub.add_parser("restrictions",
                          help="verify or solve a restriction-character system")
    ors.add_argument("--system", required=True, metavar="NAME",
                     help="one of: " + ", ".join(oracles.restriction_system_names()))
    ors.add_argument("--truncation", type=int, default=20, metavar="K",
                     help="window of simple indices to check (default 20)")
    ors.add_argument("--assume-restrictions", action="store_true",
                     help="pin the chain characters to their stated towers "
                          "(the forked system is underdetermined without this)")
    _add_json(ors)
    ors.set_defaults(handler=_cmd_restrictions)

    p = sub.add_parser("render", help="write the action or diagram graph as DOT")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--model", metavar="NAME|FILE",
                       help="catalog model name or JSON model/matrix file")
    group.add_argument("--gcm", metavar="FILE",
                       help="JSON matrix document; renders its diagram graph")
    p.add_argument("--dot", required=True, metavar="OUT",
                   help="output path, or - for stdout")
    p.add_argument("--size", type=int, metavar="N",
                   help="window of objects to show (default: head plus a tail sample)")
    p.set_defaults(handler=_cmd_render)

    p = sub.add_parser("predict",
                       help="case-dispatch type predictions for the two "
                            "classification tables")
    p.add_argument("--theorem", required=True, choices=["10.1", "10.2"],
                   help="which dispatch table to consult")
    p.add_argument("--case", metavar="C",
                   help="case label: a-e for 10.1, a or b for 10.2")
    p.add_argument("--weight-class", choices=list(modcat.WEIGHT_CLASSES),
                   help="weight class input for the 10.1 table")
    p.add_argument("--special-fixed", action="store_true",
                   help="the module is fixed by the special self-equivalence "
                        "(half-integer class only)")
    p.add_argument("--dim", type=int, choices=[0, 1, 2, 3],
                   help="subalgebra dimension input for the 10.2 table")
    p.add_argument("--semisimple", action="store_true",
                   help="the dimension-1 subalgebra is semisimple")
    p.add_argument("--nilpotent", action="store_true",
                   help="the dimension-1 subalgebra is nilpotent")
    _add_json(p)
    p.set_defaults(handler=_cmd_predict)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

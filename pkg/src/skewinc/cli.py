"""Command line front end.

    skewinc run PROBLEM.json [--json] [--max-degree N]
    skewinc check-paper-examples [--field Q|F<p>] [--json]

Exit status: 0 on success, 1 when the input fails validation, 2 when a
consistency check between independent computations fails (a bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from .cohomology import cohomology, h1_cross_check
from .derivations import (derivation_space, decompose, inner_space, in_span, is_potential,
                          transport_by_beta)
from .errors import NotADerivation, ValidationError
from .fields import Field, field_from_spec
from .incidence import are_equivalent, is_fractional
from .poset import all_comparable_elements, check_vanishing_condition, poset_length
from .problem import Problem, load_problem, parse_sigma
from .suite import headline, render, run_examples

DEFAULT_MAX_DEGREE = 3

OK, INVALID, INCONSISTENT = 0, 1, 2


@dataclass
class Outcome:
    task: str
    data: dict
    lines: list = dc_field(default_factory=list)
    status: int = OK
    checks: list = dc_field(default_factory=list)


def _fmt_pair(pr):
    return "(%s,%s)" % pr


def _fmt_element(f, F: Field):
    items = ["%s:%s" % (_fmt_pair(pr), F.format(v)) for pr, v in
             sorted(f.entries.items(), key=lambda kv: f.poset.pair_index[kv[0]])]
    return "{" + ", ".join(items) + "}"


def _table(f, F: Field):
    return {"%s,%s" % pr: F.format(v) for pr, v in
            sorted(f.entries.items(), key=lambda kv: f.poset.pair_index[kv[0]])}


def _fmt_cochain(vec, basis, F: Field):
    terms = ["%s*(%s)" % (F.format(v), ",".join(map(str, c)))
             for v, c in zip(vec, basis) if v != F.zero]
    return " + ".join(terms) or "0"


def _cycles(lam):
    seen, out = set(), []
    for x in lam.poset.elements:
        if x in seen:
            continue
        cyc = [x]
        seen.add(x)
        y = lam(x)
        while y != x:
            cyc.append(y)
            seen.add(y)
            y = lam(y)
        if len(cyc) > 1:
            out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "id"


def task_validate(prob: Problem, opts, max_degree):
    P, F = prob.poset, prob.field
    comp = sorted(all_comparable_elements(P), key=P.index.get)
    fr = is_fractional(prob.sigma)
    data = {"elements": len(P), "comparable_pairs": len(P.pairs),
            "covers": [list(map(str, c)) for c in P.covers], "length": poset_length(P),
            "all_comparable": [str(x) for x in comp], "lambda": _cycles(prob.lam),
            "sigma_multiplicative": True, "sigma_fractional": fr.fractional,
            "beta_invertible": True}
    lines = ["poset: %d elements, %d comparable pairs, length %d"
             % (len(P), len(P.pairs), poset_length(P)),
             "covers: " + " ".join(_fmt_pair(c) for c in P.covers),
             "all-comparable elements: %s" % (" ".join(map(str, comp)) or "none"),
             "lambda: " + _cycles(prob.lam),
             "sigma: multiplicative, %s" % ("fractional" if fr.fractional else "not fractional"),
             "beta: invertible"]
    if comp:
        cond = check_vanishing_condition(P, prob.lam, comp[0])
        data["vanishing_condition"] = cond
        lines.append("vanishing condition at %s: %s" % (comp[0], "holds" if cond else "fails"))
    return Outcome("validate", data, lines)


def task_cohomology(prob: Problem, opts, max_degree):
    F = prob.field
    if "degree" in opts:
        degrees = [opts["degree"]]
    else:
        degrees = list(range(max_degree + 1))
    if max(degrees) > max_degree:
        raise ValidationError("degree %d exceeds --max-degree %d" % (max(degrees), max_degree))
    results, lines = [], []
    for n in degrees:
        r = cohomology(prob.poset, prob.sigma, prob.lam, n)
        results.append(r.as_dict(F))
        lines.append("H^%d: dim Z = %d, dim B = %d, dim H = %d" % (n, r.dim_Z, r.dim_B, r.dim_H))
        for i, rep in enumerate(r.representatives):
            lines.append("  representative %d: %s" % (i + 1, _fmt_cochain(rep, r.space.basis, F)))
    return Outcome("cohomology", {"degrees": results}, lines)


def task_derivations(prob: Problem, opts, max_degree):
    D = derivation_space(prob.spec)
    I = inner_space(prob.spec)
    data = {"dim_phiD": D.dim, "dim_iphiD": I.dim, "dim_quotient": D.dim - I.dim}
    lines = ["dim phi-derivations = %d" % D.dim,
             "dim inner phi-derivations = %d" % I.dim,
             "dim quotient = %d" % (D.dim - I.dim)]
    return Outcome("derivations", data, lines)


def task_decompose(prob: Problem, opts, max_degree):
    F = prob.field
    spec = prob.spec
    inner = inner_space(spec.psi)
    out, lines, status = [], [], OK
    for k, d in enumerate(derivation_space(spec).basis):
        d_psi = d if spec.is_psi else transport_by_beta(d, spec.beta, "to_psi")
        try:
            dec = decompose(d_psi, spec.sigma, spec.lam)
        except NotADerivation as exc:
            status = INCONSISTENT
            out.append({"index": k + 1, "error": str(exc)})
            lines.append("derivation %d: INCONSISTENT: %s" % (k + 1, exc))
            continue
        pot = is_potential(dec.tau).potential
        L_inner = in_span(dec.additive, inner.basis)
        if pot != L_inner:
            status = INCONSISTENT
        out.append({"index": k + 1, "f": _table(dec.f, F), "tau": _table(dec.tau.tau, F),
                    "tau_potential": pot, "L_tau_inner": L_inner})
        lines.append("derivation %d: f = %s" % (k + 1, _fmt_element(dec.f, F)))
        lines.append("  tau = %s (%s)" % (_fmt_element(dec.tau.tau, F),
                                          "potential" if pot else "not potential"))
        if pot != L_inner:
            lines.append("  INCONSISTENT: tau potential=%s but L_tau inner=%s" % (pot, L_inner))
    return Outcome("decompose", {"derivations": out}, lines, status)


def task_fractional(prob: Problem, opts, max_degree):
    F = prob.field
    fr = is_fractional(prob.sigma)
    if fr.fractional:
        eta = {str(x): F.format(v) for x, v in fr.eta.items()}
        return Outcome("fractional", {"fractional": True, "eta": eta},
                       ["sigma is fractional, eta = " +
                        ", ".join("%s:%s" % kv for kv in eta.items())])
    cyc = [str(x) for x in fr.cycle]
    return Outcome("fractional", {"fractional": False, "cycle": cyc,
                                  "cycle_product": F.format(fr.cycle_product)},
                   ["sigma is not fractional: cycle %s has product %s"
                    % ("-".join(cyc), F.format(fr.cycle_product))])


def task_equivalent(prob: Problem, opts, max_degree):
    other = opts.get("sigma", "zeta")
    s2 = parse_sigma(other, prob.poset, prob.field, path="$.tasks.equivalent.sigma")
    eq = are_equivalent(prob.sigma, s2)
    return Outcome("equivalent", {"equivalent": eq},
                   ["sigma is %sequivalent to the given element" % ("" if eq else "not ")])


def task_cross_check(prob: Problem, opts, max_degree):
    rep = h1_cross_check(prob.spec)
    lines = ["dim phiD - dim iphiD = %d - %d = %d" % (rep.dim_phiD, rep.dim_iphiD,
                                                    rep.dim_phiD - rep.dim_iphiD),
             "dim H^1 = %d" % rep.dim_H1,
             "dim additive psi-derivations = %d, dim Z^1 = %d" % (rep.dim_apsiD, rep.dim_Z1),
             "dim (inner ∩ additive) = %d, dim B^1 = %d" % (rep.dim_ipsiD_cap_apsiD, rep.dim_B1),
             "cross-check: %s" % ("consistent" if rep.ok else "INCONSISTENT")]
    return Outcome("cross-check", rep.as_dict(), lines, OK if rep.ok else INCONSISTENT)


def task_examples(prob_or_field, opts, max_degree):
    F = prob_or_field.field if isinstance(prob_or_field, Problem) else prob_or_field
    if "field" in opts:
        F = field_from_spec(opts["field"])
    checks = run_examples(F)
    lines = [c.line() for c in checks] + ["summary:"] + ["  " + s for s in headline(checks)]
    ok = all(c.ok for c in checks)
    return Outcome("paper-examples", {"field": F.name, "checks": [c.as_dict() for c in checks],
                                      "summary": headline(checks), "ok": ok},
                   lines, OK if ok else INCONSISTENT, checks)


TASKS = {"validate": task_validate, "cohomology": task_cohomology,
         "derivations": task_derivations, "decompose": task_decompose,
         "fractional": task_fractional, "equivalent": task_equivalent,
         "cross-check": task_cross_check, "paper-examples": task_examples}


def run(path, as_json=False, max_degree=DEFAULT_MAX_DEGREE):
    """Execute a problem file; returns (exit status, report text)."""
    try:
        prob = load_problem(path)
    except OSError as exc:
        return INVALID, "error: cannot read %s: %s\n" % (path, exc.strerror)
    except ValidationError as exc:
        return INVALID, "error: %s: %s\n" % (type(exc).__name__, exc)
    outcomes = []
    status = OK
    for task in prob.tasks:
        try:
            oc = TASKS[task.name](prob, task.options, max_degree)
        except ValidationError as exc:
            return INVALID, "error: task %s: %s: %s\n" % (task.name, type(exc).__name__, exc)
        outcomes.append(oc)
        status = max(status, oc.status)
    if as_json:
        doc = {"problem": prob.normalized(),
               "results": [{"task": oc.task, "status": oc.status, **oc.data} for oc in outcomes],
               "status": status}
        return status, json.dumps(doc, indent=2) + "\n"
    text = []
    for oc in outcomes:
        text.append("== %s" % oc.task)
        text.extend(oc.lines)
    return status, "\n".join(text) + "\n"


def check_examples(field_text="Q", as_json=False):
    try:
        F = field_from_spec(field_text)
    except ValidationError as exc:
        return INVALID, "error: %s\n" % exc
    oc = task_examples(F, {}, DEFAULT_MAX_DEGREE)
    if as_json:
        return oc.status, json.dumps(oc.data, indent=2) + "\n"
    return oc.status, render(oc.checks, F)


def build_parser():
    ap = argparse.ArgumentParser(prog="skewinc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    r = sub.add_parser("run", help="execute the tasks of a problem file")
    r.add_argument("file")
    r.add_argument("--json", action="store_true", help="machine-readable report")
    r.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    c = sub.add_parser("check-paper-examples", help="run the built-in worked examples")
    c.add_argument("--field", default="Q", help="Q or F<p>")
    c.add_argument("--json", action="store_true")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "run":
        if args.max_degree < 0:
            sys.stderr.write("error: --max-degree must be >= 0\n")
            return INVALID
        status, text = run(args.file, args.json, args.max_degree)
    else:
        status, text = check_examples(args.field, args.json)
    (sys.stdout if status != INVALID else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

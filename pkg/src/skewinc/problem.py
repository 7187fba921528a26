"""Problem files: a JSON document describing (K, X, sigma, lambda, beta) and tasks.

Example::

    {"field": "Q",
     "poset": {"elements": ["1","2","3","4"],
               "relations": [["1","3"],["1","4"],["2","3"],["2","4"]]},
     "sigma": {"covers": {"1,3": "1", "1,4": "1", "2,3": "1", "2,4": "2"}},
     "lambda": "id", "beta": "identity",
     "tasks": ["validate", {"cohomology": {"degree": 1}}, "cross-check"]}

``sigma`` is ``"zeta"``, ``{"covers": ...}`` or ``{"table": ...}``;
``lambda`` is ``"id"`` or a table ``{"x": "image"}``; ``beta`` is
``"identity"`` or ``{"table": ...}``.  Pair keys are ``"x,y"`` strings and
scalars are decimal strings (``"p/q"`` over Q).
"""

from __future__ import annotations

import json
from functools import cached_property
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

from .errors import ParseError, ValidationError
from .fields import Field, field_from_spec
from .incidence import (AutomorphismSpec, IncidenceElement, MultiplicativeElement,
                        delta_identity, multiplicative_from_covers, multiplicative_zeta,
                        validate_multiplicative)
from .poset import Poset, PosetAutomorphism, identity_automorphism, poset_from_covers, validate_automorphism

TASK_NAMES = ("validate", "cohomology", "derivations", "decompose", "fractional",
              "equivalent", "cross-check", "paper-examples")


@dataclass
class Task:
    name: str
    options: dict = dc_field(default_factory=dict)

    def as_json(self):
        return {self.name: self.options} if self.options else self.name


@dataclass
class Problem:
    field: Field
    poset: Poset
    sigma: MultiplicativeElement
    lam: PosetAutomorphism
    beta: IncidenceElement
    tasks: list
    sigma_source: Any = "zeta"

    @cached_property
    def spec(self) -> AutomorphismSpec:
        return AutomorphismSpec(self.beta, self.sigma, self.lam)

    def normalized(self) -> dict:
        """A problem document that reloads to the same objects."""
        F, P = self.field, self.poset
        beta = ("identity" if self.beta == delta_identity(P, F)
                else {"table": _table(self.beta, F)})
        lam = ("id" if self.lam.is_identity
               else {str(x): str(self.lam(x)) for x in P.elements})
        return {"field": F.name,
                "poset": {"elements": [str(x) for x in P.elements],
                          "relations": [[str(a), str(b)] for a, b in P.covers]},
                "sigma": {"table": _table(self.sigma.sigma, F)},
                "lambda": lam, "beta": beta,
                "tasks": [t.as_json() for t in self.tasks]}


def _table(f: IncidenceElement, F: Field) -> dict:
    return {"%s,%s" % pr: F.format(f[pr]) for pr in f.poset.pairs}


def _fail(msg, path):
    raise ParseError(msg, path=path)


def _expect(obj, kind, path):
    if not isinstance(obj, kind):
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        _fail("expected %s, got %s" % (name, type(obj).__name__), path)
    return obj


def _pair_key(key, P: Poset, path):
    parts = key.split(",")
    if len(parts) != 2:
        _fail("pair keys look like 'x,y', got %r" % key, path)
    x, y = (s.strip() for s in parts)
    for t in (x, y):
        if t not in P:
            _fail("unknown element %r" % t, path)
    return x, y


def _scalar(v, F: Field, path):
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        _fail("scalars are decimal strings", path)
    try:
        return F.coerce(str(v))
    except ValidationError as exc:
        _fail(str(exc), path)


def parse_sigma(obj, P: Poset, F: Field, path="$.sigma") -> MultiplicativeElement:
    if obj is None or obj == "zeta":
        return multiplicative_zeta(P, F)
    _expect(obj, dict, path)
    if set(obj) == {"covers"}:
        vals = {}
        for k, v in _expect(obj["covers"], dict, path + ".covers").items():
            loc = "%s.covers[%r]" % (path, k)
            vals[_pair_key(k, P, loc)] = _scalar(v, F, loc)
        return multiplicative_from_covers(P, F, vals)
    if set(obj) == {"table"}:
        ent = {(x, x): F.one for x in P.elements}
        for k, v in _expect(obj["table"], dict, path + ".table").items():
            loc = "%s.table[%r]" % (path, k)
            x, y = _pair_key(k, P, loc)
            if not P.le(x, y):
                _fail("%s is not <= %s" % (x, y), loc)
            ent[(x, y)] = _scalar(v, F, loc)
        for pr in P.pairs:
            if pr not in ent:
                _fail("missing entry for %s,%s" % pr, path + ".table")
        return validate_multiplicative(IncidenceElement(P, F, ent))
    _fail("sigma must be 'zeta', {'covers': ...} or {'table': ...}", path)


def parse_lambda(obj, P: Poset, path="$.lambda") -> PosetAutomorphism:
    if obj is None or obj == "id":
        return identity_automorphism(P)
    _expect(obj, dict, path)
    mapping = {}
    for k, v in obj.items():
        if k not in P:
            _fail("unknown element %r" % k, "%s[%r]" % (path, k))
        if not isinstance(v, str) or v not in P:
            _fail("unknown image %r" % (v,), "%s[%r]" % (path, k))
        mapping[k] = v
    for x in P.elements:
        mapping.setdefault(x, x)
    return validate_automorphism(P, mapping)


def parse_beta(obj, P: Poset, F: Field, path="$.beta") -> IncidenceElement:
    if obj is None or obj == "identity":
        return delta_identity(P, F)
    _expect(obj, dict, path)
    table = obj["table"] if set(obj) == {"table"} else obj
    ent = {}
    for k, v in _expect(table, dict, path).items():
        loc = "%s[%r]" % (path, k)
        x, y = _pair_key(k, P, loc)
        if not P.le(x, y):
            _fail("%s is not <= %s" % (x, y), loc)
        ent[(x, y)] = _scalar(v, F, loc)
    return IncidenceElement(P, F, ent)


def parse_task(obj, path) -> Task:
    if isinstance(obj, str):
        words = obj.split()
        if not words:
            _fail("empty task", path)
        name, rest = words[0], words[1:]
        opts = {}
        while rest:
            flag = rest.pop(0)
            if not flag.startswith("--") or not rest:
                _fail("cannot parse task %r" % obj, path)
            val = rest.pop(0)
            opts[flag[2:].replace("-", "_")] = int(val) if val.isdigit() else val
        obj = {name: opts} if opts else name
    if isinstance(obj, str):
        name, opts = obj, {}
    elif isinstance(obj, dict) and len(obj) == 1:
        (name, opts), = obj.items()
        opts = dict(_expect(opts, dict, path + "." + name))
    else:
        _fail("a task is a name or a one-key object", path)
    if name not in TASK_NAMES:
        _fail("unknown task %r (known: %s)" % (name, ", ".join(TASK_NAMES)), path)
    if "degree" in opts:
        d = opts["degree"]
        if isinstance(d, bool) or not isinstance(d, int) or d < 0:
            _fail("degree must be a non-negative integer", path)
    return Task(name, opts)


def parse_problem(text: str) -> Problem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return problem_from_dict(doc)


def problem_from_dict(doc: dict) -> Problem:
    _expect(doc, dict, "$")
    unknown = set(doc) - {"field", "poset", "sigma", "lambda", "beta", "tasks"}
    if unknown:
        _fail("unknown keys %s" % sorted(unknown), "$")
    F = field_from_spec(_expect(doc.get("field", "Q"), str, "$.field"))
    pos = _expect(doc.get("poset"), dict, "$.poset")
    elements = _expect(pos.get("elements"), list, "$.poset.elements")
    for i, x in enumerate(elements):
        _expect(x, str, "$.poset.elements[%d]" % i)
    rel = []
    for i, r in enumerate(_expect(pos.get("relations", []), list, "$.poset.relations")):
        loc = "$.poset.relations[%d]" % i
        if not (isinstance(r, list) and len(r) == 2 and all(isinstance(t, str) for t in r)):
            _fail("a relation is a pair [x, y] of element names", loc)
        rel.append(tuple(r))
    P = poset_from_covers(elements, rel)
    sigma = parse_sigma(doc.get("sigma", "zeta"), P, F)
    lam = parse_lambda(doc.get("lambda", "id"), P)
    beta = parse_beta(doc.get("beta", "identity"), P, F)
    tasks = [parse_task(t, "$.tasks[%d]" % i)
             for i, t in enumerate(_expect(doc.get("tasks", ["validate"]), list, "$.tasks"))]
    prob = Problem(F, P, sigma, lam, beta, tasks, doc.get("sigma", "zeta"))
    prob.spec  # beta must be invertible
    return prob


def load_problem(path) -> Problem:
    with open(path) as fh:
        return parse_problem(fh.read())

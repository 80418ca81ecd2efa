"""JSON algebra files: parse, validate (antisymmetry is structural,
Jacobi is checked with a named triple) and serialize with exact
round-tripping of coefficients.

Layout:

    {
      "name": "heisenberg3",
      "field": "real",
      "dim": 3,
      "basis": ["e1", "e2", "e3"],
      "brackets": [{"i": 0, "j": 1, "terms": [[2, "1"]]}],
      "forms": {
        "eta": ["0", "0", "1"],
        "omega": [[0, 1, "1"]]
      },
      "metrics": {"g": {"diag": ["1/2", "1/2", "1"]}}
    }

1-forms are coefficient string arrays; 2-forms are lists of
[i, j, coefficient] with i < j.  Metrics are either {"diag": [...]} or
{"matrix": [[...]]}.  Coefficients are rational text "p/q", or "p/q,r/s"
on complex algebras; no floating input is accepted.
"""

import json
from dataclasses import dataclass, field

from .algebra import COMPLEX, REAL, LieAlgebra, check_jacobi
from .errors import InputError
from .forms import one_form, two_form
from .metric import MetricData
from .scalars import format_scalar, parse_scalar


@dataclass(frozen=True)
class AlgebraFile:
    """Parsed contents of an algebra file."""

    algebra: LieAlgebra
    forms: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)


def _require(doc, key, kind, where):
    if key not in doc:
        raise InputError("missing %r in %s" % (key, where))
    value = doc[key]
    if not isinstance(value, kind):
        raise InputError(
            "%r in %s must be %s, got %r"
            % (key, where, kind.__name__, type(value).__name__))
    return value


def _parse_brackets(doc, dim, allow_complex):
    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise InputError("'brackets' must be a list")
    brackets = {}
    for pos, entry in enumerate(entries):
        where = "brackets[%d]" % pos
        if not isinstance(entry, dict):
            raise InputError("%s must be an object" % where)
        i = _require(entry, "i", int, where)
        j = _require(entry, "j", int, where)
        if not 0 <= i < j < dim:
            raise InputError(
                "%s: need 0 <= i < j < dim, got i=%d, j=%d" % (where, i, j))
        if (i, j) in brackets:
            raise InputError("%s: duplicate pair (%d, %d)" % (where, i, j))
        terms = _require(entry, "terms", list, where)
        coeffs = [parse_scalar("0", allow_complex)] * dim
        seen = set()
        for term in terms:
            if (not isinstance(term, list) or len(term) != 2
                    or not isinstance(term[0], int)):
                raise InputError(
                    "%s: each term must be [index, coefficient]" % where)
            k, text = term
            if not 0 <= k < dim:
                raise InputError(
                    "%s: term index %d out of range for dim %d"
                    % (where, k, dim))
            if k in seen:
                raise InputError("%s: duplicate term index %d" % (where, k))
            seen.add(k)
            try:
                coeffs[k] = parse_scalar(text, allow_complex)
            except InputError as exc:
                raise InputError("%s, term e%d: %s" % (where, k + 1, exc))
        brackets[(i, j)] = tuple(coeffs)
    return brackets


def _parse_form(name, spec, dim, allow_complex):
    where = "forms[%r]" % name
    if not isinstance(spec, list) or not spec:
        raise InputError("%s must be a nonempty list" % where)
    if all(isinstance(x, str) for x in spec):
        if len(spec) != dim:
            raise InputError(
                "%s: 1-form needs %d coefficients, got %d"
                % (where, dim, len(spec)))
        try:
            return one_form(dim, [parse_scalar(x, allow_complex)
                                  for x in spec])
        except InputError as exc:
            raise InputError("%s: %s" % (where, exc))
    if all(isinstance(x, list) for x in spec):
        entries = []
        for pos, item in enumerate(spec):
            if (len(item) != 3 or not isinstance(item[0], int)
                    or not isinstance(item[1], int)):
                raise InputError(
                    "%s[%d]: 2-form entries are [i, j, coefficient]"
                    % (where, pos))
            i, j, text = item
            if not 0 <= i < j < dim:
                raise InputError(
                    "%s[%d]: need 0 <= i < j < dim, got i=%d, j=%d"
                    % (where, pos, i, j))
            try:
                entries.append((i, j, parse_scalar(text, allow_complex)))
            except InputError as exc:
                raise InputError("%s[%d]: %s" % (where, pos, exc))
        return two_form(dim, entries)
    raise InputError(
        "%s must be a coefficient array (1-form) or a list of "
        "[i, j, coefficient] (2-form)" % where)


def _parse_metric(name, spec, dim):
    where = "metrics[%r]" % name
    if not isinstance(spec, dict):
        raise InputError("%s must be an object" % where)
    if "diag" in spec:
        diag = spec["diag"]
        if not isinstance(diag, list) or len(diag) != dim:
            raise InputError("%s: 'diag' needs %d entries" % (where, dim))
        try:
            return MetricData.from_diag(
                [parse_scalar(x) for x in diag])
        except InputError as exc:
            raise InputError("%s: %s" % (where, exc))
    if "matrix" in spec:
        rows = spec["matrix"]
        if (not isinstance(rows, list) or len(rows) != dim
                or any(not isinstance(r, list) or len(r) != dim
                       for r in rows)):
            raise InputError("%s: 'matrix' must be %dx%d" % (where, dim, dim))
        try:
            parsed = [[parse_scalar(x) for x in row] for row in rows]
        except InputError as exc:
            raise InputError("%s: %s" % (where, exc))
        if any(parsed[i][j] != parsed[j][i]
               for i in range(dim) for j in range(dim)):
            raise InputError("%s: matrix is not symmetric" % where)
        return MetricData.from_rows(parsed)
    raise InputError("%s needs either 'diag' or 'matrix'" % where)


def parse_algebra_file(text):
    """Parse and fully validate an algebra file, Jacobi included."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError("not valid JSON: %s" % exc)
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    name = _require(doc, "name", str, "the file")
    dim = _require(doc, "dim", int, "the file")
    field_name = doc.get("field", REAL)
    if field_name not in (REAL, COMPLEX):
        raise InputError("'field' must be 'real' or 'complex'")
    allow_complex = field_name == COMPLEX
    labels = doc.get("basis", ())
    if labels and (not isinstance(labels, list)
                   or any(not isinstance(x, str) for x in labels)):
        raise InputError("'basis' must be a list of strings")
    brackets = _parse_brackets(doc, dim, allow_complex)
    algebra = LieAlgebra(name=name, dim=dim, field=field_name,
                         brackets=brackets, basis_labels=tuple(labels))
    violations = check_jacobi(algebra)
    if violations:
        i, j, k = violations[0]
        raise InputError(
            "Jacobi identity fails on basis triple (%d, %d, %d) "
            "(0-based: (%d, %d, %d)); %d violating triple(s) in total"
            % (i, j, k, i - 1, j - 1, k - 1, len(violations)))
    forms_doc = doc.get("forms", {})
    if not isinstance(forms_doc, dict):
        raise InputError("'forms' must be an object")
    forms = {fname: _parse_form(fname, spec, dim, allow_complex)
             for fname, spec in forms_doc.items()}
    metrics_doc = doc.get("metrics", {})
    if not isinstance(metrics_doc, dict):
        raise InputError("'metrics' must be an object")
    metrics = {mname: _parse_metric(mname, spec, dim)
               for mname, spec in metrics_doc.items()}
    return AlgebraFile(algebra=algebra, forms=forms, metrics=metrics)


def load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    try:
        return parse_algebra_file(text)
    except InputError as exc:
        raise InputError("%s: %s" % (path, exc))


def _form_to_json(form):
    if form.degree == 1:
        return [format_scalar(form.coefficient((i,)))
                for i in range(form.dim)]
    if form.degree == 2:
        return [[i, j, format_scalar(v)]
                for (i, j), v in sorted(form.coeffs.items())]
    raise InputError(
        "only 1-forms and 2-forms are serializable, got degree %d"
        % form.degree)


def _metric_to_json(metric):
    if not metric.exact:
        raise InputError("floating metrics are not serializable")
    rows = [list(r) for r in metric.matrix]
    n = len(rows)
    if all(rows[i][j] == 0 for i in range(n) for j in range(n) if i != j):
        return {"diag": [format_scalar(rows[i][i]) for i in range(n)]}
    return {"matrix": [[format_scalar(x) for x in row] for row in rows]}


def serialize_algebra_file(af):
    """Canonical text form; parse(serialize(x)) is semantically identical."""
    algebra = af.algebra
    doc = {
        "name": algebra.name,
        "field": algebra.field,
        "dim": algebra.dim,
        "basis": list(algebra.basis_labels),
        "brackets": [
            {"i": i, "j": j,
             "terms": [[k, format_scalar(c)]
                       for k, c in enumerate(coeffs) if c != 0]}
            for (i, j), coeffs in sorted(algebra.brackets.items())
        ],
    }
    if af.forms:
        doc["forms"] = {name: _form_to_json(f)
                        for name, f in sorted(af.forms.items())}
    if af.metrics:
        doc["metrics"] = {name: _metric_to_json(m)
                          for name, m in sorted(af.metrics.items())}
    return json.dumps(doc, indent=2) + "\n"


def save(path, af):
    text = serialize_algebra_file(af)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError("cannot write %s: %s" % (path, exc))

"""Reading and writing the JSON data files.

Scalars are written as "a/b" (or "a") strings, complex values as
{"re": "a/b", "im": "c/d"}; matrices are row-major arrays of scalars;
filtrations map step indices to lists of spanning vectors.  Compound
files bundle these under fixed keys:

* Hodge structure      {"weight", "form", "F"}
* mixed structure      {"W", "F"}
* polarized mixed      {"weight", "form", "F", "W", "N"}
* orbit                {"weight", "form", "F", "nilpotents"}
* family               orbit keys plus {"abelian_basis"}
* period map           {"z_part", "t_linear", "higher"}

Readers raise FormatError on anything malformed; writers always emit
the canonical grammar (reduced fractions, positive denominators).
"""
from __future__ import annotations

import json
from typing import Any

from .errors import FormatError
from .filtrations import DecFiltration, IncFiltration
from .forms import BilForm
from .matrices import Mat
from .orbits import IVI, NilpotentCone, NilpotentOrbit, PolyMap
from .scalars import GR, I
from .subspaces import Subspace

__all__ = [
    "scalar_to_json", "scalar_from_json",
    "matrix_to_json", "matrix_from_json",
    "subspace_to_json", "subspace_from_json",
    "dec_filtration_to_json", "dec_filtration_from_json",
    "inc_filtration_to_json", "inc_filtration_from_json",
    "bigrading_to_json",
    "hs_to_json", "hs_from_json", "mhs_to_json", "mhs_from_json",
    "pmhs_to_json", "pmhs_from_json",
    "orbit_to_json", "orbit_from_json", "ivi_to_json", "ivi_from_json",
    "polymap_to_json", "polymap_from_json",
    "load_file", "dump_text",
]


# ---------------------------------------------------------------------------
# scalars and matrices
# ---------------------------------------------------------------------------

def scalar_to_json(x) -> str | dict:
    x = x if isinstance(x, GR) else GR(x)
    if x.is_real():
        return str(x)
    return {"re": str(x.re), "im": str(x.im)}


def _rational(obj) -> GR:
    if isinstance(obj, bool):
        raise FormatError("booleans are not scalars")
    if isinstance(obj, int):
        return GR(obj)
    if isinstance(obj, str):
        try:
            return GR.parse(obj)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"expected a rational, got {type(obj).__name__}")


def scalar_from_json(obj) -> GR:
    if isinstance(obj, dict):
        unknown = set(obj) - {"re", "im"}
        if unknown:
            raise FormatError(f"unknown scalar keys {sorted(unknown)}")
        re = _rational(obj.get("re", 0))
        im = _rational(obj.get("im", 0))
        return re + im * I
    return _rational(obj)


def matrix_to_json(m: Mat) -> list:
    return [[scalar_to_json(m[i, j]) for j in range(m.ncols)]
            for i in range(m.nrows)]


def matrix_from_json(obj) -> Mat:
    if not isinstance(obj, list) or not obj:
        raise FormatError("a matrix is a non-empty array of rows")
    rows = []
    width = None
    for row in obj:
        if not isinstance(row, list) or not row:
            raise FormatError("matrix rows are non-empty arrays")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise FormatError("matrix rows have different lengths")
        rows.append([scalar_from_json(e) for e in row])
    return Mat(rows)


def _vector_from_json(obj, ambient: int) -> tuple:
    if not isinstance(obj, list):
        raise FormatError("a vector is an array of scalars")
    if len(obj) != ambient:
        raise FormatError(
            f"vector of length {len(obj)} in a dimension-{ambient} space")
    return tuple(scalar_from_json(e) for e in obj)


# ---------------------------------------------------------------------------
# subspaces, filtrations, bigradings
# ---------------------------------------------------------------------------

def subspace_to_json(s: Subspace) -> list:
    return [[scalar_to_json(GR.from_triple(e)) for e in row]
            for row in s.rows]


def subspace_from_json(obj, ambient: int) -> Subspace:
    if not isinstance(obj, list):
        raise FormatError("a subspace is an array of spanning vectors")
    vecs = [_vector_from_json(v, ambient) for v in obj]
    return Subspace.span(vecs, ambient)


def _steps_to_json(steps: dict[int, Subspace]) -> dict:
    return {str(j): subspace_to_json(s) for j, s in steps.items()}


def _steps_from_json(obj) -> dict[int, Subspace]:
    if not isinstance(obj, dict) or not obj:
        raise FormatError("a filtration is a non-empty index -> vectors map")
    raw: dict[int, Any] = {}
    ambient = None
    for key, vecs in obj.items():
        try:
            j = int(key)
        except (TypeError, ValueError):
            raise FormatError(f"bad filtration index {key!r}") from None
        if j in raw:
            raise FormatError(f"duplicate filtration index {j}")
        if not isinstance(vecs, list):
            raise FormatError("filtration steps are arrays of vectors")
        raw[j] = vecs
        for v in vecs:
            if isinstance(v, list) and v:
                ambient = ambient or len(v)
    if ambient is None:
        raise FormatError("cannot infer the dimension: every step is empty")
    return {j: subspace_from_json(vecs, ambient) for j, vecs in raw.items()}


def dec_filtration_to_json(f: DecFiltration) -> dict:
    return _steps_to_json(f.steps)


def dec_filtration_from_json(obj) -> DecFiltration:
    try:
        return DecFiltration(_steps_from_json(obj))
    except ValueError as exc:
        raise FormatError(f"bad decreasing filtration: {exc}") from None


def inc_filtration_to_json(w: IncFiltration) -> dict:
    return _steps_to_json(w.steps)


def inc_filtration_from_json(obj) -> IncFiltration:
    try:
        return IncFiltration(_steps_from_json(obj))
    except ValueError as exc:
        raise FormatError(f"bad increasing filtration: {exc}") from None


def bigrading_to_json(bigr) -> dict:
    return {f"{p},{q}": subspace_to_json(s)
            for (p, q), s in bigr.pieces.items()}


# ---------------------------------------------------------------------------
# compound files
# ---------------------------------------------------------------------------

def _require(obj, *keys) -> None:
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"missing keys: {', '.join(missing)}")


def _weight_from_json(obj) -> int:
    w = obj["weight"]
    if isinstance(w, bool) or not isinstance(w, int):
        raise FormatError("weight must be an integer")
    return w


def _form_from_json(obj, weight: int) -> BilForm:
    m = matrix_from_json(obj["form"])
    try:
        return BilForm(m, parity=weight % 2)
    except ValueError as exc:
        raise FormatError(f"bad form: {exc}") from None


def hs_to_json(weight: int, q: BilForm, f: DecFiltration) -> dict:
    return {"weight": weight, "form": matrix_to_json(q.matrix),
            "F": dec_filtration_to_json(f)}


def hs_from_json(obj) -> tuple[int, BilForm, DecFiltration]:
    _require(obj, "weight", "form", "F")
    weight = _weight_from_json(obj)
    q = _form_from_json(obj, weight)
    f = dec_filtration_from_json(obj["F"])
    if f.ambient != q.dim:
        raise FormatError("form and filtration dimensions differ")
    return weight, q, f


def mhs_to_json(w: IncFiltration, f: DecFiltration) -> dict:
    return {"W": inc_filtration_to_json(w), "F": dec_filtration_to_json(f)}


def mhs_from_json(obj) -> tuple[IncFiltration, DecFiltration]:
    _require(obj, "W", "F")
    w = inc_filtration_from_json(obj["W"])
    f = dec_filtration_from_json(obj["F"])
    if w.ambient != f.ambient:
        raise FormatError("W and F dimensions differ")
    return w, f


def pmhs_to_json(weight: int, q: BilForm, w: IncFiltration,
                 f: DecFiltration, n: Mat) -> dict:
    return {"weight": weight, "form": matrix_to_json(q.matrix),
            "F": dec_filtration_to_json(f),
            "W": inc_filtration_to_json(w), "N": matrix_to_json(n)}


def pmhs_from_json(obj) -> tuple[int, BilForm, IncFiltration,
                                 DecFiltration, Mat]:
    _require(obj, "weight", "form", "F", "W", "N")
    weight = _weight_from_json(obj)
    q = _form_from_json(obj, weight)
    w = inc_filtration_from_json(obj["W"])
    f = dec_filtration_from_json(obj["F"])
    n = matrix_from_json(obj["N"])
    dims = {q.dim, w.ambient, f.ambient, n.nrows, n.ncols}
    if len(dims) != 1:
        raise FormatError("form, filtrations and N dimensions differ")
    return weight, q, w, f, n


def orbit_to_json(orbit: NilpotentOrbit) -> dict:
    return {"weight": orbit.weight,
            "form": matrix_to_json(orbit.form.matrix),
            "F": dec_filtration_to_json(orbit.filtration),
            "nilpotents": [matrix_to_json(g)
                           for g in orbit.cone.generators]}


def orbit_from_json(obj) -> NilpotentOrbit:
    _require(obj, "weight", "form", "F", "nilpotents")
    weight = _weight_from_json(obj)
    q = _form_from_json(obj, weight)
    f = dec_filtration_from_json(obj["F"])
    gens = obj["nilpotents"]
    if not isinstance(gens, list):
        raise FormatError("nilpotents must be an array of matrices")
    cone = NilpotentCone(tuple(matrix_from_json(g) for g in gens))
    try:
        return NilpotentOrbit(weight, q, f, cone)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def ivi_to_json(ivi: IVI) -> dict:
    out = orbit_to_json(ivi.orbit)
    out["abelian_basis"] = [matrix_to_json(m) for m in ivi.family]
    return out


def ivi_from_json(obj) -> IVI:
    _require(obj, "abelian_basis")
    orbit = orbit_from_json(obj)
    basis = obj["abelian_basis"]
    if not isinstance(basis, list) or not basis:
        raise FormatError("abelian_basis must be a non-empty matrix array")
    try:
        return IVI(orbit, tuple(matrix_from_json(m) for m in basis))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# period maps
# ---------------------------------------------------------------------------

def polymap_to_json(pm: PolyMap) -> dict:
    z_vars = [v for v in pm.variables if v.startswith("z")]
    t_vars = [v for v in pm.variables if v.startswith("t")]
    if tuple(z_vars + t_vars) != pm.variables:
        raise FormatError(
            "period-map files need z* variables followed by t* variables")
    rows, cols = pm.shape
    zero = Mat.zeros(rows, cols)
    units = {}
    for i, v in enumerate(pm.variables):
        units[v] = tuple(1 if j == i else 0 for j in range(len(pm.variables)))
    out = {
        "z_part": [matrix_to_json(pm.terms.get(units[v], zero))
                   for v in z_vars],
        "t_linear": [matrix_to_json(pm.terms.get(units[v], zero))
                     for v in t_vars],
        "higher": [],
    }
    unit_set = set(units.values())
    for expo in sorted(pm.terms):
        if expo in unit_set:
            continue
        mono = {pm.variables[i]: e for i, e in enumerate(expo) if e}
        out["higher"].append({"monomial": mono,
                              "matrix": matrix_to_json(pm.terms[expo])})
    return out


def polymap_from_json(obj) -> PolyMap:
    _require(obj, "z_part", "t_linear")
    z_part, t_linear = obj["z_part"], obj["t_linear"]
    if not isinstance(z_part, list) or not isinstance(t_linear, list):
        raise FormatError("z_part and t_linear must be matrix arrays")
    names = tuple(f"z{i + 1}" for i in range(len(z_part))) + tuple(
        f"t{i + 1}" for i in range(len(t_linear)))
    if not names:
        raise FormatError("period map with no variables")
    nvars = len(names)
    index = {v: i for i, v in enumerate(names)}
    terms: dict[tuple[int, ...], Mat] = {}
    for i, raw in enumerate(list(z_part) + list(t_linear)):
        expo = tuple(1 if j == i else 0 for j in range(nvars))
        terms[expo] = matrix_from_json(raw)
    for item in obj.get("higher", []):
        _require(item, "monomial", "matrix")
        mono = item["monomial"]
        if not isinstance(mono, dict):
            raise FormatError("a monomial is a variable -> exponent map")
        expo = [0] * nvars
        for var, e in mono.items():
            if var not in index:
                raise FormatError(f"unknown variable {var!r} in a monomial")
            if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                raise FormatError(f"bad exponent for {var!r}")
            expo[index[var]] = e
        key = tuple(expo)
        if key in terms:
            raise FormatError(f"duplicate monomial {mono}")
        terms[key] = matrix_from_json(item["matrix"])
    try:
        return PolyMap(names, terms)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# file helpers
# ---------------------------------------------------------------------------

def load_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None


def dump_text(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"

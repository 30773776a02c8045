"""JSON structure-constant files for Lie and associative algebras.

An algebra file is a single JSON object:

    kind      "lie" or "assoc"
    dim       basis size
    basis     list of dim labels
    unit      list of dim rational strings (assoc only)
    products  list of [i, j, k, coeff] entries meaning
              e_i e_j = sum_k coeff * e_k

For "lie" only pairs i < j are stored (antisymmetry fills the rest);
for "assoc" only pairs i <= j (the product is commutative).  Rationals
travel as strings like "2/3" so files stay exact.  Serialization is
canonical: sorted keys, fixed indentation, entries ordered by (i, j, k),
so identical algebras produce byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from currentlie.assoc import AssocAlgebra
from currentlie.lie import LieAlgebra
from currentlie.linalg import Q, rat, rat_str

_ZERO = Q(0)


class FormatError(ValueError):
    """The file is not a well-formed algebra file."""


class AxiomError(ValueError):
    """The file parsed but its structure constants violate the axioms."""


def dumps_canonical(obj) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, newline end."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def sha256_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _coeff_out(value) -> str:
    return rat_str(value)


def _coeff_in(value, where: str):
    # rationals travel as strings; bare ints are tolerated, floats are not
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FormatError(f"{where}: coefficient must be a rational string")
    try:
        return rat(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"{where}: bad rational {value!r}") from exc


def algebra_to_dict(alg) -> dict:
    """Schema dict for a LieAlgebra or AssocAlgebra."""
    if isinstance(alg, LieAlgebra):
        kind = "lie"
    elif isinstance(alg, AssocAlgebra):
        kind = "assoc"
    else:
        raise TypeError(f"cannot serialize {type(alg).__name__}")
    n = alg.dim
    products = []
    for i in range(n):
        lo = i + 1 if kind == "lie" else i
        for j in range(lo, n):
            for k, coeff in enumerate(alg.structure[i][j]):
                if coeff:
                    products.append([i, j, k, _coeff_out(coeff)])
    doc = {
        "kind": kind,
        "dim": n,
        "basis": list(alg.labels),
        "products": products,
    }
    if kind == "assoc":
        doc["unit"] = [_coeff_out(v) for v in alg.unit]
    return doc


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FormatError(message)


def algebra_from_dict(doc):
    """Rebuild the algebra; format validation only, no axiom check."""
    _require(isinstance(doc, dict), "top level must be a JSON object")
    kind = doc.get("kind")
    _require(kind in ("lie", "assoc"), 'kind must be "lie" or "assoc"')
    allowed = {"kind", "dim", "basis", "products"}
    if kind == "assoc":
        allowed.add("unit")
    extra = set(doc) - allowed
    _require(not extra, f"unknown keys: {sorted(extra)}")
    _require(set(doc) >= allowed, f"missing keys: {sorted(allowed - set(doc))}")

    dim = doc["dim"]
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
             "dim must be a positive integer")
    basis = doc["basis"]
    _require(
        isinstance(basis, list)
        and len(basis) == dim
        and all(isinstance(s, str) for s in basis),
        "basis must be a list of dim labels",
    )

    products = doc["products"]
    _require(isinstance(products, list), "products must be a list")
    structure = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for pos, entry in enumerate(products):
        where = f"products[{pos}]"
        _require(
            isinstance(entry, list) and len(entry) == 4,
            f"{where}: expected [i, j, k, coeff]",
        )
        i, j, k, coeff = entry
        for name, idx in (("i", i), ("j", j), ("k", k)):
            _require(
                isinstance(idx, int) and not isinstance(idx, bool)
                and 0 <= idx < dim,
                f"{where}: index {name} out of range",
            )
        if kind == "lie":
            _require(i < j, f"{where}: lie entries need i < j")
        else:
            _require(i <= j, f"{where}: assoc entries need i <= j")
        _require((i, j, k) not in seen, f"{where}: duplicate entry ({i},{j},{k})")
        seen.add((i, j, k))
        structure[i][j][k] = _coeff_in(coeff, where)

    if kind == "lie":
        for i in range(dim):
            for j in range(i + 1, dim):
                for k in range(dim):
                    structure[j][i][k] = -structure[i][j][k]
        return LieAlgebra(basis, structure)

    for i in range(dim):
        for j in range(i):
            structure[i][j] = structure[j][i]
    unit = doc["unit"]
    _require(
        isinstance(unit, list) and len(unit) == dim,
        "unit must be a list of dim coefficients",
    )
    unit_vec = [_coeff_in(v, f"unit[{p}]") for p, v in enumerate(unit)]
    return AssocAlgebra(basis, structure, unit_vec)


def save_algebra(alg, path) -> None:
    Path(path).write_text(dumps_canonical(algebra_to_dict(alg)), encoding="utf-8")


def load_algebra(path, check: bool = True):
    """Read an algebra file.

    Raises FormatError for IO trouble or schema violations and, when
    check is set, AxiomError if the structure constants fail the Lie or
    associative axioms.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    alg = algebra_from_dict(doc)
    if check:
        violation = first_axiom_violation(alg)
        if violation is not None:
            raise AxiomError(f"{path}: {violation}")
    return alg


def first_axiom_violation(alg):
    """Name the first failed axiom instance, or None if all hold."""
    if isinstance(alg, LieAlgebra):
        return _first_lie_violation(alg)
    return _first_assoc_violation(alg)


def _combo(alg, vec) -> str:
    terms = [
        f"{rat_str(c)}*{alg.labels[p]}" for p, c in enumerate(vec) if c
    ]
    return " + ".join(terms) if terms else "0"


def _first_lie_violation(g: LieAlgebra):
    n = g.dim
    c = g.structure
    for i in range(n):
        if any(c[i][i]):
            return f"[{g.labels[i]},{g.labels[i]}] = {_combo(g, c[i][i])} != 0"
        for j in range(i + 1, n):
            bad = tuple(a + b for a, b in zip(c[i][j], c[j][i]))
            if any(bad):
                return (
                    f"antisymmetry fails: [{g.labels[i]},{g.labels[j]}]"
                    f" + [{g.labels[j]},{g.labels[i]}] = {_combo(g, bad)}"
                )
    basis = [g.basis_vector(i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = [_ZERO] * n
                for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                    term = g.bracket(basis[a], c[b][cc])
                    for p in range(n):
                        total[p] += term[p]
                if any(total):
                    labels = (g.labels[i], g.labels[j], g.labels[k])
                    return (
                        f"Jacobi fails on ({', '.join(labels)}):"
                        f" cyclic sum = {_combo(g, total)}"
                    )
    return None


def _first_assoc_violation(a: AssocAlgebra):
    n = a.dim
    basis = [tuple(Q(1) if t == i else _ZERO for t in range(n)) for i in range(n)]
    for i in range(n):
        if a.multiply(a.unit, basis[i]) != basis[i]:
            return f"unit is not a left identity on {a.labels[i]}"
        if a.multiply(basis[i], a.unit) != basis[i]:
            return f"unit is not a right identity on {a.labels[i]}"
    for i in range(n):
        for j in range(i, n):
            if a.structure[i][j] != a.structure[j][i]:
                return f"commutativity fails on ({a.labels[i]}, {a.labels[j]})"
    for i in range(n):
        for j in range(n):
            ij = a.structure[i][j]
            for k in range(n):
                if a.multiply(ij, basis[k]) != a.multiply(basis[i], a.structure[j][k]):
                    labels = (a.labels[i], a.labels[j], a.labels[k])
                    return f"associativity fails on ({', '.join(labels)})"
    return None

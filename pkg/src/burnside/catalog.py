"""Named groups and group input documents.

Accepted documents (JSON values):

* ``{"table": [[...]]}``           explicit multiplication table
* ``{"perm": {"degree": n, "generators": [[...], ...]}}``
* ``{"named": "S3"}``              a catalog name, see below
* ``{"product": [spec, spec]}``    direct product of two specs
* a bare string is treated as a catalog name

Catalog names: ``C(n)`` cyclic of order n, ``D(n)`` dihedral of order n
(n even; ``D(2)`` degenerates to ``C(2)``), ``S(n)`` symmetric on n
letters, ``A(n)`` alternating on n letters, plus the fixed names ``Q8``
and ``1``.  Compact forms ``C6``, ``D8``, ``S3``, ``A4`` are sugar for
the parenthesised spellings, and ``AxB`` abbreviates a direct product.
"""

from __future__ import annotations

import re

from .errors import ValidationError
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    direct_product,
    make_group_from_permutations,
    make_group_from_table,
)

_NAME_RE = re.compile(r"^([ACDQS])\(?(\d+)\)?$")


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError("cyclic order must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_group_from_table(table, f"C{n}")


def dihedral_group(order: int) -> FiniteGroup:
    """Dihedral group of the given (even) order."""
    if order == 2:
        return cyclic_group(2)
    if order < 2 or order % 2:
        raise ValidationError("dihedral order must be even and >= 2")
    m = order // 2
    # index = rotation + m * flip; r^i f^a * r^j f^b = r^(i + (-1)^a j) f^(a+b)
    def mul(x: int, y: int) -> int:
        i, a = x % m, x // m
        j, b = y % m, y // m
        rot = (i + (j if a == 0 else -j)) % m
        return rot + m * ((a + b) % 2)

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    return make_group_from_table(table, f"D{order}")


def symmetric_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValidationError("symmetric degree must be positive")
    if n == 1:
        return cyclic_group(1)
    gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
    return make_group_from_permutations(n, gens, f"S{n}", cap=cap)


def alternating_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    if n < 1:
        raise ValidationError("alternating degree must be positive")
    if n <= 2:
        return cyclic_group(1)
    gens = []
    for k in range(2, n):
        cycle = list(range(n))
        cycle[0], cycle[1], cycle[k] = cycle[1], cycle[k], cycle[0]
        gens.append(tuple(cycle))
    return make_group_from_permutations(n, gens, f"A{n}", cap=cap)


def quaternion_group() -> FiniteGroup:
    """Q8 on the elements 1, -1, i, -i, j, -j, k, -k (in that order)."""
    units = ["1", "i", "j", "k"]

    def mul_sym(a: str, b: str) -> tuple[int, str]:
        if a == "1":
            return 1, b
        if b == "1":
            return 1, a
        if a == b:
            return -1, "1"
        rules = {("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j"}
        if (a, b) in rules:
            return 1, rules[(a, b)]
        return -1, rules[(b, a)]

    def code(sign: int, sym: str) -> int:
        return units.index(sym) * 2 + (0 if sign == 1 else 1)

    def decode(x: int) -> tuple[int, str]:
        return (1 if x % 2 == 0 else -1), units[x // 2]

    table = []
    for x in range(8):
        sx, ax = decode(x)
        row = []
        for y in range(8):
            sy, ay = decode(y)
            s, a = mul_sym(ax, ay)
            row.append(code(s * sx * sy, a))
        table.append(row)
    return make_group_from_table(table, "Q8")


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def group_from_name(name: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    spec = name.strip().replace(" ", "")
    if not spec:
        raise ValidationError("empty group name")
    if "x" in spec:
        parts = spec.split("x")
        grp = group_from_name(parts[0], cap=cap)
        for part in parts[1:]:
            grp = direct_product(grp, group_from_name(part, cap=cap), label="")
        grp.label = spec
        return grp
    if spec == "1":
        return trivial_group()
    if spec.upper() == "Q8":
        return quaternion_group()
    m = _NAME_RE.match(spec.upper())
    if not m:
        raise ValidationError(f"unrecognized group name {name!r}")
    kind, num = m.group(1), int(m.group(2))
    if kind == "C":
        grp = cyclic_group(num)
    elif kind == "D":
        grp = dihedral_group(num)
    elif kind == "S":
        grp = symmetric_group(num, cap=cap)
    elif kind == "A":
        grp = alternating_group(num, cap=cap)
    else:
        raise ValidationError(f"unrecognized group name {name!r}")
    if grp.order > cap:
        raise ValidationError(f"group {name!r} exceeds order cap {cap}")
    return grp


def group_from_document(doc, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from an input document (dict or name string)."""
    if isinstance(doc, str):
        return group_from_name(doc, cap=cap)
    if not isinstance(doc, dict):
        raise ValidationError(f"bad group document: {doc!r}")
    if "table" in doc:
        return make_group_from_table(doc["table"], str(doc.get("label", "")))
    if "perm" in doc:
        perm = doc["perm"]
        return make_group_from_permutations(
            int(perm["degree"]),
            perm["generators"],
            str(doc.get("label", "")),
            cap=cap,
        )
    if "named" in doc:
        return group_from_name(str(doc["named"]), cap=cap)
    if "product" in doc:
        specs = doc["product"]
        if not isinstance(specs, list) or len(specs) < 2:
            raise ValidationError("product document needs a list of two specs")
        grp = group_from_document(specs[0], cap=cap)
        for rest in specs[1:]:
            grp = direct_product(grp, group_from_document(rest, cap=cap))
        return grp
    raise ValidationError(f"bad group document keys: {sorted(doc)}")


def group_document(g: FiniteGroup) -> dict:
    """A document that reconstructs g exactly (table form)."""
    return {"table": g.table_rows(), "label": g.label}


CORPUS_NAMES = ("1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D8", "Q8", "A4")


def corpus(names=CORPUS_NAMES) -> dict[str, FiniteGroup]:
    """The built-in test corpus, keyed by catalog name."""
    return {name: group_from_name(name) for name in names}

"""JSON encodings shared by the command-line interface and file formats.

Scalars: rationals are strings "p/q" (plain "n" for integers); prime-field
elements are integers.  Field specs: {"field": "rational"} or
{"field": "prime", "p": 5}.  A space file is {"field": ..., "form": [[...]]}
where "field" holds either the spec object or its bare kind string, and the
form matrix is symmetrized at load (which preserves Q).  Matrices and
vectors are nested arrays, row-major.
"""

from __future__ import annotations

from fractions import Fraction

from .field import Fp, PrimeField, QQ
from .linalg import Matrix, Subspace
from .quadspace import Isometry, QuadraticSpace
from .factor import Factorization


class InputError(Exception):
    """Malformed JSON input (shape, types, unknown keys)."""


def encode_scalar(x):
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else "%d/%d" % (x.numerator, x.denominator)
    if isinstance(x, Fp):
        return x.value
    if isinstance(x, int):
        return x
    raise InputError("cannot encode scalar %r" % (x,))


def decode_scalar(obj, field):
    try:
        if isinstance(obj, bool):
            raise TypeError
        if isinstance(obj, (int, str)):
            return field(obj)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError("bad scalar %r: %s" % (obj, exc)) from None
    raise InputError("bad scalar %r" % (obj,))


def encode_field(field):
    if field == QQ:
        return {"field": "rational"}
    if isinstance(field, PrimeField):
        return {"field": "prime", "p": field.p}
    raise InputError("cannot encode field %r" % (field,))


def decode_field(obj):
    """Accepts {"field": "prime", "p": 5}, {"field": "rational"}, or the bare kind."""
    if isinstance(obj, str):
        obj = {"field": obj}
    if not isinstance(obj, dict):
        raise InputError("field spec must be an object or kind string")
    kind = obj.get("field")
    if kind == "rational":
        return QQ
    if kind == "prime":
        p = obj.get("p")
        if not isinstance(p, int):
            raise InputError("prime field spec needs an integer p")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    raise InputError("unknown field kind %r" % (kind,))


def encode_matrix(M):
    return [[encode_scalar(x) for x in row] for row in M.entries]


def decode_matrix(obj, field):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise InputError("matrix must be an array of arrays")
    try:
        return Matrix(field, [[decode_scalar(x, field) for x in row] for row in obj])
    except Exception as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError("bad matrix: %s" % exc) from None


def encode_vector(v):
    return [encode_scalar(x) for x in v]


def decode_vector(obj, field):
    if not isinstance(obj, list):
        raise InputError("vector must be an array")
    return tuple(decode_scalar(x, field) for x in obj)


def decode_space(obj):
    """{"field": ..., "form": [[...]]}; the field spec may be an object or string.

    A {"p": ...} sibling next to a bare "prime" string is also accepted.
    """
    if not isinstance(obj, dict):
        raise InputError("space must be an object")
    if "form" not in obj:
        raise InputError("space needs a 'form' matrix")
    spec = obj.get("field", "rational")
    if isinstance(spec, str) and spec == "prime":
        spec = {"field": "prime", "p": obj.get("p")}
    field = decode_field(spec)
    form = decode_matrix(obj["form"], field)
    return QuadraticSpace(field, form)


def encode_space(space):
    out = encode_field(space.field)
    out["form"] = encode_matrix(space.gram)
    return out


def decode_isometry(obj, space):
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InputError("isometry file needs a 'matrix' key")
    return Isometry(space, decode_matrix(obj["matrix"], space.field))


def encode_isometry(f):
    return {"matrix": encode_matrix(f.matrix)}


def projective_normalize(space, v):
    """Scale so the first nonzero coordinate is 1 (reflections are scale-free)."""
    lead = next((x for x in v if x), None)
    if lead is None:
        return v
    inv = space.field.one / lead
    return tuple(inv * x for x in v)


def encode_factorization(fact, positive=None):
    out = {
        "length": len(fact),
        "reflections": [encode_vector(projective_normalize(fact.space, v))
                        for v in fact.vectors],
    }
    if positive is not None:
        out["positive"] = bool(positive)
    return out


def decode_factorization(obj, space, target=None):
    if not isinstance(obj, dict) or "reflections" not in obj:
        raise InputError("factorization file needs a 'reflections' key")
    vectors = [decode_vector(v, space.field) for v in obj["reflections"]]
    if "length" in obj and obj["length"] != len(vectors):
        raise InputError("declared length does not match the reflection count")
    return Factorization(space, vectors, target=target)


def encode_walldata(wd):
    return {"basis": [encode_vector(v) for v in wd.basis.entries],
            "chi": encode_matrix(wd.chi)}


def encode_subspace(U):
    return {"ambient_dim": U.ambient_dim, "basis": [encode_vector(v) for v in U.basis]}


def decode_subspace(obj, space):
    if not isinstance(obj, dict) or "basis" not in obj:
        raise InputError("subspace needs a 'basis' key")
    rows = [decode_vector(v, space.field) for v in obj["basis"]]
    return Subspace(space.field, space.dim, rows)


def encode_square_class(cls):
    return {"class": encode_scalar(cls.rep) if not isinstance(cls.rep, int) else cls.rep}

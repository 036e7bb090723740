"""Wire formats.

Classes are whitespace-separated integer lines "a1 b1 ... ag bg";
matrices are row-major integer grids; sparse vectors are one support
point per line with rational real/imaginary parts "num/den"; relations,
cocycles and solve reports are JSON.  All emitters sort support points
so output is byte-stable.
"""

from fractions import Fraction

from .cohomology import Cocycle, GeneratorSet, SolveReport
from .exact import ExactSqrt, GaussianRational
from .fourier import SparseVector
from .lattice import HomologyClass, SymplecticMatrix
from .words import Curve, RelationInstance, TwistWord


def format_fraction(q):
    return "%d/%d" % (q.numerator, q.denominator)


def parse_fraction(s):
    return Fraction(str(s).strip())


def format_class(m):
    return " ".join(str(a) for a in m.coords)


def parse_class(text, genus=None):
    coords = tuple(int(tok) for tok in str(text).split())
    if genus is not None and len(coords) != 2 * genus:
        raise ValueError("expected %d coordinates, got %d" % (2 * genus, len(coords)))
    return HomologyClass(coords)


def class_to_json(m):
    return list(m.coords)


def class_from_json(obj, genus=None):
    coords = tuple(int(a) for a in obj)
    if genus is not None and len(coords) != 2 * genus:
        raise ValueError("expected %d coordinates, got %d" % (2 * genus, len(coords)))
    return HomologyClass(coords)


def matrix_to_json(M):
    return [list(row) for row in M.rows]


def matrix_from_json(rows):
    return SymplecticMatrix(tuple(tuple(int(a) for a in row) for row in rows))


def sqrt_to_json(x):
    return {"square": format_fraction(x.square), "approx": float(x)}


def sqrt_from_json(obj):
    return ExactSqrt(parse_fraction(obj["square"]))


def _sorted_items(v):
    return sorted(v.items(), key=lambda kv: kv[0].coords)


def format_sparse_lines(v):
    lines = []
    for m, val in _sorted_items(v):
        lines.append(
            "%s  %s  %s" % (format_class(m), format_fraction(val.re), format_fraction(val.im))
        )
    return "\n".join(lines) + ("\n" if lines else "")


def parse_sparse_lines(text, genus=None, full=False):
    entries = []
    for lineno, line in enumerate(str(text).splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) < 4 or len(toks) % 2:
            raise ValueError("line %d: expected 'a1 b1 ... ag bg re im'" % lineno)
        coords = tuple(int(t) for t in toks[:-2])
        if genus is None:
            genus = len(coords) // 2
        m = HomologyClass(coords)
        val = GaussianRational(parse_fraction(toks[-2]), parse_fraction(toks[-1]))
        entries.append((m, val))
    if genus is None:
        raise ValueError("empty sparse vector file needs an explicit genus")
    return SparseVector(genus, entries, full=full)


def sparse_to_json(v):
    return {
        "genus": v.genus,
        "full": v.full,
        "coefficients": [
            {
                "class": class_to_json(m),
                "re": format_fraction(val.re),
                "im": format_fraction(val.im),
            }
            for m, val in _sorted_items(v)
        ],
    }


def sparse_from_json(obj):
    genus = int(obj["genus"])
    full = bool(obj.get("full", False))
    entries = []
    for entry in obj.get("coefficients", ()):
        m = class_from_json(entry["class"], genus)
        val = GaussianRational(parse_fraction(entry["re"]), parse_fraction(entry["im"]))
        entries.append((m, val))
    return SparseVector(genus, entries, full=full)


def curve_to_json(c):
    return {"id": c.id, "cls": class_to_json(c.cls), "separating": c.separating}


def curve_from_json(obj, genus=None):
    return Curve(
        id=str(obj["id"]),
        cls=class_from_json(obj["cls"], genus),
        separating=bool(obj.get("separating", False)),
    )


def word_to_json(w):
    return [[cid, e] for cid, e in w.letters]


def word_from_json(obj):
    return TwistWord(tuple((str(cid), int(e)) for cid, e in obj))


def relation_to_json(rel):
    return {
        "name": rel.name,
        "curves": [curve_to_json(c) for c in rel.curves],
        "lhs": word_to_json(rel.lhs),
        "rhs": word_to_json(rel.rhs),
        "intersections": [[a, b, n] for a, b, n in rel.intersections],
    }


def relation_from_json(obj):
    return RelationInstance(
        name=str(obj["name"]),
        curves=tuple(curve_from_json(c) for c in obj["curves"]),
        lhs=word_from_json(obj["lhs"]),
        rhs=word_from_json(obj["rhs"]),
        intersections=tuple(
            (str(a), str(b), int(n)) for a, b, n in obj.get("intersections", ())
        ),
    )


def cocycle_to_json(u):
    return {
        "genus": u.genus,
        "generators": [curve_to_json(c) for c in u.gens],
        "values": {cid: sparse_to_json(u.value(cid)) for cid in u.gens.ids()},
    }


def cocycle_from_json(obj):
    genus = int(obj["genus"])
    gens = GeneratorSet(curve_from_json(c, genus) for c in obj["generators"])
    values = {cid: sparse_from_json(v) for cid, v in obj["values"].items()}
    return Cocycle(gens, values)


def report_to_json(rep):
    return {
        "genus": rep.f.genus,
        "f": sparse_to_json(rep.f),
        "residual": sqrt_to_json(rep.residual),
        "decay": [
            {"k": k, "F": sqrt_to_json(fk), "G": sqrt_to_json(gk)}
            for k, fk, gk in rep.decay
        ],
    }


def report_from_json(obj):
    return SolveReport(
        f=sparse_from_json(obj["f"]),
        residual=sqrt_from_json(obj["residual"]),
        decay=tuple(
            (int(e["k"]), sqrt_from_json(e["F"]), sqrt_from_json(e["G"]))
            for e in obj.get("decay", ())
        ),
    )

"""The ``toricbunch`` command.

Exit codes: 0 all requested checks passed, 1 a verification failed,
2 the input could not be parsed, 3 a resource cap was hit.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, replace
from fractions import Fraction

from . import catalog
from . import io as tio
from .bunches import (Bunch, dictionary, enumerate_bunches, is_free, is_geometric, is_simple,
                      is_standard, verify_bunch)
from .classification import (aligned_fano_inequality, enumerate_kleinschmidt,
                             kleinschmidt_is_fano,
                             printed_fano_inequality)
from .cones import Cone, is_separating_form, relint_overlap, separating_form
from .config import default_limits
from .divisors import divisor_report
from .errors import (ParseError, ResourceCapExceeded, ToricBunchError, UnknownExample,
                     VerificationError)
from .fans import bunch_to_fan, fan_failures, fan_oracles, fan_to_bunch
from . import linalg as la

OK, FAILED, PARSE, CAP = 0, 1, 2, 3


class _Failed(Exception):
    """Raised by a command whose checks did not all pass (exit 1)."""

    def __init__(self, payload, text):
        super().__init__(text)
        self.payload = payload
        self.text = text


# -- output helpers --------------------------------------------------------

def _plain(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, Cone):
        return {"rays": _plain(x.rays), "lineality": _plain(x.lineality)}
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def _table(rows):
    """Key/value rows as aligned text."""
    width = max((len(k) for k, _ in rows), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def _fmt_cone(c):
    rays = ", ".join(str(tuple(r)) for r in c.rays)
    lin = f" + lin{tuple(tuple(v) for v in c.lineality)}" if c.lineality else ""
    return f"cone({rays}){lin}" if rays or lin else "{0}"


def weight_picture(weights):
    """Weight vectors in the plane as a grid of multiplicities.

    The origin is ``+``, axes are ``-`` and ``|``, a weight of multiplicity
    m is drawn as the digit m (``*`` beyond 9).
    """
    counts = {}
    for w in weights:
        counts[tuple(w)] = counts.get(tuple(w), 0) + 1
    xs = [w[0] for w in counts] + [0]
    ys = [w[1] for w in counts] + [0]
    lines = []
    for y in range(max(ys), min(ys) - 1, -1):
        cells = []
        for x in range(min(xs), max(xs) + 1):
            m = counts.get((x, y))
            if m:
                cells.append(str(m) if m < 10 else "*")
            elif x == 0 and y == 0:
                cells.append("+")
            elif y == 0:
                cells.append("-")
            elif x == 0:
                cells.append("|")
            else:
                cells.append(".")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def _bunch_lines(b):
    rows = [("k_rank", b.k_rank), ("weights", " ".join(str(tuple(w)) for w in b.weights))]
    for i, c in enumerate(b.cones):
        rows.append((f"member {i}", _fmt_cone(c)))
    text = _table(rows)
    if b.k_rank == 2:
        text += "\n\n" + weight_picture(b.weights)
    return text


# -- loading ---------------------------------------------------------------

def _read(path, limits):
    doc = tio.load(path) if path != "-" else tio.loads(sys.stdin.read())
    kind = tio.kind_of(doc)
    if kind == "cone-pair":
        return doc
    return tio.from_document(doc, verify=False, limits=limits)


def _as_bunch(obj, limits):
    if isinstance(obj, Bunch):
        check = verify_bunch(obj.pc, obj.cones, limits)
        if not check:
            raise VerificationError("; ".join(check.failures),
                                    condition=check.failures[0].split(":")[0])
        return obj
    if isinstance(obj, dict):
        raise VerificationError("a cone-pair document is neither a bunch nor a fan",
                                condition="document kind")
    problems = fan_failures(obj)
    if problems:
        raise VerificationError("; ".join(problems), condition="fan")
    return fan_to_bunch(obj)


# -- commands --------------------------------------------------------------

def cmd_check(args, limits):
    obj = _read(args.path, limits)
    if isinstance(obj, dict):
        return _check_cone_pair(obj)
    if isinstance(obj, Bunch):
        check = verify_bunch(obj.pc, obj.cones, limits)
        report = {"kind": "bunch", "valid": check.ok, "failures": list(check.failures)}
        if check.ok:
            std = is_standard(obj)
            report.update(standard=std, free=is_free(obj), geometric=is_geometric(obj),
                          simple=is_simple(obj))
            if std:
                report["dictionary"] = asdict(dictionary(obj))
        text = _bunch_lines(obj) + "\n\n" + _report_text(report)
    else:
        problems = fan_failures(obj)
        report = {"kind": "fan", "valid": not problems, "failures": problems}
        if not problems:
            report["oracles"] = asdict(fan_oracles(obj, limits))
        text = _report_text(report)
    if not report["valid"]:
        raise _Failed(report, text)
    return report, text


def _report_text(report):
    rows = []
    for k, v in report.items():
        if isinstance(v, dict):
            rows += [(f"{k}.{kk}", vv) for kk, vv in v.items()]
        elif isinstance(v, list):
            rows += [(k, item) for item in v] or [(k, "none")]
        else:
            rows.append((k, v))
    return _table(rows)


def _check_cone_pair(doc):
    """Separation of the face stars against overlap of the projected faces."""
    q = tio._in_matrix(tio._field(doc, "q_matrix"), "q_matrix")
    gens = tio._in_matrix(tio._field(doc, "gamma_generators"), "gamma_generators")
    n, k = len(gens[0]), len(q)
    faces = [[gens[i] for i in f] for f in tio._field(doc, "faces")]
    # face star: the forms in the dual of gamma vanishing on the face
    stars = [Cone.from_inequalities(n, gens, f) for f in faces]
    images = [Cone([la.matvec(q, v) for v in f], k) for f in faces]
    form = separating_form(stars[0], stars[1], subspace=la.kernel_basis(q, n).basis)
    overlap = relint_overlap(images[0], images[1])
    report = {"kind": "cone-pair", "simplicial_gamma": Cone(gens, n).is_simplicial(),
              "separating_form": _plain(form), "projected_relint_overlap": overlap,
              "separation_matches_overlap": (form is not None) == overlap}
    if "separating_form" in doc:
        given = tio._in_matrix([doc["separating_form"]], "separating_form", n)[0]
        report["given_form_separates"] = (not any(la.matvec(q, given))
                                          and is_separating_form(given, stars[0], stars[1]))
    return report, _table(list(report.items()))


def cmd_to_fan(args, limits):
    b = _as_bunch(_read(args.path, limits), limits)
    doc = tio.fan_to_document(bunch_to_fan(b))
    return doc, tio.dumps(doc).rstrip()


def cmd_to_bunch(args, limits):
    obj = _read(args.path, limits)
    if isinstance(obj, Bunch):
        raise VerificationError("to-bunch expects a fan document", condition="document kind")
    b = _as_bunch(obj, limits)
    doc = tio.bunch_to_document(b)
    return doc, tio.dumps(doc).rstrip()


def cmd_cones(args, limits):
    b = _as_bunch(_read(args.path, limits), limits)
    r = divisor_report(b)
    report = {
        "cl_rank": r.cl_rank,
        "cl_torsion": list(r.cl_torsion),
        "pic_q_dim": r.b2,
        "pic_q_basis": _plain(r.pic_q_basis),
        "semiample_rays": _plain(r.semiample_cone.rays),
        "semiample_lineality": _plain(r.semiample_cone.lineality),
        "ample_nonempty": r.ample_nonempty,
        "mori_rays": None if r.mori_cone is None else _plain(r.mori_cone.rays),
        "mori_lineality": None if r.mori_cone is None else _plain(r.mori_cone.lineality),
        "canonical_class": _plain(r.canonical_class),
        "fano": r.fano,
        "q_gorenstein": r.q_gorenstein,
    }
    return report, _table([(k, v) for k, v in report.items()])


def _classify_row(d):
    fano = kleinschmidt_is_fano(d)
    printed = printed_fano_inequality(d)
    return {
        "n": d.n, "b": list(d.b), "mu": list(d.mu), "dim": d.dim,
        "fano": fano,
        "printed_inequality": printed,
        "aligned_inequality": aligned_fano_inequality(d),
        "printed_agrees": printed == fano,
    }


def cmd_classify(args, limits):
    data = enumerate_kleinschmidt(args.dim, args.max_b)
    if args.threads > 1 and len(data) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_classify_row, data))
    else:
        rows = [_classify_row(d) for d in data]
    if args.fano_only:
        rows = [r for r in rows if r["fano"]]
    head = ["n", "b", "mu", "dim", "fano", "printed", "agrees"]
    body = [[str(r["n"]), str(tuple(r["b"])), str(tuple(r["mu"])), str(r["dim"]),
             str(r["fano"]).lower(), str(r["printed_inequality"]).lower(),
             "yes" if r["printed_agrees"] else "NO"] for r in rows]
    widths = [max(len(x) for x in col) for col in zip(head, *body)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip()
             for line in [head] + body]
    disagree = sum(1 for r in rows if not r["printed_agrees"])
    lines.append(f"{len(rows)} rows; printed inequality disagrees with the ample test on {disagree}")
    return {"rows": rows, "printed_disagreements": disagree}, "\n".join(lines)


def cmd_enumerate_bunches(args, limits):
    obj = _read(args.path, limits)
    if not isinstance(obj, Bunch):
        raise VerificationError("enumerate-bunches expects a bunch document "
                                "(its weights define the projected cone)",
                                condition="document kind")
    found = enumerate_bunches(obj.pc, limits)
    docs = [tio.bunch_to_document(b) for b in found]
    text = "\n".join(f"{i}: " + "; ".join(_fmt_cone(c) for c in b.cones)
                     for i, b in enumerate(found))
    return {"count": len(docs), "bunches": docs}, f"{len(docs)} bunches\n{text}".rstrip()


def cmd_example(args, limits):
    doc = catalog.example_document(args.name)
    return doc, tio.dumps(doc).rstrip()


# -- entry point -----------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes for parallel steps (default 1)")
    common.add_argument("--max-faces", type=int, default=argparse.SUPPRESS,
                        help="cap on face-lattice walks")
    common.add_argument("--max-enum", type=int, default=argparse.SUPPRESS,
                        help="cap on faces fed into enumerations")

    parser = argparse.ArgumentParser(prog="toricbunch", parents=[common],
                                     description="Bunches of cones and toric fans.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "verify a document and report its properties").add_argument("path")
    add("to-fan", cmd_to_fan, "fan of a standard bunch").add_argument("path")
    add("to-bunch", cmd_to_bunch, "bunch of a fan").add_argument("path")
    add("cones", cmd_cones, "divisor classes and cones").add_argument("path")
    p = add("classify", cmd_classify, "smooth varieties with class group Z^2")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-b", type=int, required=True)
    p.add_argument("--fano-only", action="store_true")
    add("enumerate-bunches", cmd_enumerate_bunches,
        "all bunches over the weights of a bunch document").add_argument("path")
    p = add("example", cmd_example, "print a built-in example document")
    p.add_argument("name", help=", ".join(catalog.names()))
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    args.threads = max(1, getattr(args, "threads", 1))
    limits = default_limits()
    if getattr(args, "max_faces", None) is not None:
        limits = replace(limits, max_faces=args.max_faces)
    if getattr(args, "max_enum", None) is not None:
        limits = replace(limits, max_enum=args.max_enum)

    def emit(payload, text, stream=sys.stdout):
        if as_json:
            print(tio.dumps(_plain(payload)).rstrip(), file=stream)
        else:
            print(text, file=stream)

    try:
        payload, text = args.func(args, limits)
    except _Failed as exc:
        emit(exc.payload, exc.text)
        return FAILED
    except (ParseError, OSError, UnknownExample) as exc:
        emit({"error": "parse", "message": str(exc)}, f"error: {exc}", sys.stderr)
        return PARSE
    except ResourceCapExceeded as exc:
        emit({"error": "resource", "message": str(exc)}, f"resource cap: {exc}", sys.stderr)
        return CAP
    except VerificationError as exc:
        emit({"error": "verification", "condition": exc.condition, "message": str(exc)},
             f"verification failed [{exc.condition}]: {exc}", sys.stderr)
        return FAILED
    except ToricBunchError as exc:
        emit({"error": "verification", "message": str(exc)}, f"error: {exc}", sys.stderr)
        return FAILED
    emit(payload, text)
    return OK


if __name__ == "__main__":
    sys.exit(main())

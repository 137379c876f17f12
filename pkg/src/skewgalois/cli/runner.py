"""Task execution and report assembly."""

import random
import time
import zlib
from fractions import Fraction

from .. import __version__
from ..errors import Inconclusive, NotInvertible
from ..galois import (HenselError, certify_s3, format_bivariate, interpolation_construct,
                      lift_all_roots, verify_galois_presentation)
from ..normform import NormFormError, is_division_algebra, norm_form
from ..poly import Poly
from ..ratfunc import KT
from ..scalar_ext import run_pipeline
from ..skewfrac import SkewRationalField, invert, pair_conversion
from ..structalg import center, is_simple, radical, verify_structure
from .config import SCHEMA_VERSION
from .expr import ExpressionError, format_element, parse_expression


class TaskFailure(Exception):
    """Carries the witness of a failed task."""

    def __init__(self, witness, result=None):
        super().__init__(str(witness))
        self.witness = witness
        self.result = result or {}


def _q(x):
    return str(Fraction(x))


def _skewpoly_json(p):
    return [[str(c) for c in coeffs] for coeffs in p.coeffs]


def element_json(x):
    pair = pair_conversion(x)
    return {
        "coords": [c.format() for c in x.coords],
        "printed": format_element(x),
        "pair": {"p": _skewpoly_json(pair.p), "q": _skewpoly_json(pair.q)},
    }


def task_rng(seed, name):
    return random.Random((seed << 32) ^ zlib.crc32(name.encode("utf-8")))


def random_element(parent, rng, degree=2, height=3):
    while True:
        coords = [KT.convert(Poly([rng.randint(-height, height) for _ in range(degree + 1)]))
                  for _ in range(parent.dim)]
        if any(coords):
            return parent.element(coords)


# -- tasks


def run_verify_structure(job, task, rng):
    check = verify_structure(job.algebra)
    if not check:
        raise TaskFailure({"kind": check.kind, "indices": list(check.witness)})
    return {"dim": job.algebra.dim}


def run_norm_form(job, task, rng):
    try:
        F = norm_form(job.algebra)
    except NormFormError as exc:
        raise TaskFailure({"error": str(exc)}) from None
    return {"degree": F.degree, "form": F.format(), "terms": F.to_json()}


def run_division_algebra(job, task, rng):
    verdict = is_division_algebra(job.algebra)
    if not verdict:
        raise TaskFailure({"zero": [_q(c) for c in verdict.witness]},
                          {"division_algebra": False, "method": verdict.method})
    return {"division_algebra": True, "method": verdict.method}


def run_is_simple(job, task, rng):
    A = job.algebra
    if not is_simple(A, seed=job.seed):
        raise TaskFailure({"radical_dim": radical(A).dim, "center_dim": center(A).dim},
                          {"simple": False})
    return {"simple": True, "center_dim": center(A).dim}


def run_galois_presentation(job, task, rng):
    E = job.extensions[task["extension"]]
    check = verify_galois_presentation(E)
    if not check:
        raise TaskFailure({"failure": check.failure, "data": _plain(check.witness)})
    return {"degree": E.degree, "composition_table": check.witness}


def run_scalar_extension(job, task, rng):
    E = job.extensions[task["extension"]]
    steps = run_pipeline(job.algebra, E, seed=job.seed, samples=task.get("count", 3),
                         order=job.series_order)
    result = {"steps": [s.to_json() for s in steps]}
    failed = [s.name for s in steps if s.status != "pass"]
    if failed:
        raise TaskFailure({"failed_steps": failed}, result)
    return result


def run_invert_sample(job, task, rng):
    parent = SkewRationalField(job.algebra)
    count = task.get("count", 10)
    one = parent.one()
    for _ in range(count):
        x = random_element(parent, rng)
        try:
            y = invert(x)
        except NotInvertible:
            raise TaskFailure({"element": format_element(x), "error": "not invertible"}) from None
        if x * y != one or y * x != one:
            raise TaskFailure({"element": format_element(x), "error": "product is not 1"})
    return {"count": count}


def run_eval(job, task, rng):
    parent = SkewRationalField(job.algebra)
    try:
        x = parse_expression(parent, task["expression"])
    except ExpressionError as exc:
        raise TaskFailure({"error": str(exc), "position": exc.position,
                           "expected": list(exc.expected)}) from None
    return element_json(x)


def s3_construction(p0, p1, order):
    P0, P1 = Poly([Fraction(c) for c in p0]), Poly([Fraction(c) for c in p1])
    P = interpolation_construct(P0, P1)
    cert = certify_s3(P)
    result = {
        "P": format_bivariate(P),
        "discriminant": cert.discriminant.format("t"),
        "s3": cert.holds,
    }
    if cert.root is not None:
        result["root"] = cert.root.format("t")
    if cert.disc_sqrt is not None:
        result["disc_sqrt"] = cert.disc_sqrt.format("t")
    try:
        roots = lift_all_roots(P, order)
    except HenselError as exc:
        result["lift_error"] = str(exc)
        roots = []
    result["roots"] = [{"r0": _q(r.series.coefficient(0)), "series": r.series.format("t"),
                        "residual_valuation": _valuation_json(r.residual_valuation())}
                       for r in roots]
    heads = {tuple(r.coefficients()[:2]) for r in roots}
    result["distinct_at_order_2"] = bool(roots) and len(heads) == len(roots)
    ok = (cert.holds and len(roots) == P.degree and result["distinct_at_order_2"]
          and all(r.residual_valuation() >= order for r in roots))
    return ok, result


def _valuation_json(v):
    return "inf" if v == float("inf") else int(v)


def run_construct_s3(job, task, rng):
    ok, result = s3_construction(task["p0"], task["p1"], job.series_order)
    if not ok:
        raise TaskFailure({"s3": result["s3"], "roots": len(result["roots"])}, result)
    return result


RUNNERS = {
    "verify_structure": run_verify_structure,
    "norm_form": run_norm_form,
    "division_algebra": run_division_algebra,
    "is_simple": run_is_simple,
    "galois_presentation": run_galois_presentation,
    "scalar_extension": run_scalar_extension,
    "invert_sample": run_invert_sample,
    "eval": run_eval,
    "construct_s3": run_construct_s3,
}


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return str(x)


def run_task(job, task, structure_ok):
    start = time.perf_counter()
    entry = {"name": task["name"], "kind": task["kind"]}
    try:
        if not structure_ok and task["kind"] != "verify_structure":
            check = verify_structure(job.algebra)
            raise TaskFailure({"rejected_algebra": check.kind, "indices": list(check.witness)})
        result = RUNNERS[task["kind"]](job, task, task_rng(job.seed, task["name"]))
        entry.update(status="pass", result=result)
    except TaskFailure as exc:
        entry.update(status="fail", result=exc.result, witness=exc.witness)
    except Inconclusive as exc:
        entry.update(status="inconclusive", result={"reason": str(exc)})
    except (ValueError, ArithmeticError) as exc:
        entry.update(status="fail", result={}, witness={"error": str(exc)})
    entry["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    return entry


def run_verification(job):
    """Run every task in config order and assemble the report."""
    start = time.perf_counter()
    structure_ok = bool(verify_structure(job.algebra))
    entries = [run_task(job, task, structure_ok) for task in job.tasks]
    summary = {s: sum(1 for e in entries if e["status"] == s)
               for s in ("pass", "fail", "inconclusive")}
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "skewgalois",
        "version": __version__,
        "input_digest": job.digest,
        "seed": job.seed,
        "series_order": job.series_order,
        "tasks": entries,
        "summary": summary,
        "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
    }


TIMING_FIELDS = ("elapsed_ms",)


def strip_timings(report):
    """Copy of a report without timing fields, for comparisons."""
    if isinstance(report, dict):
        return {k: strip_timings(v) for k, v in report.items() if k not in TIMING_FIELDS}
    if isinstance(report, list):
        return [strip_timings(v) for v in report]
    return report


def all_passed(report):
    return all(t["status"] == "pass" for t in report["tasks"])

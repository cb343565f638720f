"""Report documents and their JSON / CSV / text renderings."""

from __future__ import annotations

import csv
import hashlib
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .charpoly import RealPolynomial
from .errors import MethodInapplicable, NearDegenerate, NotRealCharPoly, VanishingMinor
from .inertia import QualitativeSpectrum
from .oracle import CrossValidation
from .scalars import format_rational
from .sweep import Bracket, SweepReport

__all__ = [
    "ReportDocument",
    "digest",
    "scalar_json",
    "spectrum_payload",
    "error_payload",
    "oracle_payload",
    "sweep_payload",
    "sweep_csv",
    "render_text",
    "CSV_COLUMNS",
]

CSV_COLUMNS = ("xi", "nu", "delta", "pi", "broken", "status")


@dataclass(frozen=True)
class ReportDocument:
    mode: str
    status: str
    payload: dict
    version: str = __version__
    input_digest: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        obj = json.loads(text)
        return cls(
            mode=obj["mode"],
            status=obj["status"],
            payload=obj["payload"],
            version=obj["version"],
            input_digest=obj["input_digest"],
        )


def digest(data: bytes | str) -> str:
    if isinstance(data, str):
        data = data.encode("utf-8")
    return "sha256:" + hashlib.sha256(data).hexdigest()


def scalar_json(x):
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    return float(x)


def _inertia(t) -> dict:
    nu, delta, pi = t
    return {"nu": nu, "delta": delta, "pi": pi}


def _poly(p: RealPolynomial) -> list:
    return [scalar_json(h) for h in p.coeffs]


def spectrum_payload(q: QualitativeSpectrum) -> dict:
    return {
        "dimension": q.dimension,
        "arith": "exact" if q.exact else "float",
        "real_inertia": _inertia(q.real_inertia.as_tuple()),
        "broken": q.broken,
        "real_count": q.real_count,
        "complex_pair_count": q.complex_pair_count,
        "hankel_inertia": _inertia(q.hankel_inertia.as_tuple()),
        "sign_sequence": str(q.sign_sequence),
        "minors": [scalar_json(d) for d in q.minors],
        "charpoly": _poly(q.polynomial),
        "newton_sums": [scalar_json(s) for s in q.newton_sums.s],
        "warnings": list(q.warnings),
    }


def error_payload(exc: MethodInapplicable) -> dict:
    out = {"error": exc.tag, "message": str(exc)}
    if isinstance(exc, (VanishingMinor, NearDegenerate, NotRealCharPoly)):
        out["index"] = exc.index
    if isinstance(exc, VanishingMinor):
        out["repeated_root"] = exc.repeated_root
        out["distinct_roots"] = exc.distinct_roots
    if isinstance(exc, NearDegenerate):
        out["stage"] = exc.stage
    return out


def oracle_payload(cv: CrossValidation) -> dict:
    return {
        "agreement": cv.status,
        "pipeline": None if cv.pipeline is None else _inertia(cv.pipeline),
        "oracle": None if cv.oracle is None else _inertia(cv.oracle),
        "roots": [[complex(r).real, complex(r).imag] for r in cv.roots],
        "reason": cv.reason,
    }


def _key_json(key):
    return _inertia(key) if isinstance(key, tuple) else key


def _bracket_json(b: Bracket) -> dict:
    return {
        "lo": format_rational(b.lo),
        "hi": format_rational(b.hi),
        "lo_float": float(b.lo),
        "hi_float": float(b.hi),
        "width": format_rational(b.width),
        "left": _key_json(b.left),
        "right": _key_json(b.right),
        "status": b.status,
        "steps": b.steps,
    }


def sweep_payload(report: SweepReport) -> dict:
    spec = report.spec
    records = []
    for r in report.records:
        rec = {"xi": format_rational(r.xi), "xi_float": float(r.xi), "status": r.status}
        if r.inertia is not None:
            rec.update(_inertia(r.inertia))
            rec["broken"] = r.broken
        else:
            rec["detail"] = r.detail
        records.append(rec)
    return {
        "family": {
            "generator": spec.generator,
            "dim": spec.dim if spec.generator != "pt-well" else 3,
            "start": format_rational(spec.start),
            "stop": format_rational(spec.stop),
            "step": format_rational(spec.step),
            "arith": spec.arith,
        },
        "records": records,
        "brackets": [_bracket_json(b) for b in report.brackets],
    }


def sweep_csv(report: SweepReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in report.records:
        if r.inertia is None:
            w.writerow([repr(float(r.xi)), "", "", "", "", r.status])
        else:
            nu, delta, pi = r.inertia
            w.writerow([repr(float(r.xi)), nu, delta, pi, str(r.broken).lower(), r.status])
    return buf.getvalue()


def render_text(doc: ReportDocument) -> str:
    p = doc.payload
    lines = [f"mode: {doc.mode}", f"status: {doc.status}"]
    if doc.mode == "analyze":
        if "error" in p:
            lines.append(f"method inapplicable: {p['message']}")
        else:
            ri = p["real_inertia"]
            lines += [
                f"dimension: {p['dimension']} ({p['arith']} arithmetic)",
                f"real inertia: {{{ri['nu']},{ri['delta']},{ri['pi']}}}",
                f"broken PT-symmetry: {'yes' if p['broken'] else 'no'}",
                f"real eigenvalues: {p['real_count']}",
                f"complex-conjugate pairs: {p['complex_pair_count']}",
                f"sign sequence: {p['sign_sequence']}",
                "minors: " + ", ".join(str(d) for d in p["minors"]),
            ]
            lines += [f"warning: {w}" for w in p["warnings"]]
    elif doc.mode == "check":
        lines.append(f"pt_symmetric: {str(p['pt_symmetric']).lower()}")
        lines.append(f"charpoly_real: {str(p['charpoly_real']).lower()}")
    elif doc.mode == "oracle":
        lines.append(f"agreement: {p['agreement']}")
        for name in ("pipeline", "oracle"):
            t = p[name]
            lines.append(f"{name}: " + ("-" if t is None else f"{{{t['nu']},{t['delta']},{t['pi']}}}"))
        if p["reason"]:
            lines.append(f"reason: {p['reason']}")
        for re, im in p["roots"]:
            lines.append(f"  root {re:+.12g} {im:+.12g}i")
    elif doc.mode == "sweep":
        for r in p["records"]:
            cls = f"{{{r['nu']},{r['delta']},{r['pi']}}}" if r["status"] == "ok" else r["status"]
            lines.append(f"xi={r['xi']:>10}  {cls}")
        for b in p["brackets"]:
            lines.append(f"transition in [{b['lo_float']!r}, {b['hi_float']!r}] ({b['status']})")
    return "\n".join(lines) + "\n"

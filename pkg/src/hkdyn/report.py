"""JSON-ready renderings of classifications, degree sequences and certificates."""
from __future__ import annotations

from fractions import Fraction

from hkdyn.exact.interval import RationalInterval
from hkdyn.exact.quadratic import QuadraticNumber
from hkdyn.exact.roots import RealRoot
from hkdyn.exact.values import RootPower, normalize, to_decimal, to_interval
from hkdyn.degrees import DegreeSequence, check_log_concavity
from hkdyn.fibration import Certificate, general_type_feasibility
from hkdyn.isometry import Classification, Kind, growth_profile

SCHEMA_VERSION = "1"


def frac(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def interval_json(iv: RationalInterval) -> dict:
    return {"lo": frac(iv.lo), "hi": frac(iv.hi)}


def exact_json(x):
    x = normalize(x)
    if isinstance(x, Fraction):
        return {"rational": frac(x)}
    if isinstance(x, QuadraticNumber):
        return x.to_json()
    if isinstance(x, RootPower):
        return {"root_of": list(x.root.poly.coeffs), "isolating_interval": interval_json(x.root.interval),
                "power": x.exponent}
    return None


def value_json(x, width) -> dict:
    """Decimal rendering, certified enclosure of width <= ``width``, and exact form if any."""
    if isinstance(x, RealRoot):
        x = RootPower(x, 1)
    iv = to_interval(x, width)
    # enough significant digits that the rounding error stays below ``width``
    places = len(str(Fraction(width).denominator))
    digits = places + len(str(int(abs(iv.hi))))
    return {"decimal": to_decimal(iv.mid, digits),
            "interval": interval_json(iv), "exact": exact_json(x)}


def classification_json(c: Classification, width, signature=None) -> dict:
    rate, deg = growth_profile(c)
    out = {
        "kind": c.kind.value,
        "rank": c.rank,
        "char_poly": list(c.char_poly.coeffs),
        "char_poly_text": str(c.char_poly),
        "lambda1": value_json(c.lambda1_value, width),
        "lambda1_quadratic": c.lambda1_quadratic,
        "lambda1_norm": c.lambda1_norm,
        "dominant_sign": c.dominant_sign if c.kind is Kind.LOXODROMIC else None,
        "finite_order": c.finite_order,
        "unipotence_exponent": c.unipotence_exponent,
        "jordan_ranks": list(c.jordan_ranks) if c.jordan_ranks is not None else None,
        "nilpotency_index": c.nilpotency_index,
        "cyclotomic_factors": [list(f) for f in c.cyclotomic_factors],
        "growth": {"exponential_rate": interval_json(rate), "polynomial_degree": deg},
    }
    if signature is not None:
        out["signature"] = list(signature)
    return out


def sequence_json(seq: DegreeSequence, width) -> dict:
    ok, idx = check_log_concavity(seq)
    return {
        "n": seq.n,
        "values": [value_json(v, width) for v in seq.values],
        "log_concave": ok,
        "log_concavity_index": idx,
    }


def certificate_json(cert: Certificate, width) -> dict:
    seq = cert.degree_sequence
    feas = []
    for d in range(1, 2 * cert.n):
        f = general_type_feasibility(seq, d)
        feas.append({
            "base_dim": d,
            "feasible": f.feasible,
            "witness": [value_json(v, width) for v in f.witness] if f.witness is not None else None,
            "failing_index": f.index,
        })
    return {
        "primitive": cert.primitive,
        "verdict": cert.verdict.value,
        "justification": cert.justification.value,
        "n": cert.n,
        "b2": cert.b2,
        "max_periodic_hypersurfaces": cert.max_periodic_hypersurfaces,
        "dense_generic_orbit": cert.dense_generic_orbit,
        "base_dim_lower_bound": cert.base_dim_lower_bound,
        "plateau_length": cert.plateau_length,
        "general_type_feasibility": feas,
        "notes": list(cert.notes),
    }

"""JSON-friendly operation layer shared by the HTTP service and the CLI.

Each function takes plain values and returns plain dicts/lists so the
FastAPI handlers and the command-line front end stay thin wrappers around
the same code path.
"""

from __future__ import annotations

from .spaces import SPACE_NAMES, load_space
from .exprs import evaluate, parse
from .ncalg import readback, star_product
from . import qexp as qexp_mod
from . import grassmann as gr
from .lattice import LatticeFunction, integrate, spec_from_config
from .verify import combined_integral, run_suite


def list_spaces() -> list[str]:
    return list(SPACE_NAMES)


def _poly_payload(poly) -> dict:
    return {
        "space": poly.space.name,
        "terms": [
            {"word": list(w), "coeff": c.render()}
            for w, c in sorted(poly.terms.items(), key=lambda item: (len(item[0]), item[0]))
        ],
        "text": poly.render(),
    }


def normal_order_op(space_name: str, expr: str) -> dict:
    spec = load_space(space_name)
    tree = parse(expr, spec)
    return _poly_payload(evaluate(tree, spec))


def star_op(space_name: str, f: str, g: str) -> dict:
    spec = load_space(space_name)
    fc = readback(evaluate(parse(f, spec), spec))
    gc = readback(evaluate(parse(g, spec), spec))
    result = star_product(fc, gc, spec)
    return {
        "space": space_name,
        "terms": [
            {"degrees": list(k), "coeff": v.render()}
            for k, v in sorted(result.items())
        ],
    }


def qexp_op(space_name: str, degree: int, calculus: str = "unhatted",
            side: str = "left") -> dict:
    series = qexp_mod.solve_qexp(space_name, degree, calculus, side)
    return {
        "space": space_name,
        "calculus": calculus,
        "side": side,
        "degree": degree,
        "terms": series.dump().splitlines(),
    }


def grassmann_form_op(space_name: str, variant: str, primed: bool) -> dict:
    sp = gr.grassmann_space(space_name)
    key = (variant, primed)
    if key not in sp.forms:
        raise KeyError("no %s%s table for %s" % (variant, "'" if primed else "", space_name))
    return {
        "space": space_name,
        "variant": variant,
        "primed": primed,
        "entries": [
            {"f": list(fs), "g": list(gs), "coeff": c.render(),
             **({"note": note} if note else {})}
            for fs, gs, c, note in sp.forms[key]
        ],
    }


def integrate_op(spec_config: dict, csv_text: str, q_value: float,
                 which: int | None = None) -> dict:
    spec = spec_from_config(spec_config)
    f = LatticeFunction.from_csv(spec, csv_text)
    value = combined_integral(f, q_value, which) if which else integrate(f, q_value)
    return {"re": value.real, "im": value.imag, "points": len(f.samples)}


def verify_op(suite: str, q_value: float, seed: int, window: int) -> dict:
    return run_suite(suite, q_value, seed, window).as_dict()

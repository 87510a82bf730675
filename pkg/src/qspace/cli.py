"""Command-line front end.

The CLI is a thin client over the operation layer: every compute subcommand
either calls it in process (the default) or, with ``--server URL``, sends the
same request to a running service.  ``qspace serve`` starts that service.

Space and braiding configs are looked up in ``QSPACE_CONFIG_DIR`` before the
shipped presets.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ops


def _remote(server: str, path: str, payload: dict) -> dict:
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if resp.status_code != 200:
        raise SystemExit("server error %d: %s" % (resp.status_code, resp.text))
    return resp.json()


def _dispatch(args, path: str, payload: dict, local):
    if args.server:
        return _remote(args.server, path, payload)
    return local()


def cmd_normal_order(args) -> int:
    out = _dispatch(args, "/normal-order", {"space": args.space, "expr": args.expr},
                    lambda: ops.normal_order_op(args.space, args.expr))
    print(out["text"])
    return 0


def cmd_star(args) -> int:
    out = _dispatch(args, "/star", {"space": args.space, "f": args.f, "g": args.g},
                    lambda: ops.star_op(args.space, args.f, args.g))
    if not out["terms"]:
        print("0")
    for term in out["terms"]:
        print("%s : %s" % (tuple(term["degrees"]), term["coeff"]))
    return 0


def cmd_qexp(args) -> int:
    payload = {"space": args.space, "degree": args.degree,
               "calculus": args.calculus, "side": args.side}
    out = _dispatch(args, "/qexp", payload,
                    lambda: ops.qexp_op(args.space, args.degree, args.calculus, args.side))
    for line in out["terms"]:
        print(line)
    return 0


def cmd_grassmann_form(args) -> int:
    payload = {"space": args.space, "variant": args.variant, "primed": args.primed}
    out = _dispatch(args, "/grassmann/form", payload,
                    lambda: ops.grassmann_form_op(args.space, args.variant, args.primed))
    for e in out["entries"]:
        line = "f{%s} x g{%s} : %s" % (",".join(e["f"]), ",".join(e["g"]), e["coeff"])
        if e.get("note"):
            line += "   # " + e["note"]
        print(line)
    return 0


def cmd_integrate(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        spec_config = json.load(fh)
    with open(args.input, "r", encoding="utf-8") as fh:
        csv_text = fh.read()
    payload = {"spec": spec_config, "csv": csv_text, "q": args.q, "which": args.which}
    out = _dispatch(args, "/integrate", payload,
                    lambda: ops.integrate_op(spec_config, csv_text, args.q, args.which))
    print("%r + %r i   (%d points)" % (out["re"], out["im"], out["points"]))
    return 0


def cmd_verify(args) -> int:
    payload = {"suite": args.suite, "q": args.q, "seed": args.seed, "window": args.window}
    out = _dispatch(args, "/verify", payload,
                    lambda: ops.verify_op(args.suite, args.q, args.seed, args.window))
    failed = 0
    for check in out["checks"]:
        status = check["status"]
        if status == "fail":
            failed += 1
        print("%-12s %s" % (status, check["id"]))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(out, fh, indent=1, sort_keys=True)
            fh.write("\n")
    print("%d checks, %d failed" % (len(out["checks"]), failed))
    return 1 if failed else 0


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("qspace.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qspace",
                                     description="q-deformed quantum kinematics toolkit")
    parser.add_argument("--server", default=None,
                        help="URL of a running qspace service; default is in-process")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normal-order", help="normal-order an expression")
    p.add_argument("--space", required=True)
    p.add_argument("expr")
    p.set_defaults(fn=cmd_normal_order)

    p = sub.add_parser("star", help="star product of two coefficient functions")
    p.add_argument("--space", required=True)
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(fn=cmd_star)

    p = sub.add_parser("qexp", help="solve the momentum eigenfunction series")
    p.add_argument("--space", required=True)
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--calculus", choices=("unhatted", "hatted"), default="unhatted")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(fn=cmd_qexp)

    pg = sub.add_parser("grassmann", help="antisymmetrized sector data")
    gsub = pg.add_subparsers(dest="grassmann_command", required=True)
    p = gsub.add_parser("form", help="print one sesquilinear form table")
    p.add_argument("--space", required=True)
    p.add_argument("--variant", required=True, choices=("L", "Lbar", "R", "Rbar"))
    p.add_argument("--primed", action="store_true")
    p.set_defaults(fn=cmd_grassmann_form)

    p = sub.add_parser("integrate", help="integrate lattice samples from CSV")
    p.add_argument("--spec", required=True, help="lattice spec JSON file")
    p.add_argument("--input", required=True, help="CSV sample file")
    p.add_argument("--q", type=float, default=1.3)
    p.add_argument("--which", type=int, default=None, choices=(1, 2),
                   help="use the symmetrised two-variant integral")
    p.set_defaults(fn=cmd_integrate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--q", type=float, default=1.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--window", type=int, default=2)
    p.add_argument("--json", default=None, help="write the JSON report here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (KeyError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

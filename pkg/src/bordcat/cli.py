"""Command-line client for the bordcat service.

By default the client runs the service in-process; pass ``--server URL`` to
talk to a remote instance instead.  Exit codes: 0 success, 1 a verification
check failed, 2 invalid input, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import httpx

from .serialization import report_to_csv, report_to_json

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3

DEFAULT_CAP = 10**6


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _manifold_spec(text: str) -> dict:
    path = Path(text)
    if path.suffix == ".json" or path.is_file():
        try:
            return {"file": json.loads(path.read_text())}
        except (OSError, json.JSONDecodeError) as exc:
            raise SystemExit(_fail(f"cannot read manifold file {text}: {exc}"))
    return {"name": text}


def _fail(message: str, code: int = EXIT_INVALID) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit(report: dict, args) -> None:
    if args.json:
        print(report_to_json(report))
    elif args.csv:
        print(report_to_csv(report), end="")


def _post(client: httpx.Client, path: str, body: dict):
    """POST and translate HTTP errors into exit codes; returns (data, code)."""
    try:
        resp = client.post(path, json=body)
    except httpx.HTTPError as exc:
        return None, _fail(f"cannot reach server: {exc}")
    if resp.status_code == 409:
        return None, _fail(resp.json().get("detail", "cap exceeded"), EXIT_CAP)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        return None, _fail(str(detail))
    return resp.json(), EXIT_OK


def cmd_cohomology(args) -> int:
    body = {
        "manifold": _manifold_spec(args.manifold),
        "degree": args.deg,
        "coeff": args.coeff,
        "pair": args.pair,
        "q": args.q,
        "cap": args.cap,
    }
    with _client(args.server) as client:
        data, code = _post(client, "/cohomology", body)
    if data is None:
        return code
    print(data["group"])
    _emit(data, args)
    return EXIT_OK


def cmd_gauge(args) -> int:
    body = {
        "theory": args.theory,
        "manifold": _manifold_spec(args.manifold),
        "q": args.q,
        "coeff": args.coeff,
        "s": args.s,
        "cap": args.cap,
        "seed": args.seed,
    }
    if args.refined is not None:
        raw = args.refined.strip()
        if raw.startswith("A="):
            raw = raw[2:]
        if raw in ("0", ""):
            body["refined"] = []
        else:
            try:
                body["refined"] = [int(x) for x in raw.split(",")]
            except ValueError:
                return _fail(f"cannot parse dual background spec {args.refined!r}")
    with _client(args.server) as client:
        data, code = _post(client, "/gauge", body)
    if data is None:
        return code
    print(
        f"value {data['value']['exact']}, c={data['coefficient']}, "
        f"{data['backgrounds']} backgrounds"
    )
    _emit(data, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    body = {"suite": args.suite, "coeff": args.coeff}
    with _client(args.server) as client:
        data, code = _post(client, "/verify", body)
    if data is None:
        return code
    for check in data["checks"]:
        mark = "ok" if check["passed"] else "FAIL"
        detail = f": {check['detail']}" if check["detail"] else ""
        print(f"[{mark}] {check['name']}{detail}")
    _emit(data, args)
    return EXIT_OK if data["passed"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bordcat",
        description="Exact finite-symmetry gauging on triangulated bordisms.",
    )
    parser.add_argument("--server", help="URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--coeff", default="Z2", help="coefficient group, e.g. Z2, Z2xZ4")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
        p.add_argument("--json", action="store_true", help="emit the full JSON report")
        p.add_argument("--csv", action="store_true", help="emit the report as CSV rows")
        p.add_argument("--server", help=argparse.SUPPRESS)

    p = sub.add_parser("cohomology", help="compute a cohomology group")
    p.add_argument("manifold", help="library name or manifold JSON file")
    p.add_argument("--deg", type=int, required=True, help="cohomology degree")
    p.add_argument(
        "--pair",
        default="absolute",
        choices=["absolute", "skeleton", "dual-skeleton"],
        help="absolute group or relative to a skeleton model",
    )
    p.add_argument("--q", type=int, default=0, help="form degree for skeleton pairs")
    common(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("gauge", help="gauge a theory on a closed manifold")
    p.add_argument("theory", help="theory spec (trivial)")
    p.add_argument("--manifold", required=True, help="library name or JSON file")
    p.add_argument("--q", type=int, default=0, help="form degree of the symmetry")
    p.add_argument("--s", default="1/2", help="boundary weight exponent: 0, 1, or 1/2")
    p.add_argument("--seed", type=int, default=None, help="seed for randomized sections")
    p.add_argument(
        "--refined",
        default=None,
        help="dual background, e.g. A=0 or comma-separated raw coordinates",
    )
    common(p)
    p.set_defaults(func=cmd_gauge)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", help="suite name (see `bordcat verify list`)")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    env_cap = os.environ.get("BORDCAT_CAP")
    if env_cap is not None and hasattr(args, "cap"):
        try:
            args.cap = int(env_cap)
        except ValueError:
            return _fail(f"BORDCAT_CAP must be an integer, got {env_cap!r}")
    try:
        return args.func(args)
    except SystemExit:
        raise
    except Exception as exc:  # surface as a validation failure, not a traceback
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())

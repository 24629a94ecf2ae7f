"""Command-line client for the plethysm service.

The CLI is a thin HTTP client: it parses arguments, posts JSON to the API
and renders the response.  By default it talks to an in-process instance of
the service over an ASGI transport, so no server needs to be running; point
it at a live one with --server or the PLETHYST_SERVER environment variable.

Exit codes: 0 success, 1 failed verification check, 2 unparseable input,
3 bound exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

from .errors import PartitionParseError
from .partitions import format_partition, parse_partition

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_BOUNDS = 3
EXIT_IO = 4

ENV_SERVER = "PLETHYST_SERVER"


def _post(path: str, payload: dict, server: str | None) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)

    from .service.app import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://plethyst.local", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _error_exit_code(response: httpx.Response) -> int:
    if response.status_code == 422:
        return EXIT_PARSE
    try:
        code = response.json().get("error", {}).get("code")
    except ValueError:
        code = None
    return EXIT_BOUNDS if code == "bounds" else EXIT_PARSE


def _describe_error(response: httpx.Response) -> str:
    try:
        body = response.json()
    except ValueError:
        return f"HTTP {response.status_code}"
    if "error" in body:
        return body["error"].get("message", f"HTTP {response.status_code}")
    return json.dumps(body)


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        print(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _format_terms(basis: str, terms: list) -> str:
    if not terms:
        return "0"
    rendered = []
    for term in terms:
        body = f"{basis}[{','.join(str(x) for x in term['partition'])}]"
        coeff = term["coeff"]
        rendered.append(body if coeff == "1" else f"{coeff}·{body}")
    return " + ".join(rendered)


def _parse_pair(args) -> tuple[list[int], list[int]]:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    return list(lam), list(mu)


def _cmd_expand(args) -> int:
    lam, mu = _parse_pair(args)
    response = _post(
        "/expand",
        {"lambda": lam, "mu": mu, "basis": args.basis},
        args.server,
    )
    if response.status_code != 200:
        print(f"error: {_describe_error(response)}", file=sys.stderr)
        return _error_exit_code(response)
    body = response.json()
    if args.format == "json":
        return _emit(json.dumps(body, indent=2), args.out)
    return _emit(_format_terms(body["basis"], body["terms"]), args.out)


def _cmd_first_term(args) -> int:
    lam, mu = _parse_pair(args)
    response = _post(
        "/first-term",
        {"lambda": lam, "mu": mu, "verify": args.verify, "oracle": args.oracle},
        args.server,
    )
    if response.status_code != 200:
        print(f"error: {_describe_error(response)}", file=sys.stderr)
        return _error_exit_code(response)
    body = response.json()
    if args.format == "json":
        code = _emit(json.dumps(body, indent=2), args.out)
    else:
        lines = [format_partition(body["first_term"])]
        if body.get("report"):
            for name, ok in body["report"]["checks"].items():
                lines.append(f"{name}: {'pass' if ok else 'FAIL'}")
        code = _emit("\n".join(lines), args.out)
    if code != EXIT_OK:
        return code
    if body.get("report") and not body["report"]["passed"]:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cmd_verify(args) -> int:
    response = _post(
        "/verify",
        {"max_product": args.max_product, "oracle": args.oracle, "jobs": args.jobs},
        args.server,
    )
    if response.status_code != 200:
        print(f"error: {_describe_error(response)}", file=sys.stderr)
        return _error_exit_code(response)
    body = response.json()
    if args.format == "json":
        code = _emit(json.dumps(body, indent=2), args.out)
    else:
        lines = [
            f"pairs checked: {body['pair_count']}",
            f"failures: {body['failure_count']}",
        ]
        for failure in body["failures"]:
            lines.append("counterexample:")
            lines.append(json.dumps(failure, indent=2))
        code = _emit("\n".join(lines), args.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if body["all_passed"] else EXIT_CHECK_FAILED


def _cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("plethyst.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        default=os.environ.get(ENV_SERVER),
        help="base URL of a running service; default: run in-process",
    )
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output to this file")

    parser = argparse.ArgumentParser(
        prog="plethyst",
        description="Exact plethysm of Schur functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    expand = sub.add_parser("expand", parents=[common], help="expand s_lambda[s_mu]")
    expand.add_argument("--lambda", dest="lam", required=True, help='outer partition, e.g. "2,1"')
    expand.add_argument("--mu", required=True, help='inner partition, e.g. "3,1"')
    expand.add_argument("--basis", choices=("schur", "monomial"), default="schur")
    expand.set_defaults(func=_cmd_expand)

    ft = sub.add_parser(
        "first-term", parents=[common], help="predict the revlex-first Schur term"
    )
    ft.add_argument("--lambda", dest="lam", required=True)
    ft.add_argument("--mu", required=True)
    ft.add_argument("--verify", action="store_true", help="check the prediction against the full expansion")
    ft.add_argument("--oracle", action="store_true", help="also compare with the power-sum oracle")
    ft.set_defaults(func=_cmd_first_term)

    verify = sub.add_parser(
        "verify", parents=[common], help="sweep all pairs with |lambda|*|mu| <= N"
    )
    verify.add_argument("--max-product", type=int, required=True, metavar="N")
    verify.add_argument("--oracle", action="store_true")
    verify.add_argument("--jobs", type=int, default=1)
    verify.set_defaults(func=_cmd_verify)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PartitionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_IO


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

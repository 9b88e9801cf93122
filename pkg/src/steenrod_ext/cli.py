"""Thin command-line client for the Ext basis service.

By default requests are answered in process by the bundled FastAPI app;
pass --server URL to talk to a running instance instead.  Exit codes: 0 on
success, 2 on argument errors, 3 when the homological degree is outside
the supported range.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from typing import List, Optional, Tuple

import httpx

from .render import render_basis_block, render_sweep_s, render_sweep_stu

__all__ = ["build_parser", "main"]

EXIT_OK = 0
EXIT_ARGS = 2
EXIT_UNSUPPORTED_RANK = 3

_TIMEOUT = 600.0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steenrod-ext",
        description="Z/2-bases of Ext_A^{k, k+n}(Z/2, Z/2) for k <= 5")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    basis = sub.add_parser("basis", help="basis report at one bidegree")
    basis.add_argument("--k", type=int, required=True, help="homological degree (1..5)")
    basis.add_argument("--n", type=int, required=True, help="stem n = t - k")
    _output_flags(basis)

    sweep_s = sub.add_parser("sweep-s", help="one case of n = 2^(s+1) - m")
    sweep_s.add_argument("--k", type=int, required=True)
    sweep_s.add_argument("--s", type=int, required=True)
    sweep_s.add_argument("--m", type=int, required=True, help="2 or 3")
    _output_flags(sweep_s)

    stu = sub.add_parser("sweep-stu", help="sweep the n_{s,t,u} grid")
    stu.add_argument("--k", type=int, default=4)
    stu.add_argument("--s-max", type=int, required=True)
    stu.add_argument("--t-max", type=int, required=True)
    stu.add_argument("--u-max", type=int, required=True)
    stu.add_argument("--discover", action="store_true",
                     help="mine generator patterns (requires k = 4)")
    stu.add_argument("--jobs", type=int, default=None, metavar="N",
                     help="worker processes (default: available parallelism)")
    _output_flags(stu)
    return parser


def _output_flags(cmd: argparse.ArgumentParser) -> None:
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    cmd.add_argument("--paper-compat", action="store_true",
                     help="skip the general h-relations at k = 2, as the "
                             "reference computation does")


def _post(server: Optional[str], path: str, payload: dict) -> Tuple[int, object]:
    async def go() -> Tuple[int, object]:
        if server is None:
            from .service import app  # imported lazily: only local mode needs it
            client = httpx.AsyncClient(transport=httpx.ASGITransport(app=app),
                                       base_url="http://service.local",
                                       timeout=_TIMEOUT)
        else:
            client = httpx.AsyncClient(base_url=server, timeout=_TIMEOUT)
        async with client:
            resp = await client.post(path, json=payload)
        try:
            body = resp.json()
        except ValueError:
            body = {"error": "invalid_response", "detail": resp.text}
        return resp.status_code, body

    return asyncio.run(go())


def _report_error(status: int, body: object) -> int:
    code = body.get("error") if isinstance(body, dict) else None
    detail = body.get("detail") if isinstance(body, dict) else None
    if isinstance(detail, list):
        # request-validation errors arrive as a list of objects
        detail = "; ".join(str(item.get("msg", item)) if isinstance(item, dict)
                           else str(item) for item in detail)
    print(f"error: {detail or body or f'HTTP {status}'}", file=sys.stderr)
    return EXIT_UNSUPPORTED_RANK if code == "unsupported_rank" else EXIT_ARGS


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "basis":
        path = "/basis"
        render = render_basis_block
        payload = {"k": args.k, "n": args.n, "paper_compat": args.paper_compat}
    elif args.command == "sweep-s":
        path = "/sweep/s"
        render = render_sweep_s
        payload = {"k": args.k, "s": args.s, "m": args.m,
                   "paper_compat": args.paper_compat}
    else:
        path = "/sweep/stu"
        render = render_sweep_stu
        jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
        payload = {"k": args.k, "s_max": args.s_max, "t_max": args.t_max,
                   "u_max": args.u_max, "discover": args.discover,
                   "paper_compat": args.paper_compat, "jobs": jobs}
    try:
        status, body = _post(args.server, path, payload)
    except Exception as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_ARGS
    if status != 200:
        return _report_error(status, body)
    if args.format == "json":
        print(json.dumps(body, indent=2))
    else:
        print(render(body))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

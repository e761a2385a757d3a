"""Command line: serve the session service, replay a recorded log, or run
a source file against a live server."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from haci.session import SessionConfig, replay_log


def _parse_listen(value: str) -> tuple[str, int]:
    host, _, port = value.rpartition(":")
    if not host or not port.isdigit():
        raise argparse.ArgumentTypeError(f"--listen wants host:port, got {value!r}")
    return host, int(port)


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="haci", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the session service")
    serve.add_argument("--listen", type=_parse_listen, default=("127.0.0.1", 7117), metavar="ADDR:PORT")
    serve.add_argument("--device", default="sim", help="sim or serial:<path> (115200 8N1)")
    serve.add_argument("--log-events", type=Path, default=None, metavar="PATH")
    serve.add_argument("--strict-indexing", type=_on_off, default=True, metavar="on|off")
    serve.add_argument("--keymap", default="macos", metavar="PROFILE")
    serve.add_argument("--open", type=Path, default=None, metavar="FILE", dest="open_path")
    serve.add_argument("--ui", type=Path, default=None, metavar="DIR", help="static UI directory to mount at /ui")

    replay = sub.add_parser("replay", help="re-run a recorded inbound log deterministically")
    replay.add_argument("log", type=Path)
    replay.add_argument("--strict-indexing", type=_on_off, default=True, metavar="on|off")
    replay.add_argument("--keymap", default="macos", metavar="PROFILE")
    replay.add_argument("--out", type=Path, default=None, help="write the outbound log here instead of stdout")

    run = sub.add_parser("run", help="execute a source file via a running server")
    run.add_argument("file", type=Path)
    run.add_argument("--url", default="http://127.0.0.1:7117")
    run.add_argument("--strict-indexing", type=_on_off, default=True, metavar="on|off")

    return parser


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from haci.service.app import AppConfig, create_app

    ui_dir = args.ui
    if ui_dir is None:
        bundled = Path(__file__).resolve().parent.parent.parent / "frontend" / "dist"
        ui_dir = bundled if bundled.is_dir() else None
    app = create_app(
        AppConfig(
            device=args.device,
            keymap_profile=args.keymap,
            strict_indexing=args.strict_indexing,
            log_events_path=args.log_events,
            open_path=args.open_path,
            ui_dir=ui_dir,
        )
    )
    host, port = args.listen
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    lines = args.log.read_text(encoding="utf-8").splitlines()
    config = SessionConfig(strict_indexing=args.strict_indexing, keymap_profile=args.keymap)
    out = replay_log(lines, config)
    text = "".join(line + "\n" for line in out)
    if args.out is not None:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_run(args: argparse.Namespace) -> int:
    import httpx

    source = args.file.read_text(encoding="utf-8")
    resp = httpx.post(
        f"{args.url}/run",
        json={"source": source, "strict_indexing": args.strict_indexing},
        timeout=30.0,
    )
    resp.raise_for_status()
    body = resp.json()
    for line in body["console"]:
        print(line)
    for diag in body["diagnostics"]:
        print(f"{diag['kind']} error on line {diag['line']}: {diag['message']}", file=sys.stderr)
    return 0 if body["halted"] == "normal" else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"serve": cmd_serve, "replay": cmd_replay, "run": cmd_run}
    try:
        return handlers[args.command](args)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

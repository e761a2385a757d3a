"""HTTP/WebSocket service wrapping the session engine."""

from haci.service.app import AppConfig, create_app

__all__ = ["AppConfig", "create_app"]

"""Subcommand modules; each exposes ``register(subparsers)``."""
from . import contact_cmd, family_cmd, map_cmd, qd_cmd

SUBCOMMANDS = (map_cmd, qd_cmd, family_cmd, contact_cmd)

__all__ = ["SUBCOMMANDS", "map_cmd", "qd_cmd", "family_cmd", "contact_cmd"]
